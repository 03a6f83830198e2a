// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::collections::BTreeMap;

use super::{Bounds, FiniteGroup, GroupError};

const UNMAPPED: usize = usize::MAX;

/// Isomorphism-invariant data used to screen pairs before backtracking.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Invariants {
    pub order: usize,
    pub abelian: bool,
    pub center_size: usize,
    pub order_histogram: BTreeMap<usize, usize>,
    pub class_sizes: Vec<usize>,
    /// Count of elements per (element order, centralizer size).
    pub joint_histogram: BTreeMap<(usize, usize), usize>,
}

impl Invariants {
    pub fn of(g: &FiniteGroup) -> Self {
        let sizes = g.centralizer_sizes();
        let mut order_histogram = BTreeMap::new();
        let mut joint_histogram = BTreeMap::new();
        for (x, &size) in sizes.iter().enumerate() {
            let o = g.element_order(x);
            *order_histogram.entry(o).or_default() += 1;
            *joint_histogram.entry((o, size)).or_default() += 1;
        }
        let center_size = sizes.iter().filter(|&&s| s == g.order()).count();
        Invariants {
            order: g.order(),
            abelian: center_size == g.order(),
            center_size,
            order_histogram,
            class_sizes: g.class_sizes(),
            joint_histogram,
        }
    }
}

/// Whether a table-preserving bijection exists.
pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    find_isomorphism(g, h).is_some()
}

/// An isomorphism `g -> h` as an image list, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    if Invariants::of(g) != Invariants::of(h) {
        return None;
    }
    let mut found = None;
    Matcher::new(g, h).run(&mut |map| {
        found = Some(map.to_vec());
        false
    });
    found
}

/// Every automorphism of `g` as an image list; the identity map comes first.
pub fn automorphisms(g: &FiniteGroup) -> Result<Vec<Vec<usize>>, GroupError> {
    automorphisms_with(g, &Bounds::default())
}

pub fn automorphisms_with(g: &FiniteGroup, bounds: &Bounds) -> Result<Vec<Vec<usize>>, GroupError> {
    if g.order() > bounds.backtrack {
        return Err(GroupError::ClosureTooLarge {
            bound: bounds.backtrack,
        });
    }
    let mut all = Vec::new();
    Matcher::new(g, g).run(&mut |map| {
        all.push(map.to_vec());
        true
    });
    Ok(all)
}

/// Backtracking over images of a minimal generating set of `src`.
///
/// After each generator is assigned the partial map is closed under right
/// multiplication by the assigned generators; a clash or a repeated image
/// prunes the branch. A complete consistent closure is an isomorphism.
struct Matcher<'a> {
    src: &'a FiniteGroup,
    dst: &'a FiniteGroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    images: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    mapped: Vec<usize>,
}

impl<'a> Matcher<'a> {
    fn new(src: &'a FiniteGroup, dst: &'a FiniteGroup) -> Self {
        let gens = src.minimal_generating_set();
        let src_sizes = src.centralizer_sizes();
        let dst_sizes = dst.centralizer_sizes();
        let dst_orders: Vec<usize> = (0..dst.order()).map(|y| dst.element_order(y)).collect();
        let candidates = gens
            .iter()
            .map(|&g| {
                let (o, s) = (src.element_order(g), src_sizes[g]);
                (0..dst.order())
                    .filter(|&y| dst_orders[y] == o && dst_sizes[y] == s)
                    .collect()
            })
            .collect();
        Matcher {
            src,
            dst,
            gens,
            candidates,
            images: Vec::new(),
            map: vec![UNMAPPED; src.order()],
            used: vec![false; dst.order()],
            mapped: Vec::new(),
        }
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) {
        if self.src.order() != self.dst.order() {
            return;
        }
        let (e, f) = (self.src.identity(), self.dst.identity());
        self.map[e] = f;
        self.used[f] = true;
        self.mapped.push(e);
        self.descend(visit);
    }

    /// Returns false once the visitor asks to stop.
    fn descend(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let depth = self.images.len();
        if depth == self.gens.len() {
            debug_assert_eq!(self.mapped.len(), self.src.order());
            return visit(&self.map);
        }
        for i in 0..self.candidates[depth].len() {
            let image = self.candidates[depth][i];
            let mark = self.mapped.len();
            self.images.push(image);
            let ok = self.close();
            if ok && !self.descend(visit) {
                return false;
            }
            self.images.pop();
            for x in self.mapped.drain(mark..) {
                self.used[self.map[x]] = false;
                self.map[x] = UNMAPPED;
            }
        }
        true
    }

    fn close(&mut self) -> bool {
        let assigned = self.images.len();
        let mut cursor = 0;
        while cursor < self.mapped.len() {
            let x = self.mapped[cursor];
            let fx = self.map[x];
            for j in 0..assigned {
                let y = self.src.mul(x, self.gens[j]);
                let v = self.dst.mul(fx, self.images[j]);
                match self.map[y] {
                    UNMAPPED => {
                        if self.used[v] {
                            return false;
                        }
                        self.map[y] = v;
                        self.used[v] = true;
                        self.mapped.push(y);
                    }
                    w if w != v => return false,
                    _ => {}
                }
            }
            cursor += 1;
        }
        true
    }
}
