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

use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupError};

/// Centralizer sizes of the non-central conjugacy classes, aggregated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CentralizerProfile {
    pub group_order: usize,
    pub center_order: usize,
    /// Sorted by `centralizer_size`, ascending.
    pub entries: Vec<ProfileEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProfileEntry {
    pub centralizer_size: usize,
    pub class_count: usize,
}

impl CentralizerProfile {
    pub fn sizes(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.centralizer_size).collect()
    }

    pub fn class_counts(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.class_count).collect()
    }

    pub fn largest_centralizer(&self) -> usize {
        self.entries
            .last()
            .map_or(self.center_order, |e| e.centralizer_size)
    }

    /// Checks divisibility, strictness and the class equation.
    pub fn is_consistent(&self) -> bool {
        let n = self.group_order;
        let z = self.center_order;
        let sorted = self
            .entries
            .windows(2)
            .all(|w| w[0].centralizer_size < w[1].centralizer_size);
        let divisible = self.entries.iter().all(|e| {
            let s = e.centralizer_size;
            e.class_count > 0 && s % z == 0 && n.is_multiple_of(s) && z < s && s < n
        });
        let total: usize = self
            .entries
            .iter()
            .map(|e| e.class_count * (n / e.centralizer_size))
            .sum();
        sorted && divisible && n == z + total
    }

    /// `(centralizer_size, class_count)` pairs.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.entries
            .iter()
            .map(|e| (e.centralizer_size, e.class_count))
            .collect()
    }
}

impl FiniteGroup {
    /// Elements commuting with every element, ascending.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&z| (0..self.order()).all(|g| self.commute(z, g)))
            .collect()
    }

    pub fn center_size(&self) -> usize {
        self.center().len()
    }

    /// Elements commuting with `x`, ascending. Panics if `x` is out of range.
    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        assert!(x < self.order(), "element {x} out of range");
        (0..self.order()).filter(|&g| self.commute(g, x)).collect()
    }

    /// `|C(x)|` for every element `x`.
    pub fn centralizer_sizes(&self) -> Vec<usize> {
        let n = self.order();
        let mut sizes = vec![0; n];
        for a in 0..n {
            sizes[a] += 1;
            for b in a + 1..n {
                if self.commute(a, b) {
                    sizes[a] += 1;
                    sizes[b] += 1;
                }
            }
        }
        sizes
    }

    pub fn conjugate(&self, x: usize, by: usize) -> usize {
        self.mul(self.mul(by, x), self.inverse(by))
    }

    /// Orbits under conjugation. Each block is sorted and blocks are ordered
    /// by their smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|g| self.conjugate(x, g)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Sorted multiset of conjugacy class sizes.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    pub fn centralizer_profile(&self) -> Result<CentralizerProfile, GroupError> {
        let n = self.order();
        let z = self.center_size();
        if z == n {
            return Err(GroupError::AbelianGroup);
        }
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for class in self.conjugacy_classes() {
            if class.len() > 1 {
                *counts.entry(n / class.len()).or_default() += 1;
            }
        }
        let profile = CentralizerProfile {
            group_order: n,
            center_order: z,
            entries: counts
                .into_iter()
                .map(|(centralizer_size, class_count)| ProfileEntry {
                    centralizer_size,
                    class_count,
                })
                .collect(),
        };
        debug_assert!(profile.is_consistent());
        Ok(profile)
    }

    /// Subgroup generated by `gens`, in breadth-first discovery order.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        let mut elements = vec![self.identity()];
        inside[self.identity()] = true;
        let mut cursor = 0;
        while cursor < elements.len() {
            let x = elements[cursor];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    elements.push(y);
                }
            }
            cursor += 1;
        }
        elements
    }

    /// A smallest generating set, lexicographically first among those of
    /// minimum size. Sizes are tried in increasing order and each added
    /// element must lie outside the subgroup generated so far.
    pub fn minimal_generating_set(&self) -> Vec<usize> {
        let n = self.order();
        if n == 1 {
            return Vec::new();
        }
        for size in 1.. {
            let mut chosen = Vec::with_capacity(size);
            if self.generating_dfs(size, 0, &mut chosen) {
                return chosen;
            }
        }
        unreachable!("every finite group has a finite generating set")
    }

    fn generating_dfs(&self, size: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
        let sub = self.generated_subgroup(chosen);
        if sub.len() == self.order() {
            return chosen.len() == size;
        }
        if chosen.len() == size {
            return false;
        }
        let mut inside = vec![false; self.order()];
        for &s in &sub {
            inside[s] = true;
        }
        for (g, _) in inside
            .iter()
            .enumerate()
            .skip(start)
            .filter(|(_, &taken)| !taken)
        {
            chosen.push(g);
            if self.generating_dfs(size, g + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Histogram of element orders.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for a in 0..self.order() {
            *hist.entry(self.element_order(a)).or_default() += 1;
        }
        hist
    }
}
