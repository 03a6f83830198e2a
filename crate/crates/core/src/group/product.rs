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

use super::{Bounds, FiniteGroup, GroupError};

/// `G × H` with element `(g, h)` stored at index `g·|H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    direct_product_with(g, h, &Bounds::default())
}

pub fn direct_product_with(
    g: &FiniteGroup,
    h: &FiniteGroup,
    bounds: &Bounds,
) -> Result<FiniteGroup, GroupError> {
    let trivial: Vec<Vec<usize>> = vec![(0..g.order()).collect(); h.order()];
    build_semidirect(g, h, &trivial, bounds)
}

/// `N ⋊ H` where `action[h]` is the automorphism of `N` by which `h` acts,
/// given as an image list. Multiplication is
/// `(n1, h1)(n2, h2) = (n1·action[h1](n2), h1·h2)`, stored at `n·|H| + h`,
/// so the trivial action reproduces [`direct_product`] exactly.
pub fn semidirect_product(
    normal: &FiniteGroup,
    acting: &FiniteGroup,
    action: &[Vec<usize>],
) -> Result<FiniteGroup, GroupError> {
    semidirect_product_with(normal, acting, action, &Bounds::default())
}

pub fn semidirect_product_with(
    normal: &FiniteGroup,
    acting: &FiniteGroup,
    action: &[Vec<usize>],
    bounds: &Bounds,
) -> Result<FiniteGroup, GroupError> {
    if action.len() != acting.order() {
        return Err(GroupError::InvalidPermutation(format!(
            "action lists {} maps for an acting group of order {}",
            action.len(),
            acting.order()
        )));
    }
    for (h, map) in action.iter().enumerate() {
        if !is_automorphism(normal, map) {
            return Err(GroupError::NotAnAutomorphism { h });
        }
    }
    for h1 in 0..acting.order() {
        for h2 in 0..acting.order() {
            let composite = &action[acting.mul(h1, h2)];
            let (outer, inner) = (&action[h1], &action[h2]);
            if (0..normal.order()).any(|x| composite[x] != outer[inner[x]]) {
                return Err(GroupError::NotAHomomorphism { h1, h2 });
            }
        }
    }
    build_semidirect(normal, acting, action, bounds)
}

fn is_automorphism(g: &FiniteGroup, map: &[usize]) -> bool {
    let n = g.order();
    if map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &m in map {
        if m >= n || std::mem::replace(&mut hit[m], true) {
            return false;
        }
    }
    (0..n).all(|a| (0..n).all(|b| map[g.mul(a, b)] == g.mul(map[a], map[b])))
}

fn build_semidirect(
    normal: &FiniteGroup,
    acting: &FiniteGroup,
    action: &[Vec<usize>],
    bounds: &Bounds,
) -> Result<FiniteGroup, GroupError> {
    let (nn, nh) = (normal.order(), acting.order());
    let order =
        nn.checked_mul(nh)
            .filter(|&o| o <= bounds.order)
            .ok_or(GroupError::ClosureTooLarge {
                bound: bounds.order,
            })?;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (n1, h1) = (a / nh, a % nh);
        for b in 0..order {
            let (n2, h2) = (b / nh, b % nh);
            let n = normal.mul(n1, action[h1][n2]);
            table.push(n * nh + acting.mul(h1, h2));
        }
    }
    FiniteGroup::from_flat(order, table, bounds)
}
