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

//! Constructions referenced by catalog entries.

use crate::group::{semidirect_product_with, Bounds, FiniteGroup, GroupError};

/// The cyclic group `Z/n`, element `i` standing for `i mod n`.
pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    cyclic_with(n, &Bounds::default())
}

pub fn cyclic_with(n: usize, bounds: &Bounds) -> Result<FiniteGroup, GroupError> {
    let table = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a + b) % n))
        .collect();
    FiniteGroup::from_flat(n, table, bounds).map(|g| g.with_label(format!("C{n}")))
}

/// The dihedral group of order `2n`. Element `r^i s^j` sits at `j·n + i`.
pub fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    dihedral_with(n, &Bounds::default())
}

pub fn dihedral_with(n: usize, bounds: &Bounds) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::NotAGroup(crate::group::Violation::Empty));
    }
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (i, j) = (x % n, x / n);
        for y in 0..order {
            let (k, l) = (y % n, y / n);
            let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
            table.push(((j + l) % 2) * n + rot);
        }
    }
    FiniteGroup::from_flat(order, table, bounds).map(|g| g.with_label(format!("D{order}")))
}

/// The dicyclic group of order `4n`: `a^i x^j` at `j·2n + i`, with
/// `x a = a⁻¹ x` and `x² = aⁿ`.
pub fn dicyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    dicyclic_with(n, &Bounds::default())
}

pub fn dicyclic_with(n: usize, bounds: &Bounds) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::NotAGroup(crate::group::Violation::Empty));
    }
    let m = 2 * n;
    let order = 2 * m;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (i, j) = (x % m, x / m);
        for y in 0..order {
            let (k, l) = (y % m, y / m);
            table.push(match (j, l) {
                (0, _) => l * m + (i + k) % m,
                (_, 0) => m + (i + m - k) % m,
                _ => (i + m - k + n) % m,
            });
        }
    }
    FiniteGroup::from_flat(order, table, bounds).map(|g| g.with_label(format!("Dic{order}")))
}

/// How the generator of a cyclic acting group moves the normal subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    /// `x ↦ x^u` on an abelian normal subgroup.
    Power(i64),
    /// The automorphism sending each listed source to its target, extended
    /// multiplicatively from the listed sources.
    Images(Vec<(usize, usize)>),
}

/// `normal ⋊ acting` for a cyclic `acting`, whose generator is taken to be
/// the lowest-indexed element of full order.
pub fn cyclic_semidirect(
    normal: &FiniteGroup,
    acting: &FiniteGroup,
    action: &Action,
    bounds: &Bounds,
) -> Result<FiniteGroup, GroupError> {
    let h = acting.order();
    let generator = (0..h)
        .find(|&x| acting.element_order(x) == h)
        .ok_or_else(|| GroupError::InvalidPermutation("acting group is not cyclic".into()))?;
    let phi = match action {
        Action::Power(u) => (0..normal.order()).map(|x| normal.pow(x, *u)).collect(),
        Action::Images(pairs) => extend_images(normal, pairs)?,
    };
    let mut maps = vec![Vec::new(); h];
    let mut current: Vec<usize> = (0..normal.order()).collect();
    let mut y = acting.identity();
    for _ in 0..h {
        maps[y] = current.clone();
        y = acting.mul(y, generator);
        current = current.iter().map(|&c| phi[c]).collect();
    }
    semidirect_product_with(normal, acting, &maps, bounds)
}

fn extend_images(g: &FiniteGroup, pairs: &[(usize, usize)]) -> Result<Vec<usize>, GroupError> {
    for &(s, t) in pairs {
        g.check_element(s)?;
        g.check_element(t)?;
    }
    let mut phi = vec![usize::MAX; g.order()];
    phi[g.identity()] = g.identity();
    let mut queue = std::collections::VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for &(s, t) in pairs {
            let (y, v) = (g.mul(x, s), g.mul(phi[x], t));
            if phi[y] == usize::MAX {
                phi[y] = v;
                queue.push_back(y);
            } else if phi[y] != v {
                return Err(GroupError::InvalidPermutation(format!(
                    "images {pairs:?} do not define a homomorphism"
                )));
            }
        }
    }
    if phi.contains(&usize::MAX) {
        return Err(GroupError::InvalidPermutation(format!(
            "sources in {pairs:?} do not generate the group"
        )));
    }
    Ok(phi)
}
