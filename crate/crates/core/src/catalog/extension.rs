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

//! Central extensions by `C2`.
//!
//! A normalized 2-cocycle `f: Q × Q → F2` gives the group on `Q × {0, 1}`
//! with `(a, s)(b, t) = (ab, s + t + f(a, b))`, element `(a, s)` stored at
//! `2a + s`. Cohomologous cocycles give isomorphic groups, so one cocycle per
//! class of `H²(Q, F2)` covers every central extension of `Q` by `C2`.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use crate::group::{are_isomorphic, Bounds, FiniteGroup, GroupError, Invariants};

/// A cocycle stored as an `|Q|²` bit grid, bit `a·|Q| + b` holding `f(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    order: usize,
    bits: FixedBitSet,
}

impl Cocycle {
    pub fn zero(order: usize) -> Self {
        Cocycle {
            order,
            bits: FixedBitSet::with_capacity(order * order),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn value(&self, a: usize, b: usize) -> bool {
        self.bits.contains(a * self.order + b)
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_clear()
    }

    /// Lowercase hex, eight grid bits per byte, least significant bit first.
    pub fn to_hex(&self) -> String {
        let mut bytes = vec![0u8; (self.order * self.order).div_ceil(8)];
        for i in self.bits.ones() {
            bytes[i / 8] |= 1 << (i % 8);
        }
        hex::encode(bytes)
    }

    pub fn from_hex(order: usize, text: &str) -> Result<Self, GroupError> {
        let bytes = hex::decode(text)
            .map_err(|e| GroupError::InvalidPermutation(format!("cocycle: {e}")))?;
        let cells = order * order;
        if bytes.len() != cells.div_ceil(8) {
            return Err(GroupError::InvalidPermutation(format!(
                "cocycle for order {order} needs {} bytes, found {}",
                cells.div_ceil(8),
                bytes.len()
            )));
        }
        let mut cocycle = Cocycle::zero(order);
        for i in 0..bytes.len() * 8 {
            if bytes[i / 8] >> (i % 8) & 1 == 1 {
                if i >= cells {
                    return Err(GroupError::InvalidPermutation(
                        "cocycle has stray padding bits".into(),
                    ));
                }
                cocycle.bits.insert(i);
            }
        }
        Ok(cocycle)
    }

    /// Whether `f` is normalized and satisfies the cocycle identity on `q`.
    pub fn is_cocycle(&self, q: &FiniteGroup) -> bool {
        let (n, e) = (q.order(), q.identity());
        if self.order != n || (0..n).any(|a| self.value(a, e) || self.value(e, a)) {
            return false;
        }
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = q.mul(a, b);
                (0..n).all(|c| {
                    self.value(a, b) ^ self.value(ab, c)
                        == self.value(a, q.mul(b, c)) ^ self.value(b, c)
                })
            })
        })
    }
}

/// The extension of `q` by `C2` defined by `cocycle`.
pub fn central_extension(
    q: &FiniteGroup,
    cocycle: &Cocycle,
    bounds: &Bounds,
) -> Result<FiniteGroup, GroupError> {
    let n = q.order();
    if cocycle.order != n {
        return Err(GroupError::InvalidPermutation(format!(
            "cocycle is for order {}, quotient has order {n}",
            cocycle.order
        )));
    }
    let mut table = Vec::with_capacity(4 * n * n);
    for x in 0..2 * n {
        let (a, s) = (x / 2, x % 2);
        for y in 0..2 * n {
            let (b, t) = (y / 2, y % 2);
            let bit = (s ^ t) ^ usize::from(cocycle.value(a, b));
            table.push(2 * q.mul(a, b) + bit);
        }
    }
    FiniteGroup::from_flat(2 * n, table, bounds)
}

/// One normalized cocycle per class of `H²(q, F2)`, the zero cocycle first.
pub fn cohomology_representatives(q: &FiniteGroup) -> Vec<Cocycle> {
    let n = q.order();
    let e = q.identity();
    let others: Vec<usize> = (0..n).filter(|&x| x != e).collect();
    let mut slot = vec![usize::MAX; n];
    for (i, &x) in others.iter().enumerate() {
        slot[x] = i;
    }
    let m = others.len();
    let vars = m * m;
    let var =
        |a: usize, b: usize| -> Option<usize> { (a != e && b != e).then(|| slot[a] * m + slot[b]) };

    let mut equations = Vec::new();
    for &a in &others {
        for &b in &others {
            let ab = q.mul(a, b);
            for &c in &others {
                let mut row = FixedBitSet::with_capacity(vars);
                for v in [var(a, b), var(ab, c), var(a, q.mul(b, c)), var(b, c)]
                    .into_iter()
                    .flatten()
                {
                    row.toggle(v);
                }
                if !row.is_clear() {
                    equations.push(row);
                }
            }
        }
    }
    let cocycles = nullspace(equations, vars);

    let coboundaries = others.iter().map(|&x| {
        let mut row = FixedBitSet::with_capacity(vars);
        for &a in &others {
            for &b in &others {
                let hits =
                    usize::from(a == x) + usize::from(b == x) + usize::from(q.mul(a, b) == x);
                if hits % 2 == 1 {
                    row.insert(var(a, b).expect("non-identity pair"));
                }
            }
        }
        row
    });
    let mut span = Echelon::default();
    for row in coboundaries {
        span.insert(row);
    }
    let mut basis = Vec::new();
    for z in cocycles {
        if span.insert(z.clone()) {
            basis.push(z);
        }
    }

    (0u64..1 << basis.len())
        .map(|mask| {
            let mut cocycle = Cocycle::zero(n);
            let mut sum = FixedBitSet::with_capacity(vars);
            for (i, z) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    sum.symmetric_difference_with(z);
                }
            }
            for v in sum.ones() {
                cocycle.bits.insert(others[v / m] * n + others[v % m]);
            }
            cocycle
        })
        .collect()
}

/// The rank of `H²(q, F2)`.
pub fn second_cohomology_rank(q: &FiniteGroup) -> u32 {
    cohomology_representatives(q).len().trailing_zeros()
}

/// Every central extension of every group in `quotients` by `C2`, reduced
/// to one representative per isomorphism class. Each survivor is paired with
/// the index of its quotient and the cocycle that produced it; the first
/// extension met in input order is kept.
pub fn distinct_central_extensions(
    quotients: &[FiniteGroup],
    bounds: &Bounds,
) -> Result<Vec<(usize, Cocycle, FiniteGroup)>, GroupError> {
    let mut kept: Vec<(usize, Cocycle, FiniteGroup)> = Vec::new();
    let mut buckets: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (qi, q) in quotients.iter().enumerate() {
        for cocycle in cohomology_representatives(q) {
            let g = central_extension(q, &cocycle, bounds)?;
            let bucket = buckets.entry(fingerprint(&g)).or_default();
            if bucket.iter().any(|&k| are_isomorphic(&kept[k].2, &g)) {
                continue;
            }
            bucket.push(kept.len());
            kept.push((qi, cocycle, g));
        }
    }
    Ok(kept)
}

/// An isomorphism invariant finer than [`Invariants`]: it also records, for
/// each element order and centralizer size, how many square roots elements
/// have.
pub fn fingerprint(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut roots = vec![0usize; n];
    for x in 0..n {
        roots[g.mul(x, x)] += 1;
    }
    let centralizers = g.centralizer_sizes();
    let mut joint: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for x in 0..n {
        *joint
            .entry((g.element_order(x), centralizers[x], roots[x]))
            .or_default() += 1;
    }
    format!("{:?}|{:?}", Invariants::of(g), joint)
}

/// Rows in reduced echelon form, keyed by leading column: no row contains
/// another row's leading column.
#[derive(Default)]
struct Echelon {
    rows: BTreeMap<usize, FixedBitSet>,
}

impl Echelon {
    fn reduce(&self, mut row: FixedBitSet) -> FixedBitSet {
        for (&lead, pivot) in &self.rows {
            if row.contains(lead) {
                row.symmetric_difference_with(pivot);
            }
        }
        row
    }

    /// Adds `row` to the span, returning whether the span grew.
    fn insert(&mut self, row: FixedBitSet) -> bool {
        let row = self.reduce(row);
        match row.minimum() {
            Some(lead) => {
                for other in self.rows.values_mut() {
                    if other.contains(lead) {
                        other.symmetric_difference_with(&row);
                    }
                }
                self.rows.insert(lead, row);
                true
            }
            None => false,
        }
    }
}

fn nullspace(equations: Vec<FixedBitSet>, vars: usize) -> Vec<FixedBitSet> {
    let mut system = Echelon::default();
    for row in equations {
        system.insert(row);
    }
    (0..vars)
        .filter(|col| !system.rows.contains_key(col))
        .map(|free| {
            let mut v = FixedBitSet::with_capacity(vars);
            v.insert(free);
            for (&pivot, row) in &system.rows {
                if row.contains(free) {
                    v.insert(pivot);
                }
            }
            v
        })
        .collect()
}
