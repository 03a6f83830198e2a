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

//! Finite groups stored as complete multiplication tables over dense element
//! indices.
//!
//! Every constructor validates the group axioms exhaustively, so a
//! [`FiniteGroup`] value is always a group. Tables built by this crate place
//! the identity at index 0; tables read from user data keep their own
//! indexing and the identity is discovered.

mod input;
mod iso;
mod perm;
mod product;
mod structure;

pub use input::{GroupFile, InputError};
pub use iso::{are_isomorphic, automorphisms, automorphisms_with, find_isomorphism, Invariants};
pub use perm::Permutation;
pub use product::{
    direct_product, direct_product_with, semidirect_product, semidirect_product_with,
};
pub use structure::{CentralizerProfile, ProfileEntry};

use std::collections::HashMap;

use thiserror::Error;

/// Largest order any constructor will produce unless configured otherwise.
pub const DEFAULT_ORDER_BOUND: usize = 256;
/// Largest order handed to automorphism backtracking unless configured otherwise.
pub const DEFAULT_BACKTRACK_BOUND: usize = 64;

/// Size limits for construction and for backtracking searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub order: usize,
    pub backtrack: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            order: DEFAULT_ORDER_BOUND,
            backtrack: DEFAULT_BACKTRACK_BOUND,
        }
    }
}

/// The first group axiom a candidate table was found to break.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("the table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry ({row}, {col}) = {value} is not an element index")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("({a}*{b})*{c} differs from {a}*({b}*{c})")]
    NonAssociative { a: usize, b: usize, c: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(#[from] Violation),
    #[error("group order exceeds the configured bound of {bound}")]
    ClosureTooLarge { bound: usize },
    #[error("generator {index} has degree {found}, expected {expected}")]
    DegreeMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("the image of element {h} is not an automorphism of the normal factor")]
    NotAnAutomorphism { h: usize },
    #[error("action is not a homomorphism: action({h1}*{h2}) != action({h1}) o action({h2})")]
    NotAHomomorphism { h1: usize, h2: usize },
    #[error("element {element} is out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("group is abelian, so its commuting graph has no vertices")]
    AbelianGroup,
}

/// A finite group given by its full multiplication table.
///
/// `mul(a, b)` is the index of `a·b`. The value is immutable once built and
/// safe to share between threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    label: Option<String>,
}

impl FiniteGroup {
    /// Validates a square table and discovers its identity and inverses.
    pub fn from_cayley_table(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        Self::from_cayley_table_with(rows, &Bounds::default())
    }

    pub fn from_cayley_table_with(
        rows: &[Vec<usize>],
        bounds: &Bounds,
    ) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(Violation::Empty.into());
        }
        if n > bounds.order {
            return Err(GroupError::ClosureTooLarge {
                bound: bounds.order,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != n {
                return Err(Violation::NotSquare {
                    row,
                    len: entries.len(),
                    expected: n,
                }
                .into());
            }
            table.extend_from_slice(entries);
        }
        Self::from_flat(n, table, bounds)
    }

    /// Validates a row-major table of length `order * order`.
    pub(crate) fn from_flat(
        order: usize,
        table: Vec<usize>,
        bounds: &Bounds,
    ) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(Violation::Empty.into());
        }
        if order > bounds.order {
            return Err(GroupError::ClosureTooLarge {
                bound: bounds.order,
            });
        }
        debug_assert_eq!(table.len(), order * order);
        let n = order;
        if let Some(pos) = table.iter().position(|&v| v >= n) {
            return Err(Violation::OutOfRange {
                row: pos / n,
                col: pos % n,
                value: table[pos],
            }
            .into());
        }
        let at = |a: usize, b: usize| table[a * n + b];

        let identity = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or(Violation::NoIdentity)?;

        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or(Violation::MissingInverse(a))?;
            inverses.push(inv);
        }

        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Violation::NonAssociative { a, b, c }.into());
                    }
                }
            }
        }

        Ok(FiniteGroup {
            order,
            table,
            identity,
            inverses,
            label: None,
        })
    }

    /// Closure of `gens` under composition, breadth first from the identity
    /// with generators applied in the given order. Element 0 is the identity.
    ///
    /// Products compose left to right: `p·q` applies `p` first, then `q`.
    pub fn from_permutation_generators(gens: &[Permutation]) -> Result<Self, GroupError> {
        Self::from_permutation_generators_with(gens, &Bounds::default())
    }

    pub fn from_permutation_generators_with(
        gens: &[Permutation],
        bounds: &Bounds,
    ) -> Result<Self, GroupError> {
        let Some(first) = gens.first() else {
            return Ok(Self::trivial());
        };
        let degree = first.degree();
        for (index, g) in gens.iter().enumerate() {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    index,
                    expected: degree,
                    found: g.degree(),
                });
            }
        }

        let mut elements = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut cursor = 0;
        while cursor < elements.len() {
            for g in gens {
                let next = elements[cursor].then(g);
                if !index.contains_key(&next) {
                    if elements.len() == bounds.order {
                        return Err(GroupError::ClosureTooLarge {
                            bound: bounds.order,
                        });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            cursor += 1;
        }

        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&a.then(b)]);
            }
        }
        Self::from_flat(n, table, bounds)
    }

    /// The group of order 1.
    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            table: vec![0],
            identity: 0,
            inverses: vec![0],
            label: None,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Label for reports; unlabeled groups are described by their order.
    pub fn display_name(&self) -> String {
        match &self.label {
            Some(l) => l.clone(),
            None => format!("group of order {}", self.order),
        }
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| self.row(a).to_vec()).collect()
    }

    /// Whether two tables agree entry for entry, ignoring labels.
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        self.order == other.order && self.table == other.table
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `a` raised to a possibly negative exponent.
    pub fn pow(&self, a: usize, exponent: i64) -> usize {
        let ord = self.element_order(a) as i64;
        let e = exponent.rem_euclid(ord);
        let mut x = self.identity;
        for _ in 0..e {
            x = self.mul(x, a);
        }
        x
    }

    pub fn check_element(&self, element: usize) -> Result<(), GroupError> {
        if element < self.order {
            Ok(())
        } else {
            Err(GroupError::ElementOutOfRange {
                element,
                order: self.order,
            })
        }
    }

    /// Renames element `i` to `perm[i]`. `perm` must be a bijection on
    /// `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Result<FiniteGroup, GroupError> {
        let p = Permutation::from_images(perm.to_vec())?;
        if p.degree() != self.order {
            return Err(GroupError::InvalidPermutation(format!(
                "relabeling has degree {}, group has order {}",
                p.degree(),
                self.order
            )));
        }
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        let inverses = (0..n).fold(vec![0; n], |mut acc, a| {
            acc[perm[a]] = perm[self.inverse(a)];
            acc
        });
        Ok(FiniteGroup {
            order: n,
            table,
            identity: perm[self.identity],
            inverses,
            label: self.label.clone(),
        })
    }
}
