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

//! Solutions of the class equation `n = z + Σ mᵢ·n/nᵢ` for prescribed center
//! size `z` and centralizer sizes `nᵢ`.
//!
//! Dividing by `n` gives `1 − z/n = Σ mᵢ/nᵢ`, so every multiplicity tuple with
//! `Σ mᵢ/nᵢ < 1` determines `n = z / (1 − Σ mᵢ/nᵢ)`. The solver walks all
//! such tuples in exact rational arithmetic and keeps the integral `n` for
//! which every `nᵢ` is a proper divisor.

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::CentralizerProfile;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("invalid centralizer sizes: {0}")]
    InvalidSizes(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassEquationSolution {
    pub order: u64,
    pub center: u64,
    pub sizes: Vec<u64>,
    pub multiplicities: Vec<u64>,
}

impl ClassEquationSolution {
    /// `Σ mᵢ/nᵢ`.
    pub fn fraction_sum(&self) -> Ratio<u64> {
        self.sizes
            .iter()
            .zip(&self.multiplicities)
            .fold(Ratio::from_integer(0), |acc, (&s, &m)| {
                acc + Ratio::new(m, s)
            })
    }

    /// `z / (1 − Σ mᵢ/nᵢ)`, or `None` when the sum is not below 1.
    pub fn reconstructed_order(&self) -> Option<Ratio<u64>> {
        let sum = self.fraction_sum();
        let one = Ratio::from_integer(1);
        (sum < one).then(|| Ratio::from_integer(self.center) / (one - sum))
    }

    pub fn class_equation_holds(&self) -> bool {
        let n = self.order;
        self.sizes.iter().all(|&s| s != 0 && n.is_multiple_of(s))
            && n >= self.center
            && n - self.center
                == self
                    .sizes
                    .iter()
                    .zip(&self.multiplicities)
                    .map(|(&s, &m)| m * (n / s))
                    .sum::<u64>()
    }

    /// Total number of conjugacy classes, central ones included.
    pub fn conjugacy_count(&self) -> u64 {
        self.center + self.multiplicities.iter().sum::<u64>()
    }

    pub fn from_profile(profile: &CentralizerProfile) -> Self {
        ClassEquationSolution {
            order: profile.group_order as u64,
            center: profile.center_order as u64,
            sizes: profile
                .entries
                .iter()
                .map(|e| e.centralizer_size as u64)
                .collect(),
            multiplicities: profile
                .entries
                .iter()
                .map(|e| e.class_count as u64)
                .collect(),
        }
    }
}

pub fn conjugacy_count(solution: &ClassEquationSolution) -> u64 {
    solution.conjugacy_count()
}

fn validate(sizes: &[u64], center: u64) -> Result<(), SolveError> {
    if center == 0 {
        return Err(SolveError::InvalidSizes(
            "center size must be positive".into(),
        ));
    }
    if sizes.is_empty() {
        return Err(SolveError::InvalidSizes(
            "at least one size is required".into(),
        ));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SolveError::InvalidSizes(format!(
            "{sizes:?} is not strictly increasing"
        )));
    }
    for &s in sizes {
        if s <= center {
            return Err(SolveError::InvalidSizes(format!(
                "size {s} does not exceed the center size {center}"
            )));
        }
        if s % center != 0 {
            return Err(SolveError::InvalidSizes(format!(
                "center size {center} does not divide {s}"
            )));
        }
    }
    Ok(())
}

/// Calls `visit(multiplicities, Σ mᵢ/nᵢ)` for every tuple of positive
/// multiplicities with sum below 1.
fn for_each_tuple(sizes: &[u64], visit: &mut dyn FnMut(&[u64], Ratio<u64>)) {
    fn rec(
        sizes: &[u64],
        acc: Ratio<u64>,
        ms: &mut Vec<u64>,
        visit: &mut dyn FnMut(&[u64], Ratio<u64>),
    ) {
        let Some(&s) = sizes.get(ms.len()) else {
            visit(ms, acc);
            return;
        };
        let one = Ratio::from_integer(1);
        let mut m = 1;
        loop {
            let next = acc + Ratio::new(m, s);
            if next >= one {
                break;
            }
            ms.push(m);
            rec(sizes, next, ms, visit);
            ms.pop();
            m += 1;
        }
    }
    rec(
        sizes,
        Ratio::from_integer(0),
        &mut Vec::with_capacity(sizes.len()),
        visit,
    );
}

/// Every integral `n = z/(1 − Σ mᵢ/nᵢ)`, before the divisibility and
/// properness filters, ascending and without repeats.
pub fn arithmetic_orders(sizes: &[u64], center: u64) -> Result<Vec<u64>, SolveError> {
    validate(sizes, center)?;
    let mut orders = BTreeSet::new();
    for_each_tuple(sizes, &mut |_, sum| {
        let n = Ratio::from_integer(center) / (Ratio::from_integer(1) - sum);
        if n.is_integer() {
            orders.insert(n.to_integer());
        }
    });
    Ok(orders.into_iter().collect())
}

/// All solutions using every size at least once, sorted by
/// `(order, multiplicities)`.
pub fn solve(sizes: &[u64], center: u64) -> Result<Vec<ClassEquationSolution>, SolveError> {
    validate(sizes, center)?;
    let mut out = Vec::new();
    for_each_tuple(sizes, &mut |ms, sum| {
        let n = Ratio::from_integer(center) / (Ratio::from_integer(1) - sum);
        if !n.is_integer() {
            return;
        }
        let n = n.to_integer();
        if sizes.iter().all(|&s| s < n && n.is_multiple_of(s)) {
            let sol = ClassEquationSolution {
                order: n,
                center,
                sizes: sizes.to_vec(),
                multiplicities: ms.to_vec(),
            };
            debug_assert!(sol.class_equation_holds());
            out.push(sol);
        }
    });
    out.sort_by(|a, b| (a.order, &a.multiplicities).cmp(&(b.order, &b.multiplicities)));
    Ok(out)
}

/// Largest number of distinct centralizer sizes a strong `k`-star-free group
/// can have: every size is below `2k + 1`, so `1 > m/(2k+1)` forces `m ≤ 2k`.
pub fn distinct_size_bound(k: u64) -> u64 {
    2 * k
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateTuple {
    pub center: u64,
    pub sizes: Vec<u64>,
    pub solutions: Vec<ClassEquationSolution>,
}

/// Every class-equation shape a strong `k`-star-free group could have.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSet {
    pub k: u64,
    pub tuples: Vec<CandidateTuple>,
}

impl CandidateSet {
    pub fn candidate_orders(&self) -> BTreeSet<u64> {
        self.solutions().map(|s| s.order).collect()
    }

    pub fn solutions(&self) -> impl Iterator<Item = &ClassEquationSolution> {
        self.tuples.iter().flat_map(|t| t.solutions.iter())
    }

    /// Center sizes of the solutions with the given order.
    pub fn centers_for_order(&self, order: u64) -> BTreeSet<u64> {
        self.solutions()
            .filter(|s| s.order == order)
            .map(|s| s.center)
            .collect()
    }

    pub fn contains(&self, solution: &ClassEquationSolution) -> bool {
        self.solutions().any(|s| s == solution)
    }

    pub fn contains_profile(&self, profile: &CentralizerProfile) -> bool {
        self.contains(&ClassEquationSolution::from_profile(profile))
    }
}

/// Walks center sizes `z ≤ k` and, for each, every non-empty set of
/// multiples of `z` in `(z, k + z]`, keeping the sets that admit solutions.
pub fn enumerate_candidates(k: u64) -> CandidateSet {
    let mut tuples = Vec::new();
    for center in 1..=k {
        let admissible: Vec<u64> = (center + 1..=k + center)
            .filter(|s| s % center == 0)
            .collect();
        let subsets = 1u64 << admissible.len();
        let mut size_sets: Vec<Vec<u64>> = (1..subsets)
            .map(|mask| {
                admissible
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &s)| s)
                    .collect()
            })
            .collect();
        size_sets.sort();
        for sizes in size_sets {
            let solutions = solve(&sizes, center).expect("admissible sizes are valid");
            if !solutions.is_empty() {
                assert!(sizes.len() as u64 <= distinct_size_bound(k));
                tuples.push(CandidateTuple {
                    center,
                    sizes,
                    solutions,
                });
            }
        }
    }
    CandidateSet { k, tuples }
}
