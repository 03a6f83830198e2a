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

//! End-to-end classification of strong k-star-free groups.
//!
//! The class-equation solver bounds which orders and center sizes can occur;
//! every catalog group of those orders is then tested directly, and the
//! result is compared with the published lists for `k` from 2 to 5.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::catalog::recipe::dihedral_with;
use crate::catalog::{Catalog, Identification, Tier};
use crate::class_eq::{enumerate_candidates, CandidateSet, ClassEquationSolution};
use crate::graph::{is_strong_k_star_free, strong_star_number};
use crate::group::{FiniteGroup, GroupError};

/// Largest `k` the catalog scope supports.
pub const MAX_K: u64 = 6;

/// A name as printed in a published list, tied to a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PublishedName {
    pub printed: &'static str,
    pub catalog: &'static str,
}

const fn named(printed: &'static str, catalog: &'static str) -> PublishedName {
    PublishedName { printed, catalog }
}

const FIVE_STAR: [PublishedName; 16] = [
    named("S3", "S3"),
    named("D10", "D10"),
    named("A4", "A4"),
    named("GA(1,5)", "GA(1,5)"),
    named("A5", "A5"),
    named("D8", "D8"),
    named("Q8", "Q8"),
    named("D12", "D12"),
    named("C4⋊C3", "Dic12"),
    named("SL(2,3)", "SL(2,3)"),
    named("(C4×C2)⋊C2", "C4xC2_rtimes_C2_a"),
    named("C4⋊C4", "C4_rtimes_C4"),
    named("C8⋊C2", "C8_rtimes_C2"),
    named("D8⋊C2", "D8xC2"),
    named("Q8⋊C2", "Q8xC2"),
    named("(C4×C2)⋊C2", "C4xC2_rtimes_C2_b"),
];

const FOUR_STAR: [PublishedName; 16] = [
    named("S3", "S3"),
    named("A4", "A4"),
    named("A5", "A5"),
    named("D8", "D8"),
    named("D10", "D10"),
    named("GA(1,5)", "GA(1,5)"),
    named("Q8", "Q8"),
    named("D12", "D12"),
    named("C4⋊C3", "Dic12"),
    named("SL(2,3)", "SL(2,3)"),
    named("(C4×C2)⋊C2", "C4xC2_rtimes_C2_a"),
    named("C4⋊C4", "C4_rtimes_C4"),
    named("C8⋊C2", "C8_rtimes_C2"),
    named("D8⋊C2", "D8xC2"),
    named("Q8⋊C2", "Q8xC2"),
    named("(C4×C2)⋊C2", "C4xC2_rtimes_C2_b"),
];

const CLAW: [PublishedName; 4] = [
    named("S3", "S3"),
    named("A4", "A4"),
    named("D8", "D8"),
    named("Q8", "Q8"),
];

const TWO_STAR: [PublishedName; 3] = [named("S3", "S3"), named("D8", "D8"), named("Q8", "Q8")];

/// The published list of strong `k`-star-free groups, for `k` in 2..=5.
pub fn published_list(k: u64) -> Option<&'static [PublishedName]> {
    match k {
        2 => Some(&TWO_STAR),
        3 => Some(&CLAW),
        4 => Some(&FOUR_STAR),
        5 => Some(&FIVE_STAR),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Confirmed,
    Missing,
    Extra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    /// No disagreement, but some candidate orders lie outside the catalog.
    PassWithWarning,
    Mismatch,
    /// No published list to compare against.
    Unchecked,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NameVerdict {
    pub name: String,
    /// The published spelling, absent for extras.
    pub printed: Option<String>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifiedGroup {
    pub name: String,
    pub order: usize,
    pub center: usize,
    /// `(centralizer size, class count)` over non-central classes.
    pub profile: Vec<(usize, usize)>,
    pub strong_star_number: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub k: u64,
    pub tier: Tier,
    pub candidate_orders: Vec<u64>,
    pub scanned_orders: Vec<u64>,
    pub unverifiable_orders: Vec<u64>,
    pub verified_groups: Vec<VerifiedGroup>,
    pub expected: Option<Vec<String>>,
    pub verdicts: Vec<NameVerdict>,
    pub status: Status,
    pub warnings: Vec<String>,
}

impl ClassificationReport {
    pub fn names(&self) -> Vec<&str> {
        self.verified_groups
            .iter()
            .map(|g| g.name.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "strong {}-star-free non-abelian groups ({} catalog tier)",
            self.k, self.tier
        );
        let _ = writeln!(out, "candidate orders: {}", join(&self.candidate_orders));
        let _ = writeln!(out, "scanned orders:   {}", join(&self.scanned_orders));
        if !self.unverifiable_orders.is_empty() {
            let _ = writeln!(out, "unverified:       {}", join(&self.unverifiable_orders));
        }
        let _ = writeln!(out);
        let width = self
            .verified_groups
            .iter()
            .map(|g| g.name.len())
            .max()
            .unwrap_or(4)
            .max(4);
        let _ = writeln!(out, "{:<width$}  order  |Z|  S  profile", "name");
        for g in &self.verified_groups {
            let profile: Vec<String> = g.profile.iter().map(|(s, m)| format!("{s}x{m}")).collect();
            let _ = writeln!(
                out,
                "{:<width$}  {:>5}  {:>3}  {}  {}",
                g.name,
                g.order,
                g.center,
                g.strong_star_number,
                profile.join(" ")
            );
        }
        if !self.verdicts.is_empty() {
            let _ = writeln!(out);
            for v in &self.verdicts {
                let printed = v
                    .printed
                    .as_deref()
                    .map(|p| format!(" ({p})"))
                    .unwrap_or_default();
                let verdict = match v.verdict {
                    Verdict::Confirmed => "CONFIRMED",
                    Verdict::Missing => "MISSING",
                    Verdict::Extra => "EXTRA",
                };
                let _ = writeln!(out, "{verdict:<9}  {}{printed}", v.name);
            }
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        let status = match self.status {
            Status::Pass => "PASS",
            Status::PassWithWarning => "PASS-WITH-WARNING",
            Status::Mismatch => "MISMATCH",
            Status::Unchecked => "UNCHECKED",
        };
        let _ = writeln!(out, "status: {status}");
        out
    }
}

fn join(values: &[u64]) -> String {
    if values.is_empty() {
        return "none".into();
    }
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn verified(name: &str, g: &FiniteGroup) -> Result<VerifiedGroup, GroupError> {
    let profile = g.centralizer_profile()?;
    Ok(VerifiedGroup {
        name: name.to_string(),
        order: g.order(),
        center: profile.center_order,
        profile: profile.pairs(),
        strong_star_number: strong_star_number(g)?,
    })
}

/// Every catalog group that is strong `k`-star free, restricted to the
/// orders and center sizes the class equation allows. Orders outside the
/// catalog are listed as unverifiable, never dropped.
pub fn strong_k_star_free_groups(catalog: &Catalog, k: u64) -> ClassificationReport {
    let candidates = enumerate_candidates(k);
    let candidate_orders: Vec<u64> = candidates.candidate_orders().into_iter().collect();
    let (scanned_orders, unverifiable_orders): (Vec<u64>, Vec<u64>) = candidate_orders
        .iter()
        .partition(|&&n| catalog.tier().covers(n as usize));

    let mut verified_groups = Vec::new();
    for &order in &scanned_orders {
        let centers = candidates.centers_for_order(order);
        for (entry, g) in catalog.iter().filter(|(e, _)| e.order as u64 == order) {
            if entry.expected.abelian || !centers.contains(&(entry.expected.center as u64)) {
                continue;
            }
            if is_strong_k_star_free(g, k as usize).expect("non-abelian") {
                verified_groups.push(verified(&entry.name, g).expect("non-abelian"));
            }
        }
    }
    verified_groups.sort_by(|a, b| (a.order, &a.name).cmp(&(b.order, &b.name)));

    let warnings = unverifiable_orders
        .iter()
        .map(|n| {
            let centers: Vec<u64> = candidates.centers_for_order(*n).into_iter().collect();
            format!(
                "UNVERIFIED-CANDIDATE: order {n} (center sizes {}) is allowed by the class equation but lies outside the {} catalog",
                join(&centers),
                catalog.tier()
            )
        })
        .collect();

    ClassificationReport {
        k,
        tier: catalog.tier(),
        candidate_orders,
        scanned_orders,
        unverifiable_orders,
        verified_groups,
        expected: None,
        verdicts: Vec::new(),
        status: Status::Unchecked,
        warnings,
    }
}

/// Classifies and compares against the published list for `k`. Without a
/// list the report's status is [`Status::Unchecked`].
pub fn verify_against_published(catalog: &Catalog, k: u64) -> ClassificationReport {
    let mut report = strong_k_star_free_groups(catalog, k);
    let Some(list) = published_list(k) else {
        return report;
    };
    report.expected = Some(list.iter().map(|n| n.catalog.to_string()).collect());
    let found = report
        .names()
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>();
    for name in list {
        let verdict = if found.iter().any(|f| f == name.catalog) {
            Verdict::Confirmed
        } else {
            Verdict::Missing
        };
        report.verdicts.push(NameVerdict {
            name: name.catalog.to_string(),
            printed: Some(name.printed.to_string()),
            verdict,
        });
    }
    for f in found {
        if !list.iter().any(|n| n.catalog == f) {
            report.verdicts.push(NameVerdict {
                name: f,
                printed: None,
                verdict: Verdict::Extra,
            });
        }
    }
    report.status = if report
        .verdicts
        .iter()
        .any(|v| v.verdict != Verdict::Confirmed)
    {
        Status::Mismatch
    } else if report.unverifiable_orders.is_empty() {
        Status::Pass
    } else {
        Status::PassWithWarning
    };
    report
}

/// Closed form: `n − 1` for odd `n`, `n − 2` for even `n`.
pub fn dihedral_star_number(n: usize) -> usize {
    assert!(n >= 3, "dihedral star numbers need n >= 3");
    if n % 2 == 1 {
        n - 1
    } else {
        n - 2
    }
}

/// The closed form next to the value computed from the group table.
pub fn verify_dihedral_star_number(
    n: usize,
    bounds: &crate::Bounds,
) -> Result<(usize, usize), GroupError> {
    let computed = strong_star_number(&dihedral_with(n, bounds)?)?;
    Ok((dihedral_star_number(n), computed))
}

/// Closed-form class equation of the dihedral group of order `2n`.
///
/// Odd `n`: trivial center, one class of reflections (centralizer 2) and
/// `(n − 1)/2` rotation classes (centralizer `n`). Even `n`: center
/// `{e, r^{n/2}}`, two reflection classes with centralizer 4 and `(n − 2)/2`
/// rotation classes with centralizer `n`; at `n = 4` the two sizes coincide.
pub fn dihedral_class_equation(n: u64) -> ClassEquationSolution {
    assert!(n >= 3, "dihedral class equations need n >= 3");
    let (center, sizes, multiplicities) = if n % 2 == 1 {
        (1, vec![2, n], vec![1, (n - 1) / 2])
    } else if n == 4 {
        (2, vec![4], vec![3])
    } else {
        (2, vec![4, n], vec![2, (n - 2) / 2])
    };
    ClassEquationSolution {
        order: 2 * n,
        center,
        sizes,
        multiplicities,
    }
}

/// The closed form next to the profile computed from the group table.
pub fn verify_dihedral_class_equation(
    n: usize,
    bounds: &crate::Bounds,
) -> Result<(ClassEquationSolution, ClassEquationSolution), GroupError> {
    let profile = dihedral_with(n, bounds)?.centralizer_profile()?;
    Ok((
        dihedral_class_equation(n as u64),
        ClassEquationSolution::from_profile(&profile),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessSource {
    Dihedral,
    Catalog,
}

/// A group that is strong `(k + 1)`- but not strong `k`-star free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub name: String,
    pub order: usize,
    pub strong_star_number: usize,
    pub source: WitnessSource,
}

/// A group with strong star number exactly `k + 1`. Dihedral groups cover
/// even `k + 1`; otherwise the catalog is searched in (order, name) order.
/// `None` means nothing in scope was found, which proves nothing.
pub fn strict_inclusion_witness(catalog: &Catalog, k: usize) -> Option<Witness> {
    let target = k + 1;
    if target.is_multiple_of(2) && 2 * (k + 2) <= catalog.bounds().order {
        let n = k + 2;
        if let Ok(g) = dihedral_with(n, catalog.bounds()) {
            if strong_star_number(&g).ok() == Some(target) {
                let name = match catalog.identify(&g) {
                    Identification::Known(name) => name,
                    _ => format!("D{}", 2 * n),
                };
                return Some(Witness {
                    name,
                    order: g.order(),
                    strong_star_number: target,
                    source: WitnessSource::Dihedral,
                });
            }
        }
    }
    let mut hits: Vec<(usize, &str, usize)> = catalog
        .iter()
        .filter(|(e, _)| !e.expected.abelian)
        .filter_map(|(e, g)| {
            let s = strong_star_number(g).ok()?;
            (s == target).then_some((e.order, e.name.as_str(), s))
        })
        .collect();
    hits.sort();
    hits.first().map(|&(order, name, s)| Witness {
        name: name.to_string(),
        order,
        strong_star_number: s,
        source: WitnessSource::Catalog,
    })
}

/// Catalog groups with the given center size whose non-central
/// centralizer sizes are exactly `sizes`.
pub fn groups_with_centralizer_sizes(
    catalog: &Catalog,
    center: usize,
    sizes: &[usize],
) -> Vec<String> {
    catalog
        .iter()
        .filter(|(e, _)| !e.expected.abelian && e.expected.center == center)
        .filter(|(_, g)| {
            g.centralizer_profile()
                .map(|p| p.sizes() == sizes)
                .unwrap_or(false)
        })
        .map(|(e, _)| e.name.clone())
        .collect()
}

/// Catalog groups with the given center size and strong star number at
/// most `bound`.
pub fn groups_with_center_and_star_bound(
    catalog: &Catalog,
    center: usize,
    bound: usize,
) -> Vec<String> {
    catalog
        .iter()
        .filter(|(e, _)| !e.expected.abelian && e.expected.center == center)
        .filter(|(_, g)| strong_star_number(g).map(|s| s <= bound).unwrap_or(false))
        .map(|(e, _)| e.name.clone())
        .collect()
}

/// Catalog groups whose class equation is exactly `solution`.
pub fn groups_realizing(catalog: &Catalog, solution: &ClassEquationSolution) -> Vec<String> {
    catalog
        .iter()
        .filter(|(e, _)| !e.expected.abelian && e.order as u64 == solution.order)
        .filter(|(_, g)| {
            g.centralizer_profile()
                .map(|p| &ClassEquationSolution::from_profile(&p) == solution)
                .unwrap_or(false)
        })
        .map(|(e, _)| e.name.clone())
        .collect()
}

/// Candidate tuples whose shape no catalog group realizes, restricted to
/// orders the catalog covers.
pub fn unrealized_solutions<'a>(
    catalog: &Catalog,
    candidates: &'a CandidateSet,
) -> Vec<&'a ClassEquationSolution> {
    candidates
        .solutions()
        .filter(|s| catalog.tier().covers(s.order as usize))
        .filter(|s| groups_realizing(catalog, s).is_empty())
        .collect()
}
