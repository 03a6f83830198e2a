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

//! A versioned table of small groups, one JSON file per order.
//!
//! Each entry names a group, gives one recipe for building it, and records
//! invariants that are checked when the entry is built. Every file is listed
//! in `SHA256SUMS` next to it and is rejected if its digest differs. The
//! tables are compiled in; setting `STARFREE_CATALOG_DIR` to a directory
//! with the same layout loads that directory instead.

mod data;
pub mod extension;
pub mod recipe;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::group::{
    are_isomorphic, direct_product_with, Bounds, FiniteGroup, GroupError, Invariants, Permutation,
};
use extension::{central_extension, fingerprint, Cocycle};
use recipe::Action;

pub const CATALOG_DIR_ENV: &str = "STARFREE_CATALOG_DIR";
pub const CATALOG_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("no group named {0:?} in the catalog")]
    UnknownName(String),
    #[error("order {order} is not covered by the {tier} catalog tier")]
    UnsupportedOrder { order: usize, tier: Tier },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{file}: {source}")]
    Json {
        file: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("{file}: checksum mismatch (listed {listed}, computed {computed})")]
    Checksum {
        file: String,
        listed: String,
        computed: String,
    },
    #[error("{file}: not listed in SHA256SUMS")]
    Unlisted { file: String },
    #[error("{file}: {reason}")]
    Malformed { file: String, reason: String },
    #[error("{name}: {field} is {found}, catalog records {expected}")]
    InvariantMismatch {
        name: String,
        field: &'static str,
        expected: String,
        found: String,
    },
    #[error("{name}: {source}")]
    Group {
        name: String,
        #[source]
        source: GroupError,
    },
}

/// Which orders a catalog covers. The standard tier holds every group of
/// order at most 24 and of order 60; the stretch tier adds orders 25 to 32
/// and 50.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    #[default]
    Standard,
    Stretch,
}

impl Tier {
    pub fn orders(self) -> Vec<usize> {
        let mut orders: Vec<usize> = (1..=24).collect();
        if self == Tier::Stretch {
            orders.extend(25..=32);
            orders.push(50);
        }
        orders.push(60);
        orders
    }

    pub fn covers(self, order: usize) -> bool {
        self.orders().contains(&order)
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tier::Standard => "standard",
            Tier::Stretch => "stretch",
        })
    }
}

/// The number of isomorphism classes of groups of each order the catalog
/// can cover.
pub fn known_group_count(order: usize) -> Option<usize> {
    const SMALL: [usize; 32] = [
        1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4,
        1, 51,
    ];
    match order {
        1..=32 => Some(SMALL[order - 1]),
        50 => Some(5),
        60 => Some(13),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Permutations {
        degree: usize,
        generators: Vec<Vec<Vec<usize>>>,
    },
    Cayley(Vec<Vec<usize>>),
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Direct(String, String),
    Semidirect {
        normal: String,
        acting: String,
        action: Action,
    },
    Extension {
        quotient: String,
        cocycle: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub center: usize,
    pub abelian: bool,
    /// `(class size, number of classes)`, ascending by size.
    pub class_sizes: Vec<(usize, usize)>,
}

impl Expected {
    pub fn of(g: &FiniteGroup) -> Self {
        let mut counts = BTreeMap::new();
        for size in g.class_sizes() {
            *counts.entry(size).or_insert(0) += 1;
        }
        Expected {
            center: g.center_size(),
            abelian: g.is_abelian(),
            class_sizes: counts.into_iter().collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub order: usize,
    pub recipe: Recipe,
    pub expected: Expected,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSemidirect {
    normal: String,
    acting: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    power: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    images: Option<Vec<(usize, usize)>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawExtension {
    quotient: String,
    cocycle: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<Vec<Vec<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cayley: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cyclic: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dihedral: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dicyclic: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    direct: Option<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    semidirect: Option<RawSemidirect>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    extension: Option<RawExtension>,
    expected: Expected,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    version: u32,
    order: usize,
    groups: Vec<RawEntry>,
}

impl RawEntry {
    fn into_entry(self, order: usize) -> Result<CatalogEntry, String> {
        let mut recipes = Vec::new();
        if let Some(generators) = self.generators {
            let degree = self.degree.ok_or("\"generators\" requires \"degree\"")?;
            recipes.push(Recipe::Permutations { degree, generators });
        } else if self.degree.is_some() {
            return Err("\"degree\" without \"generators\"".into());
        }
        recipes.extend(self.cayley.map(Recipe::Cayley));
        recipes.extend(self.cyclic.map(Recipe::Cyclic));
        recipes.extend(self.dihedral.map(Recipe::Dihedral));
        recipes.extend(self.dicyclic.map(Recipe::Dicyclic));
        recipes.extend(self.direct.map(|(a, b)| Recipe::Direct(a, b)));
        if let Some(sd) = self.semidirect {
            let action = match (sd.power, sd.images) {
                (Some(u), None) => Action::Power(u),
                (None, Some(pairs)) => Action::Images(pairs),
                _ => return Err("semidirect needs exactly one of \"power\" and \"images\"".into()),
            };
            recipes.push(Recipe::Semidirect {
                normal: sd.normal,
                acting: sd.acting,
                action,
            });
        }
        recipes.extend(self.extension.map(|x| Recipe::Extension {
            quotient: x.quotient,
            cocycle: x.cocycle,
        }));
        if recipes.len() != 1 {
            return Err(format!(
                "{} has {} recipes, expected exactly one",
                self.name,
                recipes.len()
            ));
        }
        Ok(CatalogEntry {
            name: self.name,
            order,
            recipe: recipes.remove(0),
            expected: self.expected,
        })
    }

    fn from_entry(entry: &CatalogEntry) -> Self {
        let mut raw = RawEntry {
            name: entry.name.clone(),
            degree: None,
            generators: None,
            cayley: None,
            cyclic: None,
            dihedral: None,
            dicyclic: None,
            direct: None,
            semidirect: None,
            extension: None,
            expected: entry.expected.clone(),
        };
        match &entry.recipe {
            Recipe::Permutations { degree, generators } => {
                raw.degree = Some(*degree);
                raw.generators = Some(generators.clone());
            }
            Recipe::Cayley(rows) => raw.cayley = Some(rows.clone()),
            Recipe::Cyclic(n) => raw.cyclic = Some(*n),
            Recipe::Dihedral(n) => raw.dihedral = Some(*n),
            Recipe::Dicyclic(n) => raw.dicyclic = Some(*n),
            Recipe::Direct(a, b) => raw.direct = Some((a.clone(), b.clone())),
            Recipe::Semidirect {
                normal,
                acting,
                action,
            } => {
                let mut sd = RawSemidirect {
                    normal: normal.clone(),
                    acting: acting.clone(),
                    ..Default::default()
                };
                match action {
                    Action::Power(u) => sd.power = Some(*u),
                    Action::Images(pairs) => sd.images = Some(pairs.clone()),
                }
                raw.semidirect = Some(sd);
            }
            Recipe::Extension { quotient, cocycle } => {
                raw.extension = Some(RawExtension {
                    quotient: quotient.clone(),
                    cocycle: cocycle.clone(),
                })
            }
        }
        raw
    }
}

/// Serializes the entries of one order in the on-disk file format.
pub fn render_order_file(order: usize, entries: &[CatalogEntry]) -> String {
    let file = RawFile {
        version: CATALOG_VERSION,
        order,
        groups: entries.iter().map(RawEntry::from_entry).collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("catalog entries serialize");
    text.push('\n');
    text
}

/// The file name holding groups of `order`.
pub fn order_file_name(order: usize) -> String {
    format!("order_{order:03}.json")
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Embedded,
    Directory(PathBuf),
}

/// Outcome of [`Catalog::identify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Identification {
    Known(String),
    /// The order is outside the loaded tier.
    OutsideCatalog {
        order: usize,
    },
    /// The order is covered but nothing matched; the catalog is incomplete.
    NoMatch {
        order: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCheck {
    pub order: usize,
    pub found: usize,
    pub known: Option<usize>,
    /// Names of catalog entries found to be isomorphic to each other.
    pub duplicates: Vec<(String, String)>,
}

impl OrderCheck {
    pub fn passed(&self) -> bool {
        self.known == Some(self.found) && self.duplicates.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    tier: Tier,
    source: Source,
    bounds: Bounds,
    entries: Vec<CatalogEntry>,
    groups: Vec<FiniteGroup>,
    index: HashMap<String, usize>,
}

impl Catalog {
    /// Loads `tier`, from `STARFREE_CATALOG_DIR` when it is set.
    pub fn load(tier: Tier) -> Result<Self, CatalogError> {
        Self::load_with(tier, &Bounds::default())
    }

    pub fn load_with(tier: Tier, bounds: &Bounds) -> Result<Self, CatalogError> {
        match std::env::var_os(CATALOG_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Self::from_dir(Path::new(&dir), tier, bounds),
            _ => Self::embedded(tier, bounds),
        }
    }

    pub fn embedded(tier: Tier, bounds: &Bounds) -> Result<Self, CatalogError> {
        let files: Vec<(usize, String, String)> = data::FILES
            .iter()
            .filter(|(order, _, _)| tier.covers(*order))
            .map(|&(order, name, text)| (order, name.to_string(), text.to_string()))
            .collect();
        Self::assemble(tier, Source::Embedded, bounds, data::SHA256SUMS, files)
    }

    pub fn from_dir(dir: &Path, tier: Tier, bounds: &Bounds) -> Result<Self, CatalogError> {
        let read = |path: PathBuf| {
            std::fs::read_to_string(&path).map_err(|source| CatalogError::Io { path, source })
        };
        let sums = read(dir.join("SHA256SUMS"))?;
        let mut files = Vec::new();
        for order in tier.orders() {
            let name = order_file_name(order);
            files.push((order, name.clone(), read(dir.join(&name))?));
        }
        Self::assemble(
            tier,
            Source::Directory(dir.to_path_buf()),
            bounds,
            &sums,
            files,
        )
    }

    fn assemble(
        tier: Tier,
        source: Source,
        bounds: &Bounds,
        sums: &str,
        files: Vec<(usize, String, String)>,
    ) -> Result<Self, CatalogError> {
        let listed: HashMap<&str, &str> = sums
            .lines()
            .filter_map(|line| line.split_once(char::is_whitespace))
            .map(|(digest, file)| (file.trim_start().trim_start_matches('*'), digest))
            .collect();
        let mut catalog = Catalog {
            tier,
            source,
            bounds: *bounds,
            entries: Vec::new(),
            groups: Vec::new(),
            index: HashMap::new(),
        };
        for (order, file, text) in files {
            let computed = sha256_hex(text.as_bytes());
            match listed.get(file.as_str()) {
                None => return Err(CatalogError::Unlisted { file }),
                Some(&digest) if !digest.eq_ignore_ascii_case(&computed) => {
                    return Err(CatalogError::Checksum {
                        file,
                        listed: digest.to_string(),
                        computed,
                    });
                }
                Some(_) => {}
            }
            let raw: RawFile =
                serde_json::from_str(&text).map_err(|source| CatalogError::Json {
                    file: file.clone(),
                    source,
                })?;
            let malformed = |reason: String| CatalogError::Malformed {
                file: file.clone(),
                reason,
            };
            if raw.version != CATALOG_VERSION {
                return Err(malformed(format!(
                    "version {} is not {CATALOG_VERSION}",
                    raw.version
                )));
            }
            if raw.order != order {
                return Err(malformed(format!("declares order {}", raw.order)));
            }
            for raw_entry in raw.groups {
                let entry = raw_entry.into_entry(order).map_err(malformed)?;
                if catalog.index.contains_key(&entry.name) {
                    return Err(malformed(format!("{} appears twice", entry.name)));
                }
                catalog.add(entry)?;
            }
        }
        Ok(catalog)
    }

    fn add(&mut self, entry: CatalogEntry) -> Result<(), CatalogError> {
        let g = self.construct(&entry)?.with_label(entry.name.clone());
        let mismatch = |field, expected: String, found: String| {
            Err(CatalogError::InvariantMismatch {
                name: entry.name.clone(),
                field,
                expected,
                found,
            })
        };
        if g.order() != entry.order {
            return mismatch("order", entry.order.to_string(), g.order().to_string());
        }
        let found = Expected::of(&g);
        if found.center != entry.expected.center {
            return mismatch(
                "center order",
                entry.expected.center.to_string(),
                found.center.to_string(),
            );
        }
        if found.abelian != entry.expected.abelian {
            return mismatch(
                "abelian",
                entry.expected.abelian.to_string(),
                found.abelian.to_string(),
            );
        }
        if found.class_sizes != entry.expected.class_sizes {
            return mismatch(
                "class sizes",
                format!("{:?}", entry.expected.class_sizes),
                format!("{:?}", found.class_sizes),
            );
        }
        self.index.insert(entry.name.clone(), self.entries.len());
        self.entries.push(entry);
        self.groups.push(g);
        Ok(())
    }

    fn construct(&self, entry: &CatalogEntry) -> Result<FiniteGroup, CatalogError> {
        let bounds = &self.bounds;
        let wrap = |source| CatalogError::Group {
            name: entry.name.clone(),
            source,
        };
        match &entry.recipe {
            Recipe::Permutations { degree, generators } => {
                let perms = generators
                    .iter()
                    .map(|cycles| Permutation::from_cycles(*degree, cycles))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(wrap)?;
                FiniteGroup::from_permutation_generators_with(&perms, bounds).map_err(wrap)
            }
            Recipe::Cayley(rows) => FiniteGroup::from_cayley_table_with(rows, bounds).map_err(wrap),
            Recipe::Cyclic(n) => recipe::cyclic_with(*n, bounds).map_err(wrap),
            Recipe::Dihedral(n) => recipe::dihedral_with(*n, bounds).map_err(wrap),
            Recipe::Dicyclic(n) => recipe::dicyclic_with(*n, bounds).map_err(wrap),
            Recipe::Direct(a, b) => {
                direct_product_with(self.get(a)?, self.get(b)?, bounds).map_err(wrap)
            }
            Recipe::Semidirect {
                normal,
                acting,
                action,
            } => recipe::cyclic_semidirect(self.get(normal)?, self.get(acting)?, action, bounds)
                .map_err(wrap),
            Recipe::Extension { quotient, cocycle } => {
                let q = self.get(quotient)?;
                let f = Cocycle::from_hex(q.order(), cocycle).map_err(wrap)?;
                if !f.is_cocycle(q) {
                    return Err(wrap(GroupError::InvalidPermutation(format!(
                        "extension data is not a normalized cocycle on {quotient}"
                    ))));
                }
                central_extension(q, &f, bounds).map_err(wrap)
            }
        }
    }

    pub fn tier(&self) -> Tier {
        self.tier
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn orders(&self) -> Vec<usize> {
        self.tier.orders()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn entry(&self, name: &str) -> Option<&CatalogEntry> {
        self.index.get(name).map(|&i| &self.entries[i])
    }

    /// Every group, ordered by order and then by position in its file.
    pub fn iter(&self) -> impl Iterator<Item = (&CatalogEntry, &FiniteGroup)> {
        self.entries.iter().zip(&self.groups)
    }

    pub fn get(&self, name: &str) -> Result<&FiniteGroup, CatalogError> {
        self.index
            .get(name)
            .map(|&i| &self.groups[i])
            .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
    }

    /// A copy of the named group, labelled with its catalog name.
    pub fn build(&self, name: &str) -> Result<FiniteGroup, CatalogError> {
        self.get(name).cloned()
    }

    /// All groups of `order` up to isomorphism.
    pub fn groups_of_order(&self, order: usize) -> Result<Vec<&FiniteGroup>, CatalogError> {
        if !self.tier.covers(order) {
            return Err(CatalogError::UnsupportedOrder {
                order,
                tier: self.tier,
            });
        }
        Ok(self
            .iter()
            .filter(|(e, _)| e.order == order)
            .map(|(_, g)| g)
            .collect())
    }

    pub fn identify(&self, g: &FiniteGroup) -> Identification {
        let order = g.order();
        if !self.tier.covers(order) {
            return Identification::OutsideCatalog { order };
        }
        let invariants = Invariants::of(g);
        self.iter()
            .filter(|(e, h)| e.order == order && Invariants::of(h) == invariants)
            .find(|(_, h)| are_isomorphic(g, h))
            .map(|(e, _)| Identification::Known(e.name.clone()))
            .unwrap_or(Identification::NoMatch { order })
    }

    /// Checks every covered order against the known number of groups and
    /// confirms the entries of each order are pairwise non-isomorphic.
    pub fn verify_integrity(&self) -> Vec<OrderCheck> {
        self.orders()
            .into_iter()
            .map(|order| {
                let members: Vec<(&CatalogEntry, &FiniteGroup)> =
                    self.iter().filter(|(e, _)| e.order == order).collect();
                let prints: Vec<String> = members.iter().map(|(_, g)| fingerprint(g)).collect();
                let mut duplicates = Vec::new();
                for i in 0..members.len() {
                    for j in i + 1..members.len() {
                        if prints[i] == prints[j] && are_isomorphic(members[i].1, members[j].1) {
                            duplicates.push((members[i].0.name.clone(), members[j].0.name.clone()));
                        }
                    }
                }
                OrderCheck {
                    order,
                    found: members.len(),
                    known: known_group_count(order),
                    duplicates,
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn standard() -> Catalog {
        Catalog::embedded(Tier::Standard, &Bounds::default()).unwrap()
    }

    #[test]
    fn tiers() {
        assert_eq!(Tier::Standard.orders().len(), 25);
        assert_eq!(Tier::Stretch.orders().len(), 34);
        assert!(Tier::Stretch.covers(50) && !Tier::Standard.covers(50));
    }

    #[test]
    fn build_by_name() {
        let c = standard();
        let q8 = c.build("Q8").unwrap();
        assert_eq!((q8.order(), q8.center_size()), (8, 2));
        assert_eq!(q8.label(), Some("Q8"));
        assert!(matches!(c.build("Q7"), Err(CatalogError::UnknownName(_))));
        assert!(matches!(
            c.groups_of_order(50),
            Err(CatalogError::UnsupportedOrder { .. })
        ));
        assert_eq!(c.groups_of_order(8).unwrap().len(), 5);
    }

    #[test]
    fn identify_relabelled() {
        let c = standard();
        let a4 = c.build("A4").unwrap();
        let perm: Vec<usize> = (0..12).rev().collect();
        let shuffled = a4.relabel(&perm).unwrap();
        assert_eq!(c.identify(&shuffled), Identification::Known("A4".into()));
        let c25 = recipe::cyclic(25).unwrap();
        assert_eq!(
            c.identify(&c25),
            Identification::OutsideCatalog { order: 25 }
        );
    }

    #[test]
    fn recipes_round_trip() {
        let c = standard();
        for order in [8, 16, 24] {
            let entries: Vec<CatalogEntry> = c
                .entries()
                .iter()
                .filter(|e| e.order == order)
                .cloned()
                .collect();
            let text = render_order_file(order, &entries);
            let raw: RawFile = serde_json::from_str(&text).unwrap();
            let back: Vec<CatalogEntry> = raw
                .groups
                .into_iter()
                .map(|r| r.into_entry(order).unwrap())
                .collect();
            assert_eq!(back, entries);
        }
    }

    #[test]
    fn exactly_one_recipe() {
        let text = r#"{"name": "x", "cyclic": 2, "dihedral": 1, "expected": {"center": 2, "abelian": true, "class_sizes": [[1, 2]]}}"#;
        let raw: RawEntry = serde_json::from_str(text).unwrap();
        assert!(raw.into_entry(2).is_err());
        let none =
            r#"{"name": "x", "expected": {"center": 2, "abelian": true, "class_sizes": [[1, 2]]}}"#;
        let raw: RawEntry = serde_json::from_str(none).unwrap();
        assert!(raw.into_entry(2).is_err());
    }
}
