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

//! Regenerates the order-32 catalog file.
//!
//! Every group of order 32 has a central subgroup of order 2, so it is a
//! central extension of some group of order 16 by `C2`. This enumerates one
//! extension per cohomology class for each of the fourteen groups of order
//! 16, keeps one per isomorphism class, and writes the survivors together
//! with an updated `SHA256SUMS`.
//!
//! ```text
//! cargo run --release --example gen_order32 [catalog-dir]
//! ```

use std::collections::BTreeMap;
use std::path::PathBuf;

use starfree::catalog::extension::distinct_central_extensions;
use starfree::catalog::{
    order_file_name, render_order_file, sha256_hex, Catalog, CatalogEntry, Expected, Recipe, Tier,
};
use starfree::Bounds;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("catalog/v1"));
    let bounds = Bounds::default();
    let catalog = Catalog::embedded(Tier::Standard, &bounds)?;
    let quotients: Vec<_> = catalog.groups_of_order(16)?.into_iter().cloned().collect();
    let found = distinct_central_extensions(&quotients, &bounds)?;

    let entries: Vec<CatalogEntry> = found
        .iter()
        .enumerate()
        .map(|(i, (q, cocycle, g))| CatalogEntry {
            name: format!("G32_{:02}", i + 1),
            order: 32,
            recipe: Recipe::Extension {
                quotient: quotients[*q]
                    .label()
                    .expect("catalog groups are labelled")
                    .to_string(),
                cocycle: cocycle.to_hex(),
            },
            expected: Expected::of(g),
        })
        .collect();
    let file = order_file_name(32);
    let text = render_order_file(32, &entries);
    std::fs::write(dir.join(&file), &text)?;

    let sums_path = dir.join("SHA256SUMS");
    let mut sums: BTreeMap<String, String> = std::fs::read_to_string(&sums_path)?
        .lines()
        .filter_map(|line| line.split_once("  "))
        .map(|(digest, name)| (name.to_string(), digest.to_string()))
        .collect();
    sums.insert(file.clone(), sha256_hex(text.as_bytes()));
    let listing: String = sums
        .iter()
        .map(|(name, digest)| format!("{digest}  {name}\n"))
        .collect();
    std::fs::write(&sums_path, listing)?;

    println!(
        "wrote {} groups to {}",
        entries.len(),
        dir.join(file).display()
    );
    Ok(())
}
