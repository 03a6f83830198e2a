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

//! Per-group summary combining the centralizer profile and the commuting
//! graph.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::catalog::{Catalog, Identification};
use crate::class_eq::ClassEquationSolution;
use crate::graph::{star_report, ComponentShape, StarReport};
use crate::group::{FiniteGroup, GroupError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub group: String,
    pub order: usize,
    pub center: usize,
    /// `(centralizer size, class count)` over non-central classes.
    pub profile: Vec<(usize, usize)>,
    pub class_equation: ClassEquationSolution,
    pub strong_star_number: usize,
    pub induced_star_number: usize,
    pub graph: StarReport,
    pub components: String,
    pub identified_as: Option<String>,
}

/// `K3 + 4K2` style summary; non-complete components are written as
/// `G(v,e)`.
pub fn describe_components(shapes: &[ComponentShape]) -> String {
    shapes
        .iter()
        .map(|c| {
            let shape = if c.edges == c.vertices * (c.vertices - 1) / 2 {
                format!("K{}", c.vertices)
            } else {
                format!("G({},{})", c.vertices, c.edges)
            };
            if c.count == 1 {
                shape
            } else {
                format!("{}{shape}", c.count)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Analyzes `g`, naming it from `catalog` when possible. Abelian groups are
/// rejected since their commuting graph has no vertices.
pub fn analyze(g: &FiniteGroup, catalog: Option<&Catalog>) -> Result<Analysis, GroupError> {
    let profile = g.centralizer_profile()?;
    let graph = star_report(g)?;
    let identified_as = catalog.and_then(|c| match c.identify(g) {
        Identification::Known(name) => Some(name),
        _ => None,
    });
    Ok(Analysis {
        group: g.display_name(),
        order: g.order(),
        center: profile.center_order,
        profile: profile.pairs(),
        class_equation: ClassEquationSolution::from_profile(&profile),
        strong_star_number: graph.strong_star_number,
        induced_star_number: graph.induced_star_number,
        components: describe_components(&graph.components),
        graph,
        identified_as,
    })
}

impl Analysis {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("analysis serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let profile: Vec<String> = self
            .profile
            .iter()
            .map(|(s, m)| format!("({s},{m})"))
            .collect();
        let classes: Vec<String> = std::iter::once(format!("{}", self.center))
            .chain(
                self.profile
                    .iter()
                    .map(|(s, m)| format!("{m}x{}", self.order / s)),
            )
            .collect();
        let _ = writeln!(out, "group:               {}", self.group);
        if let Some(name) = &self.identified_as {
            let _ = writeln!(out, "catalog name:        {name}");
        }
        let _ = writeln!(out, "order:               {}", self.order);
        let _ = writeln!(out, "center size:         {}", self.center);
        let _ = writeln!(out, "profile:             [{}]", profile.join(", "));
        let _ = writeln!(
            out,
            "class equation:      {} = {}",
            self.order,
            classes.join(" + ")
        );
        let _ = writeln!(out, "strong star number:  {}", self.strong_star_number);
        let _ = writeln!(out, "induced star number: {}", self.induced_star_number);
        let _ = writeln!(
            out,
            "commuting graph:     {} vertices, {} edges, max degree {}",
            self.graph.vertex_count, self.graph.edge_count, self.graph.max_degree
        );
        let _ = writeln!(out, "components:          {}", self.components);
        out
    }
}
