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

//! The commuting graph: non-central elements, joined when they commute.
//!
//! A vertex `x` has degree `|C(x)| − |Z| − 1`, so a `k`-star occurs as a
//! subgraph exactly when some degree reaches `k`. Strong star-freeness is
//! therefore decided from degrees, and independently from centralizer sizes,
//! and the two answers are required to agree. Induced stars need `k`
//! pairwise non-commuting neighbors and are found by backtracking.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::group::{FiniteGroup, GroupError};

#[derive(Clone, Debug)]
pub struct CommutingGraph {
    group_label: String,
    vertices: Vec<usize>,
    adjacency: Vec<FixedBitSet>,
}

/// Connected components of one shape and how many there are.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ComponentShape {
    pub vertices: usize,
    pub edges: usize,
    pub count: usize,
}

impl CommutingGraph {
    pub fn new(g: &FiniteGroup) -> Result<Self, GroupError> {
        let vertices: Vec<usize> = {
            let sizes = g.centralizer_sizes();
            (0..g.order()).filter(|&x| sizes[x] < g.order()).collect()
        };
        if vertices.is_empty() {
            return Err(GroupError::AbelianGroup);
        }
        let v = vertices.len();
        let mut adjacency = vec![FixedBitSet::with_capacity(v); v];
        for i in 0..v {
            for j in i + 1..v {
                if g.commute(vertices[i], vertices[j]) {
                    adjacency[i].insert(j);
                    adjacency[j].insert(i);
                }
            }
        }
        Ok(CommutingGraph {
            group_label: g.display_name(),
            vertices,
            adjacency,
        })
    }

    pub fn group_label(&self) -> &str {
        &self.group_label
    }

    /// Element indices of the vertices, ascending. Vertex `i` is element
    /// `vertices()[i]`.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency
            .iter()
            .map(|row| row.count_ones(..))
            .sum::<usize>()
            / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones(..)
    }

    /// Degree of the vertex for element `x`, or `None` for central elements.
    pub fn degree_of_element(&self, x: usize) -> Option<usize> {
        self.vertices.binary_search(&x).ok().map(|v| self.degree(v))
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].ones()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Number of vertices per degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for v in 0..self.vertex_count() {
            *hist.entry(self.degree(v)).or_default() += 1;
        }
        hist
    }

    /// Edges as element-index pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for v in self.adjacency[u].ones().filter(|&v| v > u) {
                edges.push((self.vertices[u], self.vertices[v]));
            }
        }
        edges
    }

    /// Component shapes, largest first.
    pub fn components(&self) -> Vec<ComponentShape> {
        let n = self.vertex_count();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut shapes: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            seen.insert(start);
            let mut stack = vec![start];
            let (mut verts, mut degree_sum) = (0, 0);
            while let Some(u) = stack.pop() {
                verts += 1;
                degree_sum += self.degree(u);
                for w in self.adjacency[u].ones() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            *shapes.entry((verts, degree_sum / 2)).or_default() += 1;
        }
        shapes
            .into_iter()
            .rev()
            .map(|((vertices, edges), count)| ComponentShape {
                vertices,
                edges,
                count,
            })
            .collect()
    }

    /// Whether some vertex has `k` pairwise non-adjacent neighbors.
    ///
    /// Hubs are tried by descending degree, and leaves within a neighborhood
    /// by ascending degree.
    pub fn has_induced_star(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        let mut hubs: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| self.degree(v) >= k)
            .collect();
        hubs.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        hubs.into_iter().any(|hub| {
            let mut leaves: Vec<usize> = self.adjacency[hub].ones().collect();
            leaves.sort_by_key(|&v| (self.degree(v), v));
            self.independent_subset(&leaves, k)
        })
    }

    /// Whether `candidates` contains `need` pairwise non-adjacent vertices.
    fn independent_subset(&self, candidates: &[usize], need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if candidates.len() < need {
            return false;
        }
        for (i, &c) in candidates.iter().enumerate() {
            if candidates.len() - i < need {
                return false;
            }
            let rest: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| !self.adjacent(c, w))
                .collect();
            if self.independent_subset(&rest, need - 1) {
                return true;
            }
        }
        false
    }

    /// Graphviz rendering. Vertices are named by element index; all vertex
    /// lines come first, then edges in lexicographic order.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let label = self.group_label.replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(out, "graph \"{label}\" {{").unwrap();
        for &x in &self.vertices {
            writeln!(out, "  {x};").unwrap();
        }
        for (a, b) in self.edges() {
            writeln!(out, "  {a} -- {b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Graph-side test: every degree is below `k`.
pub fn strong_free_by_degree(graph: &CommutingGraph, k: usize) -> bool {
    graph.max_degree() < k
}

/// Centralizer-side test: `|C(x)| < (k + 1) + |Z|` for every non-central `x`.
pub fn strong_free_by_centralizers(g: &FiniteGroup, k: usize) -> Result<bool, GroupError> {
    let sizes = g.centralizer_sizes();
    let z = sizes.iter().filter(|&&s| s == g.order()).count();
    if z == g.order() {
        return Err(GroupError::AbelianGroup);
    }
    Ok(sizes
        .iter()
        .filter(|&&s| s < g.order())
        .all(|&s| s < k + 1 + z))
}

/// Whether the commuting graph has no `k`-star subgraph. Both routes are
/// evaluated and must agree.
pub fn is_strong_k_star_free(g: &FiniteGroup, k: usize) -> Result<bool, GroupError> {
    let graph = CommutingGraph::new(g)?;
    let by_degree = strong_free_by_degree(&graph, k);
    let by_centralizers = strong_free_by_centralizers(g, k)?;
    assert_eq!(
        by_degree,
        by_centralizers,
        "degree and centralizer criteria disagree for {} at k = {k}",
        graph.group_label()
    );
    Ok(by_degree)
}

/// Smallest `k` with no `k`-star subgraph: `max |C(x)| − |Z|` over
/// non-central `x`, which is the maximum degree plus one.
pub fn strong_star_number(g: &FiniteGroup) -> Result<usize, GroupError> {
    let profile = g.centralizer_profile()?;
    let s = profile.largest_centralizer() - profile.center_order;
    debug_assert_eq!(s, CommutingGraph::new(g)?.max_degree() + 1);
    Ok(s)
}

pub fn is_induced_k_star_free(g: &FiniteGroup, k: usize) -> Result<bool, GroupError> {
    Ok(!CommutingGraph::new(g)?.has_induced_star(k))
}

/// Smallest `k` with no induced `k`-star.
pub fn induced_star_number(g: &FiniteGroup) -> Result<usize, GroupError> {
    Ok(induced_star_number_of(&CommutingGraph::new(g)?))
}

fn induced_star_number_of(graph: &CommutingGraph) -> usize {
    (1..)
        .find(|&k| !graph.has_induced_star(k))
        .expect("stars are bounded by the vertex count")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarReport {
    pub group: String,
    pub strong_star_number: usize,
    pub induced_star_number: usize,
    pub max_degree: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Number of vertices per degree.
    pub degree_histogram: BTreeMap<usize, usize>,
    pub components: Vec<ComponentShape>,
}

pub fn star_report(g: &FiniteGroup) -> Result<StarReport, GroupError> {
    let graph = CommutingGraph::new(g)?;
    let report = StarReport {
        group: graph.group_label().to_owned(),
        strong_star_number: strong_star_number(g)?,
        induced_star_number: induced_star_number_of(&graph),
        max_degree: graph.max_degree(),
        vertex_count: graph.vertex_count(),
        edge_count: graph.edge_count(),
        degree_histogram: graph.degree_histogram(),
        components: graph.components(),
    };
    assert_eq!(report.strong_star_number, report.max_degree + 1);
    assert!(report.induced_star_number <= report.strong_star_number);
    Ok(report)
}
