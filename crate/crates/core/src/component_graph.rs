//! Component graphs: rooted multi-DAGs in which every non-root vertex has
//! indegree exactly two, counting multiplicity.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{CanonicalForm, ColoredDigraph};
use crate::network::topological_order;

/// Largest vertex count accepted by [`enumerate_component_graphs`] unless the
/// caller raises it.
pub const DEFAULT_MAX_ENUMERATION_VERTICES: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComponentGraphError {
    #[error("not a component graph: {0}")]
    Invalid(String),
    #[error("star component graph needs size at least 1")]
    EmptyStar,
    #[error("enumeration of {requested}-vertex component graphs exceeds the limit of {limit}")]
    ResourceLimit { requested: usize, limit: usize },
    #[error("malformed component graph JSON: {0}")]
    Json(String),
}

/// Candidate multigraph, as read from input; nothing is checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    pub m: usize,
    pub root: usize,
    pub edges: Vec<(usize, usize, u8)>,
}

/// A validated component graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComponentGraph {
    m: usize,
    root: usize,
    mult: Vec<u8>,
}

/// True iff the candidate satisfies every component-graph invariant.
pub fn is_component_graph(candidate: &Multigraph) -> bool {
    ComponentGraph::try_from(candidate.clone()).is_ok()
}

impl TryFrom<Multigraph> for ComponentGraph {
    type Error = ComponentGraphError;

    fn try_from(g: Multigraph) -> Result<Self, Self::Error> {
        ComponentGraph::new(g.m, g.root, &g.edges)
    }
}

impl ComponentGraph {
    /// Validates and builds. Repeated pairs in `edges` add up.
    pub fn new(m: usize, root: usize, edges: &[(usize, usize, u8)]) -> Result<Self, ComponentGraphError> {
        let invalid = |msg: String| Err(ComponentGraphError::Invalid(msg));
        if m == 0 {
            return invalid("no vertices".into());
        }
        if root >= m {
            return invalid(format!("root {root} out of range"));
        }
        let mut mult = vec![0u8; m * m];
        for &(u, v, k) in edges {
            if u >= m || v >= m {
                return invalid(format!("edge ({u}, {v}) out of range"));
            }
            if u == v {
                return invalid(format!("self loop at {u}"));
            }
            if k == 0 {
                return invalid(format!("edge ({u}, {v}) has multiplicity 0"));
            }
            let cell = &mut mult[u * m + v];
            *cell = cell.saturating_add(k);
            if *cell > 2 {
                return invalid(format!("edge ({u}, {v}) has multiplicity above 2"));
            }
        }
        let g = ComponentGraph { m, root, mult };
        for v in 0..m {
            let indeg = g.indegree(v);
            if v == root && indeg != 0 {
                return invalid(format!("root has indegree {indeg}"));
            }
            if v != root && indeg != 2 {
                return invalid(format!("vertex {v} has indegree {indeg}"));
            }
        }
        if topological_order(m, &g.arc_list()).is_none() {
            return invalid("cycle".into());
        }
        if !g.all_reachable() {
            return invalid("vertex unreachable from root".into());
        }
        if m >= 2 && g.root_double_edges() == 0 {
            return invalid("no double edge leaves the root".into());
        }
        Ok(g)
    }

    /// The single-vertex graph of a network without reticulations.
    pub fn trivial() -> Self {
        ComponentGraph {
            m: 1,
            root: 0,
            mult: vec![0],
        }
    }

    /// Root with `k` children, each attached by a double edge.
    pub fn star(k: usize) -> Result<Self, ComponentGraphError> {
        if k == 0 {
            return Err(ComponentGraphError::EmptyStar);
        }
        let edges: Vec<(usize, usize, u8)> = (1..=k).map(|v| (0, v, 2)).collect();
        ComponentGraph::new(k + 1, 0, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u8 {
        self.mult[u * self.m + v]
    }

    pub fn indegree(&self, v: usize) -> usize {
        (0..self.m).map(|u| self.multiplicity(u, v) as usize).sum()
    }

    /// Edges as `(u, v, multiplicity)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, u8)> {
        let mut out = Vec::new();
        for u in 0..self.m {
            for v in 0..self.m {
                let k = self.multiplicity(u, v);
                if k > 0 {
                    out.push((u, v, k));
                }
            }
        }
        out
    }

    pub(crate) fn arc_list(&self) -> Vec<(usize, usize)> {
        self.edges().into_iter().map(|(u, v, _)| (u, v)).collect()
    }

    pub fn children(&self, u: usize) -> Vec<usize> {
        (0..self.m).filter(|&v| self.multiplicity(u, v) > 0).collect()
    }

    /// Number of double edges leaving the root.
    pub fn root_double_edges(&self) -> usize {
        (0..self.m)
            .filter(|&v| self.multiplicity(self.root, v) == 2)
            .count()
    }

    pub fn is_star(&self) -> bool {
        self.m >= 2 && self.root_double_edges() == self.m - 1
    }

    fn all_reachable(&self) -> bool {
        let mut seen = vec![false; self.m];
        let mut stack = vec![self.root];
        seen[self.root] = true;
        while let Some(u) = stack.pop() {
            for v in self.children(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn colored(&self) -> ColoredDigraph {
        let colors = (0..self.m).map(|v| u32::from(v != self.root)).collect();
        let mut g = ColoredDigraph::new(colors);
        for (u, v, k) in self.edges() {
            g.set_multiplicity(u, v, k);
        }
        g
    }

    /// Canonical form under root-preserving multigraph isomorphism.
    pub fn canonical_form(&self) -> CanonicalForm {
        self.colored().canonical_form()
    }

    pub fn is_isomorphic(&self, other: &ComponentGraph) -> bool {
        self.m == other.m && self.canonical_form() == other.canonical_form()
    }

    /// Relabels vertices into canonical order; the root becomes vertex 0.
    pub fn canonicalized(&self) -> ComponentGraph {
        let (_, order) = self.colored().canonical_labeling();
        let mut pos = vec![0usize; self.m];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut mult = vec![0u8; self.m * self.m];
        for (u, v, k) in self.edges() {
            mult[pos[u] * self.m + pos[v]] = k;
        }
        ComponentGraph {
            m: self.m,
            root: pos[self.root],
            mult,
        }
    }

    pub fn to_multigraph(&self) -> Multigraph {
        Multigraph {
            m: self.m,
            root: self.root,
            edges: self.edges(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_multigraph()).expect("component graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ComponentGraphError> {
        let raw: Multigraph =
            serde_json::from_str(text).map_err(|e| ComponentGraphError::Json(e.to_string()))?;
        raw.try_into()
    }

    /// Graphviz rendering; a double edge is drawn as two parallel arcs.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph component_graph {\n");
        for v in 0..self.m {
            if v == self.root {
                out.push_str(&format!("  c{v} [shape=doublecircle];\n"));
            } else {
                out.push_str(&format!("  c{v} [shape=circle];\n"));
            }
        }
        for (u, v, k) in self.edges() {
            for _ in 0..k {
                out.push_str(&format!("  c{u} -> c{v};\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// All component graphs on `m` vertices up to isomorphism, canonicalized and
/// sorted by canonical form.
///
/// Every DAG has a topological numbering with the root first, so it suffices
/// to let vertex `v` pick its two parents (with repetition) among `0..v`.
pub fn enumerate_component_graphs(
    m: usize,
    max_vertices: usize,
) -> Result<Vec<ComponentGraph>, ComponentGraphError> {
    if m == 0 {
        return Err(ComponentGraphError::Invalid("no vertices".into()));
    }
    if m > max_vertices {
        return Err(ComponentGraphError::ResourceLimit {
            requested: m,
            limit: max_vertices,
        });
    }
    let mut found: BTreeMap<CanonicalForm, ComponentGraph> = BTreeMap::new();
    let mut edges = Vec::with_capacity(2 * m);
    choose_parents(m, 1, &mut edges, &mut found);
    Ok(found.into_values().collect())
}

fn choose_parents(
    m: usize,
    v: usize,
    edges: &mut Vec<(usize, usize, u8)>,
    found: &mut BTreeMap<CanonicalForm, ComponentGraph>,
) {
    if v == m {
        let g = ComponentGraph::new(m, 0, edges).expect("parents precede children");
        let g = g.canonicalized();
        found.entry(g.canonical_form()).or_insert(g);
        return;
    }
    for a in 0..v {
        for b in a..v {
            let pushed = if a == b {
                edges.push((a, v, 2));
                1
            } else {
                edges.push((a, v, 1));
                edges.push((b, v, 1));
                2
            };
            choose_parents(m, v + 1, edges, found);
            edges.truncate(edges.len() - pushed);
        }
    }
}
