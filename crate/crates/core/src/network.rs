//! Rooted binary phylogenetic networks: data model, validation and the
//! tree-child / normal class predicates.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{CanonicalForm, ColoredDigraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Root,
    Leaf,
    Tree,
    Reticulation,
}

impl VertexKind {
    /// Required (indegree, outdegree).
    pub fn degrees(self) -> (usize, usize) {
        match self {
            VertexKind::Root => (0, 1),
            VertexKind::Leaf => (1, 0),
            VertexKind::Tree => (1, 2),
            VertexKind::Reticulation => (2, 1),
        }
    }

    fn color(self) -> u32 {
        match self {
            VertexKind::Root => 0,
            VertexKind::Tree => 1,
            VertexKind::Reticulation => 2,
            VertexKind::Leaf => 3,
        }
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VertexKind::Root => "root",
            VertexKind::Leaf => "leaf",
            VertexKind::Tree => "tree",
            VertexKind::Reticulation => "reticulation",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub kind: VertexKind,
    pub label: Option<u32>,
}

impl Vertex {
    pub fn new(id: impl Into<String>, kind: VertexKind, label: Option<u32>) -> Self {
        Vertex {
            id: id.into(),
            kind,
            label,
        }
    }
}

/// One broken rule found by [`Network::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("edge #{index} refers to a missing vertex")]
    DanglingEdge { index: usize },
    #[error("self loop at {vertex}")]
    SelfLoop { vertex: String },
    #[error("double edge {parent} -> {child}")]
    DoubleEdge { parent: String, child: String },
    #[error("{vertex} is a {kind} vertex with indegree {indegree} and outdegree {outdegree}")]
    Degree {
        vertex: String,
        kind: VertexKind,
        indegree: usize,
        outdegree: usize,
    },
    #[error("expected exactly one root, found {found}")]
    RootCount { found: usize },
    #[error("graph contains a directed cycle")]
    Cycle,
    #[error("leaf {vertex} has no label")]
    MissingLabel { vertex: String },
    #[error("non-leaf {vertex} carries a label")]
    UnexpectedLabel { vertex: String },
    #[error("leaf {vertex} has label {label} outside 1..={leaves}")]
    LabelOutOfRange {
        vertex: String,
        label: u32,
        leaves: usize,
    },
    #[error("label {label} used more than once")]
    DuplicateLabel { label: u32 },
    #[error("{what}: expected {expected}, found {found}")]
    CountMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("duplicate vertex id {id}")]
    DuplicateId { id: String },
}

/// Outcome of validation; an empty report means the network is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

#[derive(Debug, Error)]
pub enum NetworkError {
    #[error("invalid network: {0}")]
    Invalid(ValidationReport),
    #[error("network is not tree-child")]
    NotTreeChild,
    #[error("unknown vertex id {0:?}")]
    UnknownVertex(String),
    #[error("header declares {field} = {declared} but the graph has {actual}")]
    HeaderMismatch {
        field: &'static str,
        declared: usize,
        actual: usize,
    },
    #[error("malformed network JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// Tree edges and reticulation edges (edges entering a reticulation vertex).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClasses {
    pub tree: Vec<(usize, usize)>,
    pub reticulation: Vec<(usize, usize)>,
}

/// A candidate phylogenetic network. Vertices are addressed by index; the
/// string ids are opaque and only used for I/O and diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

impl Network {
    /// Builds a candidate without checking any invariant; see [`Network::validate`].
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>) -> Self {
        Network { vertices, edges }
    }

    /// Builds a candidate from edges given by vertex id.
    pub fn from_named<S: AsRef<str>>(
        vertices: Vec<Vertex>,
        edges: &[(S, S)],
    ) -> Result<Self, NetworkError> {
        let index: HashMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.id.as_str(), i))
            .collect();
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| NetworkError::UnknownVertex(s.to_string()))
        };
        let edges = edges
            .iter()
            .map(|(p, c)| Ok((lookup(p.as_ref())?, lookup(c.as_ref())?)))
            .collect::<Result<Vec<_>, NetworkError>>()?;
        Ok(Network { vertices, edges })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.vertices[v].kind
    }

    pub fn leaf_count(&self) -> usize {
        self.count_kind(VertexKind::Leaf)
    }

    pub fn reticulation_count(&self) -> usize {
        self.count_kind(VertexKind::Reticulation)
    }

    fn count_kind(&self, kind: VertexKind) -> usize {
        self.vertices.iter().filter(|v| v.kind == kind).count()
    }

    pub fn root(&self) -> Option<usize> {
        self.vertices.iter().position(|v| v.kind == VertexKind::Root)
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertices.len()];
        for &(p, c) in &self.edges {
            out[p].push(c);
        }
        out
    }

    pub fn parents(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertices.len()];
        for &(p, c) in &self.edges {
            inc[c].push(p);
        }
        inc
    }

    /// Checks every structural invariant and reports all violations found.
    pub fn validate(&self) -> ValidationReport {
        let n = self.vertices.len();
        let mut violations = Vec::new();

        let mut seen_ids = HashSet::new();
        for v in &self.vertices {
            if !seen_ids.insert(v.id.as_str()) {
                violations.push(Violation::DuplicateId { id: v.id.clone() });
            }
        }

        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        let mut pairs = HashSet::new();
        let mut good_edges = Vec::with_capacity(self.edges.len());
        for (index, &(p, c)) in self.edges.iter().enumerate() {
            if p >= n || c >= n {
                violations.push(Violation::DanglingEdge { index });
                continue;
            }
            if p == c {
                violations.push(Violation::SelfLoop {
                    vertex: self.vertices[p].id.clone(),
                });
            }
            if !pairs.insert((p, c)) {
                violations.push(Violation::DoubleEdge {
                    parent: self.vertices[p].id.clone(),
                    child: self.vertices[c].id.clone(),
                });
            }
            outdeg[p] += 1;
            indeg[c] += 1;
            good_edges.push((p, c));
        }

        for (v, vert) in self.vertices.iter().enumerate() {
            if vert.kind.degrees() != (indeg[v], outdeg[v]) {
                violations.push(Violation::Degree {
                    vertex: vert.id.clone(),
                    kind: vert.kind,
                    indegree: indeg[v],
                    outdegree: outdeg[v],
                });
            }
        }

        let roots = self.count_kind(VertexKind::Root);
        if roots != 1 {
            violations.push(Violation::RootCount { found: roots });
        }

        if topological_order(n, &good_edges).is_none() {
            violations.push(Violation::Cycle);
        }

        let leaves = self.leaf_count();
        let mut used = HashSet::new();
        for vert in &self.vertices {
            match (vert.kind, vert.label) {
                (VertexKind::Leaf, None) => violations.push(Violation::MissingLabel {
                    vertex: vert.id.clone(),
                }),
                (VertexKind::Leaf, Some(label)) => {
                    if label == 0 || label as usize > leaves {
                        violations.push(Violation::LabelOutOfRange {
                            vertex: vert.id.clone(),
                            label,
                            leaves,
                        });
                    } else if !used.insert(label) {
                        violations.push(Violation::DuplicateLabel { label });
                    }
                }
                (_, Some(_)) => violations.push(Violation::UnexpectedLabel {
                    vertex: vert.id.clone(),
                }),
                (_, None) => {}
            }
        }

        // Vertex and edge totals forced by the degree contract.
        let k = self.reticulation_count();
        let tree = self.count_kind(VertexKind::Tree);
        if leaves > 0 {
            let checks = [
                ("tree vertices", leaves + k - 1, tree),
                ("vertices", 2 * leaves + 2 * k, n),
                ("edges", 2 * leaves + 3 * k - 1, self.edges.len()),
            ];
            for (what, expected, found) in checks {
                if expected != found {
                    violations.push(Violation::CountMismatch {
                        what,
                        expected,
                        found,
                    });
                }
            }
        }

        ValidationReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    pub(crate) fn ensure_valid(&self) -> Result<(), NetworkError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(NetworkError::Invalid(report))
        }
    }

    /// Every non-leaf vertex has at least one child that is not a reticulation.
    pub fn is_tree_child(&self) -> Result<bool, NetworkError> {
        self.ensure_valid()?;
        Ok(self.tree_child_unchecked())
    }

    fn tree_child_unchecked(&self) -> bool {
        let children = self.children();
        self.vertices.iter().enumerate().all(|(v, vert)| {
            vert.kind == VertexKind::Leaf
                || children[v]
                    .iter()
                    .any(|&c| self.vertices[c].kind != VertexKind::Reticulation)
        })
    }

    pub(crate) fn ensure_tree_child(&self) -> Result<(), NetworkError> {
        if self.is_tree_child()? {
            Ok(())
        } else {
            Err(NetworkError::NotTreeChild)
        }
    }

    /// Tree-child, and the two parents of every reticulation are incomparable
    /// under the ancestor relation.
    pub fn is_normal(&self) -> Result<bool, NetworkError> {
        self.ensure_tree_child()?;
        let children = self.children();
        let parents = self.parents();
        let reaches = |from: usize, to: usize| {
            let mut stack = vec![from];
            let mut seen = vec![false; self.vertices.len()];
            while let Some(u) = stack.pop() {
                if u == to {
                    return true;
                }
                for &c in &children[u] {
                    if !seen[c] {
                        seen[c] = true;
                        stack.push(c);
                    }
                }
            }
            false
        };
        Ok(self
            .vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| v.kind == VertexKind::Reticulation)
            .all(|(h, _)| {
                let (a, b) = (parents[h][0], parents[h][1]);
                !reaches(a, b) && !reaches(b, a)
            }))
    }

    pub fn classify_edges(&self) -> Result<EdgeClasses, NetworkError> {
        self.ensure_valid()?;
        let (reticulation, tree) = self
            .edges
            .iter()
            .partition(|&&(_, c)| self.vertices[c].kind == VertexKind::Reticulation);
        Ok(EdgeClasses { tree, reticulation })
    }

    fn colored(&self, with_labels: bool) -> ColoredDigraph {
        let colors = self
            .vertices
            .iter()
            .map(|v| match (v.kind, v.label) {
                (VertexKind::Leaf, Some(l)) if with_labels => 3 + l,
                (kind, _) => kind.color(),
            })
            .collect();
        let mut g = ColoredDigraph::new(colors);
        for &(p, c) in &self.edges {
            g.add_arc(p, c);
        }
        g
    }

    /// Canonical form up to isomorphisms preserving vertex kinds and leaf labels.
    pub fn canonical_form(&self) -> CanonicalForm {
        self.colored(true).canonical_form()
    }

    /// Canonical form of the unlabeled shape (leaf labels ignored).
    pub fn shape_form(&self) -> CanonicalForm {
        self.colored(false).canonical_form()
    }

    /// Vertex indices in canonical order.
    pub fn canonical_order(&self) -> Vec<usize> {
        self.colored(true).canonical_labeling().1
    }

    /// Copy with vertices permuted into canonical order and ids `v0, v1, ...`.
    pub fn canonicalized(&self) -> Network {
        self.relabeled(&self.canonical_order())
    }

    fn relabeled(&self, order: &[usize]) -> Network {
        let mut pos = vec![0usize; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let vertices = order
            .iter()
            .enumerate()
            .map(|(i, &v)| Vertex::new(format!("v{i}"), self.vertices[v].kind, self.vertices[v].label))
            .collect();
        let mut edges: Vec<(usize, usize)> =
            self.edges.iter().map(|&(p, c)| (pos[p], pos[c])).collect();
        edges.sort_unstable();
        Network { vertices, edges }
    }

    /// Same shape with the leaves relabeled through `relabel(old) = new`.
    pub fn with_labels(&self, relabel: impl Fn(u32) -> u32) -> Network {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex {
                label: v.label.map(&relabel),
                ..v.clone()
            })
            .collect();
        Network {
            vertices,
            edges: self.edges.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&NetworkJson::from(self)).expect("network serializes")
    }

    /// Parses the JSON exchange format. The result is a candidate; call
    /// [`Network::validate`] to check it.
    pub fn from_json(text: &str) -> Result<Network, NetworkError> {
        let raw: NetworkJson = serde_json::from_str(text)?;
        let vertices: Vec<Vertex> = raw
            .vertices
            .into_iter()
            .map(|v| Vertex::new(v.id, v.kind, v.label))
            .collect();
        let net = Network::from_named(vertices, &raw.edges)?;
        let checks = [
            ("leaves", raw.leaves, net.leaf_count()),
            ("reticulations", raw.reticulations, net.reticulation_count()),
        ];
        for (field, declared, actual) in checks {
            if declared != actual {
                return Err(NetworkError::HeaderMismatch {
                    field,
                    declared,
                    actual,
                });
            }
        }
        Ok(net)
    }

    /// Graphviz rendering with vertices in canonical order.
    pub fn to_dot(&self) -> String {
        let order = self.canonical_order();
        let mut pos = vec![0usize; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut out = String::from("digraph network {\n");
        for (i, &v) in order.iter().enumerate() {
            let vert = &self.vertices[v];
            let attrs = match vert.kind {
                VertexKind::Root => "shape=circle, label=\"root\"".to_string(),
                VertexKind::Tree => "shape=circle, label=\"\"".to_string(),
                VertexKind::Reticulation => {
                    "shape=box, style=filled, fillcolor=gray, label=\"\"".to_string()
                }
                VertexKind::Leaf => {
                    format!("shape=plaintext, label=\"{}\"", vert.label.unwrap_or(0))
                }
            };
            out.push_str(&format!("  v{i} [{attrs}];\n"));
        }
        let mut edges: Vec<(usize, usize)> =
            self.edges.iter().map(|&(p, c)| (pos[p], pos[c])).collect();
        edges.sort_unstable();
        for (p, c) in edges {
            out.push_str(&format!("  v{p} -> v{c};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Kahn's algorithm; `None` if the edge list has a cycle.
pub(crate) fn topological_order(n: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut children = vec![Vec::new(); n];
    for &(p, c) in edges {
        indeg[c] += 1;
        children[p].push(c);
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(u) = queue.pop() {
        order.push(u);
        for &c in &children[u] {
            indeg[c] -= 1;
            if indeg[c] == 0 {
                queue.push(c);
            }
        }
    }
    (order.len() == n).then_some(order)
}

#[derive(Serialize, Deserialize)]
struct NetworkJson {
    leaves: usize,
    reticulations: usize,
    vertices: Vec<VertexJson>,
    edges: Vec<(String, String)>,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: String,
    kind: VertexKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<u32>,
}

impl From<&Network> for NetworkJson {
    fn from(net: &Network) -> Self {
        NetworkJson {
            leaves: net.leaf_count(),
            reticulations: net.reticulation_count(),
            vertices: net
                .vertices
                .iter()
                .map(|v| VertexJson {
                    id: v.id.clone(),
                    kind: v.kind,
                    label: v.label,
                })
                .collect(),
            edges: net
                .edges
                .iter()
                .map(|&(p, c)| (net.vertices[p].id.clone(), net.vertices[c].id.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn v(id: &str, kind: VertexKind) -> Vertex {
        Vertex::new(id, kind, None)
    }

    pub fn leaf(id: &str, label: u32) -> Vertex {
        Vertex::new(id, VertexKind::Leaf, Some(label))
    }

    /// The unique (2,1) shape: r->t1, t1->t2, t1->h, t2->h, t2->A, h->B.
    pub fn two_one() -> Network {
        use VertexKind::*;
        Network::from_named(
            vec![
                v("r", Root),
                v("t1", Tree),
                v("t2", Tree),
                v("h", Reticulation),
                leaf("A", 1),
                leaf("B", 2),
            ],
            &[
                ("r", "t1"),
                ("t1", "t2"),
                ("t1", "h"),
                ("t2", "h"),
                ("t2", "A"),
                ("h", "B"),
            ],
        )
        .unwrap()
    }

    /// ((1,2),3) as a rooted tree.
    pub fn tree3() -> Network {
        use VertexKind::*;
        Network::from_named(
            vec![
                v("r", Root),
                v("a", Tree),
                v("b", Tree),
                leaf("x", 1),
                leaf("y", 2),
                leaf("z", 3),
            ],
            &[("r", "a"), ("a", "b"), ("a", "z"), ("b", "x"), ("b", "y")],
        )
        .unwrap()
    }

    /// Normal network on 3 leaves: the reticulation's parents sit in the two
    /// disjoint subtrees below the root's child.
    pub fn normal31() -> Network {
        use VertexKind::*;
        Network::from_named(
            vec![
                v("r", Root),
                v("a", Tree),
                v("b", Tree),
                v("c", Tree),
                v("h", Reticulation),
                leaf("x", 1),
                leaf("y", 2),
                leaf("z", 3),
            ],
            &[
                ("r", "a"),
                ("a", "b"),
                ("a", "c"),
                ("b", "x"),
                ("b", "h"),
                ("c", "h"),
                ("c", "z"),
                ("h", "y"),
            ],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use VertexKind::*;

    #[test]
    fn two_one_is_valid_tree_child_not_normal() {
        let net = two_one();
        assert!(net.validate().is_valid(), "{}", net.validate());
        assert!(net.is_tree_child().unwrap());
        assert!(!net.is_normal().unwrap());
    }

    #[test]
    fn single_edge_network() {
        let net = Network::from_named(vec![v("r", Root), leaf("l", 1)], &[("r", "l")]).unwrap();
        assert!(net.is_valid());
        assert_eq!((net.leaf_count(), net.reticulation_count()), (1, 0));
        assert!(net.is_tree_child().unwrap());
        assert!(net.is_normal().unwrap());
    }

    #[test]
    fn double_edge_reported() {
        let net = Network::from_named(
            vec![v("r", Root), v("t", Tree), v("h", Reticulation), leaf("x", 1)],
            &[("r", "t"), ("t", "h"), ("t", "h"), ("h", "x")],
        )
        .unwrap();
        let report = net.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::DoubleEdge { .. })));
    }

    #[test]
    fn degree_and_label_violations_name_the_vertex() {
        let net = Network::from_named(
            vec![v("r", Root), v("t", Tree), leaf("x", 1), leaf("y", 1)],
            &[("r", "t"), ("t", "x")],
        )
        .unwrap();
        let report = net.validate();
        let text = report.to_string();
        assert!(text.contains("t is a tree vertex"), "{text}");
        assert!(report
            .violations
            .contains(&Violation::DuplicateLabel { label: 1 }));
    }

    #[test]
    fn cycle_reported() {
        let net = Network::from_named(
            vec![v("a", Tree), v("b", Tree)],
            &[("a", "b"), ("b", "a")],
        )
        .unwrap();
        assert!(net.validate().violations.contains(&Violation::Cycle));
    }

    #[test]
    fn trees_are_tree_child_and_normal() {
        let t = tree3();
        assert!(t.is_tree_child().unwrap());
        assert!(t.is_normal().unwrap());
    }

    #[test]
    fn two_reticulation_children_break_tree_child() {
        // tree vertex b has two reticulation children
        let net = Network::from_named(
            vec![
                v("r", Root),
                v("a", Tree),
                v("b", Tree),
                v("c", Tree),
                v("h1", Reticulation),
                v("h2", Reticulation),
                v("d", Tree),
                leaf("x", 1),
                leaf("y", 2),
                leaf("z", 3),
            ],
            &[
                ("r", "a"),
                ("a", "b"),
                ("a", "c"),
                ("b", "h1"),
                ("b", "h2"),
                ("c", "h1"),
                ("c", "d"),
                ("d", "h2"),
                ("d", "z"),
                ("h1", "x"),
                ("h2", "y"),
            ],
        )
        .unwrap();
        assert!(net.is_valid(), "{}", net.validate());
        assert!(!net.is_tree_child().unwrap());
        assert!(matches!(net.is_normal(), Err(NetworkError::NotTreeChild)));
    }

    #[test]
    fn normal_example() {
        let net = normal31();
        assert!(net.is_valid());
        assert!(net.is_normal().unwrap());
    }

    #[test]
    fn invalid_network_rejected_by_predicates() {
        let net = Network::from_named(vec![v("r", Root)], &[] as &[(&str, &str)]).unwrap();
        assert!(matches!(net.is_tree_child(), Err(NetworkError::Invalid(_))));
    }

    #[test]
    fn edge_classes_match_vertex_counts() {
        let c = two_one().classify_edges().unwrap();
        assert_eq!((c.reticulation.len(), c.tree.len()), (2, 4));
        let c = tree3().classify_edges().unwrap();
        assert_eq!((c.reticulation.len(), c.tree.len()), (0, 5));
    }

    #[test]
    fn json_round_trip_and_header_check() {
        let net = two_one();
        let back = Network::from_json(&net.to_json()).unwrap();
        assert_eq!(back, net);
        let bad = net.to_json().replace("\"leaves\":2", "\"leaves\":3");
        assert!(matches!(
            Network::from_json(&bad),
            Err(NetworkError::HeaderMismatch { field: "leaves", .. })
        ));
    }

    #[test]
    fn canonical_form_ignores_ids_and_order() {
        let net = two_one();
        let mut vs = net.vertices().to_vec();
        vs.reverse();
        let n = vs.len();
        let edges: Vec<(usize, usize)> = net
            .edges()
            .iter()
            .map(|&(p, c)| (n - 1 - p, n - 1 - c))
            .collect();
        let flipped = Network::new(vs, edges);
        assert_eq!(flipped.canonical_form(), net.canonical_form());
        let swapped = net.with_labels(|l| 3 - l);
        assert_ne!(swapped.canonical_form(), net.canonical_form());
        assert_eq!(swapped.shape_form(), net.shape_form());
    }

    #[test]
    fn dot_marks_reticulations() {
        let dot = two_one().to_dot();
        assert_eq!(dot.matches("shape=box").count(), 1);
        assert_eq!(dot.matches("->").count(), 6);
        assert_eq!(dot, two_one().canonicalized().to_dot());
    }
}
