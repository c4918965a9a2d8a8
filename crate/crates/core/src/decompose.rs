//! Decomposition of a tree-child network into tree components and the
//! component graph linking them.

use crate::component_graph::ComponentGraph;
use crate::network::{topological_order, Network, NetworkError, VertexKind};

/// One tree component. `top` is the network root or a reticulation; the
/// vertex and edge lists are what survives suppression of the vertices left
/// with indegree and outdegree one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeComponent {
    pub top: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    /// Sorted leaf labels.
    pub leaf_labels: Vec<u32>,
}

/// The forest left after deleting every reticulation's incoming edges.
///
/// Component 0 holds the network root; the others are ordered by their
/// smallest leaf label, so the order never depends on vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forest {
    pub trees: Vec<TreeComponent>,
    /// Component index for every vertex of the network, suppressed ones included.
    pub component_of: Vec<usize>,
}

impl Network {
    pub fn tree_components(&self) -> Result<Forest, NetworkError> {
        self.ensure_tree_child()?;
        let n = self.vertex_count();
        let parents = self.parents();
        let children = self.children();
        let order = topological_order(n, self.edges()).expect("validated acyclic");
        let is_reticulation = |v: usize| self.kind(v) == VertexKind::Reticulation;
        let is_top = |v: usize| matches!(self.kind(v), VertexKind::Root | VertexKind::Reticulation);

        // Owner of each vertex: the top reached by climbing tree edges.
        let mut top_of = vec![usize::MAX; n];
        for &v in &order {
            top_of[v] = if is_top(v) { v } else { top_of[parents[v][0]] };
        }

        // A tree vertex with a reticulation child is left with one child.
        let suppressed: Vec<bool> = (0..n)
            .map(|v| self.kind(v) == VertexKind::Tree && children[v].iter().any(|&c| is_reticulation(c)))
            .collect();

        let root = self.root().expect("validated root");
        let mut tops: Vec<usize> = (0..n).filter(|&v| is_reticulation(v)).collect();
        let min_label = |t: usize| {
            (0..n)
                .filter(|&v| top_of[v] == t && self.kind(v) == VertexKind::Leaf)
                .filter_map(|v| self.vertices()[v].label)
                .min()
                .expect("tree-child components contain a leaf")
        };
        tops.sort_by_key(|&t| min_label(t));
        tops.insert(0, root);

        let mut index_of_top = vec![usize::MAX; n];
        for (i, &t) in tops.iter().enumerate() {
            index_of_top[t] = i;
        }
        let component_of: Vec<usize> = (0..n).map(|v| index_of_top[top_of[v]]).collect();

        let mut trees: Vec<TreeComponent> = tops
            .iter()
            .map(|&top| TreeComponent {
                top,
                vertices: Vec::new(),
                edges: Vec::new(),
                leaf_labels: Vec::new(),
            })
            .collect();
        for &v in &order {
            if suppressed[v] {
                continue;
            }
            let tree = &mut trees[component_of[v]];
            tree.vertices.push(v);
            if let Some(label) = self.vertices()[v].label {
                tree.leaf_labels.push(label);
            }
            if !is_top(v) {
                let mut p = parents[v][0];
                while suppressed[p] {
                    p = parents[p][0];
                }
                tree.edges.push((p, v));
            }
        }
        for tree in &mut trees {
            tree.leaf_labels.sort_unstable();
        }
        Ok(Forest {
            trees,
            component_of,
        })
    }

    /// One vertex per tree component and one edge per deleted reticulation
    /// edge, pointing from the component holding the edge's source to the
    /// component below the reticulation.
    pub fn component_graph(&self) -> Result<ComponentGraph, NetworkError> {
        let forest = self.tree_components()?;
        let mut edges = Vec::new();
        for &(p, c) in self.edges() {
            if self.kind(c) == VertexKind::Reticulation {
                edges.push((forest.component_of[p], forest.component_of[c], 1));
            }
        }
        let g = ComponentGraph::new(forest.trees.len(), 0, &edges)
            .expect("tree-child decomposition yields a component graph");
        Ok(g)
    }
}
