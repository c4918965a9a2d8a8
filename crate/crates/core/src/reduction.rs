//! Reduction of a component graph to a root with `t` outgoing double edges
//! over `t` disjoint component graphs.
//!
//! Step one deletes the root's single edges. Step two separates what remains
//! into the DAGs hanging below the root's double-edge children: a vertex
//! whose two parents fall on different sides keeps one in-edge and loses the
//! other. After each step a vertex left with a single in-edge is merged into
//! that parent. Only separating edges are ever deleted, so each reduction is
//! determined by which side every vertex ends up on.

use crate::component_graph::ComponentGraph;
use crate::network::topological_order;

/// A reduced component graph together with the bookkeeping needed to bound
/// the number of networks built from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedComponentGraph {
    children: Vec<ComponentGraph>,
    removed_count: usize,
    /// For each original vertex: `None` for the root, otherwise
    /// `(child index, vertex of that child it was merged into)`.
    placement: Vec<Option<(usize, usize)>>,
    /// Endpoints of removed edges: index 0 is the root part, `j + 1` child `j`.
    attachment_ends: Vec<usize>,
}

/// `(t, child sizes sorted descending, removed edge count)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReductionSignature {
    pub t: usize,
    pub betas: Vec<usize>,
    pub removed: usize,
}

impl ReducedComponentGraph {
    /// Number of double edges below the root.
    pub fn t(&self) -> usize {
        self.children.len()
    }

    /// The component graphs `D_1..D_t`, in the order of the root's children.
    pub fn children(&self) -> &[ComponentGraph] {
        &self.children
    }

    /// Non-root vertex counts of the children.
    pub fn betas(&self) -> Vec<usize> {
        self.children.iter().map(|d| d.vertex_count() - 1).collect()
    }

    pub fn removed_count(&self) -> usize {
        self.removed_count
    }

    pub fn placement(&self) -> &[Option<(usize, usize)>] {
        &self.placement
    }

    /// Removed-edge endpoints per part (`t + 1` entries; root part first).
    /// They sum to twice the removed count.
    pub fn attachment_ends(&self) -> &[usize] {
        &self.attachment_ends
    }

    pub fn signature(&self) -> ReductionSignature {
        let mut betas = self.betas();
        betas.sort_unstable_by(|a, b| b.cmp(a));
        ReductionSignature {
            t: self.t(),
            betas,
            removed: self.removed_count,
        }
    }

    /// The reduced graph as a single component graph: root 0, then the
    /// children's vertices block by block.
    pub fn to_component_graph(&self) -> ComponentGraph {
        let mut edges = Vec::new();
        let mut offset = 1;
        for d in &self.children {
            edges.push((0, offset + d.root(), 2));
            for (u, v, k) in d.edges() {
                edges.push((offset + u, offset + v, k));
            }
            offset += d.vertex_count();
        }
        ComponentGraph::new(offset, 0, &edges).expect("reduced graph is a component graph")
    }
}

impl ComponentGraph {
    /// Every reduced component graph obtainable from `self`, one per
    /// admissible choice of removed edges. Empty for the single-vertex graph.
    pub fn reductions(&self) -> Vec<ReducedComponentGraph> {
        let m = self.vertex_count();
        if m < 2 {
            return Vec::new();
        }
        let root = self.root();
        let order = topological_order(m, &self.arc_list()).expect("component graphs are acyclic");
        let tops: Vec<usize> = (0..m)
            .filter(|&v| self.multiplicity(root, v) == 2)
            .collect();
        let mut state = SearchState {
            graph: self,
            tops: &tops,
            order: &order,
            side: vec![usize::MAX; m],
            kept: vec![None; m],
            out: Vec::new(),
        };
        state.assign(0);
        state.out
    }
}

/// In-edges kept by a vertex: both (it stays a vertex) or one (it merges).
#[derive(Clone, Copy, Debug)]
enum Kept {
    Both,
    One(usize),
}

struct SearchState<'a> {
    graph: &'a ComponentGraph,
    tops: &'a [usize],
    order: &'a [usize],
    side: Vec<usize>,
    kept: Vec<Option<Kept>>,
    out: Vec<ReducedComponentGraph>,
}

impl SearchState<'_> {
    fn parents(&self, v: usize) -> (usize, usize) {
        let g = self.graph;
        let ps: Vec<usize> = (0..g.vertex_count())
            .flat_map(|u| std::iter::repeat_n(u, g.multiplicity(u, v) as usize))
            .collect();
        (ps[0], ps[1])
    }

    fn assign(&mut self, pos: usize) {
        let Some(&v) = self.order.get(pos) else {
            let reduced = self.build();
            self.out.push(reduced);
            return;
        };
        let root = self.graph.root();
        if v == root {
            return self.assign(pos + 1);
        }
        if let Some(j) = self.tops.iter().position(|&t| t == v) {
            self.side[v] = j;
            self.kept[v] = Some(Kept::Both);
            return self.assign(pos + 1);
        }
        let (a, b) = self.parents(v);
        if a == root || b == root {
            // single edge from the root: deleted in step one
            let other = if a == root { b } else { a };
            self.side[v] = self.side[other];
            self.kept[v] = Some(Kept::One(other));
            return self.assign(pos + 1);
        }
        if self.side[a] == self.side[b] {
            self.side[v] = self.side[a];
            self.kept[v] = Some(Kept::Both);
            return self.assign(pos + 1);
        }
        for keep in [a, b] {
            self.side[v] = self.side[keep];
            self.kept[v] = Some(Kept::One(keep));
            self.assign(pos + 1);
        }
    }

    fn build(&self) -> ReducedComponentGraph {
        let g = self.graph;
        let m = g.vertex_count();
        let root = g.root();
        let t = self.tops.len();

        // Surviving vertices, numbered per side in topological order.
        let mut local = vec![usize::MAX; m];
        let mut sizes = vec![0usize; t];
        for &v in self.order {
            if v != root && matches!(self.kept[v], Some(Kept::Both)) {
                local[v] = sizes[self.side[v]];
                sizes[self.side[v]] += 1;
            }
        }
        let mut rep = vec![usize::MAX; m];
        for &v in self.order {
            if v == root {
                continue;
            }
            rep[v] = match self.kept[v] {
                Some(Kept::Both) => v,
                Some(Kept::One(p)) => rep[p],
                None => unreachable!("every vertex is assigned"),
            };
        }

        let mut child_edges: Vec<Vec<(usize, usize, u8)>> = vec![Vec::new(); t];
        let mut ends = vec![0usize; t + 1];
        let mut removed = 0;
        for (u, v, k) in g.edges() {
            let sv = self.side[v];
            if u == root {
                if k == 1 {
                    removed += 1;
                    ends[0] += 1;
                    ends[sv + 1] += 1;
                }
                continue;
            }
            let su = self.side[u];
            if su != sv {
                removed += k as usize;
                ends[su + 1] += k as usize;
                ends[sv + 1] += k as usize;
                continue;
            }
            // a merged vertex's remaining in-edge disappears with the merge
            if let Some(Kept::Both) = self.kept[v] {
                child_edges[sv].push((local[rep[u]], local[v], k));
            }
        }
        let children: Vec<ComponentGraph> = (0..t)
            .map(|j| ComponentGraph::new(sizes[j], 0, &child_edges[j]).expect("child is a component graph"))
            .collect();
        let placement = (0..m)
            .map(|v| (v != root).then(|| (self.side[v], local[rep[v]])))
            .collect();
        ReducedComponentGraph {
            children,
            removed_count: removed,
            placement,
            attachment_ends: ends,
        }
    }
}
