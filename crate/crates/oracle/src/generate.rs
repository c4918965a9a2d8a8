//! Unlabeled shape generation by filling open child slots in FIFO order.
//!
//! A slot is a missing child of an already placed vertex. Each slot is
//! filled with a new leaf, a new tree vertex, a new reticulation, or the
//! second in-edge of a reticulation that already has one parent. A
//! reticulation only opens its child slot once both parents are placed, so
//! nothing below it exists yet when its second parent is chosen and no
//! cycle can form.

use std::collections::{BTreeMap, VecDeque};

use tcnet_core::{CanonicalForm, Network, Vertex, VertexKind};

#[derive(Clone, Copy, Debug)]
pub(crate) struct Budget {
    pub leaves: usize,
    pub tree: usize,
    pub retics: usize,
}

#[derive(Clone)]
struct State {
    kinds: Vec<VertexKind>,
    edges: Vec<(usize, usize)>,
    // children placed so far, per vertex
    children: Vec<Vec<usize>>,
    slots: VecDeque<usize>,
    // reticulations with one parent, with that parent
    pending: Vec<(usize, usize)>,
    left: Budget,
}

/// All tree-child shapes with the given vertex budget, one representative per
/// isomorphism class of the unlabeled shape. Leaves get the labels `1..ℓ` in
/// placement order. With `leaf_below_retics`, every reticulation's child must
/// be a leaf.
pub(crate) fn shapes(budget: Budget, leaf_below_retics: bool) -> Vec<Network> {
    let mut out = BTreeMap::new();
    let state = State {
        kinds: vec![VertexKind::Root],
        edges: Vec::new(),
        children: vec![Vec::new()],
        slots: VecDeque::from([0]),
        pending: Vec::new(),
        left: budget,
    };
    extend(state, leaf_below_retics, &mut out);
    out.into_values().collect()
}

fn extend(state: State, leaf_below_retics: bool, out: &mut BTreeMap<CanonicalForm, Network>) {
    let mut state = state;
    if !feasible(&state, leaf_below_retics) {
        return;
    }
    let Some(p) = state.slots.pop_front() else {
        if state.pending.is_empty() && state.left.leaves == 0 && state.left.tree == 0 && state.left.retics == 0 {
            let net = to_network(&state);
            out.entry(net.shape_form()).or_insert(net);
        }
        return;
    };
    let parent_kind = state.kinds[p];
    // The children of a tree vertex are unordered; place them by kind rank
    // (leaf, tree, reticulation) to avoid generating both orders.
    let min_rank = match state.children[p].first() {
        Some(&c) if parent_kind == VertexKind::Tree => rank(state.kinds[c]),
        _ => 0,
    };
    let retic_child_allowed = match parent_kind {
        VertexKind::Root | VertexKind::Reticulation => false,
        // the sibling slot, if already filled, must not hold a reticulation
        _ => state.children[p]
            .iter()
            .all(|&c| state.kinds[c] != VertexKind::Reticulation),
    };
    let leaf_only = leaf_below_retics && parent_kind == VertexKind::Reticulation;

    if state.left.leaves > 0 && min_rank == 0 {
        let mut s = state.clone();
        s.left.leaves -= 1;
        add_child(&mut s, p, VertexKind::Leaf);
        extend(s, leaf_below_retics, out);
    }
    if leaf_only {
        return;
    }
    if state.left.tree > 0 && min_rank <= 1 {
        let mut s = state.clone();
        s.left.tree -= 1;
        let v = add_child(&mut s, p, VertexKind::Tree);
        s.slots.push_back(v);
        s.slots.push_back(v);
        extend(s, leaf_below_retics, out);
    }
    if !retic_child_allowed {
        return;
    }
    if state.left.retics > 0 {
        let mut s = state.clone();
        s.left.retics -= 1;
        let v = add_child(&mut s, p, VertexKind::Reticulation);
        s.pending.push((v, p));
        extend(s, leaf_below_retics, out);
    }
    for i in 0..state.pending.len() {
        let (r, first) = state.pending[i];
        if first == p {
            // would be a double edge
            continue;
        }
        let mut s = state.clone();
        s.pending.remove(i);
        s.edges.push((p, r));
        s.children[p].push(r);
        s.slots.push_back(r);
        extend(s, leaf_below_retics, out);
    }
}

fn rank(kind: VertexKind) -> u8 {
    match kind {
        VertexKind::Leaf => 0,
        VertexKind::Tree => 1,
        _ => 2,
    }
}

/// Necessary conditions for completing `state`.
fn feasible(state: &State, leaf_below_retics: bool) -> bool {
    let mut tree_slots = 0;
    let mut retic_slots = 0;
    for &v in &state.slots {
        match state.kinds[v] {
            VertexKind::Tree => tree_slots += 1,
            VertexKind::Reticulation => retic_slots += 1,
            _ => {}
        }
    }
    let left = state.left;
    let pending = state.pending.len();
    // every parent of a future or pending reticulation is a tree vertex
    if tree_slots + 2 * left.tree < pending + 2 * left.retics {
        return false;
    }
    // every reticulation still lacking a child needs a non-reticulation one
    let childless = left.retics + pending + retic_slots;
    let available = if leaf_below_retics { left.leaves } else { left.leaves + left.tree };
    childless <= available
}

fn add_child(s: &mut State, p: usize, kind: VertexKind) -> usize {
    let v = s.kinds.len();
    s.kinds.push(kind);
    s.children.push(Vec::new());
    s.edges.push((p, v));
    s.children[p].push(v);
    v
}

fn to_network(s: &State) -> Network {
    let mut next_label = 0;
    let vertices = s
        .kinds
        .iter()
        .enumerate()
        .map(|(i, &kind)| {
            let label = (kind == VertexKind::Leaf).then(|| {
                next_label += 1;
                next_label
            });
            Vertex::new(format!("v{i}"), kind, label)
        })
        .collect();
    Network::new(vertices, s.edges.clone())
}
