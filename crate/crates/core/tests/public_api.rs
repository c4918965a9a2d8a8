use tcnet_core::{enumerate_component_graphs, ComponentGraph, Network, Vertex, VertexKind};

fn vertex(id: &str, kind: VertexKind) -> Vertex {
    Vertex::new(id, kind, None)
}

fn leaf(id: &str, label: u32) -> Vertex {
    Vertex::new(id, VertexKind::Leaf, Some(label))
}

/// Three leaves, one reticulation whose parents are incomparable:
/// r->a, a->b, a->c, b->h, c->h, b->L1, c->L2, h->L3.
fn normal_three_one() -> Network {
    use VertexKind::*;
    Network::from_named(
        vec![
            vertex("r", Root),
            vertex("a", Tree),
            vertex("b", Tree),
            vertex("c", Tree),
            vertex("h", Reticulation),
            leaf("L1", 1),
            leaf("L2", 2),
            leaf("L3", 3),
        ],
        &[
            ("r", "a"),
            ("a", "b"),
            ("a", "c"),
            ("b", "h"),
            ("c", "h"),
            ("b", "L1"),
            ("c", "L2"),
            ("h", "L3"),
        ],
    )
    .unwrap()
}

#[test]
fn hand_built_network_is_normal_tree_child() {
    let n = normal_three_one();
    assert!(n.validate().is_valid());
    assert!(n.is_tree_child().unwrap());
    assert!(n.is_normal().unwrap());
    let e = n.classify_edges().unwrap();
    assert_eq!((e.reticulation.len(), e.tree.len()), (2, 2 * 3 + 1 - 1));
    // two tree components below the root: the upper one and {L3}
    assert_eq!(n.tree_components().unwrap().trees.len(), 2);
    assert!(n.component_graph().unwrap().is_isomorphic(&ComponentGraph::star(1).unwrap()));
}

#[test]
fn json_round_trip_preserves_canonical_form() {
    let n = normal_three_one();
    let back = Network::from_json(&n.to_json()).unwrap();
    assert_eq!(back.canonical_form(), n.canonical_form());
    assert_eq!(n.canonicalized().canonical_form(), n.canonical_form());
}

#[test]
fn relabeling_keeps_shape_but_not_form() {
    let n = normal_three_one();
    let swapped = n.with_labels(|l| match l {
        1 => 3,
        3 => 1,
        other => other,
    });
    assert_eq!(swapped.shape_form(), n.shape_form());
    assert_ne!(swapped.canonical_form(), n.canonical_form());
    // swapping the two symmetric leaves is an automorphism
    let mirror = n.with_labels(|l| match l {
        1 => 2,
        2 => 1,
        other => other,
    });
    assert_eq!(mirror.canonical_form(), n.canonical_form());
}

#[test]
fn component_graph_classes_and_round_trip() {
    let counts: Vec<usize> = (1..=4).map(|m| enumerate_component_graphs(m, 6).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 3, 13]);
    for g in enumerate_component_graphs(4, 6).unwrap() {
        let back = ComponentGraph::from_json(&g.to_json()).unwrap();
        assert!(back.is_isomorphic(&g));
        assert!(g.to_dot().starts_with("digraph"));
    }
    assert!(enumerate_component_graphs(7, 6).is_err());
}
