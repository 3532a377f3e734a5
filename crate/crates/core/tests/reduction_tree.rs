mod common;

use std::collections::{HashSet, VecDeque};

use adlv_core::enumerate::{affine_ball, extended_ball};
use adlv_core::reduction::{build_reduction_tree, a_t_gamma_witness, MoveKind, DEFAULT_BUDGET};
use adlv_core::{predict, AffineWeylGroup, BasicClassData, Status};
use common::{Aff, Oracle};

fn group(t: &str) -> AffineWeylGroup {
    AffineWeylGroup::new(t.parse().unwrap())
}

/// Smallest length met by non-increasing conjugations from `x`.
fn min_reachable_length(o: &Oracle, x: &Aff, omegas: &[Aff]) -> usize {
    let mut seen = HashSet::from([x.clone()]);
    let mut queue = VecDeque::from([x.clone()]);
    let mut best = o.alcove_length(x);
    while let Some(cur) = queue.pop_front() {
        let l = o.alcove_length(&cur);
        best = best.min(l);
        for s in o.gens.iter().chain(omegas) {
            let y = o.conj(s, &cur);
            if o.alcove_length(&y) <= l && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    best
}

#[test]
fn tree_edges_follow_the_reduction_rules() {
    for t in ["A2", "B2"] {
        let g = group(t);
        let o = Oracle::new(t);
        let omegas: Vec<Aff> = g.omega_elements().iter().map(|w| o.to_aff(&g, w)).collect();
        for x in extended_ball(&g, 7) {
            let tree = build_reduction_tree(&g, &x, DEFAULT_BUDGET);
            assert!(!tree.partial);
            assert_eq!(tree.root().element, x);
            for node in &tree.nodes {
                let a = o.to_aff(&g, &node.element);
                assert_eq!(node.length, o.alcove_length(&a));
                for edge in &node.edges {
                    let b = o.to_aff(&g, &tree.nodes[edge.target].element);
                    let expected = match &edge.kind {
                        MoveKind::Closed { node: i } => o.conj(&o.gens[*i], &a),
                        MoveKind::Open { node: i } => o.gens[*i].then(&a),
                        MoveKind::Equal { node: i } => o.conj(&o.gens[*i], &a),
                        MoveKind::Omega { .. } => {
                            assert!(omegas.iter().any(|w| o.conj(w, &a) == b));
                            b.clone()
                        }
                    };
                    assert_eq!(b, expected, "{t}: edge {} from {}", edge.kind, g.format(&node.element));
                    let drop = node.length - o.alcove_length(&b);
                    match edge.kind {
                        MoveKind::Closed { .. } => assert_eq!(drop, 2),
                        MoveKind::Open { .. } => assert_eq!(drop, 1),
                        _ => assert_eq!(drop, 0),
                    }
                    assert_eq!(edge.increment, edge.kind.increment());
                }
            }
            for leaf in tree.leaves() {
                assert!(leaf.minimal);
                let a = o.to_aff(&g, &leaf.element);
                assert_eq!(min_reachable_length(&o, &a, &omegas), leaf.length);
            }
        }
    }
}

#[test]
fn tree_serializations_name_every_node() {
    let g = group("A3");
    let x = g.parse("s1 s2 t[2,2,2] s1 s2 s3 s2").unwrap();
    let tree = build_reduction_tree(&g, &x, DEFAULT_BUDGET);
    let json = tree.to_json(&g);
    let text = serde_json::to_string(&json).unwrap();
    let back: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(back, json);
    assert_eq!(json["root"]["length"], 18);
    let first: Vec<&str> = json["root"]["children"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["move"].as_str().unwrap())
        .collect();
    assert_eq!(first, ["closed s1", "open s1"]);
    let dot = tree.to_dot(&g);
    assert!(dot.starts_with("digraph"));
    for node in &tree.nodes {
        assert!(dot.contains(&g.format(&node.element)));
    }
}

#[test]
fn construction_witnesses_validate_and_target_is_not_empty() {
    let g = group("A2");
    let b = BasicClassData::trivial(&g);
    let mut count = 0;
    for x in affine_ball(&g, 10) {
        let p = predict(&g, &x, &b);
        if !p.shrunken || p.status != Status::Nonempty {
            continue;
        }
        let (c, witness) = a_t_gamma_witness(&g, &x).unwrap();
        witness.validate(&g).unwrap();
        assert_eq!(witness.end(), &c.target(&g));
        assert_ne!(predict(&g, witness.end(), &b).status, Status::Empty);
        assert_eq!(g.weyl().support(&c.a), g.root_system().finite_nodes());
        count += 1;
    }
    assert!(count > 20);
}
