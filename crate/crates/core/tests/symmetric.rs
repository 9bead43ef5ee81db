use c3rigid::c3::{
    apply_delta_extension, apply_edge_split, apply_vertex_addition, build_tree_partition, check_c3_isostatic,
    extract_sequence, reduce_once, relabeling_matches, replay_sequence, verify_tree_partition, C3Error, Move,
    TreePartition,
};
use c3rigid::corpus::{edge_swap, random_tight_c3, rng};
use c3rigid::graph::{count_fixed, edge, parse_graph, serialize_graph, C3Action, Graph, SymGraph};
use c3rigid::laman_check;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

const PRISM: &str = r#"{"vertices":6,"edges":[[0,1],[1,2],[2,0],[3,4],[4,5],[5,3],[0,3],[1,4],[2,5]],"c3":[1,2,0,4,5,3]}"#;

/// The same graph under a random renumbering, so orbits are no longer
/// consecutive triples.
fn shuffled(sg: &SymGraph, seed: u64) -> SymGraph {
    let n = sg.n();
    let mut pi: Vec<usize> = (0..n).collect();
    pi.shuffle(&mut rng(seed));
    let edges = sg.graph().edges().iter().map(|&(u, v)| (pi[u], pi[v]));
    let action = sg.c3().unwrap();
    let mut gamma = vec![0; n];
    for v in 0..n {
        gamma[pi[v]] = pi[action.apply(v)];
    }
    SymGraph::new(Graph::new(n, edges).unwrap(), C3Action::new(gamma).unwrap()).unwrap()
}

/// A random γ-invariant graph whose rotation has `cycles` 3-cycles and
/// `fixed` fixed points.
fn random_symmetric(cycles: usize, fixed: usize, seed: u64) -> SymGraph {
    let n = 3 * cycles + fixed;
    let mut gamma: Vec<usize> = (0..n).collect();
    for c in 0..cycles {
        gamma[3 * c] = 3 * c + 1;
        gamma[3 * c + 1] = 3 * c + 2;
        gamma[3 * c + 2] = 3 * c;
    }
    let action = C3Action::new(gamma).unwrap();
    let mut r = rng(seed);
    let mut edges = std::collections::BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.random_bool(0.3) {
                for k in 0..3 {
                    edges.insert(edge(action.power(k, u), action.power(k, v)));
                }
            }
        }
    }
    SymGraph::new(Graph::new(n, edges).unwrap(), action).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orbits_cycle(cycles in 1usize..5, fixed in 0usize..3, seed in any::<u64>()) {
        let sg = random_symmetric(cycles, fixed, seed);
        let a = sg.c3().unwrap();
        for v in 0..sg.n() {
            let [x, y, z] = a.orbit(v);
            prop_assert_eq!(a.orbit(y), [y, z, x]);
            prop_assert_eq!(x == y, a.is_fixed(v));
        }
    }

    #[test]
    fn fixed_edges_are_between_fixed_vertices(cycles in 1usize..5, fixed in 0usize..4, seed in any::<u64>()) {
        let sg = random_symmetric(cycles, fixed, seed);
        let a = sg.c3().unwrap();
        let counts = count_fixed(sg.graph(), a);
        prop_assert_eq!(counts.j, fixed);
        let both_fixed = sg.graph().edges().iter().filter(|&&(u, v)| a.is_fixed(u) && a.is_fixed(v)).count();
        prop_assert_eq!(counts.b, both_fixed);
        if counts.j == 0 {
            prop_assert_eq!(sg.n() % 3, 0);
            prop_assert_eq!(sg.m() % 3, 0);
        }
    }

    #[test]
    fn documents_round_trip(cycles in 1usize..5, fixed in 0usize..3, seed in any::<u64>()) {
        let sg = random_symmetric(cycles, fixed, seed);
        prop_assert_eq!(parse_graph(&serialize_graph(&sg)).unwrap(), sg);
    }

    #[test]
    fn reduction_peels_one_orbit(n in (2usize..8).prop_map(|k| 3 * k), seed in any::<u64>()) {
        let sg = shuffled(&random_tight_c3(n, seed).0, seed);
        let r = reduce_once(&sg).unwrap();
        prop_assert_eq!(r.reduced.n(), n - 3);
        prop_assert_eq!(r.reduced.m(), sg.m() - 6);
        prop_assert!(check_c3_isostatic(&r.reduced).unwrap().isostatic);
    }

    #[test]
    fn certificates_for_relabelled_graphs(n in (1usize..8).prop_map(|k| 3 * k), seed in any::<u64>()) {
        let sg = shuffled(&random_tight_c3(n, seed).0, seed ^ 0x5eed);
        let seq = extract_sequence(&sg).unwrap();
        prop_assert_eq!(seq.moves.len(), n / 3 - 1);
        let replay = replay_sequence(&seq).unwrap();
        prop_assert!(replay.trace.iter().all(|s| s.tight && s.fixed_vertices == 0));
        prop_assert!(relabeling_matches(&seq.labels, &replay.graph, &sg));
        let tp = build_tree_partition(&seq).unwrap().relabeled(&seq.labels);
        let check = verify_tree_partition(&sg, &tp);
        prop_assert!(check.passed(), "{:?}", check.failures);
        prop_assert_eq!(tp.t0.len() + tp.t1.len() + tp.t2.len(), 2 * n - 3);
    }

    #[test]
    fn failing_graphs_get_no_sequence(n in (2usize..6).prop_map(|k| 3 * k), seed in any::<u64>()) {
        let sg = edge_swap(&random_tight_c3(n, seed).0, seed);
        let iso = check_c3_isostatic(&sg).unwrap().isostatic;
        prop_assert_eq!(iso, laman_check(sg.graph()).unwrap());
        if !iso {
            prop_assert_eq!(extract_sequence(&sg), Err(C3Error::NotIsostatic));
        }
    }
}

#[test]
fn moves_on_named_graphs() {
    let prism = parse_graph(PRISM).unwrap();
    let va = apply_vertex_addition(&prism, 0, 3).unwrap();
    assert_eq!((va.n(), va.m()), (9, 15));
    assert!(laman_check(va.graph()).unwrap());

    let es = apply_edge_split(&prism, 0, 1, 3).unwrap();
    assert_eq!((es.n(), es.m()), (9, 15));
    assert!(laman_check(es.graph()).unwrap());

    let k3 = SymGraph::triangle();
    assert!(matches!(apply_vertex_addition(&k3, 0, 0), Err(C3Error::InvalidAnchor(_))));
    assert_eq!(apply_edge_split(&prism, 0, 4, 1), Err(C3Error::MissingEdge(0, 4)));

    // Splitting the triangle on (0, 1, 2) gives K3,3.
    let split = apply_edge_split(&k3, 0, 1, 2).unwrap();
    let k33 = Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
    assert_eq!(split.graph(), &k33);

    // The triangle extension of K3 is the prism.
    let delta = apply_delta_extension(&k3, 0).unwrap();
    assert_eq!(delta.graph().edges().len(), 9);
    assert!(delta.graph().has_edge(0, 3) && delta.graph().has_edge(3, 4));
}

#[test]
fn fixed_anchors_are_refused() {
    let star = parse_graph(r#"{"vertices":4,"edges":[[0,3],[1,3],[2,3]],"c3":[1,2,0,3]}"#).unwrap();
    assert_eq!(apply_delta_extension(&star, 3), Err(C3Error::FixedAnchor(3)));
}

#[test]
fn prism_certificates() {
    let prism = parse_graph(PRISM).unwrap();
    let seq = extract_sequence(&prism).unwrap();
    assert_eq!(seq.moves, vec![Move::DeltaExtension { base: 0, new: [3, 4, 5] }]);
    let json = serde_json::to_value(&seq.moves[0]).unwrap();
    assert_eq!(json, serde_json::json!({"kind": "DeltaExtension", "anchors": [0], "new": [3, 4, 5]}));
    let tp = build_tree_partition(&seq).unwrap().relabeled(&seq.labels);
    let json = serde_json::to_value(&tp).unwrap();
    assert!(json.get("T0").is_some() && json.get("T2").is_some());
    let back: TreePartition = serde_json::from_value(json).unwrap();
    assert_eq!(back, tp);
}

#[test]
fn triangle_is_the_base_case() {
    let k3 = SymGraph::triangle();
    assert!(extract_sequence(&k3).unwrap().moves.is_empty());
    assert_eq!(reduce_once(&k3).unwrap_err(), C3Error::AtBaseCase);
    let tp = build_tree_partition(&extract_sequence(&k3).unwrap()).unwrap();
    assert_eq!(tp.trees().map(|t| t.len()), [1, 1, 1]);
}

#[test]
fn non_partitions_are_caught() {
    let prism = parse_graph(PRISM).unwrap();
    let all_in_one = TreePartition::from_trees([prism.graph().edges().to_vec(), vec![], vec![]]);
    let check = verify_tree_partition(&prism, &all_in_one);
    assert!(!check.passed());
    assert!(!check.trees && !check.equivariant);
}
