use c3rigid::c3::{build_tree_partition, check_c3_isostatic, extract_sequence, TreePartition};
use c3rigid::corpus::{edge_swap, random_tight_c3};
use c3rigid::field::QSqrt3;
use c3rigid::graph::{parse_graph, Graph, SymGraph};
use c3rigid::matrix::exact_rank;
use c3rigid::realization::{
    anchor_points, frame_from_partition, framework_from_frame, generalized_rigidity_matrix,
    numeric_isostatic_check, pull_apart, rational, rigidity_matrix, rot, symmetric_generic_positions, Frame,
    Placement, RealizationError,
};
use proptest::prelude::*;

const PRISM: &str = r#"{"vertices":6,"edges":[[0,1],[1,2],[2,0],[3,4],[4,5],[5,3],[0,3],[1,4],[2,5]],"c3":[1,2,0,4,5,3]}"#;

fn partition(sg: &SymGraph) -> TreePartition {
    let seq = extract_sequence(sg).unwrap();
    build_tree_partition(&seq).unwrap().relabeled(&seq.labels)
}

fn order() -> impl Strategy<Value = usize> {
    (1usize..7).prop_map(|k| 3 * k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn placements_are_exactly_symmetric(n in order(), seed in any::<u64>()) {
        let (sg, _) = random_tight_c3(n, seed);
        let p = symmetric_generic_positions(&sg, seed).unwrap();
        let a = sg.c3().unwrap();
        for v in 0..n {
            prop_assert_eq!(&p.positions[a.apply(v)], &rot(&p.positions[v]));
        }
        prop_assert!(p.is_framework(sg.graph()));
        prop_assert_eq!(symmetric_generic_positions(&sg, seed).unwrap(), p);
    }

    #[test]
    fn rigidity_rows_balance(n in order(), seed in any::<u64>()) {
        let (sg, _) = random_tight_c3(n, seed);
        let p = symmetric_generic_positions(&sg, seed).unwrap();
        let m = rigidity_matrix(sg.graph(), &p).unwrap();
        for (r, &(u, v)) in sg.graph().edges().iter().enumerate() {
            let row = m.row(r);
            prop_assert!(row.iter().filter(|x| !x.is_zero()).count() <= 4);
            for k in 0..2 {
                prop_assert!((&row[2 * u + k] + &row[2 * v + k]).is_zero());
            }
        }
    }

    #[test]
    fn rank_never_exceeds_the_bound(n in order(), seed in any::<u64>()) {
        let sg = edge_swap(&random_tight_c3(n, seed).0, seed);
        let p = symmetric_generic_positions(&sg, seed).unwrap();
        let v = numeric_isostatic_check(sg.graph(), &p).unwrap();
        prop_assert!(v.rank <= sg.m().min(2 * n - 3));
        prop_assert_eq!(v.flex_dimension, 2 * n - 3 - v.rank);
    }

    /// The combinatorial verdict and the rank at a random symmetric point
    /// agree; one reseed is allowed.
    #[test]
    fn combinatorics_match_geometry(n in order(), seed in any::<u64>(), swap in any::<bool>()) {
        let base = random_tight_c3(n, seed).0;
        let sg = if swap { edge_swap(&base, seed) } else { base };
        let expected = check_c3_isostatic(&sg).unwrap().isostatic;
        let at = |s: u64| numeric_isostatic_check(sg.graph(), &symmetric_generic_positions(&sg, s).unwrap()).unwrap().isostatic;
        prop_assert!(at(seed) == expected || at(seed.wrapping_add(1)) == expected);
    }

    #[test]
    fn frame_chain_stays_independent(n in order(), seed in any::<u64>()) {
        let (sg, _) = random_tight_c3(n, seed);
        let tp = partition(&sg);
        let frame = frame_from_partition(&sg, &tp).unwrap();
        prop_assert!(frame.is_consistent(sg.graph()));
        prop_assert_eq!(exact_rank(&generalized_rigidity_matrix(sg.graph(), &frame).unwrap()), sg.m());
        let pulled = pull_apart(&sg, &tp, &frame).unwrap();
        prop_assert!(pulled.frame.is_consistent(sg.graph()));
        prop_assert!(pulled.rounds.iter().all(|r| r.rank == sg.m()));
        prop_assert!(pulled.frame.coincident_edges(sg.graph()).is_empty());

        // Scaling each generalized row by its λ gives the rigidity matrix.
        let lambdas = pulled.frame.edge_scalars(sg.graph()).unwrap();
        prop_assert!(lambdas.iter().all(|l| !l.is_zero()));
        let general = generalized_rigidity_matrix(sg.graph(), &pulled.frame).unwrap();
        let placement = Placement { positions: pulled.frame.positions.clone() };
        let plain = rigidity_matrix(sg.graph(), &placement).unwrap();
        for (r, l) in lambdas.iter().enumerate() {
            for c in 0..plain.cols() {
                prop_assert_eq!(&(l * general.get(r, c)), plain.get(r, c));
            }
        }

        let framework = framework_from_frame(&sg, &pulled.frame).unwrap();
        prop_assert!(framework.is_symmetric(&sg));
        prop_assert!(numeric_isostatic_check(sg.graph(), &framework).unwrap().isostatic);
    }
}

#[test]
fn prism_frame_puts_two_joints_on_each_point() {
    let sg = parse_graph(PRISM).unwrap();
    let frame = frame_from_partition(&sg, &partition(&sg)).unwrap();
    for e in anchor_points() {
        assert_eq!(frame.positions.iter().filter(|p| **p == e).count(), 2);
    }
    assert!(!frame.coincident_edges(sg.graph()).is_empty());
    assert!(matches!(
        framework_from_frame(&sg, &frame),
        Err(RealizationError::CoincidentAdjacentJoints(..))
    ));
}

#[test]
fn prism_minus_a_spoke_has_one_flex() {
    let sg = parse_graph(PRISM).unwrap();
    let p = symmetric_generic_positions(&sg, 3).unwrap();
    let cut = sg.graph().without_edges(&[(0, 3)]);
    let v = numeric_isostatic_check(&cut, &p).unwrap();
    assert!(v.independent && !v.isostatic);
    assert_eq!(v.flex_dimension, 1);
}

#[test]
fn generalized_row_for_one_edge() {
    let g = Graph::new(2, [(0, 1)]).unwrap();
    let f = Frame {
        positions: vec![[rational(0, 1), rational(0, 1)]; 2],
        directions: vec![[rational(1, 1), rational(0, 1)]],
    };
    let m = generalized_rigidity_matrix(&g, &f).unwrap();
    let row: Vec<f64> = m.row(0).iter().map(QSqrt3::to_f64).collect();
    assert_eq!(row, vec![1.0, 0.0, -1.0, 0.0]);

    let zero = Frame {
        directions: vec![[rational(0, 1), rational(0, 1)]],
        ..f
    };
    assert_eq!(
        generalized_rigidity_matrix(&g, &zero),
        Err(RealizationError::ZeroDirection(0, 1))
    );
}

#[test]
fn triangle_frame_is_already_a_framework() {
    let k3 = SymGraph::triangle();
    let tp = partition(&k3);
    let frame = frame_from_partition(&k3, &tp).unwrap();
    assert_eq!(exact_rank(&generalized_rigidity_matrix(k3.graph(), &frame).unwrap()), 3);
    let placement = framework_from_frame(&k3, &frame).unwrap();
    assert!(placement.is_symmetric(&k3));
    assert!(numeric_isostatic_check(k3.graph(), &placement).unwrap().isostatic);
}

#[test]
fn broken_partitions_are_refused() {
    let sg = parse_graph(PRISM).unwrap();
    let bad = TreePartition::from_trees([sg.graph().edges().to_vec(), vec![], vec![]]);
    assert!(matches!(
        frame_from_partition(&sg, &bad),
        Err(RealizationError::InvalidPartition(_))
    ));
}
