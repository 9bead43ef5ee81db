//! Inverse moves: peel one vertex orbit at a time off a symmetric Laman
//! graph until only the triangle is left, recording the forward moves.

use serde::{Deserialize, Serialize};

use super::moves::{apply_move, Move};
use super::{check_c3_isostatic, C3Error};
use crate::graph::{count_fixed, edge, C3Action, Edge, SymGraph, Vertex};
use crate::sparsity::{laman_check, laman_check_with};

/// Which inverse move `reduce_once` used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionCase {
    /// A valence-2 orbit was deleted.
    Valence2,
    /// A valence-3 orbit spanning a triangle was deleted.
    Triangle,
    /// A valence-3 orbit whose members share one neighbour orbit; the
    /// triangle on that orbit is inserted.
    SharedNeighbours,
    /// A valence-3 orbit; the orbit of a Laman-compatible neighbour pair is
    /// inserted.
    PairInsertion,
}

/// One reduction step. Applying `step` to `reduced` gives back the input
/// graph under the labelling `kept` (for the first `n - 3` vertices) and
/// `removed` (for the three new ones).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub reduced: SymGraph,
    pub step: Move,
    pub case: ReductionCase,
    /// `kept[i]` is the input label of reduced vertex `i`.
    pub kept: Vec<Vertex>,
    /// Input labels of the deleted orbit `(v, γv, γ²v)`.
    pub removed: [Vertex; 3],
}

/// Remove one vertex orbit from a C3-isostatic graph with at least six
/// vertices, keeping it C3-isostatic.
pub fn reduce_once(sg: &SymGraph) -> Result<Reduction, C3Error> {
    if !check_c3_isostatic(sg)?.isostatic {
        return Err(C3Error::NotIsostatic);
    }
    reduce_unchecked(sg)
}

fn reduce_unchecked(sg: &SymGraph) -> Result<Reduction, C3Error> {
    let action = sg.c3()?;
    let g = sg.graph();
    if g.n() <= 3 {
        return Err(C3Error::AtBaseCase);
    }
    let by_valence = |d: usize| (0..g.n()).find(|&v| g.degree(v) == d);

    if let Some(v) = by_valence(2) {
        let [v1, v2] = [g.neighbors(v)[0], g.neighbors(v)[1]];
        return finish(sg, action, v, &[], ReductionCase::Valence2, |new| {
            Move::VertexAddition { base: [v1, v2], new }
        });
    }

    let v = by_valence(3).ok_or_else(|| {
        C3Error::InternalInvariantBroken("Laman graph without a vertex of valence 2 or 3".into())
    })?;
    let orbit = action.orbit(v);
    let nbrs = g.neighbors(v).to_vec();

    if g.has_edge(v, orbit[1]) {
        let v0 = *nbrs
            .iter()
            .find(|x| !orbit.contains(x))
            .expect("valence 3 with two neighbours in the orbit");
        return finish(sg, action, v, &[], ReductionCase::Triangle, |new| {
            Move::DeltaExtension { base: v0, new }
        });
    }

    let v1 = nbrs[0];
    let mut shared = action.orbit(v1);
    shared.sort_unstable();
    if shared.as_slice() == nbrs.as_slice() {
        let triangle = [v1, action.apply(v1), action.apply2(v1)];
        let added: Vec<Edge> = (0..3).map(|k| edge(triangle[k], triangle[(k + 1) % 3])).collect();
        // The triangle may already be present; then fall through.
        if added.iter().all(|&(a, b)| !g.has_edge(a, b)) {
            let r = finish(sg, action, v, &added, ReductionCase::SharedNeighbours, |new| {
                Move::EdgeSplit {
                    base: triangle,
                    new,
                }
            });
            if r.is_ok() {
                return r;
            }
        }
    }

    let (without_v, kept_v) = g.without_vertices(&[v]);
    let index_in = |x: Vertex| kept_v.binary_search(&x).expect("neighbour survives");
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let (a, b, c) = (nbrs[i], nbrs[j], nbrs[k]);
        if !laman_check_with(&without_v, &[edge(index_in(a), index_in(b))])? {
            continue;
        }
        let added: Vec<Edge> = (0..3)
            .map(|p| edge(action.power(p, a), action.power(p, b)))
            .collect();
        return finish(sg, action, v, &added, ReductionCase::PairInsertion, |new| {
            Move::EdgeSplit {
                base: [a, b, c],
                new,
            }
        });
    }
    Err(C3Error::InternalInvariantBroken(format!(
        "no neighbour pair of valence-3 vertex {v} keeps the Laman counts"
    )))
}

/// Delete the orbit of `v`, insert `added` (input labels), verify the
/// result and express the forward move in the reduced labels.
fn finish(
    sg: &SymGraph,
    action: &C3Action,
    v: Vertex,
    added: &[Edge],
    case: ReductionCase,
    make_move: impl FnOnce([Vertex; 3]) -> Move,
) -> Result<Reduction, C3Error> {
    let removed = action.orbit(v);
    let (smaller, kept) = sg.graph().without_vertices(&removed);
    let mut relabel = vec![usize::MAX; sg.n()];
    for (i, &x) in kept.iter().enumerate() {
        relabel[x] = i;
    }
    let extra: Vec<Edge> = added
        .iter()
        .map(|&(a, b)| edge(relabel[a], relabel[b]))
        .collect();
    let graph = smaller.with_edges(&extra).map_err(|_| {
        C3Error::DegenerateMove("inserted edges already present after deleting the orbit".into())
    })?;
    let gamma: Vec<Vertex> = kept.iter().map(|&x| relabel[action.apply(x)]).collect();
    let reduced_action = C3Action::new(gamma)
        .map_err(|e| C3Error::InternalInvariantBroken(format!("restricted action: {e}")))?;
    let reduced = SymGraph::new(graph, reduced_action)?;

    if !laman_check(reduced.graph())? || count_fixed(reduced.graph(), reduced.c3()?).j != 0 {
        return Err(C3Error::InternalInvariantBroken(format!(
            "{case:?} reduction at vertex {v} left a graph that is not C3-isostatic"
        )));
    }

    let m = reduced.n();
    for (k, &x) in removed.iter().enumerate() {
        relabel[x] = m + k;
    }
    let step = make_move(removed).map_vertices(|x| relabel[x]);
    if step.anchors().iter().any(|&x| x >= m) {
        return Err(C3Error::InternalInvariantBroken(format!(
            "{case:?} reduction at vertex {v} anchors the move on its own orbit"
        )));
    }
    Ok(Reduction {
        reduced,
        step,
        case,
        kept,
        removed,
    })
}

#[inline]
fn step_is_new(x: Vertex, m: usize) -> bool {
    (m..m + 3).contains(&x)
}

/// Moves from the triangle `(0 1 2)` to a graph, with the labelling that
/// identifies the replayed graph with the original one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSequence {
    pub moves: Vec<Move>,
    /// `labels[i]` is the input vertex corresponding to replayed vertex `i`.
    pub labels: Vec<Vertex>,
}

impl ConstructionSequence {
    /// A sequence whose replay is already labelled like its target.
    pub fn from_moves(moves: Vec<Move>) -> Self {
        let n = 3 + 3 * moves.len();
        Self {
            moves,
            labels: (0..n).collect(),
        }
    }

    pub fn base() -> SymGraph {
        SymGraph::triangle()
    }

    pub fn final_order(&self) -> usize {
        3 + 3 * self.moves.len()
    }
}

/// Reduce to the triangle and reverse the recorded moves.
pub fn extract_sequence(sg: &SymGraph) -> Result<ConstructionSequence, C3Error> {
    if !check_c3_isostatic(sg)?.isostatic {
        return Err(C3Error::NotIsostatic);
    }
    // `label[x]` is the input vertex behind vertex x of the current graph.
    let mut label: Vec<Vertex> = (0..sg.n()).collect();
    let mut current = sg.clone();
    // Moves in input labels, latest reduction first.
    let mut peeled: Vec<(Move, [Vertex; 3])> = Vec::new();
    while current.n() > 3 {
        let r = reduce_unchecked(&current)?;
        let m = r.reduced.n();
        let removed = r.removed.map(|x| label[x]);
        let to_input = |x: Vertex| {
            if step_is_new(x, m) {
                removed[x - m]
            } else {
                label[r.kept[x]]
            }
        };
        peeled.push((r.step.map_vertices(to_input), removed));
        label = r.kept.iter().map(|&x| label[x]).collect();
        current = r.reduced;
    }
    let base_action = current.c3()?;
    let base_labels = base_action.orbit(0).map(|x| label[x]);

    let mut labels: Vec<Vertex> = base_labels.to_vec();
    let mut replay_index = vec![usize::MAX; sg.n()];
    for (i, &x) in base_labels.iter().enumerate() {
        replay_index[x] = i;
    }
    let mut moves = Vec::with_capacity(peeled.len());
    for (mv, removed) in peeled.into_iter().rev() {
        let start = labels.len();
        for (k, &x) in removed.iter().enumerate() {
            replay_index[x] = start + k;
        }
        labels.extend(removed);
        moves.push(mv.map_vertices(|x| replay_index[x]));
    }
    Ok(ConstructionSequence { moves, labels })
}

/// Per-step validation recorded during replay.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepCheck {
    pub step: usize,
    pub n: usize,
    pub m: usize,
    pub tight: bool,
    pub fixed_vertices: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replay {
    pub graph: SymGraph,
    pub trace: Vec<StepCheck>,
}

/// Apply every move from the triangle, checking that each intermediate graph
/// is tight with no fixed vertex.
pub fn replay_sequence(seq: &ConstructionSequence) -> Result<Replay, C3Error> {
    let mut graph = ConstructionSequence::base();
    let mut trace = vec![step_check(0, &graph)?];
    for (i, mv) in seq.moves.iter().enumerate() {
        graph = apply_move(&graph, mv)?;
        let check = step_check(i + 1, &graph)?;
        if !check.tight || check.fixed_vertices != 0 {
            return Err(C3Error::IntermediateNotTight { step: i + 1 });
        }
        trace.push(check);
    }
    Ok(Replay { graph, trace })
}

fn step_check(step: usize, sg: &SymGraph) -> Result<StepCheck, C3Error> {
    Ok(StepCheck {
        step,
        n: sg.n(),
        m: sg.m(),
        tight: laman_check(sg.graph())?,
        fixed_vertices: count_fixed(sg.graph(), sg.c3()?).j,
    })
}

/// Whether `labels` is an isomorphism from `replayed` onto `original` that
/// commutes with both rotations.
pub fn relabeling_matches(labels: &[Vertex], replayed: &SymGraph, original: &SymGraph) -> bool {
    let n = original.n();
    if replayed.n() != n || labels.len() != n || replayed.m() != original.m() {
        return false;
    }
    let mut seen = vec![false; n];
    if labels
        .iter()
        .any(|&x| x >= n || std::mem::replace(&mut seen[x], true))
    {
        return false;
    }
    let edges_match = replayed
        .graph()
        .edges()
        .iter()
        .all(|&(a, b)| original.graph().has_edge(labels[a], labels[b]));
    let actions_commute = match (replayed.action(), original.action()) {
        (Some(r), Some(o)) => (0..n).all(|x| labels[r.apply(x)] == o.apply(labels[x])),
        _ => false,
    };
    edges_match && actions_commute
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c3::{apply_vertex_addition, MoveKind};
    use crate::graph::parse_graph;

    fn prism() -> SymGraph {
        parse_graph(
            r#"{"vertices":6,"edges":[[0,1],[1,2],[2,0],[3,4],[4,5],[5,3],[0,3],[1,4],[2,5]],"c3":[1,2,0,4,5,3]}"#,
        )
        .unwrap()
    }

    fn k33() -> SymGraph {
        parse_graph(
            r#"{"vertices":6,"edges":[[0,3],[0,4],[0,5],[1,3],[1,4],[1,5],[2,3],[2,4],[2,5]],"c3":[1,2,0,4,5,3]}"#,
        )
        .unwrap()
    }

    fn round_trips(sg: &SymGraph) -> ConstructionSequence {
        let seq = extract_sequence(sg).unwrap();
        let replay = replay_sequence(&seq).unwrap();
        assert!(relabeling_matches(&seq.labels, &replay.graph, sg));
        seq
    }

    #[test]
    fn prism_reduces_by_delta() {
        let r = reduce_once(&prism()).unwrap();
        assert_eq!(r.reduced, SymGraph::triangle());
        assert_eq!(r.case, ReductionCase::Triangle);
        assert_eq!(
            r.step,
            Move::DeltaExtension {
                base: 0,
                new: [3, 4, 5]
            }
        );
        let seq = round_trips(&prism());
        assert_eq!(seq.moves.len(), 1);
        assert_eq!(seq.moves[0].kind(), MoveKind::DeltaExtension);
    }

    #[test]
    fn vertex_addition_shape_reduces_by_valence_two() {
        let g = apply_vertex_addition(&SymGraph::triangle(), 0, 1).unwrap();
        let r = reduce_once(&g).unwrap();
        assert_eq!(r.case, ReductionCase::Valence2);
        assert_eq!(r.reduced, SymGraph::triangle());
        assert_eq!(
            r.step,
            Move::VertexAddition {
                base: [0, 1],
                new: [3, 4, 5]
            }
        );
    }

    #[test]
    fn k33_reduces_by_edge_split() {
        let r = reduce_once(&k33()).unwrap();
        assert_eq!(r.case, ReductionCase::SharedNeighbours);
        assert_eq!(r.reduced, SymGraph::triangle());
        assert_eq!(r.step.kind(), MoveKind::EdgeSplit);
        assert_eq!(r.kept, vec![3, 4, 5]);
        assert_eq!(round_trips(&k33()).moves.len(), 1);
    }

    #[test]
    fn triangle_is_the_base() {
        assert_eq!(reduce_once(&SymGraph::triangle()), Err(C3Error::AtBaseCase));
        let seq = round_trips(&SymGraph::triangle());
        assert!(seq.moves.is_empty());
    }

    #[test]
    fn reversed_triangle_action_relabels_the_base() {
        let sg = parse_graph(r#"{"vertices":3,"edges":[[0,1],[1,2],[0,2]],"c3":[2,0,1]}"#).unwrap();
        let seq = round_trips(&sg);
        assert_eq!(seq.labels, vec![0, 2, 1]);
    }

    #[test]
    fn rejects_non_isostatic() {
        let star = parse_graph(r#"{"vertices":4,"edges":[[0,3],[1,3],[2,3]],"c3":[1,2,0,3]}"#).unwrap();
        assert_eq!(reduce_once(&star), Err(C3Error::NotIsostatic));
        assert_eq!(extract_sequence(&star), Err(C3Error::NotIsostatic));
    }

    #[test]
    fn replay_flags_broken_sequences() {
        let seq = ConstructionSequence::from_moves(vec![Move::DeltaExtension {
            base: 0,
            new: [3, 4, 5],
        }]);
        assert_eq!(replay_sequence(&seq).unwrap().graph, prism());
        let bad = ConstructionSequence::from_moves(vec![Move::EdgeSplit {
            base: [0, 5, 1],
            new: [3, 4, 5],
        }]);
        assert!(matches!(replay_sequence(&bad), Err(C3Error::InvalidAnchor(_))));
    }
}
