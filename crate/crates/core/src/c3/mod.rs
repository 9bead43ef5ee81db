//! The combinatorial side of 3-fold rotational symmetry: the isostaticity
//! decision, the three symmetric Henneberg-type moves, the reduction that
//! extracts a construction sequence, and symmetric three-tree partitions.

mod moves;
mod partition;
mod reduce;

pub use moves::{apply_delta_extension, apply_edge_split, apply_move, apply_vertex_addition, Move, MoveKind};
pub use partition::{build_tree_partition, verify_tree_partition, PartitionCheck, TreePartition};
pub use reduce::{
    extract_sequence, reduce_once, relabeling_matches, replay_sequence, ConstructionSequence, Reduction,
    ReductionCase, Replay, StepCheck,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphError, SymGraph, Vertex};
use crate::sparsity::{pebble_sparsity, SparsityError, SparsityReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum C3Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Sparsity(#[from] SparsityError),
    #[error("invalid anchor: {0}")]
    InvalidAnchor(String),
    #[error("degenerate move: {0}")]
    DegenerateMove(String),
    #[error("edge {{{0}, {1}}} is not in the graph")]
    MissingEdge(Vertex, Vertex),
    #[error("anchor {0} is fixed by the rotation")]
    FixedAnchor(Vertex),
    #[error("graph is not C3-generically isostatic")]
    NotIsostatic,
    #[error("already at the three-vertex base")]
    AtBaseCase,
    #[error("intermediate graph after move {step} is not a tight graph with j = 0")]
    IntermediateNotTight { step: usize },
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),
}

/// A condition of the symmetric Laman characterization that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    /// `|E| != 2|V| - 3`.
    Count,
    /// Some subgraph on `k` vertices has more than `2k - 3` edges.
    SubgraphSparsity,
    /// The rotation fixes a vertex.
    FixedVertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Subgraph(Vec<Vertex>),
    FixedVertex(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct C3Verdict {
    pub isostatic: bool,
    pub reasons: Vec<Reason>,
    pub witness: Option<Witness>,
}

/// Decide C3-generic isostaticity: Laman counts plus no fixed vertex.
pub fn check_c3_isostatic(sg: &SymGraph) -> Result<C3Verdict, C3Error> {
    Ok(check_with_report(sg)?.0)
}

pub(crate) fn check_with_report(sg: &SymGraph) -> Result<(C3Verdict, SparsityReport), C3Error> {
    let action = sg.require_c3()?;
    let report = pebble_sparsity(sg.graph())?;
    let mut reasons = Vec::new();
    let mut witness = None;
    if report.edge_count as i64 != report.target {
        reasons.push(Reason::Count);
    }
    if !report.is_sparse {
        reasons.push(Reason::SubgraphSparsity);
        witness = report.witness.clone().map(Witness::Subgraph);
    }
    if let Some(v) = (0..sg.n()).find(|&v| action.is_fixed(v)) {
        reasons.push(Reason::FixedVertex);
        witness.get_or_insert(Witness::FixedVertex(v));
    }
    let verdict = C3Verdict {
        isostatic: reasons.is_empty(),
        reasons,
        witness,
    };
    Ok((verdict, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    #[test]
    fn triangle_and_prism_pass() {
        assert!(check_c3_isostatic(&SymGraph::triangle()).unwrap().isostatic);
        let prism = parse_graph(
            r#"{"vertices":6,"edges":[[0,1],[1,2],[2,0],[3,4],[4,5],[5,3],[0,3],[1,4],[2,5]],"c3":[1,2,0,4,5,3]}"#,
        )
        .unwrap();
        let v = check_c3_isostatic(&prism).unwrap();
        assert!(v.isostatic && v.reasons.is_empty() && v.witness.is_none());
    }

    #[test]
    fn fixed_hub_wheel_fails() {
        // Hexagon with a hub joined to every other rim vertex.
        let sg = parse_graph(
            r#"{"vertices":7,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,0],[6,0],[6,2],[6,4]],"c3":[2,3,4,5,0,1,6]}"#,
        )
        .unwrap();
        let v = check_c3_isostatic(&sg).unwrap();
        assert!(!v.isostatic);
        assert!(v.reasons.contains(&Reason::FixedVertex));
        assert_eq!(v.witness, Some(Witness::FixedVertex(6)));
    }

    #[test]
    fn k4_reports_every_failure() {
        let sg = parse_graph(
            r#"{"vertices":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]],"c3":[1,2,0,3]}"#,
        )
        .unwrap();
        let v = check_c3_isostatic(&sg).unwrap();
        assert_eq!(
            v.reasons,
            vec![Reason::Count, Reason::SubgraphSparsity, Reason::FixedVertex]
        );
        assert_eq!(v.witness, Some(Witness::Subgraph(vec![0, 1, 2, 3])));
    }

    #[test]
    fn needs_an_action_and_three_vertices() {
        let plain = parse_graph(r#"{"vertices":3,"edges":[[0,1],[1,2],[0,2]]}"#).unwrap();
        assert_eq!(
            check_c3_isostatic(&plain),
            Err(C3Error::Graph(GraphError::MissingAction))
        );
    }
}
