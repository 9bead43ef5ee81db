use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::C3Error;
use crate::graph::{edge, C3Action, Edge, Graph, SymGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    VertexAddition,
    EdgeSplit,
    DeltaExtension,
}

/// One symmetric move. `new` is the orbit `(v, γv, γ²v)` of the added
/// vertices, always the next three indices of the graph it applies to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "MoveRecord", try_from = "MoveRecord")]
pub enum Move {
    /// `v` joins `v1, v2`; `w` and `z` join the rotated pairs.
    VertexAddition { base: [Vertex; 2], new: [Vertex; 3] },
    /// Removes the orbit of `{v1, v2}`; `v` joins `v1, v2, v3`.
    EdgeSplit { base: [Vertex; 3], new: [Vertex; 3] },
    /// A new triangle `v w z` with spokes to the orbit of `v0`.
    DeltaExtension { base: Vertex, new: [Vertex; 3] },
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::VertexAddition { .. } => MoveKind::VertexAddition,
            Move::EdgeSplit { .. } => MoveKind::EdgeSplit,
            Move::DeltaExtension { .. } => MoveKind::DeltaExtension,
        }
    }

    pub fn anchors(&self) -> Vec<Vertex> {
        match self {
            Move::VertexAddition { base, .. } => base.to_vec(),
            Move::EdgeSplit { base, .. } => base.to_vec(),
            Move::DeltaExtension { base, .. } => vec![*base],
        }
    }

    pub fn new_vertices(&self) -> [Vertex; 3] {
        match self {
            Move::VertexAddition { new, .. }
            | Move::EdgeSplit { new, .. }
            | Move::DeltaExtension { new, .. } => *new,
        }
    }

    /// Rewrite every vertex label through `f`.
    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> Move {
        let new = self.new_vertices().map(&f);
        match self {
            Move::VertexAddition { base, .. } => Move::VertexAddition {
                base: base.map(&f),
                new,
            },
            Move::EdgeSplit { base, .. } => Move::EdgeSplit {
                base: base.map(&f),
                new,
            },
            Move::DeltaExtension { base, .. } => Move::DeltaExtension { base: f(*base), new },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct MoveRecord {
    kind: MoveKind,
    anchors: Vec<Vertex>,
    new: [Vertex; 3],
}

impl From<Move> for MoveRecord {
    fn from(m: Move) -> Self {
        Self {
            kind: m.kind(),
            anchors: m.anchors(),
            new: m.new_vertices(),
        }
    }
}

impl TryFrom<MoveRecord> for Move {
    type Error = String;

    fn try_from(r: MoveRecord) -> Result<Self, Self::Error> {
        let wrong = || format!("{:?} takes a different number of anchors", r.kind);
        Ok(match r.kind {
            MoveKind::VertexAddition => Move::VertexAddition {
                base: r.anchors.clone().try_into().map_err(|_| wrong())?,
                new: r.new,
            },
            MoveKind::EdgeSplit => Move::EdgeSplit {
                base: r.anchors.clone().try_into().map_err(|_| wrong())?,
                new: r.new,
            },
            MoveKind::DeltaExtension => match r.anchors.as_slice() {
                [v0] => Move::DeltaExtension { base: *v0, new: r.new },
                _ => return Err(wrong()),
            },
        })
    }
}

fn check_anchor(sg: &SymGraph, v: Vertex) -> Result<(), C3Error> {
    if v >= sg.n() {
        return Err(C3Error::InvalidAnchor(format!(
            "vertex {v} is outside 0..{}",
            sg.n()
        )));
    }
    Ok(())
}

/// Assemble the extended graph; the added edges must be new and distinct.
fn extend(
    graph: &Graph,
    action: &C3Action,
    removed: &[Edge],
    added: Vec<Edge>,
) -> Result<SymGraph, C3Error> {
    let distinct: BTreeSet<Edge> = added.iter().copied().collect();
    if distinct.len() != added.len() {
        return Err(C3Error::DegenerateMove("new edges coincide".into()));
    }
    let n = graph.n();
    let edges = graph
        .without_edges(removed)
        .edges()
        .iter()
        .copied()
        .chain(added)
        .collect::<Vec<_>>();
    let graph = Graph::new(n + 3, edges)
        .map_err(|e| C3Error::DegenerateMove(format!("extended graph is not simple: {e}")))?;
    Ok(SymGraph::from_parts_unchecked(graph, action.extended()))
}

/// Symmetric vertex addition on the base pair `(v1, v2)`.
pub fn apply_vertex_addition(sg: &SymGraph, v1: Vertex, v2: Vertex) -> Result<SymGraph, C3Error> {
    let action = sg.c3()?;
    check_anchor(sg, v1)?;
    check_anchor(sg, v2)?;
    if v1 == v2 {
        return Err(C3Error::InvalidAnchor(format!("anchors coincide ({v1})")));
    }
    let n = sg.n();
    let added = (0..3)
        .flat_map(|k| {
            [
                edge(n + k, action.power(k, v1)),
                edge(n + k, action.power(k, v2)),
            ]
        })
        .collect();
    extend(sg.graph(), action, &[], added)
}

/// Symmetric edge split removing the orbit of `{v1, v2}`, with `v3` as the
/// third neighbour of the new vertex.
pub fn apply_edge_split(
    sg: &SymGraph,
    v1: Vertex,
    v2: Vertex,
    v3: Vertex,
) -> Result<SymGraph, C3Error> {
    let action = sg.c3()?;
    for v in [v1, v2, v3] {
        check_anchor(sg, v)?;
    }
    if v1 == v2 || v3 == v1 || v3 == v2 {
        return Err(C3Error::InvalidAnchor(format!(
            "anchors ({v1}, {v2}, {v3}) are not distinct"
        )));
    }
    if !sg.graph().has_edge(v1, v2) {
        return Err(C3Error::MissingEdge(v1, v2));
    }
    let removed: Vec<Edge> = (0..3)
        .map(|k| edge(action.power(k, v1), action.power(k, v2)))
        .collect();
    if removed.iter().collect::<BTreeSet<_>>().len() < 3 {
        return Err(C3Error::DegenerateMove(format!(
            "orbit of {{{v1}, {v2}}} has fewer than three edges"
        )));
    }
    let n = sg.n();
    let added = (0..3)
        .flat_map(|k| [v1, v2, v3].map(|a| edge(n + k, action.power(k, a))))
        .collect();
    extend(sg.graph(), action, &removed, added)
}

/// Symmetric Δ extension: a new triangle joined to the orbit of `v0`.
pub fn apply_delta_extension(sg: &SymGraph, v0: Vertex) -> Result<SymGraph, C3Error> {
    let action = sg.c3()?;
    check_anchor(sg, v0)?;
    if action.is_fixed(v0) {
        return Err(C3Error::FixedAnchor(v0));
    }
    let n = sg.n();
    let added = vec![
        (n, n + 1),
        (n + 1, n + 2),
        (n, n + 2),
        edge(n, v0),
        edge(n + 1, action.apply(v0)),
        edge(n + 2, action.apply2(v0)),
    ];
    extend(sg.graph(), action, &[], added)
}

/// Apply a recorded move; its new vertices must be `(n, n+1, n+2)`.
pub fn apply_move(sg: &SymGraph, mv: &Move) -> Result<SymGraph, C3Error> {
    let n = sg.n();
    if mv.new_vertices() != [n, n + 1, n + 2] {
        return Err(C3Error::InvalidAnchor(format!(
            "new vertices {:?} must be the next indices [{n}, {}, {}]",
            mv.new_vertices(),
            n + 1,
            n + 2
        )));
    }
    match *mv {
        Move::VertexAddition { base: [v1, v2], .. } => apply_vertex_addition(sg, v1, v2),
        Move::EdgeSplit {
            base: [v1, v2, v3], ..
        } => apply_edge_split(sg, v1, v2, v3),
        Move::DeltaExtension { base, .. } => apply_delta_extension(sg, base),
    }
}
