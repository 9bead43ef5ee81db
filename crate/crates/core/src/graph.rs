//! Simple graphs, order-3 automorphisms and the JSON input format.
//!
//! Vertices are the integers `0..n`. An edge is stored as an ordered pair
//! `(u, v)` with `u < v`; the edge list is kept sorted, which is also the
//! row order used by every matrix built from a graph.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

/// Normalize an unordered pair to `(min, max)`.
#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("loop or duplicate edge {{{0}, {1}}}")]
    LoopOrDuplicateEdge(Vertex, Vertex),
    #[error("c3 is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("c3 does not have order three")]
    NotOrderThree,
    #[error("c3 is not an automorphism: edge {{{0}, {1}}} maps to a non-edge")]
    NotAnAutomorphism(Vertex, Vertex),
    #[error("operation needs at least {needed} vertices, graph has {actual}")]
    TooFewVertices { needed: usize, actual: usize },
    #[error("graph carries no c3 action")]
    MissingAction,
}

/// A finite simple graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Build a graph, rejecting loops, duplicates (in either order) and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::Schema(format!(
                    "edge {{{u}, {v}}} has an endpoint outside 0..{n}"
                )));
            }
            if u == v || !set.insert(edge(u, v)) {
                return Err(GraphError::LoopOrDuplicateEdge(u, v));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { n, edges, adj }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_sorted(n, edges.collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Row index of an edge in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&edge(u, v)).ok()
    }

    /// Number of edges with both endpoints in `vertices`.
    pub fn induced_edge_count(&self, vertices: &[Vertex]) -> usize {
        let mut inside = vec![false; self.n];
        for &v in vertices {
            inside[v] = true;
        }
        self.edges
            .iter()
            .filter(|&&(u, v)| inside[u] && inside[v])
            .count()
    }

    /// A copy with `extra` edges added. Fails if any of them already exists.
    pub fn with_edges(&self, extra: &[Edge]) -> Result<Self, GraphError> {
        Self::new(self.n, self.edges.iter().copied().chain(extra.iter().copied()))
    }

    /// A copy with `removed` edges deleted (missing ones are ignored).
    pub fn without_edges(&self, removed: &[Edge]) -> Self {
        let removed: BTreeSet<Edge> = removed.iter().map(|&(u, v)| edge(u, v)).collect();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| !removed.contains(e))
            .collect();
        Self::from_sorted(self.n, edges)
    }

    /// Delete the vertices in `removed`, renumbering the survivors in
    /// increasing order. Returns the new graph and `kept`, where `kept[i]`
    /// is the old index of new vertex `i`.
    pub fn without_vertices(&self, removed: &[Vertex]) -> (Self, Vec<Vertex>) {
        let mut gone = vec![false; self.n];
        for &v in removed {
            gone[v] = true;
        }
        let kept: Vec<Vertex> = (0..self.n).filter(|&v| !gone[v]).collect();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            new_index[v] = i;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|&&(u, v)| !gone[u] && !gone[v])
            .map(|&(u, v)| edge(new_index[u], new_index[v]))
            .collect();
        edges.sort_unstable();
        (Self::from_sorted(kept.len(), edges), kept)
    }
}

/// An order-3 automorphism, stored in one-line form together with its square.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct C3Action {
    gamma: Vec<Vertex>,
    gamma2: Vec<Vertex>,
}

impl C3Action {
    /// Validate `gamma` as a permutation of order exactly three.
    pub fn new(gamma: Vec<Vertex>) -> Result<Self, GraphError> {
        let n = gamma.len();
        let mut seen = vec![false; n];
        for &x in &gamma {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(GraphError::NotAPermutation(n));
            }
        }
        let gamma2: Vec<Vertex> = gamma.iter().map(|&x| gamma[x]).collect();
        let identity = gamma.iter().enumerate().all(|(i, &x)| i == x);
        let cubes_to_identity = (0..n).all(|i| gamma[gamma2[i]] == i);
        if identity || !cubes_to_identity {
            return Err(GraphError::NotOrderThree);
        }
        Ok(Self { gamma, gamma2 })
    }

    pub fn len(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: Vertex) -> Vertex {
        self.gamma[v]
    }

    #[inline]
    pub fn apply2(&self, v: Vertex) -> Vertex {
        self.gamma2[v]
    }

    /// `gamma^k(v)` for `k` taken mod 3.
    pub fn power(&self, k: usize, v: Vertex) -> Vertex {
        match k % 3 {
            0 => v,
            1 => self.gamma[v],
            _ => self.gamma2[v],
        }
    }

    pub fn apply_edge(&self, (u, v): Edge) -> Edge {
        edge(self.gamma[u], self.gamma[v])
    }

    /// `(v, γv, γ²v)`.
    pub fn orbit(&self, v: Vertex) -> [Vertex; 3] {
        [v, self.gamma[v], self.gamma2[v]]
    }

    pub fn is_fixed(&self, v: Vertex) -> bool {
        self.gamma[v] == v
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.gamma
    }

    /// Extend by the 3-cycle `(n, n+1, n+2)` on three new vertices.
    pub fn extended(&self) -> Self {
        let n = self.gamma.len();
        let mut gamma = self.gamma.clone();
        gamma.extend([n + 1, n + 2, n]);
        let gamma2 = gamma.iter().map(|&x| gamma[x]).collect();
        Self { gamma, gamma2 }
    }

    fn check_automorphism(&self, graph: &Graph) -> Result<(), GraphError> {
        if self.gamma.len() != graph.n() {
            return Err(GraphError::Schema(format!(
                "c3 has length {} but the graph has {} vertices",
                self.gamma.len(),
                graph.n()
            )));
        }
        // γ is a bijection on vertices, so mapping E into E is enough.
        for &(u, v) in graph.edges() {
            if !graph.has_edge(self.gamma[u], self.gamma[v]) {
                return Err(GraphError::NotAnAutomorphism(u, v));
            }
        }
        Ok(())
    }
}

/// Fixed vertices (`j`) and fixed edges (`b`) of the action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedCounts {
    pub j: usize,
    pub b: usize,
}

/// A graph, optionally with an order-3 automorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymGraph {
    graph: Graph,
    action: Option<C3Action>,
}

impl SymGraph {
    pub fn new(graph: Graph, action: C3Action) -> Result<Self, GraphError> {
        action.check_automorphism(&graph)?;
        Ok(Self {
            graph,
            action: Some(action),
        })
    }

    /// A graph without symmetry; only the plain Laman operations apply.
    pub fn plain(graph: Graph) -> Self {
        Self {
            graph,
            action: None,
        }
    }

    /// K3 with `γ = (0 1 2)`.
    pub fn triangle() -> Self {
        Self {
            graph: Graph::complete(3),
            action: Some(C3Action::new(vec![1, 2, 0]).expect("3-cycle")),
        }
    }

    pub(crate) fn from_parts_unchecked(graph: Graph, action: C3Action) -> Self {
        debug_assert!(action.check_automorphism(&graph).is_ok());
        Self {
            graph,
            action: Some(action),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn action(&self) -> Option<&C3Action> {
        self.action.as_ref()
    }

    /// The action, or [`GraphError::MissingAction`].
    pub fn c3(&self) -> Result<&C3Action, GraphError> {
        self.action.as_ref().ok_or(GraphError::MissingAction)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    /// Requires an action and at least three vertices, as every C3
    /// operation does.
    pub fn require_c3(&self) -> Result<&C3Action, GraphError> {
        let action = self.c3()?;
        if self.n() < 3 {
            return Err(GraphError::TooFewVertices {
                needed: 3,
                actual: self.n(),
            });
        }
        Ok(action)
    }

    pub fn count_fixed(&self) -> Result<FixedCounts, GraphError> {
        let action = self.c3()?;
        Ok(count_fixed(&self.graph, action))
    }
}

pub fn count_fixed(graph: &Graph, action: &C3Action) -> FixedCounts {
    let j = (0..graph.n()).filter(|&v| action.is_fixed(v)).count();
    let b = graph
        .edges()
        .iter()
        .filter(|&&e| action.apply_edge(e) == e)
        .count();
    FixedCounts { j, b }
}

/// The on-disk document: `{"vertices": n, "edges": [[u, v], ...], "c3": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c3: Option<Vec<Vertex>>,
}

impl GraphDocument {
    pub fn into_sym_graph(self) -> Result<SymGraph, GraphError> {
        let graph = Graph::new(self.vertices, self.edges.iter().map(|e| (e[0], e[1])))?;
        match self.c3 {
            None => Ok(SymGraph::plain(graph)),
            Some(gamma) => {
                if gamma.len() != self.vertices {
                    return Err(GraphError::Schema(format!(
                        "c3 has length {} but vertices is {}",
                        gamma.len(),
                        self.vertices
                    )));
                }
                SymGraph::new(graph, C3Action::new(gamma)?)
            }
        }
    }
}

impl From<&SymGraph> for GraphDocument {
    fn from(sg: &SymGraph) -> Self {
        Self {
            vertices: sg.n(),
            edges: sg.graph().edges().iter().map(|&(u, v)| [u, v]).collect(),
            c3: sg.action().map(|a| a.as_slice().to_vec()),
        }
    }
}

/// Parse and validate a graph document.
pub fn parse_graph(document: &str) -> Result<SymGraph, GraphError> {
    let doc: GraphDocument =
        serde_json::from_str(document).map_err(|e| GraphError::Schema(e.to_string()))?;
    doc.into_sym_graph()
}

/// Serialize to the document format accepted by [`parse_graph`].
pub fn serialize_graph(sg: &SymGraph) -> String {
    serde_json::to_string(&GraphDocument::from(sg)).expect("document serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    const PRISM: &str = r#"{"vertices":6, "edges":[[0,1],[1,2],[2,0],[3,4],[4,5],[5,3],[0,3],[1,4],[2,5]], "c3":[1,2,0,4,5,3]}"#;

    fn star() -> SymGraph {
        parse_graph(r#"{"vertices":4,"edges":[[0,3],[1,3],[2,3]],"c3":[1,2,0,3]}"#).unwrap()
    }

    #[test]
    fn parses_triangle() {
        let sg = parse_graph(r#"{"vertices":3, "edges":[[0,1],[1,2],[2,0]], "c3":[1,2,0]}"#).unwrap();
        assert_eq!(sg, SymGraph::triangle());
    }

    #[test]
    fn parses_prism() {
        let sg = parse_graph(PRISM).unwrap();
        assert_eq!((sg.n(), sg.m()), (6, 9));
        assert_eq!(sg.count_fixed().unwrap(), FixedCounts { j: 0, b: 0 });
    }

    #[test]
    fn transposition_is_not_order_three() {
        let err = parse_graph(r#"{"vertices":3, "edges":[[0,1],[1,2],[2,0]], "c3":[1,0,2]}"#);
        assert_eq!(err, Err(GraphError::NotOrderThree));
    }

    #[test]
    fn identity_is_rejected() {
        let err = parse_graph(r#"{"vertices":3, "edges":[[0,1]], "c3":[0,1,2]}"#);
        assert_eq!(err, Err(GraphError::NotOrderThree));
    }

    #[test]
    fn rejects_non_permutation() {
        let err = parse_graph(r#"{"vertices":3, "edges":[], "c3":[1,1,0]}"#);
        assert_eq!(err, Err(GraphError::NotAPermutation(3)));
    }

    #[test]
    fn rejects_duplicates_in_either_order() {
        let err = parse_graph(r#"{"vertices":3, "edges":[[0,1],[1,0]]}"#);
        assert_eq!(err, Err(GraphError::LoopOrDuplicateEdge(1, 0)));
        let err = parse_graph(r#"{"vertices":3, "edges":[[2,2]]}"#);
        assert_eq!(err, Err(GraphError::LoopOrDuplicateEdge(2, 2)));
    }

    #[test]
    fn rejects_non_automorphism_with_witness() {
        let err = parse_graph(r#"{"vertices":3, "edges":[[0,1]], "c3":[1,2,0]}"#);
        assert_eq!(err, Err(GraphError::NotAnAutomorphism(0, 1)));
    }

    #[test]
    fn schema_errors() {
        for doc in [
            "not json",
            r#"{"vertices":3}"#,
            r#"{"vertices":3,"edges":[[0,5]]}"#,
            r#"{"vertices":3,"edges":[],"c3":[1,2,0,3]}"#,
            r#"{"vertices":3,"edges":[],"extra":1}"#,
        ] {
            assert!(matches!(parse_graph(doc), Err(GraphError::Schema(_))), "{doc}");
        }
    }

    #[test]
    fn small_graphs_parse_without_action() {
        let sg = parse_graph(r#"{"vertices":2,"edges":[[0,1]]}"#).unwrap();
        assert!(sg.action().is_none());
        assert!(matches!(sg.require_c3(), Err(GraphError::MissingAction)));
    }

    #[test]
    fn fixed_counts() {
        assert_eq!(star().count_fixed().unwrap(), FixedCounts { j: 1, b: 0 });
        assert_eq!(
            SymGraph::triangle().count_fixed().unwrap(),
            FixedCounts { j: 0, b: 0 }
        );
        // Two fixed vertices joined by a fixed edge.
        let sg = parse_graph(
            r#"{"vertices":5,"edges":[[3,4],[0,3],[1,3],[2,3]],"c3":[1,2,0,3,4]}"#,
        )
        .unwrap();
        assert_eq!(sg.count_fixed().unwrap(), FixedCounts { j: 2, b: 1 });
    }

    #[test]
    fn orbits() {
        let prism = parse_graph(PRISM).unwrap();
        let a = prism.c3().unwrap();
        assert_eq!(a.orbit(0), [0, 1, 2]);
        assert_eq!(a.orbit(4), [4, 5, 3]);
        assert_eq!(star().c3().unwrap().orbit(3), [3, 3, 3]);
    }

    #[test]
    fn vertex_deletion_renumbers() {
        let prism = parse_graph(PRISM).unwrap();
        let (g, kept) = prism.graph().without_vertices(&[0, 1, 2]);
        assert_eq!(kept, vec![3, 4, 5]);
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn extension_appends_three_cycle() {
        let a = C3Action::new(vec![1, 2, 0]).unwrap().extended();
        assert_eq!(a.as_slice(), &[1, 2, 0, 4, 5, 3]);
    }
}
