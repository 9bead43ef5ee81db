//! Symmetric three-tree partitions: three edge-disjoint trees covering every
//! vertex exactly twice, cyclically permuted by the rotation.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::reduce::{replay_sequence, ConstructionSequence};
use super::{C3Error, Move};
use crate::graph::{edge, C3Action, Edge, SymGraph, Vertex};
use crate::sparsity::pebble_sparsity;

/// Edge sets of the trees `T0, T1, T2`, each sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreePartition {
    #[serde(rename = "T0")]
    pub t0: Vec<Edge>,
    #[serde(rename = "T1")]
    pub t1: Vec<Edge>,
    #[serde(rename = "T2")]
    pub t2: Vec<Edge>,
}

impl TreePartition {
    pub fn from_trees(trees: [Vec<Edge>; 3]) -> Self {
        let [mut t0, mut t1, mut t2] = trees.map(|t| t.into_iter().map(|(u, v)| edge(u, v)).collect::<Vec<_>>());
        t0.sort_unstable();
        t1.sort_unstable();
        t2.sort_unstable();
        Self { t0, t1, t2 }
    }

    pub fn trees(&self) -> [&[Edge]; 3] {
        [&self.t0, &self.t1, &self.t2]
    }

    /// Index of the tree holding `{u, v}`.
    pub fn tree_of(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let e = edge(u, v);
        self.trees().iter().position(|t| t.binary_search(&e).is_ok())
    }

    /// Vertices spanned by tree `i`.
    pub fn vertices(&self, i: usize) -> BTreeSet<Vertex> {
        self.trees()[i].iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// For every vertex of `0..n`, the tree it is missing from, or `None`
    /// if it does not lie in exactly two trees.
    pub fn missing_tree(&self, n: usize) -> Vec<Option<usize>> {
        let mut member = vec![[false; 3]; n];
        for (i, t) in self.trees().iter().enumerate() {
            for &(u, v) in t.iter() {
                member[u][i] = true;
                member[v][i] = true;
            }
        }
        member
            .iter()
            .map(|m| match m {
                [false, true, true] => Some(0),
                [true, false, true] => Some(1),
                [true, true, false] => Some(2),
                _ => None,
            })
            .collect()
    }
}

/// Result of each partition check, listed separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCheck {
    /// The three edge sets partition `E(G)`.
    pub partitions_edges: bool,
    /// Each edge set is a tree on the vertices it touches.
    pub trees: bool,
    /// Every vertex lies in exactly two trees.
    pub two_trees_per_vertex: bool,
    /// The rotation carries `T_i` onto `T_{i+1}`.
    pub equivariant: bool,
    /// No two non-trivial subtrees of different trees span the same vertex
    /// set, checked through the equivalent sparsity count.
    pub proper: bool,
    pub failures: Vec<String>,
}

impl PartitionCheck {
    pub fn passed(&self) -> bool {
        self.partitions_edges && self.trees && self.two_trees_per_vertex && self.equivariant && self.proper
    }
}

fn is_tree(edges: &[Edge]) -> bool {
    if edges.is_empty() {
        return false;
    }
    let mut index = BTreeMap::new();
    for &(u, v) in edges {
        let next = index.len();
        index.entry(u).or_insert(next);
        let next = index.len();
        index.entry(v).or_insert(next);
    }
    if edges.len() + 1 != index.len() {
        return false;
    }
    // |E| = |V| - 1 plus acyclic means connected.
    let mut parent: Vec<usize> = (0..index.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (u, v) in edges {
        let (a, b) = (find(&mut parent, index[u]), find(&mut parent, index[v]));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Check a candidate partition against the graph and its rotation.
pub fn verify_tree_partition(sg: &SymGraph, tp: &TreePartition) -> PartitionCheck {
    let g = sg.graph();
    let mut failures = Vec::new();

    let mut all: Vec<Edge> = tp.trees().iter().flat_map(|t| t.iter().copied()).collect();
    all.sort_unstable();
    let partitions_edges = all.as_slice() == g.edges();
    if !partitions_edges {
        failures.push("edge sets do not partition E(G)".to_string());
    }

    let trees = tp.trees().iter().all(|t| is_tree(t));
    if !trees {
        failures.push("some edge set is not a tree".to_string());
    }

    let missing = tp.missing_tree(g.n());
    let two_trees_per_vertex = missing.iter().all(Option::is_some);
    if let Some(v) = missing.iter().position(Option::is_none) {
        failures.push(format!("vertex {v} is not in exactly two trees"));
    }

    let equivariant = match sg.action() {
        Some(action) => (0..3).all(|i| {
            let mut image: Vec<Edge> = tp.trees()[i].iter().map(|&e| action.apply_edge(e)).collect();
            image.sort_unstable();
            image.as_slice() == tp.trees()[(i + 1) % 3]
        }),
        None => false,
    };
    if !equivariant {
        failures.push("rotation does not map T_i onto T_(i+1)".to_string());
    }

    let proper = g.n() >= 2 && pebble_sparsity(g).map(|r| r.is_sparse).unwrap_or(false);
    if !proper {
        failures.push("graph violates the sparsity count, so the partition is not proper".to_string());
    }

    PartitionCheck {
        partitions_edges,
        trees,
        two_trees_per_vertex,
        equivariant,
        proper,
        failures,
    }
}

/// Working state while growing the partition move by move.
struct Grower<'a> {
    action: &'a C3Action,
    tree_of_edge: BTreeMap<Edge, usize>,
    missing: Vec<usize>,
}

impl Grower<'_> {
    fn in_tree(&self, v: Vertex, i: usize) -> bool {
        self.missing[v] != i % 3
    }

    fn g(&self, k: usize, v: Vertex) -> Vertex {
        self.action.power(k, v)
    }

    fn add(&mut self, i: usize, u: Vertex, v: Vertex) {
        self.tree_of_edge.insert(edge(u, v), i % 3);
    }

    fn remove(&mut self, u: Vertex, v: Vertex) -> Option<usize> {
        self.tree_of_edge.remove(&edge(u, v))
    }

    fn broken(what: &str) -> C3Error {
        C3Error::InternalInvariantBroken(format!("tree partition update: {what}"))
    }

    fn vertex_addition(&mut self, [v1, v2]: [Vertex; 2], [v, w, z]: [Vertex; 3]) -> Result<(), C3Error> {
        let l = (0..3)
            .find(|&l| self.in_tree(v1, l) && self.in_tree(v2, l + 1))
            .ok_or_else(|| Self::broken("no tree index for a vertex addition"))?;
        self.add(l, v, v1);
        self.add(l, z, self.g(2, v2));
        self.add(l + 1, v, v2);
        self.add(l + 1, w, self.g(1, v1));
        self.add(l + 2, w, self.g(1, v2));
        self.add(l + 2, z, self.g(2, v1));
        self.missing.extend([(l + 2) % 3, l % 3, (l + 1) % 3]);
        Ok(())
    }

    fn edge_split(&mut self, [v1, v2, v3]: [Vertex; 3], [v, w, z]: [Vertex; 3]) -> Result<(), C3Error> {
        let l = self
            .remove(v1, v2)
            .ok_or_else(|| Self::broken("split edge is in no tree"))?;
        for k in 1..3 {
            if self.remove(self.g(k, v1), self.g(k, v2)) != Some((l + k) % 3) {
                return Err(Self::broken("split edge orbit is not cyclic over the trees"));
            }
        }
        for k in 0..3 {
            self.add(l + k, [v, w, z][k], self.g(k, v1));
            self.add(l + k, [v, w, z][k], self.g(k, v2));
        }
        if self.in_tree(v3, l + 1) {
            self.add(l, z, self.g(2, v3));
            self.add(l + 1, v, v3);
            self.add(l + 2, w, self.g(1, v3));
            self.missing.extend([(l + 2) % 3, l % 3, (l + 1) % 3]);
        } else if self.in_tree(v3, l + 2) {
            self.add(l, w, self.g(1, v3));
            self.add(l + 1, z, self.g(2, v3));
            self.add(l + 2, v, v3);
            self.missing.extend([(l + 1) % 3, (l + 2) % 3, l % 3]);
        } else {
            return Err(Self::broken("third split anchor lies in one tree only"));
        }
        Ok(())
    }

    fn delta_extension(&mut self, v0: Vertex, [v, w, z]: [Vertex; 3]) -> Result<(), C3Error> {
        let l = (0..3)
            .find(|&l| self.in_tree(v0, l))
            .ok_or_else(|| Self::broken("Δ anchor lies in no tree"))?;
        self.add(l, v, v0);
        self.add(l, v, w);
        self.add(l + 1, w, self.g(1, v0));
        self.add(l + 1, w, z);
        self.add(l + 2, z, self.g(2, v0));
        self.add(l + 2, z, v);
        self.missing.extend([(l + 1) % 3, (l + 2) % 3, l % 3]);
        Ok(())
    }
}

/// Grow a symmetric three-tree partition along a construction sequence,
/// starting from `T0 = {01}, T1 = {12}, T2 = {20}` on the triangle. The
/// partition is in the replayed labels; use [`TreePartition::relabeled`] to
/// move it onto the original graph.
pub fn build_tree_partition(seq: &ConstructionSequence) -> Result<TreePartition, C3Error> {
    let replay = replay_sequence(seq)?;
    let action = replay.graph.c3()?;
    let mut grower = Grower {
        action,
        tree_of_edge: BTreeMap::from([((0, 1), 0), ((1, 2), 1), ((0, 2), 2)]),
        // 0 misses T1, 1 misses T2, 2 misses T0.
        missing: vec![1, 2, 0],
    };
    for mv in &seq.moves {
        match *mv {
            Move::VertexAddition { base, new } => grower.vertex_addition(base, new)?,
            Move::EdgeSplit { base, new } => grower.edge_split(base, new)?,
            Move::DeltaExtension { base, new } => grower.delta_extension(base, new)?,
        }
    }
    let mut trees: [Vec<Edge>; 3] = Default::default();
    for (e, i) in grower.tree_of_edge {
        trees[i].push(e);
    }
    let tp = TreePartition::from_trees(trees);
    if !verify_tree_partition(&replay.graph, &tp).passed() {
        return Err(Grower::broken("result fails verification"));
    }
    Ok(tp)
}

impl TreePartition {
    /// Rename vertices through `labels` (replayed index to input label).
    pub fn relabeled(&self, labels: &[Vertex]) -> TreePartition {
        let map = |t: &[Edge]| t.iter().map(|&(u, v)| (labels[u], labels[v])).collect();
        TreePartition::from_trees([map(&self.t0), map(&self.t1), map(&self.t2)])
    }
}
