//! Laman counts: the (2,3) pebble game and a subset-enumeration oracle.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, Vertex};

/// Largest vertex count [`brute_force_laman`] will enumerate.
pub const BRUTE_FORCE_LIMIT: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SparsityError {
    #[error("need at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("brute force is limited to {BRUTE_FORCE_LIMIT} vertices, got {0}")]
    TooLarge(usize),
}

/// Outcome of the pebble game on a whole graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparsityReport {
    /// Every subgraph on `k >= 2` vertices has at most `2k - 3` edges.
    pub is_sparse: bool,
    /// Sparse, and `m = 2n - 3`.
    pub is_tight: bool,
    /// Vertex set of a violating subgraph, present iff not sparse.
    pub witness: Option<Vec<Vertex>>,
    pub edge_count: usize,
    pub target: i64,
}

/// Pebble digraph. Each vertex holds two slots; a slot is either a free
/// pebble or an accepted edge oriented out of the vertex.
struct PebbleGame {
    out: Vec<Vec<Vertex>>,
    stamp: Vec<u32>,
    round: u32,
    parent: Vec<Vertex>,
    stack: Vec<Vertex>,
}

impl PebbleGame {
    fn new(n: usize) -> Self {
        Self {
            out: vec![Vec::with_capacity(2); n],
            stamp: vec![0; n],
            round: 0,
            parent: vec![usize::MAX; n],
            stack: Vec::new(),
        }
    }

    #[inline]
    fn pebbles(&self, v: Vertex) -> usize {
        2 - self.out[v].len()
    }

    /// Move one pebble to `root` along a reversed path, never entering the
    /// `blocked` vertices. Returns false when none is reachable.
    fn collect(&mut self, root: Vertex, blocked: &[Vertex]) -> bool {
        self.round += 1;
        let round = self.round;
        for &b in blocked {
            self.stamp[b] = round;
        }
        self.stamp[root] = round;
        self.stack.clear();
        self.stack.push(root);
        while let Some(x) = self.stack.pop() {
            for i in 0..self.out[x].len() {
                let y = self.out[x][i];
                if self.stamp[y] == round {
                    continue;
                }
                self.stamp[y] = round;
                self.parent[y] = x;
                if self.pebbles(y) > 0 {
                    self.reverse_path(root, y);
                    return true;
                }
                self.stack.push(y);
            }
        }
        false
    }

    /// Reverse the tree path root -> ... -> found, spending `found`'s pebble.
    fn reverse_path(&mut self, root: Vertex, found: Vertex) {
        let mut y = found;
        while y != root {
            let x = self.parent[y];
            let slot = self.out[x]
                .iter()
                .position(|&h| h == y)
                .expect("path edge present");
            self.out[x].swap_remove(slot);
            self.out[y].push(x);
            y = x;
        }
    }

    /// Try to insert `{u, v}`; accepted iff four pebbles can be gathered on
    /// its endpoints.
    fn try_insert(&mut self, u: Vertex, v: Vertex) -> bool {
        while self.pebbles(u) < 2 && self.collect(u, &[v]) {}
        while self.pebbles(v) < 2 && self.collect(v, &[u]) {}
        if self.pebbles(u) + self.pebbles(v) < 4 {
            return false;
        }
        self.out[u].push(v);
        true
    }

    /// Vertices reachable from `u` or `v` in the pebble digraph.
    fn reach(&mut self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        self.round += 1;
        let round = self.round;
        let mut seen = vec![u, v];
        self.stamp[u] = round;
        self.stamp[v] = round;
        let mut i = 0;
        while i < seen.len() {
            let x = seen[i];
            for &y in &self.out[x] {
                if self.stamp[y] != round {
                    self.stamp[y] = round;
                    seen.push(y);
                }
            }
            i += 1;
        }
        seen.sort_unstable();
        seen
    }
}

/// Run the (2,3) pebble game, inserting edges in lexicographic order. The
/// first rejected edge yields a witness: the vertices reachable from its
/// endpoints, which span at least `2k - 2` edges.
pub fn pebble_sparsity(g: &Graph) -> Result<SparsityReport, SparsityError> {
    let n = g.n();
    if n < 2 {
        return Err(SparsityError::TooFewVertices(n));
    }
    let target = 2 * n as i64 - 3;
    let mut game = PebbleGame::new(n);
    let mut witness = None;
    for &(u, v) in g.edges() {
        if !game.try_insert(u, v) {
            witness = Some(game.reach(u, v));
            break;
        }
    }
    let is_sparse = witness.is_none();
    Ok(SparsityReport {
        is_sparse,
        is_tight: is_sparse && g.m() as i64 == target,
        witness,
        edge_count: g.m(),
        target,
    })
}

/// Laman's conditions, decided by the pebble game.
pub fn laman_check(g: &Graph) -> Result<bool, SparsityError> {
    Ok(pebble_sparsity(g)?.is_tight)
}

/// Whether `g + extra` is (2,3)-tight. An `extra` edge already present
/// counts as a failure.
pub fn laman_check_with(g: &Graph, extra: &[Edge]) -> Result<bool, SparsityError> {
    match g.with_edges(extra) {
        Ok(h) => laman_check(&h),
        Err(_) => Ok(false),
    }
}

/// Laman's conditions checked literally over every vertex subset.
pub fn brute_force_laman(g: &Graph) -> Result<bool, SparsityError> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(SparsityError::TooLarge(n));
    }
    if n < 2 {
        return Err(SparsityError::TooFewVertices(n));
    }
    if g.m() as i64 != 2 * n as i64 - 3 {
        return Ok(false);
    }
    let masks: Vec<u32> = g
        .edges()
        .iter()
        .map(|&(u, v)| (1u32 << u) | (1u32 << v))
        .collect();
    for subset in 0u32..(1 << n) {
        let k = subset.count_ones() as i64;
        if k < 2 {
            continue;
        }
        let inside = masks.iter().filter(|&&m| m & subset == m).count() as i64;
        if inside > 2 * k - 3 {
            return Ok(false);
        }
    }
    Ok(true)
}
