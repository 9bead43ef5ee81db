//! Seeded random graphs for tests, benchmarks and examples.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::c3::{apply_move, C3Error, Move};
use crate::graph::{edge, Edge, Graph, SymGraph, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly chosen symmetric move that applies to `sg`, with the result.
pub fn random_move<R: Rng>(sg: &SymGraph, rng: &mut R) -> Result<(Move, SymGraph), C3Error> {
    let n = sg.n();
    let new = [n, n + 1, n + 2];
    loop {
        let mv = match rng.random_range(0..3) {
            0 => {
                let v1 = rng.random_range(0..n);
                let v2 = rng.random_range(0..n);
                Move::VertexAddition { base: [v1, v2], new }
            }
            1 => {
                let &(a, b) = sg.graph().edges().choose(rng).expect("graph has edges");
                let (v1, v2) = if rng.random_bool(0.5) { (a, b) } else { (b, a) };
                let v3 = rng.random_range(0..n);
                Move::EdgeSplit { base: [v1, v2, v3], new }
            }
            _ => Move::DeltaExtension {
                base: rng.random_range(0..n),
                new,
            },
        };
        match apply_move(sg, &mv) {
            Ok(next) => return Ok((mv, next)),
            Err(C3Error::InvalidAnchor(_) | C3Error::DegenerateMove(_)) => continue,
            Err(e) => return Err(e),
        }
    }
}

/// A tight symmetric graph on `n` vertices (`n ≡ 0 mod 3`, `n ≥ 3`) built
/// from the triangle by random moves, plus the moves used.
pub fn random_tight_c3(n: usize, seed: u64) -> (SymGraph, Vec<Move>) {
    assert!(n >= 3 && n.is_multiple_of(3), "order must be a positive multiple of 3");
    let mut rng = rng(seed);
    let mut sg = SymGraph::triangle();
    let mut moves = Vec::new();
    while sg.n() < n {
        let (mv, next) = random_move(&sg, &mut rng).expect("moves on a valid graph");
        moves.push(mv);
        sg = next;
    }
    (sg, moves)
}

/// Replace one edge orbit by the orbit of a non-edge. The result keeps the
/// symmetry and the edge count but may lose sparsity.
pub fn edge_swap(sg: &SymGraph, seed: u64) -> SymGraph {
    let action = sg.c3().expect("symmetric graph");
    let mut rng = rng(seed);
    let g = sg.graph();
    let orbit_of = |(u, v): Edge| -> Vec<Edge> { (0..3).map(|k| edge(action.power(k, u), action.power(k, v))).collect() };
    for _ in 0..1000 {
        let &old = g.edges().choose(&mut rng).expect("graph has edges");
        let u = rng.random_range(0..g.n());
        let v = rng.random_range(0..g.n());
        if u == v || g.has_edge(u, v) {
            continue;
        }
        let removed = orbit_of(old);
        let added = orbit_of(edge(u, v));
        let base = g.without_edges(&removed);
        let mut uniq = added.clone();
        uniq.sort_unstable();
        uniq.dedup();
        if uniq.len() != 3 {
            continue;
        }
        if let Ok(next) = base.with_edges(&uniq) {
            if let Ok(out) = SymGraph::new(next, action.clone()) {
                return out;
            }
        }
    }
    sg.clone()
}

/// A random simple graph on `n` vertices with `m` edges.
pub fn random_graph<R: Rng>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut all: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = m.min(all.len());
    let (chosen, _) = all.partial_shuffle(rng, m);
    Graph::new(n, chosen.iter().copied()).expect("distinct pairs")
}

/// Random graph with a mix of sparse, tight-count and dense edge counts.
pub fn random_mixed_graph<R: Rng>(rng: &mut R, min_n: usize, max_n: usize) -> Graph {
    let n = rng.random_range(min_n..=max_n);
    let target = 2 * n - 3;
    let max_m = n * (n - 1) / 2;
    let m = match rng.random_range(0..4) {
        0 => rng.random_range(0..=max_m),
        1 | 2 => target,
        _ => rng.random_range(target.saturating_sub(2)..=(target + 2).min(max_m)),
    };
    random_graph(n, m.min(max_m), rng)
}
