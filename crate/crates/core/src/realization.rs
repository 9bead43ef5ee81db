//! Symmetric placements, rigidity matrices, and the frame route from a tree
//! partition to an isostatic framework.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::c3::{verify_tree_partition, TreePartition};
use crate::field::{ratio, QSqrt3};
use crate::graph::{Graph, GraphError, SymGraph, Vertex};
use crate::matrix::{exact_rank, ExactMatrix};

pub type Point = [QSqrt3; 2];

/// Coordinate bound for random placements.
pub const COORD_BOUND: i64 = 10_000;
pub const MAX_REDRAWS: usize = 100;
pub const MAX_T_ATTEMPTS: usize = 50;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizationError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} is fixed by the rotation and would sit at the centre")]
    FixedVertexPresent(Vertex),
    #[error("no collision-free placement after {0} draws")]
    ExhaustedRetries(usize),
    #[error("placement does not span the plane")]
    DegenerateSpan,
    #[error("need at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("placement has {actual} points, graph has {expected} vertices")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("tree partition rejected: {0}")]
    InvalidPartition(String),
    #[error("edge {{{0}, {1}}} has a zero direction")]
    ZeroDirection(Vertex, Vertex),
    #[error("adjacent joints {0} and {1} coincide")]
    CoincidentAdjacentJoints(Vertex, Vertex),
    #[error("no separable component in a coincident cluster; the partition is not proper")]
    NoSeparableComponent,
    #[error("no parameter among the first {attempts} keeps the frame independent")]
    ExhaustedT { attempts: usize },
    #[error("the deformation parameter must be nonzero")]
    ZeroParameter,
    #[error("rigidity matrix has rank {rank}, expected {expected}")]
    NotIndependent { rank: usize, expected: usize },
}

pub fn point(x: QSqrt3, y: QSqrt3) -> Point {
    [x, y]
}

pub fn sub(p: &Point, q: &Point) -> Point {
    [&p[0] - &q[0], &p[1] - &q[1]]
}

pub fn add(p: &Point, q: &Point) -> Point {
    [&p[0] + &q[0], &p[1] + &q[1]]
}

pub fn scale(t: &QSqrt3, p: &Point) -> Point {
    [t * &p[0], t * &p[1]]
}

pub fn cross(p: &Point, q: &Point) -> QSqrt3 {
    &p[0] * &q[1] - &p[1] * &q[0]
}

fn is_zero_vec(p: &Point) -> bool {
    p[0].is_zero() && p[1].is_zero()
}

/// Rotation by `+2π/3` about the origin.
pub fn rot(p: &Point) -> Point {
    let half = QSqrt3::from_ratios(-1, 2, 0, 1);
    let s = QSqrt3::from_ratios(0, 1, 1, 2);
    [&half * &p[0] - &s * &p[1], &s * &p[0] + &half * &p[1]]
}

/// The three frame anchor points `e0 = (0,0)`, `e1 = (1,0)`, `e2 = (1/2, √3/2)`.
pub fn anchor_points() -> [Point; 3] {
    [
        [QSqrt3::from_int(0), QSqrt3::from_int(0)],
        [QSqrt3::from_int(1), QSqrt3::from_int(0)],
        [QSqrt3::from_ratios(1, 2, 0, 1), QSqrt3::from_ratios(0, 1, 1, 2)],
    ]
}

/// Direction assigned to edges of tree `i`: `e2-e1`, `e0-e2`, `e1-e0`.
pub fn tree_directions() -> [Point; 3] {
    let [e0, e1, e2] = anchor_points();
    [sub(&e2, &e1), sub(&e0, &e2), sub(&e1, &e0)]
}

/// Centroid of the anchor triangle; rotating about it cycles `e0 -> e1 -> e2`.
pub fn anchor_center() -> Point {
    [QSqrt3::from_ratios(1, 2, 0, 1), QSqrt3::from_ratios(0, 1, 1, 6)]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placement {
    pub positions: Vec<Point>,
}

impl Placement {
    pub fn n(&self) -> usize {
        self.positions.len()
    }

    /// `p(γv) = Rot·p(v)` for every vertex, checked exactly.
    pub fn is_symmetric(&self, sg: &SymGraph) -> bool {
        let Some(action) = sg.action() else {
            return false;
        };
        self.n() == sg.n() && (0..self.n()).all(|v| self.positions[action.apply(v)] == rot(&self.positions[v]))
    }

    /// No bar has coincident ends.
    pub fn is_framework(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| self.positions[u] != self.positions[v])
    }

    pub fn to_f64(&self) -> Vec<[f64; 2]> {
        self.positions.iter().map(|p| [p[0].to_f64(), p[1].to_f64()]).collect()
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> QSqrt3 {
    let num = rng.random_range(-COORD_BOUND..=COORD_BOUND);
    let den = rng.random_range(1..=COORD_BOUND);
    QSqrt3::rational(ratio(num, den))
}

/// Random rational coordinates for the smallest vertex of each orbit, the
/// rotated images for the rest.
pub fn symmetric_generic_positions(sg: &SymGraph, seed: u64) -> Result<Placement, RealizationError> {
    let action = sg.require_c3()?;
    if let Some(v) = (0..sg.n()).find(|&v| action.is_fixed(v)) {
        return Err(RealizationError::FixedVertexPresent(v));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = sg.n();
    for _ in 0..MAX_REDRAWS {
        let mut positions = vec![[QSqrt3::default(), QSqrt3::default()]; n];
        for v in 0..n {
            let orbit = action.orbit(v);
            if orbit.iter().min() != Some(&v) {
                continue;
            }
            let p = [random_rational(&mut rng), random_rational(&mut rng)];
            let p1 = rot(&p);
            let p2 = rot(&p1);
            positions[orbit[0]] = p;
            positions[orbit[1]] = p1;
            positions[orbit[2]] = p2;
        }
        let distinct: HashSet<&Point> = positions.iter().collect();
        if distinct.len() == n {
            return Ok(Placement { positions });
        }
    }
    Err(RealizationError::ExhaustedRetries(MAX_REDRAWS))
}

fn check_size(g: &Graph, n: usize) -> Result<(), RealizationError> {
    if g.n() != n {
        return Err(RealizationError::SizeMismatch {
            expected: g.n(),
            actual: n,
        });
    }
    Ok(())
}

/// One row per edge in sorted order: `p_u - p_v` under `u`, `p_v - p_u` under `v`.
pub fn rigidity_matrix(g: &Graph, p: &Placement) -> Result<ExactMatrix, RealizationError> {
    check_size(g, p.n())?;
    let mut m = ExactMatrix::zeros(g.m(), 2 * g.n());
    for (r, &(u, v)) in g.edges().iter().enumerate() {
        let d = sub(&p.positions[u], &p.positions[v]);
        m.set(r, 2 * u, d[0].clone());
        m.set(r, 2 * u + 1, d[1].clone());
        m.set(r, 2 * v, -&d[0]);
        m.set(r, 2 * v + 1, -&d[1]);
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericVerdict {
    pub isostatic: bool,
    pub independent: bool,
    pub rank: usize,
    pub edge_count: usize,
    pub target: usize,
    pub flex_dimension: usize,
}

/// Whether the points do not all lie on one line.
pub fn spans_plane(p: &Placement) -> bool {
    let Some(first) = p.positions.first() else {
        return false;
    };
    let Some(dir) = p.positions.iter().map(|q| sub(q, first)).find(|d| !is_zero_vec(d)) else {
        return false;
    };
    p.positions.iter().any(|q| !cross(&dir, &sub(q, first)).is_zero())
}

/// Rank verdict for the framework `(g, p)`.
pub fn numeric_isostatic_check(g: &Graph, p: &Placement) -> Result<NumericVerdict, RealizationError> {
    if g.n() < 3 {
        return Err(RealizationError::TooFewVertices(g.n()));
    }
    check_size(g, p.n())?;
    if !spans_plane(p) {
        return Err(RealizationError::DegenerateSpan);
    }
    let rank = exact_rank(&rigidity_matrix(g, p)?);
    let target = 2 * g.n() - 3;
    Ok(NumericVerdict {
        isostatic: g.m() == target && rank == target,
        independent: rank == g.m(),
        rank,
        edge_count: g.m(),
        target,
        flex_dimension: target - rank,
    })
}

/// Joint positions plus a direction per edge; `directions[i]` belongs to
/// `g.edges()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frame {
    pub positions: Vec<Point>,
    pub directions: Vec<Point>,
}

impl Frame {
    /// Each edge's joint difference is a multiple of its direction.
    pub fn is_consistent(&self, g: &Graph) -> bool {
        self.directions.len() == g.m()
            && g.edges().iter().zip(&self.directions).all(|(&(u, v), q)| {
                !is_zero_vec(q) && cross(&sub(&self.positions[u], &self.positions[v]), q).is_zero()
            })
    }

    /// Edges whose ends share a position.
    pub fn coincident_edges(&self, g: &Graph) -> Vec<(Vertex, Vertex)> {
        g.edges()
            .iter()
            .copied()
            .filter(|&(u, v)| self.positions[u] == self.positions[v])
            .collect()
    }

    /// `λ` per edge with `p_u - p_v = λ q`, or `None` if some edge breaks the
    /// frame condition.
    pub fn edge_scalars(&self, g: &Graph) -> Option<Vec<QSqrt3>> {
        g.edges()
            .iter()
            .zip(&self.directions)
            .map(|(&(u, v), q)| {
                let d = sub(&self.positions[u], &self.positions[v]);
                if !cross(&d, q).is_zero() {
                    return None;
                }
                let k = if q[0].is_zero() { 1 } else { 0 };
                Some(&d[k] / &q[k])
            })
            .collect()
    }
}

/// Joints missing tree `i` go to `e_i`; edges of tree `i` get direction `q_i`.
pub fn frame_from_partition(sg: &SymGraph, tp: &TreePartition) -> Result<Frame, RealizationError> {
    let check = verify_tree_partition(sg, tp);
    if !check.passed() {
        return Err(RealizationError::InvalidPartition(check.failures.join("; ")));
    }
    let anchors = anchor_points();
    let dirs = tree_directions();
    let missing = tp.missing_tree(sg.n());
    let positions = missing
        .iter()
        .map(|m| anchors[m.expect("verified partition")].clone())
        .collect();
    let directions = sg
        .graph()
        .edges()
        .iter()
        .map(|&(u, v)| dirs[tp.tree_of(u, v).expect("verified partition")].clone())
        .collect();
    Ok(Frame { positions, directions })
}

/// One row per edge `{u, v}`, `u < v`: `q` under `u`, `-q` under `v`.
pub fn generalized_rigidity_matrix(g: &Graph, f: &Frame) -> Result<ExactMatrix, RealizationError> {
    check_size(g, f.positions.len())?;
    let mut m = ExactMatrix::zeros(g.m(), 2 * g.n());
    for (r, (&(u, v), q)) in g.edges().iter().zip(&f.directions).enumerate() {
        if is_zero_vec(q) {
            return Err(RealizationError::ZeroDirection(u, v));
        }
        m.set(r, 2 * u, q[0].clone());
        m.set(r, 2 * u + 1, q[1].clone());
        m.set(r, 2 * v, -&q[0]);
        m.set(r, 2 * v + 1, -&q[1]);
    }
    Ok(m)
}

/// Record of one pull-apart round.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PullApartRound {
    /// The tree every moved joint of the first group is missing from.
    pub class: usize,
    pub component: Vec<Vertex>,
    /// Tree whose direction the component moved along.
    pub along_tree: usize,
    /// Accepted parameter, as `"1/p"`.
    pub t: String,
    pub attempts: usize,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PullApart {
    pub frame: Frame,
    pub rounds: Vec<PullApartRound>,
}

fn primes() -> impl Iterator<Item = i64> {
    (2i64..).filter(|&k| (2..).take_while(|d| d * d <= k).all(|d| k % d != 0))
}

/// Move `groups[k]` by `t·Rot^k(d)`, refreshing the directions of edges
/// that become non-coincident or stop being parallel.
pub fn deform(
    g: &Graph,
    f: &Frame,
    groups: [&[Vertex]; 3],
    d: &Point,
    t: &QSqrt3,
) -> Result<Frame, RealizationError> {
    if t.is_zero() {
        return Err(RealizationError::ZeroParameter);
    }
    let mut out = f.clone();
    let mut step = scale(t, d);
    let mut moved = vec![false; g.n()];
    for group in groups {
        for &v in group {
            out.positions[v] = add(&out.positions[v], &step);
            moved[v] = true;
        }
        step = rot(&step);
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if !(moved[u] || moved[v]) {
            continue;
        }
        let diff = sub(&out.positions[u], &out.positions[v]);
        if !is_zero_vec(&diff) && !cross(&diff, &out.directions[i]).is_zero() {
            out.directions[i] = diff;
        }
    }
    Ok(out)
}

/// Components of `cluster` under the edges of tree `k` inside it, each sorted,
/// ordered by smallest vertex.
fn components(cluster: &[Vertex], g: &Graph, tp: &TreePartition, k: usize) -> Vec<Vec<Vertex>> {
    let index: BTreeMap<Vertex, usize> = cluster.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut comp: Vec<usize> = (0..cluster.len()).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while c[r] != r {
            r = c[r];
        }
        let mut y = x;
        while c[y] != r {
            let next = c[y];
            c[y] = r;
            y = next;
        }
        r
    }
    for &(u, v) in g.edges() {
        if let (Some(&a), Some(&b)) = (index.get(&u), index.get(&v)) {
            if tp.tree_of(u, v) == Some(k) {
                let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
                comp[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    for (i, &v) in cluster.iter().enumerate() {
        let r = find(&mut comp, i);
        groups.entry(r).or_default().push(v);
    }
    groups.into_values().collect()
}

/// Separate one group of coincident adjacent joints, with its two rotated
/// copies. `None` once no bar has coincident ends.
pub fn pull_apart_round(
    sg: &SymGraph,
    tp: &TreePartition,
    f: &Frame,
) -> Result<Option<(Frame, PullApartRound)>, RealizationError> {
    let action = sg.require_c3()?;
    let g = sg.graph();
    let Some(&(start, _)) = f.coincident_edges(g).first() else {
        return Ok(None);
    };
    let missing = tp.missing_tree(sg.n());
    let class = missing[start].ok_or_else(|| RealizationError::InvalidPartition(format!("vertex {start}")))?;
    let here = &f.positions[start];
    let cluster: Vec<Vertex> = (0..sg.n()).filter(|&v| &f.positions[v] == here).collect();

    let mut chosen = None;
    for (by_tree, along_tree) in [((class + 2) % 3, (class + 1) % 3), ((class + 1) % 3, (class + 2) % 3)] {
        let found = components(&cluster, g, tp, by_tree).into_iter().find(|a| {
            a.iter().any(|&u| {
                g.neighbors(u)
                    .iter()
                    .any(|&w| &f.positions[w] == here && !a.contains(&w))
            })
        });
        if let Some(a) = found {
            chosen = Some((a, along_tree));
            break;
        }
    }
    let (component, along_tree) = chosen.ok_or(RealizationError::NoSeparableComponent)?;
    let group1: Vec<Vertex> = component.iter().map(|&v| action.apply(v)).collect();
    let group2: Vec<Vertex> = component.iter().map(|&v| action.apply2(v)).collect();
    let mut moved = vec![false; sg.n()];
    for &v in component.iter().chain(&group1).chain(&group2) {
        moved[v] = true;
    }
    let still: HashSet<&Point> = (0..sg.n()).filter(|&v| !moved[v]).map(|v| &f.positions[v]).collect();
    let d = tree_directions()[along_tree].clone();

    for (attempt, p) in primes().take(MAX_T_ATTEMPTS).enumerate() {
        let t = QSqrt3::rational(ratio(1, p));
        let next = deform(g, f, [&component, &group1, &group2], &d, &t)?;
        let landing = [component[0], group1[0], group2[0]].map(|v| &next.positions[v]);
        let clash = landing.iter().any(|q| still.contains(q))
            || landing[0] == landing[1]
            || landing[1] == landing[2]
            || landing[0] == landing[2];
        if clash {
            continue;
        }
        let rank = exact_rank(&generalized_rigidity_matrix(g, &next)?);
        if rank == g.m() {
            let round = PullApartRound {
                class,
                component,
                along_tree,
                t: format!("1/{p}"),
                attempts: attempt + 1,
                rank,
            };
            return Ok(Some((next, round)));
        }
    }
    Err(RealizationError::ExhaustedT {
        attempts: MAX_T_ATTEMPTS,
    })
}

/// Repeat [`pull_apart_round`] until every bar has distinct ends.
pub fn pull_apart(sg: &SymGraph, tp: &TreePartition, f: &Frame) -> Result<PullApart, RealizationError> {
    let mut frame = f.clone();
    let mut rounds = Vec::new();
    while let Some((next, round)) = pull_apart_round(sg, tp, &frame)? {
        frame = next;
        rounds.push(round);
    }
    Ok(PullApart { frame, rounds })
}

/// Drop the directions and move the rotation centre to the origin.
pub fn framework_from_frame(sg: &SymGraph, f: &Frame) -> Result<Placement, RealizationError> {
    let g = sg.graph();
    check_size(g, f.positions.len())?;
    if let Some(&(u, v)) = f.coincident_edges(g).first() {
        return Err(RealizationError::CoincidentAdjacentJoints(u, v));
    }
    let c = anchor_center();
    let placement = Placement {
        positions: f.positions.iter().map(|p| sub(p, &c)).collect(),
    };
    let rank = exact_rank(&rigidity_matrix(g, &placement)?);
    if rank != g.m() {
        return Err(RealizationError::NotIndependent {
            rank,
            expected: g.m(),
        });
    }
    Ok(placement)
}

/// Everything produced along the frame route.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameRealization {
    pub initial_frame: Frame,
    pub initial_rank: usize,
    pub rounds: Vec<PullApartRound>,
    pub placement: Placement,
    pub verdict: NumericVerdict,
}

/// Frame, pull-apart, framework, final rank check.
pub fn realize_from_partition(sg: &SymGraph, tp: &TreePartition) -> Result<FrameRealization, RealizationError> {
    let g = sg.graph();
    let initial_frame = frame_from_partition(sg, tp)?;
    let initial_rank = exact_rank(&generalized_rigidity_matrix(g, &initial_frame)?);
    if initial_rank != g.m() {
        return Err(RealizationError::NotIndependent {
            rank: initial_rank,
            expected: g.m(),
        });
    }
    let pulled = pull_apart(sg, tp, &initial_frame)?;
    let placement = framework_from_frame(sg, &pulled.frame)?;
    let verdict = numeric_isostatic_check(g, &placement)?;
    Ok(FrameRealization {
        initial_frame,
        initial_rank,
        rounds: pulled.rounds,
        placement,
        verdict,
    })
}

/// `num/den` as a field element; convenience for callers building points.
pub fn rational(num: i64, den: i64) -> QSqrt3 {
    QSqrt3::rational(ratio(num, den))
}
