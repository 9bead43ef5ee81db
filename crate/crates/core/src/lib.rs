//! Combinatorial and exact-geometric certificates for planar bar-and-joint
//! frameworks with 3-fold rotational symmetry.
//!
//! A graph with an order-3 automorphism `γ` is generically isostatic among
//! rotationally symmetric realizations exactly when it satisfies Laman's
//! counts and `γ` fixes no vertex. This crate decides that condition and
//! backs every positive answer with three independently checkable
//! certificates:
//!
//! * a construction sequence of symmetric Henneberg-type moves from the
//!   triangle ([`c3::extract_sequence`]),
//! * a symmetric partition of the edges into three trees
//!   ([`c3::build_tree_partition`]),
//! * an exact rank computation over `Q(√3)` of the rigidity matrix at a
//!   symmetric realization ([`realization`]).

pub mod c3;
pub mod cli;
pub mod corpus;
pub mod field;
pub mod graph;
pub mod matrix;
pub mod realization;
pub mod sparsity;
pub mod svg;

pub use c3::{check_c3_isostatic, C3Error, C3Verdict, ConstructionSequence, Move, TreePartition};
pub use field::QSqrt3;
pub use graph::{parse_graph, C3Action, FixedCounts, Graph, GraphError, SymGraph};
pub use matrix::{exact_rank, ExactMatrix};
pub use sparsity::{brute_force_laman, laman_check, pebble_sparsity, SparsityReport};
pub use realization::{
    numeric_isostatic_check, rigidity_matrix, symmetric_generic_positions, Frame, Placement, RealizationError,
};
