//! Exact matrix algebra over the configured field: dense matrices and
//! tuples, fraction-free rank, polynomial evaluation, the subset-DP
//! alternating evaluator and the operator rank lemmas.

mod alternating;
mod eval;
pub mod json;
mod lemmas;
mod matrix;
pub mod symbolic;

pub use alternating::{eval_alternating, AlternatingKind, MAX_ALTERNATING_ARITY};
pub use eval::{apply_family, apply_poly, evaluate_family, evaluate_poly, Evaluator, OperatorTuple};
pub use lemmas::{
    capelli_rank_bound, capelli_rank_bound_check, local_independence_witness,
    power_dependence_check, verify_local_dependence_exact, CapelliRankReport, PowerDependence,
};
pub use matrix::{derive_seed, mat_rank, random_matrix_tuple, random_vector, MatTuple, MatrixExact};
