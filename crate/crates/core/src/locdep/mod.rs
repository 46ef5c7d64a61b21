//! Degree bounds, the randomized local and directional samplers, the Fock
//! space certificate and the combined decision procedure.

mod bounds;
mod decide;
mod fock;
pub mod json;
mod sampler;

pub use crate::verdict::{DependenceVerdict, Status, Witness};
pub use bounds::{compute_bounds, family_nvars, fock_dimension, BoundReport};
pub use decide::{decide_dependence, CrossCheck, DecideOptions, Decision, LocalDemo, DEFAULT_CAPELLI_TERM_CAP};
pub use fock::{
    fock_certify, fock_certify_capped, fock_shift_operators, fock_shift_operators_capped,
    FockOperators, DEFAULT_SIGMA_CAP,
};
pub use sampler::{
    directional_dependence_sample, local_dependence_sample, trial_tuple, verify_witness,
    SamplerConfig, DEFAULT_ENTRY_BOUND, DEFAULT_TRIALS,
};
