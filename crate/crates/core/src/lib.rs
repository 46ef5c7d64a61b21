//! Exact linear dependence of finite families of noncommutative
//! polynomials.
//!
//! Three exact deciders ([`freealg::global_dependence`],
//! [`locdep::fock_certify`] and
//! [`specialpoly::razmyslov_symbolic_dependence`]) must always agree. The
//! randomized samplers in [`locdep`] evaluate a family at matrix tuples of
//! a chosen size and certify independence with an explicit witness, which
//! shows how large the matrices have to be before local dependence implies
//! global dependence.

pub mod cli;
pub mod error;
pub mod freealg;
pub mod linalg;
pub mod locdep;
pub mod matexact;
pub mod ncparse;
pub mod scalar;
pub mod specialpoly;
pub mod verdict;

pub use error::{Error, Result};
pub use freealg::{NcPoly, Word};
pub use scalar::{Field, Scalar};
