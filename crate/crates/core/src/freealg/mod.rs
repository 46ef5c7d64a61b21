//! The free associative algebra `F<X1, X2, ...>`.

mod dependence;
mod poly;
mod word;

pub use dependence::{coefficient_matrix, global_dependence, CoefficientMatrix};
pub use poly::{poly_add, poly_mul, poly_substitute, Degree, NcPoly};
pub use word::{Letter, Word};
