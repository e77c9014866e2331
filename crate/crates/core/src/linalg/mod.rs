//! Exact dense linear algebra: a word-size prime field for the randomized
//! oracle and fraction-free integer elimination for user-supplied data.

mod field;
mod integer;
mod matrix;

pub use field::{PrimeField, DEFAULT_PRIME};
pub use integer::IntMatrix;
pub use matrix::DenseMatrix;
