//! Exact scalars (rationals and prime fields) and dense exact linear algebra.

mod field;
mod matrix;

pub use field::{int, is_prime, one, ScalarField};
pub use matrix::ExactMatrix;
