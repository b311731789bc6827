//! Exact computations for fat point schemes in projective space: Hilbert
//! functions and the regularity index, the Segre bound and its variants,
//! and the matroid partition machinery that certifies the bound.
//!
//! All arithmetic is exact, over the rationals or a prime field.

pub mod construct;
pub mod error;
pub mod exact;
pub mod fatpoints;
pub mod generate;
pub mod lab;
pub mod matroid;
pub mod monomial;
pub mod par;
pub mod partition;
pub mod segre;

pub use error::{Error, Result};
pub use exact::{ExactMatrix, ScalarField};
pub use fatpoints::{FatPoint, FatPointScheme};
pub use matroid::{GroundSet, RankOracle};
