use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::FatPointScheme;
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ScalarField};
use crate::monomial::{monomials, monomials_below};

/// `h_X(d)` for `0 <= d <= r(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertProfile {
    pub values: Vec<usize>,
    pub degree: usize,
    pub reg_index: usize,
}

impl FatPointScheme {
    /// Rows are the functionals `f ↦ ∂^α f(P_i)` for `|α| < m_i`, taken in
    /// the affine chart of the first nonzero coordinate of `P_i`; columns are
    /// the degree-`d` monomials in deglex order. `[I_X]_d` is the kernel and
    /// `h_X(d)` the rank.
    pub fn conditions_matrix(&self, d: usize) -> Result<ExactMatrix> {
        let field = self.field();
        if let ScalarField::Prime(p) = field {
            if p as u128 <= d as u128 {
                return Err(Error::PrimeTooSmall {
                    prime: p,
                    degree: d,
                });
            }
        }
        let n = self.ambient_dim();
        let columns = monomials(n + 1, d);
        let mut entries = Vec::with_capacity(self.degree() * columns.len());
        let mut rows = 0;
        for point in self.points() {
            let chart = point
                .coords
                .iter()
                .position(|c| !c.is_zero())
                .expect("points are nonzero");
            let scale = field.inv(&point.coords[chart]);
            // affine coordinates and their powers up to d, chart variable omitted
            let local: Vec<usize> = (0..=n).filter(|&j| j != chart).collect();
            let powers: Vec<Vec<BigRational>> = local
                .iter()
                .map(|&j| {
                    let a = field.mul(&point.coords[j], &scale);
                    let mut pw = Vec::with_capacity(d + 1);
                    pw.push(BigRational::one());
                    for e in 1..=d {
                        let next = field.mul(&pw[e - 1], &a);
                        pw.push(next);
                    }
                    pw
                })
                .collect();
            for alpha in monomials_below(n, point.mult as usize) {
                for beta in &columns {
                    let mut value = BigRational::one();
                    for (t, &j) in local.iter().enumerate() {
                        let (b, a) = (beta[j], alpha[t]);
                        if a > b {
                            value = BigRational::zero();
                            break;
                        }
                        if a > 0 {
                            value = field.mul(&value, &falling_factorial(field, b, a));
                        }
                        value = field.mul(&value, &powers[t][(b - a) as usize]);
                        if value.is_zero() {
                            break;
                        }
                    }
                    entries.push(value);
                }
                rows += 1;
            }
        }
        debug_assert_eq!(rows, self.degree());
        Ok(ExactMatrix::from_canonical(
            field,
            rows,
            columns.len(),
            entries,
        ))
    }

    /// `h_X(d) = dim_K [R/I_X]_d`.
    pub fn hilbert_function(&self, d: usize) -> Result<usize> {
        Ok(self.conditions_matrix(d)?.rank())
    }

    /// True iff `X` imposes independent conditions on forms of degree `d`.
    pub fn imposes_independent_conditions(&self, d: usize) -> Result<bool> {
        Ok(self.conditions_matrix(d)?.has_full_row_rank())
    }

    /// `r(X) = min { d | h_X(d) = deg X }`, by ascending search.
    ///
    /// A zero-dimensional scheme of degree `δ` imposes independent
    /// conditions in degree `δ - 1`; reaching that degree without success is
    /// reported as an internal error.
    pub fn regularity_index(&self) -> Result<usize> {
        let cutoff = self.degree().saturating_sub(1);
        for d in 0..=cutoff {
            if self.imposes_independent_conditions(d)? {
                return Ok(d);
            }
        }
        Err(Error::Internal(format!(
            "regularity search did not terminate by degree {cutoff}"
        )))
    }

    pub fn hilbert_profile(&self) -> Result<HilbertProfile> {
        let reg_index = self.regularity_index()?;
        let values = (0..=reg_index)
            .map(|d| self.hilbert_function(d))
            .collect::<Result<Vec<_>>>()?;
        Ok(HilbertProfile {
            values,
            degree: self.degree(),
            reg_index,
        })
    }
}

/// `b (b-1) ... (b-a+1)`.
fn falling_factorial(field: ScalarField, b: u32, a: u32) -> BigRational {
    ((b - a + 1)..=b).fold(BigRational::one(), |acc, k| {
        field.mul(&acc, &field.from_i64(k as i64))
    })
}
