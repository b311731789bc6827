use num_rational::BigRational;
use serde::Serialize;

use super::{normalize_point, FatPoint, FatPointScheme};
use crate::error::{Error, Result};
use crate::exact::ExactMatrix;

/// Both sides of `r(Z + mP) = max{m - 1, r(Z), 1 + reg(R/(I_Z + I_P^m))}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CtvReport {
    pub multiplicity: u32,
    /// `r(Z + mP)`, computed directly.
    pub combined_regularity: usize,
    pub subscheme_regularity: usize,
    /// `reg(R/(I_Z + I_P^m))`: the last degree where the quotient is nonzero.
    pub quotient_regularity: usize,
    /// `dim_K [R/(I_Z + I_P^m)]_j` for `j = 0..=quotient_regularity + 1`.
    pub quotient_dimensions: Vec<usize>,
    pub right_hand_side: usize,
    pub holds: bool,
}

/// Evaluates both sides of the decomposition identity for `Z + mP`.
///
/// The quotient dimension in degree `j` is computed from an explicit basis
/// of `[I_P^m]_j`: `dim([I_Z]_j + [I_P^m]_j) = dim [I_Z]_j + rank(C_Z · K_P)`
/// where `C_Z` is the conditions matrix of `Z` and `K_P` spans `[I_P^m]_j`.
pub fn ctv_decomposition_check(z: &FatPointScheme, p: &[BigRational], m: u32) -> Result<CtvReport> {
    if m == 0 {
        return Err(Error::InvalidParameters(
            "multiplicity must be positive".into(),
        ));
    }
    if p.len() != z.ambient_dim() + 1 {
        return Err(Error::InvalidProjectivePoint);
    }
    let coords = normalize_point(z.field(), p)?;
    if z.position_of(&coords).is_some() {
        return Err(Error::PointInSupport);
    }
    let combined = z.with_point(coords.clone(), m)?;
    let fat_p = FatPointScheme::new(z.field(), z.ambient_dim(), vec![FatPoint::new(coords, m)])?;

    let combined_regularity = combined.regularity_index()?;
    let subscheme_regularity = z.regularity_index()?;

    // the quotient has finite length; once a degree vanishes all higher ones do
    let cutoff = combined.degree();
    let mut quotient_dimensions = Vec::new();
    let mut quotient_regularity = None;
    for j in 0..=cutoff {
        let dim = quotient_dimension(z, &fat_p, j)?;
        quotient_dimensions.push(dim);
        if dim == 0 {
            break;
        }
        quotient_regularity = Some(j);
    }
    if quotient_dimensions.last() != Some(&0) {
        return Err(Error::Internal(
            "quotient R/(I_Z + I_P^m) did not vanish by degree deg(Z + mP)".into(),
        ));
    }
    let quotient_regularity = quotient_regularity.ok_or_else(|| {
        Error::Internal("quotient vanishes in degree 0, impossible for a proper ideal".into())
    })?;

    let right_hand_side = (m as usize - 1)
        .max(subscheme_regularity)
        .max(1 + quotient_regularity);
    Ok(CtvReport {
        multiplicity: m,
        combined_regularity,
        subscheme_regularity,
        quotient_regularity,
        quotient_dimensions,
        right_hand_side,
        holds: combined_regularity == right_hand_side,
    })
}

/// `dim_K [R/(I_Z + I_P^m)]_j`.
fn quotient_dimension(z: &FatPointScheme, fat_p: &FatPointScheme, j: usize) -> Result<usize> {
    let cz = z.conditions_matrix(j)?;
    let ideal_p = fat_p.conditions_matrix(j)?.kernel_basis();
    let n_monomials = cz.cols();
    let dim_iz = n_monomials - cz.rank();
    let images: Vec<Vec<BigRational>> = ideal_p.iter().map(|v| cz.mul_vec(v)).collect();
    let restricted = if images.is_empty() {
        0
    } else {
        ExactMatrix::from_columns(z.field(), cz.rows(), &images)?.rank()
    };
    let sum = dim_iz + restricted;
    Ok(n_monomials - sum)
}
