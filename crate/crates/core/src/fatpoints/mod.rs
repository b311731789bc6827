//! Fat point schemes `X = Σ m_i P_i` and their exact invariants.

mod conditions;
mod ctv;
mod veronese;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ScalarField};
use crate::matroid::VectorMatroid;
use crate::monomial::binomial;

pub use conditions::HilbertProfile;
pub use ctv::{ctv_decomposition_check, CtvReport};
pub use veronese::{veronese_inequality_check, ClosedFormCheck, VeroneseReport};

/// A point of projective space with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatPoint {
    pub coords: Vec<BigRational>,
    pub mult: u32,
}

impl FatPoint {
    pub fn new(coords: Vec<BigRational>, mult: u32) -> Self {
        FatPoint { coords, mult }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatPointScheme {
    field: ScalarField,
    ambient_dim: usize,
    points: Vec<FatPoint>,
}

impl FatPointScheme {
    /// Validates and normalizes the points: every coordinate vector has
    /// length `n + 1` and is nonzero, no two are proportional, and every
    /// multiplicity is positive.
    pub fn new(field: ScalarField, ambient_dim: usize, points: Vec<FatPoint>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::InvalidScheme(
                "ambient dimension must be at least 1".into(),
            ));
        }
        if points.is_empty() {
            return Err(Error::InvalidScheme(
                "a scheme needs at least one point".into(),
            ));
        }
        let mut normalized = Vec::with_capacity(points.len());
        for p in points {
            if p.coords.len() != ambient_dim + 1 {
                return Err(Error::InvalidScheme(format!(
                    "point has {} coordinates, expected {}",
                    p.coords.len(),
                    ambient_dim + 1
                )));
            }
            if p.mult == 0 {
                return Err(Error::InvalidScheme(
                    "multiplicities must be positive".into(),
                ));
            }
            let coords = normalize_point(field, &p.coords)?;
            normalized.push(FatPoint::new(coords, p.mult));
        }
        for i in 0..normalized.len() {
            for j in 0..i {
                if same_projective_point(field, &normalized[i].coords, &normalized[j].coords) {
                    return Err(Error::DuplicatePoint(j, i));
                }
            }
        }
        Ok(FatPointScheme {
            field,
            ambient_dim,
            points: normalized,
        })
    }

    /// Convenience constructor over the rationals from integer coordinates.
    pub fn from_integers(ambient_dim: usize, points: &[(&[i64], u32)]) -> Result<Self> {
        let points = points
            .iter()
            .map(|(c, m)| FatPoint::new(c.iter().map(|&v| crate::exact::int(v)).collect(), *m))
            .collect();
        Self::new(ScalarField::Rational, ambient_dim, points)
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn points(&self) -> &[FatPoint] {
        &self.points
    }

    pub fn support_size(&self) -> usize {
        self.points.len()
    }

    pub fn multiplicities(&self) -> Vec<u32> {
        self.points.iter().map(|p| p.mult).collect()
    }

    /// `Σ m_i`, the size of the ground set of the scheme's matroid.
    pub fn total_multiplicity(&self) -> usize {
        self.points.iter().map(|p| p.mult as usize).sum()
    }

    /// `deg X = Σ C(n + m_i - 1, n)`.
    pub fn degree(&self) -> usize {
        self.points
            .iter()
            .map(|p| point_degree(self.ambient_dim, p.mult))
            .sum()
    }

    /// Index of the support point equal to `coords` as a projective point.
    pub fn position_of(&self, coords: &[BigRational]) -> Option<usize> {
        let coords = normalize_point(self.field, coords).ok()?;
        self.points
            .iter()
            .position(|p| same_projective_point(self.field, &p.coords, &coords))
    }

    /// `X + m P` for a point outside the support.
    pub fn with_point(&self, coords: Vec<BigRational>, mult: u32) -> Result<Self> {
        if self.position_of(&coords).is_some() {
            return Err(Error::PointInSupport);
        }
        let mut points = self.points.clone();
        points.push(FatPoint::new(coords, mult));
        Self::new(self.field, self.ambient_dim, points)
    }

    /// The subscheme with multiplicities lowered to `new_mults`; points with
    /// multiplicity 0 are dropped.
    pub fn subscheme(&self, new_mults: &[u32]) -> Result<Self> {
        if new_mults.len() != self.points.len() {
            return Err(Error::InvalidParameters(format!(
                "expected {} multiplicities, got {}",
                self.points.len(),
                new_mults.len()
            )));
        }
        let mut points = Vec::new();
        for (i, (p, &m)) in self.points.iter().zip(new_mults).enumerate() {
            if m > p.mult {
                return Err(Error::MultiplicityExceeded {
                    index: i,
                    requested: m,
                    original: p.mult,
                });
            }
            if m > 0 {
                points.push(FatPoint::new(p.coords.clone(), m));
            }
        }
        if points.is_empty() {
            return Err(Error::InvalidParameters(
                "subscheme must keep at least one point".into(),
            ));
        }
        Ok(FatPointScheme {
            field: self.field,
            ambient_dim: self.ambient_dim,
            points,
        })
    }

    /// The reduced scheme on the support points with the given indices.
    pub fn reduced_on(&self, indices: &[usize]) -> Result<Self> {
        let mut mults = vec![0; self.points.len()];
        for &i in indices {
            *mults.get_mut(i).ok_or(Error::ElementOutOfRange)? = 1;
        }
        self.subscheme(&mults)
    }

    /// One column per support point; the matroid used for spans of points.
    pub fn support_matroid(&self) -> VectorMatroid {
        let columns: Vec<_> = self.points.iter().map(|p| p.coords.clone()).collect();
        let matrix = ExactMatrix::from_columns(self.field, self.ambient_dim + 1, &columns)
            .expect("points were validated");
        let labels = (0..self.points.len()).map(|i| format!("P{i}")).collect();
        VectorMatroid::with_labels(matrix, labels).expect("one label per point")
    }

    /// Projective dimension of the span of the chosen support points.
    pub fn span_dimension(&self, indices: &[usize]) -> Option<usize> {
        use crate::matroid::RankOracle;
        self.support_matroid().rank(indices).checked_sub(1)
    }
}

/// Degree of an `m`-fold point in `P^n`.
pub fn point_degree(n: usize, m: u32) -> usize {
    binomial(n + m as usize - 1, n)
}

pub(crate) fn normalize_point(
    field: ScalarField,
    coords: &[BigRational],
) -> Result<Vec<BigRational>> {
    let coords = coords
        .iter()
        .map(|c| field.normalize(c))
        .collect::<Result<Vec<_>>>()?;
    if coords.iter().all(Zero::is_zero) {
        return Err(Error::InvalidProjectivePoint);
    }
    Ok(coords)
}

/// Proportionality test: all 2x2 minors vanish.
pub(crate) fn same_projective_point(
    field: ScalarField,
    a: &[BigRational],
    b: &[BigRational],
) -> bool {
    a.len() == b.len()
        && (0..a.len())
            .all(|i| (i + 1..a.len()).all(|j| field.mul(&a[i], &b[j]) == field.mul(&a[j], &b[i])))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchemeSummary {
    pub ambient_dim: usize,
    pub support_size: usize,
    pub multiplicities: Vec<u32>,
    pub degree: usize,
}

impl From<&FatPointScheme> for SchemeSummary {
    fn from(x: &FatPointScheme) -> Self {
        SchemeSummary {
            ambient_dim: x.ambient_dim,
            support_size: x.support_size(),
            multiplicities: x.multiplicities(),
            degree: x.degree(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn validation() {
        assert_eq!(
            FatPointScheme::from_integers(2, &[(&[0, 0, 0], 1)]),
            Err(Error::InvalidProjectivePoint)
        );
        assert_eq!(
            FatPointScheme::from_integers(2, &[(&[1, 2, 3], 1), (&[2, 4, 6], 2)]),
            Err(Error::DuplicatePoint(0, 1))
        );
        assert!(FatPointScheme::from_integers(2, &[(&[1, 2], 1)]).is_err());
        assert!(FatPointScheme::from_integers(2, &[(&[1, 2, 3], 0)]).is_err());
    }

    #[test]
    fn degree_counts_derivative_conditions() {
        let x = FatPointScheme::from_integers(2, &[(&[1, 0, 0], 2), (&[0, 1, 0], 3)]).unwrap();
        assert_eq!(x.degree(), 3 + 6);
        assert_eq!(x.total_multiplicity(), 5);
    }

    #[test]
    fn subschemes() {
        let x = FatPointScheme::from_integers(2, &[(&[1, 0, 0], 3), (&[0, 1, 0], 2)]).unwrap();
        assert_eq!(x.subscheme(&[3, 2]).unwrap(), x);
        let single = x.subscheme(&[0, 2]).unwrap();
        assert_eq!(single.support_size(), 1);
        assert_eq!(single.points()[0].mult, 2);
        assert_eq!(
            x.subscheme(&[4, 2]),
            Err(Error::MultiplicityExceeded {
                index: 0,
                requested: 4,
                original: 3
            })
        );
        assert!(x.subscheme(&[0, 0]).is_err());
    }

    #[test]
    fn adding_a_point() {
        let z = FatPointScheme::from_integers(1, &[(&[1, 0], 1)]).unwrap();
        assert_eq!(
            z.with_point(vec![int(3), int(0)], 1),
            Err(Error::PointInSupport)
        );
        assert_eq!(z.with_point(vec![int(0), int(1)], 2).unwrap().degree(), 3);
    }

    #[test]
    fn prime_field_points_are_reduced() {
        let f = ScalarField::prime(7).unwrap();
        let x = FatPointScheme::new(f, 1, vec![FatPoint::new(vec![int(8), int(-1)], 1)]).unwrap();
        assert_eq!(x.points()[0].coords, vec![int(1), int(6)]);
        assert!(FatPointScheme::new(f, 1, vec![FatPoint::new(vec![int(7), int(14)], 1)]).is_err());
    }
}
