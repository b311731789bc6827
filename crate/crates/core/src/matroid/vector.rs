use num_rational::BigRational;

use super::{GroundSet, RankOracle};
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ScalarField};
use crate::fatpoints::FatPointScheme;

/// The matroid on the columns of a matrix.
#[derive(Debug, Clone)]
pub struct VectorMatroid {
    matrix: ExactMatrix,
    ground: GroundSet,
}

impl VectorMatroid {
    pub fn new(matrix: ExactMatrix) -> Self {
        let ground = GroundSet::new(matrix.cols());
        VectorMatroid { matrix, ground }
    }

    pub fn with_labels(matrix: ExactMatrix, labels: Vec<String>) -> Result<Self> {
        if labels.len() != matrix.cols() {
            return Err(Error::Shape {
                expected: matrix.cols(),
                got: labels.len(),
            });
        }
        Ok(VectorMatroid {
            matrix,
            ground: GroundSet::labelled(labels),
        })
    }

    /// Ground elements are the given vectors, in order. All vectors must
    /// share one length; an empty list gives the empty matroid in dimension 0.
    pub fn from_columns(field: ScalarField, columns: &[Vec<BigRational>]) -> Result<Self> {
        let dim = columns.first().map_or(0, |c| c.len());
        Ok(Self::new(ExactMatrix::from_columns(field, dim, columns)?))
    }

    pub fn field(&self) -> ScalarField {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn vector(&self, e: usize) -> Vec<BigRational> {
        self.matrix.column(e)
    }
}

impl RankOracle for VectorMatroid {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn rank(&self, set: &[usize]) -> usize {
        self.matrix
            .rank_of_column_subset(set)
            .expect("subset of the ground set")
    }
}

/// Every subset independent.
#[derive(Debug, Clone)]
pub struct FreeMatroid {
    ground: GroundSet,
}

impl FreeMatroid {
    pub fn new(n: usize) -> Self {
        FreeMatroid {
            ground: GroundSet::new(n),
        }
    }
}

impl RankOracle for FreeMatroid {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn rank(&self, set: &[usize]) -> usize {
        set.len()
    }
}

/// The matroid of a fat point scheme: `m_i` identical columns for each
/// point `P_i`, so `|E_X| = Σ m_i`. Elements are ordered point by point.
pub fn fat_point_vector_matroid(x: &FatPointScheme) -> Result<VectorMatroid> {
    let mut columns = Vec::new();
    let mut labels = Vec::new();
    for (i, p) in x.points().iter().enumerate() {
        if p.coords.iter().all(num_traits::Zero::is_zero) {
            return Err(Error::InvalidProjectivePoint);
        }
        for copy in 0..p.mult {
            columns.push(p.coords.clone());
            labels.push(format!("P{i}#{copy}"));
        }
    }
    let matrix = ExactMatrix::from_columns(x.field(), x.ambient_dim() + 1, &columns)?;
    VectorMatroid::with_labels(matrix, labels)
}
