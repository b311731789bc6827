use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{self, ScalarField};
use crate::error::{Error, Result};

/// Modulus for the full-rank certificate over the rationals.
const CERTIFICATE_PRIME: u64 = (1 << 61) - 1;

/// Dense row-major matrix over a [`ScalarField`].
///
/// Entries are stored in canonical form for the field (see
/// [`ScalarField::normalize`]), so equality of matrices is equality of
/// their entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    field: ScalarField,
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn new(
        field: ScalarField,
        rows: usize,
        cols: usize,
        entries: Vec<BigRational>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        let entries = entries
            .iter()
            .map(|e| field.normalize(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from rows that are already canonical for `field`.
    pub(crate) fn from_canonical(
        field: ScalarField,
        rows: usize,
        cols: usize,
        entries: Vec<BigRational>,
    ) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        ExactMatrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(field: ScalarField, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field,
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(field: ScalarField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigRational::one();
        }
        m
    }

    /// All rows must have length `cols`; an empty row list gives a `0 x cols` matrix.
    pub fn from_rows(field: ScalarField, cols: usize, rows: &[Vec<BigRational>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Shape {
                    expected: cols,
                    got: r.len(),
                });
            }
            entries.extend(r.iter().cloned());
        }
        Self::new(field, rows.len(), cols, entries)
    }

    /// Builds a `dim x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(
        field: ScalarField,
        dim: usize,
        columns: &[Vec<BigRational>],
    ) -> Result<Self> {
        let t = Self::from_rows(field, dim, columns)?;
        Ok(t.transpose())
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Self::from_canonical(self.field, self.cols, self.rows, entries)
    }

    pub fn select_columns(&self, cols: &[usize]) -> Result<Self> {
        if cols.iter().any(|&c| c >= self.cols) {
            return Err(Error::ColumnOutOfRange);
        }
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &c in cols {
                entries.push(self.get(i, c).clone());
            }
        }
        Ok(Self::from_canonical(
            self.field,
            self.rows,
            cols.len(),
            entries,
        ))
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| self.field.dot(self.row(i), v))
            .collect()
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match self.field {
            ScalarField::Rational => bareiss_rank(self.integer_rows()),
            ScalarField::Prime(p) => modular_rank(self.residue_rows(), p),
        }
    }

    /// Rank of the submatrix formed by the chosen columns; 0 for the empty set.
    pub fn rank_of_column_subset(&self, cols: &[usize]) -> Result<usize> {
        Ok(self.select_columns(cols)?.rank())
    }

    /// True iff the rows are linearly independent.
    ///
    /// Over the rationals a full rank modulo a large prime already certifies
    /// full rank (reduction can only lower the rank), so the exact
    /// fraction-free elimination only runs when that certificate fails.
    pub fn has_full_row_rank(&self) -> bool {
        if self.rows > self.cols {
            return false;
        }
        if self.rows == 0 {
            return true;
        }
        match self.field {
            ScalarField::Prime(_) => self.rank() == self.rows,
            ScalarField::Rational => {
                let ints = self.integer_rows();
                let residues = ints
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|x| field::mod_bigint(x, CERTIFICATE_PRIME))
                            .collect()
                    })
                    .collect();
                if modular_rank(residues, CERTIFICATE_PRIME) == self.rows {
                    return true;
                }
                bareiss_rank(ints) == self.rows
            }
        }
    }

    /// Reduced row echelon form: the nonzero rows and their pivot columns.
    pub fn rref(&self) -> (Vec<Vec<BigRational>>, Vec<usize>) {
        match self.field {
            ScalarField::Rational => {
                let rows = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
                rational_rref(rows, self.cols)
            }
            ScalarField::Prime(p) => {
                let (rows, pivots) = modular_rref(self.residue_rows(), self.cols, p);
                let rows = rows
                    .into_iter()
                    .map(|r| r.into_iter().map(field::from_u64).collect())
                    .collect();
                (rows, pivots)
            }
        }
    }

    /// A basis of the right kernel, one vector per non-pivot column of the
    /// reduced row echelon form (the free coordinate set to 1).
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[free] = BigRational::one();
                for (row, &pc) in rref.iter().zip(&pivots) {
                    if !row[free].is_zero() {
                        v[pc] = self.field.neg(&row[free]);
                    }
                }
                v
            })
            .collect()
    }

    /// Rows scaled by the lcm of their denominators; rank-preserving.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
            })
            .collect()
    }

    fn residue_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(field::to_u64).collect())
            .collect()
    }
}

/// Fraction-free (Bareiss) elimination; every intermediate entry is a minor
/// of the input, so each division is exact.
fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = &prow[c] * &row[j] - &factor * &prow[j];
                row[j] = if prev.is_one() {
                    v
                } else {
                    debug_assert!((&v % &prev).is_zero());
                    v / &prev
                };
            }
        }
        prev = top[rank][c].clone();
        rank += 1;
    }
    rank
}

fn modular_rank(a: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = a.first().map_or(0, |r| r.len());
    modular_rref(a, cols, p).1.len()
}

fn modular_rref(mut a: Vec<Vec<u64>>, cols: usize, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pivot);
        let inv = field::inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = field::mul_mod(*x, inv, p);
        }
        let prow = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for j in c..cols {
                if prow[j] != 0 {
                    row[j] = field::sub_mod(row[j], field::mul_mod(factor, prow[j], p), p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

fn rational_rref(mut a: Vec<Vec<BigRational>>, cols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pivot);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let prow = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for j in c..cols {
                if !prow[j].is_zero() {
                    row[j] -= &factor * &prow[j];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}
