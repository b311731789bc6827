//! The Segre bound `seg X`, its Veronese modification, and the certificates
//! that bound the regularity index from above.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ScalarField};
use crate::fatpoints::{FatPoint, FatPointScheme, SchemeSummary};
use crate::matroid::{
    elements_of, fat_point_vector_matroid, flats_spanned_by_subsets, masks_of_size, RankOracle,
    RankTable, VectorMatroid,
};
use crate::monomial::{monomial_index, monomials};
use crate::partition::{edmonds_partition, PartitionOutcome};

/// Largest support for the flat enumeration behind `seg X`.
pub const SEGRE_GUARD: usize = 20;
/// Largest `Σ m_i` for the exhaustive cardinality estimate.
pub const CARDINALITY_GUARD: usize = 14;
/// Largest support for the subset enumeration of the modified bound.
pub const MODIFIED_GUARD: usize = 16;
/// Largest ground set `Σ m_i + B` for the separating-hypersurface partition.
pub const SEPARATING_GUARD: usize = 48;

/// A linear subspace `L` spanned by support points, with its contribution
/// `⌈(w_L - 1) / dim L⌉` to the Segre bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegreWitness {
    /// Indices of the support points lying in `L`.
    pub flat: Vec<usize>,
    pub span_dim: usize,
    pub weight: usize,
    pub value: usize,
}

/// `⌈(w - 1) / k⌉`, checked against the floor form `⌊(w + k - 2) / k⌋`.
pub fn segre_ratio(weight: usize, span_dim: usize) -> usize {
    assert!(
        span_dim >= 1 && weight >= 1,
        "ratio needs w >= 1 and dim L >= 1"
    );
    let ceiling = (weight - 1).div_ceil(span_dim);
    assert_eq!(
        ceiling,
        (weight + span_dim - 2) / span_dim,
        "floor form disagrees"
    );
    ceiling
}

/// Every flat of the support spanned by at least two points, with its value,
/// ordered by span dimension and then lexicographically.
pub fn segre_flats(x: &FatPointScheme) -> Result<Vec<SegreWitness>> {
    let s = x.support_size();
    if s > SEGRE_GUARD {
        return Err(Error::guard("Segre bound flat enumeration", s, SEGRE_GUARD));
    }
    let support = x.support_matroid();
    let mults = x.multiplicities();
    let flats = flats_spanned_by_subsets(&support, 2)?;
    Ok(flats
        .into_iter()
        .map(|flat| {
            let span_dim = support.rank(&flat) - 1;
            let weight = flat.iter().map(|&i| mults[i] as usize).sum();
            SegreWitness {
                value: segre_ratio(weight, span_dim),
                flat,
                span_dim,
                weight,
            }
        })
        .collect())
}

/// `seg X` with an attaining subspace: the smallest span dimension among
/// the maximizers, then the lexicographically first point set. A single
/// point gives `m - 1` with a zero-dimensional witness.
pub fn segre_bound(x: &FatPointScheme) -> Result<(usize, SegreWitness)> {
    if x.support_size() == 1 {
        let m = x.points()[0].mult as usize;
        return Ok((
            m - 1,
            SegreWitness {
                flat: vec![0],
                span_dim: 0,
                weight: m,
                value: m - 1,
            },
        ));
    }
    let flats = segre_flats(x)?;
    let mut best: Option<SegreWitness> = None;
    for w in flats {
        if best.as_ref().is_none_or(|b| w.value > b.value) {
            best = Some(w);
        }
    }
    let best = best.ok_or_else(|| Error::Internal("two distinct points span a line".into()))?;
    let single = x
        .points()
        .iter()
        .map(|p| p.mult as usize - 1)
        .max()
        .unwrap_or(0);
    debug_assert!(single <= best.value);
    Ok((best.value, best))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CardinalityReport {
    pub segre: usize,
    pub subsets_checked: usize,
    /// A subset `S` with `rk S >= 2` and `|S| > seg·(rk S - 1) + 1`.
    pub violation: Option<Vec<usize>>,
}

impl CardinalityReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `|S| <= seg(Z)·(rk S - 1) + 1` for every column subset `S` of the
/// scheme's matroid with `rk S >= 2`.
pub fn cardinality_estimate_check(z: &FatPointScheme) -> Result<CardinalityReport> {
    let total = z.total_multiplicity();
    if total > CARDINALITY_GUARD {
        return Err(Error::guard(
            "cardinality estimate subsets",
            total,
            CARDINALITY_GUARD,
        ));
    }
    let (segre, _) = segre_bound(z)?;
    let table = RankTable::from_oracle(&fat_point_vector_matroid(z)?)?;
    let mut subsets_checked = 0;
    for mask in 1..(1u64 << total) {
        let rank = table.rank_of_mask(mask);
        if rank < 2 {
            continue;
        }
        subsets_checked += 1;
        if mask.count_ones() as usize > segre * (rank - 1) + 1 {
            return Ok(CardinalityReport {
                segre,
                subsets_checked,
                violation: Some(elements_of(mask)),
            });
        }
    }
    Ok(CardinalityReport {
        segre,
        subsets_checked,
        violation: None,
    })
}

/// `F = ℓ_1 ⋯ ℓ_B` vanishing on `Z` and not at `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingCertificate {
    pub field: ScalarField,
    pub degree: usize,
    /// Coefficient vectors of the linear forms, one per partition block.
    pub forms: Vec<Vec<BigRational>>,
    /// Columns of `A_Z ⊕ [P]^B` in each block; the copies of `P` come last.
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    /// `F ∈ [I_Z]_B`: the conditions matrix of `Z` in degree `B` kills `F`.
    pub in_ideal: bool,
    pub nonzero_at_point: bool,
}

impl CertificateCheck {
    pub fn passed(&self) -> bool {
        self.in_ideal && self.nonzero_at_point
    }
}

impl SeparatingCertificate {
    /// Coefficients of `F` on the degree-`B` monomials in deglex order.
    pub fn expand(&self, nvars: usize) -> Vec<BigRational> {
        let field = self.field;
        let mut poly: Vec<BigRational> = vec![BigRational::one()];
        for (deg, form) in self.forms.iter().enumerate() {
            let current = monomials(nvars, deg);
            let index = monomial_index(nvars, deg + 1);
            let mut next = vec![BigRational::zero(); index.len()];
            for (mono, c) in current.iter().zip(&poly) {
                if c.is_zero() {
                    continue;
                }
                for (var, a) in form.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let mut grown = mono.clone();
                    grown[var] += 1;
                    let slot = index[&grown];
                    next[slot] = field.add(&next[slot], &field.mul(c, a));
                }
            }
            poly = next;
        }
        poly
    }

    /// Re-checks the certificate from scratch: derivative conditions of `Z`
    /// on the expanded product, and evaluation of each factor at `p`.
    pub fn check(&self, z: &FatPointScheme, p: &[BigRational]) -> Result<CertificateCheck> {
        let field = self.field;
        let nvars = z.ambient_dim() + 1;
        let poly = self.expand(nvars);
        let conditions = z.conditions_matrix(self.degree)?;
        let in_ideal = conditions.mul_vec(&poly).iter().all(Zero::is_zero);
        let value = monomials(nvars, self.degree).iter().zip(&poly).fold(
            BigRational::zero(),
            |acc, (mono, c)| {
                let term = mono
                    .iter()
                    .zip(p)
                    .fold(c.clone(), |t, (&e, x)| field.mul(&t, &field.pow(x, e)));
                field.add(&acc, &term)
            },
        );
        let factors_nonzero = self.forms.iter().all(|f| !field.dot(f, p).is_zero());
        Ok(CertificateCheck {
            in_ideal,
            nonzero_at_point: !value.is_zero() && factors_nonzero,
        })
    }
}

/// Builds `F` for `Z + P` with `P ∉ supp Z` and `B = seg(Z + P)`.
///
/// The columns of `A_Z ⊕ [P]^B` are partitioned into `B` independent sets;
/// each holds exactly one copy of `P`, so a hyperplane through the rest of
/// the block can avoid `P`. The hyperplane is the first vector of the
/// reduced kernel basis with nonzero value at `P`.
pub fn separating_hypersurface(
    z: &FatPointScheme,
    p: &[BigRational],
) -> Result<SeparatingCertificate> {
    let field = z.field();
    let combined = z.with_point(p.to_vec(), 1)?;
    let point = combined.points().last().expect("just added").coords.clone();
    let (b, _) = segre_bound(&combined)?;
    let total = z.total_multiplicity() + b;
    if total > SEPARATING_GUARD {
        return Err(Error::guard(
            "separating hypersurface partition",
            total,
            SEPARATING_GUARD,
        ));
    }
    let mut columns = Vec::with_capacity(total);
    for pt in z.points() {
        columns.extend(std::iter::repeat_n(pt.coords.clone(), pt.mult as usize));
    }
    let first_copy = columns.len();
    columns.extend(std::iter::repeat_n(point.clone(), b));
    let matroid = VectorMatroid::from_columns(field, &columns)?;
    let cert = match edmonds_partition(&matroid, b)? {
        PartitionOutcome::Partition(cert) => cert,
        PartitionOutcome::Infeasible(a) => {
            return Err(Error::Internal(format!(
                "A_Z + [P]^B admits no partition into B = {b} independent sets (witness {a:?})"
            )))
        }
    };
    let dim = z.ambient_dim() + 1;
    let mut forms = Vec::with_capacity(b);
    for block in &cert.blocks {
        let rest: Vec<Vec<BigRational>> = block
            .iter()
            .filter(|&&e| e < first_copy)
            .map(|&e| columns[e].clone())
            .collect();
        let form = if rest.is_empty() {
            // any form nonzero at P: pick the coordinate of its first nonzero entry
            let i = point
                .iter()
                .position(|c| !c.is_zero())
                .expect("nonzero point");
            let mut f = vec![BigRational::zero(); dim];
            f[i] = BigRational::one();
            f
        } else {
            ExactMatrix::from_rows(field, dim, &rest)?
                .kernel_basis()
                .into_iter()
                .find(|v| !field.dot(v, &point).is_zero())
                .ok_or_else(|| Error::Internal("block spans P".into()))?
        };
        forms.push(form);
    }
    Ok(SeparatingCertificate {
        field,
        degree: b,
        forms,
        blocks: cert.blocks,
    })
}

/// `r(X)` against `seg X`, with the bound's witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub scheme: SchemeSummary,
    pub reg_index: usize,
    pub segre: usize,
    pub witness: SegreWitness,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modified: Option<BTreeMap<usize, usize>>,
    /// `r(X) <= seg X`.
    pub verdict: bool,
    /// `r(X) = seg X`.
    pub sharp: bool,
    /// Wall-clock time in milliseconds, filled in only on request.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// Computes both sides of `r(X) <= seg X`.
pub fn verify_main_theorem(x: &FatPointScheme) -> Result<BoundReport> {
    let reg_index = x.regularity_index()?;
    let (segre, witness) = segre_bound(x)?;
    Ok(BoundReport {
        scheme: SchemeSummary::from(x),
        reg_index,
        segre,
        witness,
        modified: None,
        verdict: reg_index <= segre,
        sharp: reg_index == segre,
        elapsed_ms: None,
    })
}

/// `(1 : t : t^2 : ... : t^n)`.
pub fn rational_normal_curve_point(n: usize, t: i64) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut power = BigRational::one();
    for _ in 0..=n {
        out.push(power.clone());
        power *= BigRational::from_integer(t.into());
    }
    out
}

/// The scheme `Σ m_i P_i` with `P_i` at parameter `t = i` on the rational
/// normal curve of degree `n`.
pub fn rational_normal_curve_scheme(mults: &[u32], n: usize) -> Result<FatPointScheme> {
    let points = mults
        .iter()
        .enumerate()
        .map(|(t, &m)| FatPoint::new(rational_normal_curve_point(n, t as i64), m))
        .collect();
    FatPointScheme::new(ScalarField::Rational, n, points)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpnessReport {
    pub bound: BoundReport,
    /// Some maximizing subspace has its support points on a rational normal
    /// curve of that subspace.
    pub hypothesis_met: bool,
    /// The maximizing subspace used for the hypothesis, if any.
    pub curve_flat: Option<SegreWitness>,
    /// The span of the whole curve configuration is itself a maximizer.
    pub ambient_attains_max: bool,
    /// `r(X) = seg X`, asserted only when the hypothesis is met.
    pub sharp: Option<bool>,
}

/// Whether the support points in a flat of `x` lie on a rational normal
/// curve of their span: true for lines, and for at most `dim L + 3` points
/// in linearly general position inside `L`.
pub fn flat_on_normal_curve(x: &FatPointScheme, flat: &[usize]) -> bool {
    let support = x.support_matroid();
    let rank = support.rank(flat);
    if rank == 2 {
        return true;
    }
    if flat.len() > rank + 2 {
        return false;
    }
    let general = (1..=rank.min(flat.len())).all(|size| {
        masks_of_size(flat.len(), size).all(|mask| {
            let subset: Vec<usize> = elements_of(mask).iter().map(|&i| flat[i]).collect();
            support.rank(&subset) == size
        })
    });
    general
}

/// `r(X) = seg X` for points on the degree-`n` rational normal curve at
/// parameters `0, 1, ...`, when a maximizing subspace of the Segre bound
/// carries its points on a rational normal curve.
///
/// The whole space qualifies by construction; other maximizers are tested
/// with [`flat_on_normal_curve`].
pub fn rational_normal_curve_sharpness(mults: &[u32], n: usize) -> Result<SharpnessReport> {
    let x = rational_normal_curve_scheme(mults, n)?;
    let bound = verify_main_theorem(&x)?;
    let full_rank = x.support_matroid().full_rank();
    let maximizers: Vec<SegreWitness> = if x.support_size() == 1 {
        Vec::new()
    } else {
        segre_flats(&x)?
            .into_iter()
            .filter(|w| w.value == bound.segre)
            .collect()
    };
    let ambient_attains_max = maximizers.iter().any(|w| w.span_dim + 1 == full_rank);
    let curve_flat = maximizers
        .into_iter()
        .find(|w| w.span_dim + 1 == full_rank || flat_on_normal_curve(&x, &w.flat));
    let hypothesis_met = curve_flat.is_some() || x.support_size() == 1;
    let sharp = hypothesis_met.then_some(bound.reg_index == bound.segre);
    Ok(SharpnessReport {
        bound,
        hypothesis_met,
        curve_flat,
        ambient_attains_max,
        sharp,
    })
}

/// One term of the modified bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModifiedBound {
    pub degree: usize,
    pub value: usize,
    /// The maximizing `Y ⊆ supp X`: fewest points, then lexicographic.
    pub subset: Vec<usize>,
    pub weight: usize,
    /// `dim_K [R/I_Y]_d`.
    pub hilbert_value: usize,
}

/// `max { d·⌈(W_Y - 1)/(h_Y(d) - 1)⌉ : Y ⊆ supp X, |Y| >= 2 }` where
/// `W_Y = Σ_{P_i ∈ Y} m_i` and `h_Y` is the Hilbert function of the reduced
/// scheme on `Y`.
pub fn modified_bound(x: &FatPointScheme, d: usize) -> Result<ModifiedBound> {
    let s = x.support_size();
    if d == 0 {
        return Err(Error::InvalidParameters("degree must be at least 1".into()));
    }
    if s < 2 {
        return Err(Error::InvalidParameters(
            "modified bound needs two support points".into(),
        ));
    }
    if s > MODIFIED_GUARD {
        return Err(Error::guard("modified bound subsets", s, MODIFIED_GUARD));
    }
    // h_Y(d) of a reduced scheme is the rank of its Veronese images
    let lifted = x.veronese_lift(d)?.support_matroid();
    let table = RankTable::from_oracle(&lifted)?;
    let mults = x.multiplicities();
    let mut best: Option<ModifiedBound> = None;
    for size in 2..=s {
        for mask in masks_of_size(s, size) {
            let h = table.rank_of_mask(mask);
            if h < 2 {
                return Err(Error::Internal(
                    "two distinct points impose two conditions".into(),
                ));
            }
            let subset = elements_of(mask);
            let weight: usize = subset.iter().map(|&i| mults[i] as usize).sum();
            let value = d * (weight - 1).div_ceil(h - 1);
            if best.as_ref().is_none_or(|b| value > b.value) {
                best = Some(ModifiedBound {
                    degree: d,
                    value,
                    subset,
                    weight,
                    hilbert_value: h,
                });
            }
        }
    }
    let best = best.expect("s >= 2 gives a subset");
    debug_assert_eq!(
        best.hilbert_value,
        x.reduced_on(&best.subset)?.hilbert_function(d)?
    );
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenericExampleReport {
    pub ambient_dim: usize,
    pub degree: usize,
    pub multiplicity: u32,
    pub special_points: usize,
    pub generic_points: usize,
    pub reg_index: usize,
    pub segre: usize,
    pub modified: usize,
    pub modified_at_one: usize,
    pub regularity_below_segre: bool,
    pub regularity_below_modified: bool,
    pub modified_improves: bool,
}

impl GenericExampleReport {
    pub fn passed(&self) -> bool {
        self.regularity_below_segre
            && self.regularity_below_modified
            && self.modified_at_one == self.segre
    }
}

/// Evaluates `r(X)`, `seg X` and the modified bound at `d` for a scheme of
/// uniform multiplicity `m` built by [`crate::generate::generic_example_scheme`].
pub fn reproduce_generic_example(
    x: &FatPointScheme,
    d: usize,
    special: usize,
) -> Result<GenericExampleReport> {
    let reg_index = x.regularity_index()?;
    let (segre, _) = segre_bound(x)?;
    let modified = modified_bound(x, d)?.value;
    let modified_at_one = modified_bound(x, 1)?.value;
    Ok(GenericExampleReport {
        ambient_dim: x.ambient_dim(),
        degree: d,
        multiplicity: x.points()[0].mult,
        special_points: special,
        generic_points: x.support_size() - special,
        reg_index,
        segre,
        modified,
        modified_at_one,
        regularity_below_segre: reg_index <= segre,
        regularity_below_modified: reg_index <= modified,
        modified_improves: modified < segre,
    })
}
