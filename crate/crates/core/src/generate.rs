//! Seeded instance generators.
//!
//! All randomness comes from a `ChaCha8Rng` seeded with a `u64`, so an
//! instance is a pure function of its parameters and seed. Configurations
//! that must be generic are certified by rank checks after sampling and
//! resampled a bounded number of times.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{int, ScalarField};
use crate::fatpoints::{FatPoint, FatPointScheme};
use crate::matroid::{elements_of, masks_of_size, RankOracle, VectorMatroid};
use crate::partition::optimality_example_vectors;
use crate::segre::rational_normal_curve_scheme;

/// Resampling attempts before a generic configuration is declared unattainable.
pub const GENERIC_RETRIES: usize = 64;
/// Coordinates of random points are drawn from `-COORD_BOUND..=COORD_BOUND`.
pub const COORD_BOUND: i64 = 4;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random nonzero integer vector of length `len`.
pub fn random_vector<R: Rng>(rng: &mut R, len: usize, bound: i64) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..len).map(|_| rng.random_range(-bound..=bound)).collect();
        if v.iter().any(|&c| c != 0) {
            return v;
        }
    }
}

/// Parameters for [`random_scheme`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchemeShape {
    pub ambient_dim: usize,
    pub support: usize,
    pub max_mult: u32,
}

/// `s` distinct random points of `P^n` with multiplicities in `1..=max_mult`.
pub fn random_scheme<R: Rng>(rng: &mut R, shape: SchemeShape) -> Result<FatPointScheme> {
    if shape.support == 0 || shape.max_mult == 0 || shape.ambient_dim == 0 {
        return Err(Error::InvalidParameters("empty scheme shape".into()));
    }
    for _ in 0..GENERIC_RETRIES {
        let points: Vec<FatPoint> = (0..shape.support)
            .map(|_| {
                let coords = random_vector(rng, shape.ambient_dim + 1, COORD_BOUND);
                let mult = rng.random_range(1..=shape.max_mult);
                FatPoint::new(coords.into_iter().map(int).collect(), mult)
            })
            .collect();
        match FatPointScheme::new(ScalarField::Rational, shape.ambient_dim, points) {
            Ok(x) => return Ok(x),
            Err(Error::DuplicatePoint(..)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityFailed(GENERIC_RETRIES))
}

/// Whether every set of at most `n + 1` of the points is linearly independent.
pub fn in_general_position(points: &[Vec<i64>]) -> Result<bool> {
    let Some(first) = points.first() else {
        return Ok(true);
    };
    let dim = first.len();
    let columns: Vec<Vec<_>> = points
        .iter()
        .map(|p| p.iter().map(|&c| int(c)).collect())
        .collect();
    let m = VectorMatroid::from_columns(ScalarField::Rational, &columns)?;
    let top = dim.min(points.len());
    Ok(masks_of_size(points.len(), top).all(|mask| m.rank(&elements_of(mask)) == top))
}

/// Whether every set of at most `n + 1` support points is independent,
/// over the scheme's own field.
pub fn scheme_in_general_position(x: &FatPointScheme) -> bool {
    let m = x.support_matroid();
    let top = (x.ambient_dim() + 1).min(x.support_size());
    masks_of_size(x.support_size(), top).all(|mask| m.rank(&elements_of(mask)) == top)
}

/// `s` random integer points of `P^n` in linearly general position.
pub fn generic_points<R: Rng>(rng: &mut R, n: usize, s: usize) -> Result<Vec<Vec<i64>>> {
    for _ in 0..GENERIC_RETRIES {
        let points: Vec<Vec<i64>> = (0..s)
            .map(|_| random_vector(rng, n + 1, COORD_BOUND))
            .collect();
        if in_general_position(&points)? {
            return Ok(points);
        }
    }
    Err(Error::GenericityFailed(GENERIC_RETRIES))
}

fn scheme_from(n: usize, points: &[Vec<i64>], mults: &[u32]) -> Result<FatPointScheme> {
    let pts = points
        .iter()
        .zip(mults)
        .map(|(c, &m)| FatPoint::new(c.iter().map(|&v| int(v)).collect(), m))
        .collect();
    FatPointScheme::new(ScalarField::Rational, n, pts)
}

/// `s` generic points of `P^n`, all of multiplicity `m`.
pub fn generic_scheme<R: Rng>(rng: &mut R, n: usize, s: usize, m: u32) -> Result<FatPointScheme> {
    let points = generic_points(rng, n, s)?;
    scheme_from(n, &points, &vec![m; s])
}

/// `count` points `(1 : t : 0 : ... : 0)`, `t = 0..count`, on one line.
pub fn collinear_points(n: usize, count: usize) -> Vec<Vec<i64>> {
    (0..count as i64)
        .map(|t| {
            let mut v = vec![0; n + 1];
            v[0] = 1;
            v[1] = t;
            v
        })
        .collect()
}

/// `count` collinear points of multiplicity `m`.
pub fn collinear_cluster(n: usize, count: usize, m: u32) -> Result<FatPointScheme> {
    if n == 0 {
        return Err(Error::InvalidParameters("a line needs n >= 1".into()));
    }
    scheme_from(n, &collinear_points(n, count), &vec![m; count])
}

/// Points `(1 : t : ... : t^n)` at `t = 0, 1, ...` with the given multiplicities.
pub fn rational_normal_curve(n: usize, mults: &[u32]) -> Result<FatPointScheme> {
    rational_normal_curve_scheme(mults, n)
}

/// The optimality example as a scheme: `t` points in general position in
/// `P^{t-2}`, each of multiplicity `k - p`. Its matroid has `k - p`
/// parallel vectors on each of `t` lines.
pub fn optimality_example_scheme(t: usize, k: usize, p: usize) -> Result<FatPointScheme> {
    let vectors = optimality_example_vectors(t, k, p)?;
    let step = k - p;
    let directions: Vec<Vec<i64>> = vectors.chunks(step).map(|c| c[0].clone()).collect();
    if !in_general_position(&directions)? {
        return Err(Error::Internal(
            "example lines are not in general position".into(),
        ));
    }
    scheme_from(t - 2, &directions, &vec![step as u32; t])
}

/// `special` collinear points followed by `C(d + n, n)` (or `generic`)
/// random points in general position, all of multiplicity `m`. The random
/// points are certified generic among themselves and off the special line.
pub fn generic_example_scheme<R: Rng>(
    rng: &mut R,
    n: usize,
    d: usize,
    m: u32,
    special: usize,
    generic: Option<usize>,
) -> Result<FatPointScheme> {
    if n < 2 {
        return Err(Error::InvalidParameters("the example needs n >= 2".into()));
    }
    let count = generic.unwrap_or_else(|| crate::monomial::binomial(d + n, n));
    let line = collinear_points(n, special);
    for _ in 0..GENERIC_RETRIES {
        let random = generic_points(rng, n, count)?;
        // off the line: x2..xn not all zero
        if random.iter().any(|p| p[2..].iter().all(|&c| c == 0)) {
            continue;
        }
        let all: Vec<Vec<i64>> = line.iter().chain(&random).cloned().collect();
        match scheme_from(n, &all, &vec![m; all.len()]) {
            Ok(x) => return Ok(x),
            Err(Error::DuplicatePoint(..)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityFailed(GENERIC_RETRIES))
}
