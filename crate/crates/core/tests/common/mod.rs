#![allow(dead_code)]

use proptest::prelude::*;
use segre_core::exact::{int, ScalarField};
use segre_core::matroid::{RankOracle, VectorMatroid};

pub fn vector_matroid(cols: &[Vec<i64>]) -> VectorMatroid {
    let cols: Vec<Vec<_>> = cols
        .iter()
        .map(|c| c.iter().map(|&v| int(v)).collect())
        .collect();
    VectorMatroid::from_columns(ScalarField::Rational, &cols).unwrap()
}

pub fn elements(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask & (1 << i) != 0).collect()
}

/// Every subset of `set`, as lists in the order of `set`.
pub fn subsets(set: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0u64..1 << set.len()).map(move |m| elements(m).into_iter().map(|i| set[i]).collect())
}

/// `|A| <= k·rk(A) - p` for every nonempty `A ⊆ ground`, by enumeration.
pub fn count_condition_holds<M: RankOracle + ?Sized>(
    m: &M,
    ground: &[usize],
    k: usize,
    p: usize,
) -> bool {
    subsets(ground)
        .skip(1)
        .all(|a| a.len() as i64 <= (k * m.rank(&a)) as i64 - p as i64)
}

/// Column sets with `count` vectors of length `dim`, entries in `-2..=2`.
pub fn columns(
    dim: std::ops::RangeInclusive<usize>,
    count: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (dim, count).prop_flat_map(|(d, c)| {
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, d), c)
    })
}
