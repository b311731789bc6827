//! Matroids derived from a base matroid: the count matroid `M_{k,p}`, the
//! elementary quotient `M/e`, and the parallel extension `M_{+S}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{
    check_subset, elements_of, masks_of_size, GroundSet, RankOracle, RankTable, Restriction,
};

/// Ground sets up to this size get exhaustive hypothesis checks.
pub const HYPOTHESIS_GUARD: usize = 16;

/// The matroid whose circuits are the minimal nonempty `C` with
/// `|C| > k·rk(C) - p`.
///
/// A set is independent iff every nonempty subset `A` satisfies
/// `|A| <= k·rk(A) - p`. Ranks of the base are materialized in a
/// [`RankTable`], so the base ground set is limited to
/// [`crate::matroid::RankTable`]'s guard.
#[derive(Debug, Clone)]
pub struct CountMatroid {
    base: RankTable,
    k: usize,
    p: usize,
}

pub fn count_matroid<M: RankOracle + ?Sized>(base: &M, k: usize, p: usize) -> Result<CountMatroid> {
    if k <= p {
        return Err(Error::CountMatroidUndefined);
    }
    Ok(CountMatroid {
        base: RankTable::from_oracle(base)?,
        k,
        p,
    })
}

impl CountMatroid {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn base(&self) -> &RankTable {
        &self.base
    }

    fn violates(&self, mask: u64) -> bool {
        let f = (self.k * self.base.rank_of_mask(mask)) as i64 - self.p as i64;
        mask.count_ones() as i64 > f
    }

    pub fn is_independent_mask(&self, mask: u64) -> bool {
        let mut a = mask;
        while a != 0 {
            if self.violates(a) {
                return false;
            }
            a = (a - 1) & mask;
        }
        true
    }

    /// For independent `indep`, whether `indep + e` stays independent: only
    /// subsets containing `e` can be new violations.
    fn extends(&self, indep: u64, e: usize) -> bool {
        let bit = 1u64 << e;
        let mut a = indep;
        loop {
            if self.violates(a | bit) {
                return false;
            }
            if a == 0 {
                return true;
            }
            a = (a - 1) & indep;
        }
    }

    /// A maximal independent subset of `set`, grown greedily in ascending order.
    pub fn maximal_independent_subset(&self, set: &[usize]) -> Vec<usize> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        let mut indep = 0u64;
        for e in sorted {
            if self.extends(indep, e) {
                indep |= 1 << e;
            }
        }
        elements_of(indep)
    }
}

impl RankOracle for CountMatroid {
    fn ground(&self) -> &GroundSet {
        self.base.ground()
    }

    fn rank(&self, set: &[usize]) -> usize {
        self.maximal_independent_subset(set).len()
    }
}

/// The first nonempty `A ⊆ ground` (by size, then lexicographically) with
/// `|A| > k·rk(A) - p`, in the oracle's indices.
pub fn count_condition_violation<M: RankOracle + ?Sized>(
    m: &M,
    ground: &[usize],
    k: usize,
    p: usize,
) -> Result<Option<Vec<usize>>> {
    if ground.len() > HYPOTHESIS_GUARD {
        return Err(Error::guard(
            "exhaustive cardinality hypothesis check",
            ground.len(),
            HYPOTHESIS_GUARD,
        ));
    }
    let restricted = Restriction::new(m, ground.to_vec())?;
    let table = RankTable::from_oracle(&restricted)?;
    for size in 1..=ground.len() {
        for mask in masks_of_size(ground.len(), size) {
            let f = (k * table.rank_of_mask(mask)) as i64 - p as i64;
            if size as i64 > f {
                return Ok(Some(restricted.to_base(&elements_of(mask))));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankEstimate {
    pub count_rank: usize,
    /// `|E| - rk(E) + 1`.
    pub bound: usize,
    pub independent_witness: Vec<usize>,
    pub holds: bool,
}

/// Under `|A| <= (k+1)·rk(A) - (p+1)` for all nonempty `A`, checks
/// `rk_{M_{k,p}}(E) >= |E| - rk(E) + 1`.
pub fn count_matroid_rank_lower_bound_check<M: RankOracle + ?Sized>(
    base: &M,
    k: usize,
    p: usize,
) -> Result<RankEstimate> {
    let all: Vec<usize> = base.ground().elements().collect();
    if all.is_empty() {
        return Err(Error::InvalidParameters(
            "ground set must be nonempty".into(),
        ));
    }
    if let Some(witness) = count_condition_violation(base, &all, k + 1, p + 1)? {
        return Err(Error::HypothesisViolated { witness });
    }
    let cm = count_matroid(base, k, p)?;
    let independent_witness = cm.maximal_independent_subset(&all);
    let count_rank = independent_witness.len();
    let bound = all.len() - base.rank(&all) + 1;
    Ok(RankEstimate {
        count_rank,
        bound,
        independent_witness,
        holds: count_rank >= bound,
    })
}

/// `M/e` on `ground ⊆ Ẽ` for a pivot `e ∈ Ẽ \ ground`:
/// `rk_{M/e}(A) = rk(A + e) - 1`. Local element `i` is `ground[i]`.
pub struct ElementaryQuotient<O> {
    ambient: O,
    ground_map: Vec<usize>,
    pivot: usize,
    ground: GroundSet,
}

pub fn elementary_quotient<O: RankOracle>(
    ambient: O,
    ground: &[usize],
    pivot: usize,
) -> Result<ElementaryQuotient<O>> {
    check_subset(&ambient, ground)?;
    if pivot >= ambient.ground_size() {
        return Err(Error::ElementOutOfRange);
    }
    if ground.contains(&pivot) {
        return Err(Error::PivotInGround);
    }
    if ambient.rank(&[pivot]) == 0 {
        return Err(Error::PivotIsLoop);
    }
    let labels = ground.iter().map(|&e| ambient.ground().label(e)).collect();
    Ok(ElementaryQuotient {
        ambient,
        ground_map: ground.to_vec(),
        pivot,
        ground: GroundSet::labelled(labels),
    })
}

impl<O> ElementaryQuotient<O> {
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn ambient_index(&self, local: usize) -> usize {
        self.ground_map[local]
    }
}

impl<O: RankOracle> RankOracle for ElementaryQuotient<O> {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn rank(&self, set: &[usize]) -> usize {
        let mut with: Vec<usize> = set.iter().map(|&e| self.ground_map[e]).collect();
        with.push(self.pivot);
        self.ambient.rank(&with) - 1
    }
}

/// `M_{+S}` on `(E, 0) ∪ (S, 1)`: element `i < |E|` is `(i, 0)` and
/// `|E| + j` is `(S[j], 1)`, a parallel copy of `S[j]`.
pub struct ParallelExtension<O> {
    base: O,
    duplicated: Vec<usize>,
    ground: GroundSet,
}

pub fn parallel_extension<O: RankOracle>(
    base: O,
    duplicated: &[usize],
) -> Result<ParallelExtension<O>> {
    check_subset(&base, duplicated)?;
    let mut labels: Vec<String> = base
        .ground()
        .elements()
        .map(|e| base.ground().label(e))
        .collect();
    labels.extend(
        duplicated
            .iter()
            .map(|&e| format!("{}'", base.ground().label(e))),
    );
    Ok(ParallelExtension {
        base,
        duplicated: duplicated.to_vec(),
        ground: GroundSet::labelled(labels),
    })
}

impl<O: RankOracle> ParallelExtension<O> {
    /// The base element an extension element stands for.
    pub fn original(&self, e: usize) -> usize {
        let n = self.base.ground_size();
        if e < n {
            e
        } else {
            self.duplicated[e - n]
        }
    }
}

impl<O: RankOracle> RankOracle for ParallelExtension<O> {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn rank(&self, set: &[usize]) -> usize {
        let mut union: Vec<usize> = set.iter().map(|&e| self.original(e)).collect();
        union.sort_unstable();
        union.dedup();
        self.base.rank(&union)
    }
}

/// `M_{+e}/e`: the parallel extension by `{e}` followed by the elementary
/// quotient by the new copy, on the original ground set. Its rank is
/// `rk(A ∪ {e}) - 1` and `e` itself becomes a loop.
pub fn parallel_extension_quotient<O: RankOracle>(
    base: O,
    e: usize,
) -> Result<ElementaryQuotient<ParallelExtension<O>>> {
    if e >= base.ground_size() {
        return Err(Error::PivotNotInGround);
    }
    let n = base.ground_size();
    let extended = parallel_extension(base, &[e])?;
    let ground: Vec<usize> = (0..n).collect();
    elementary_quotient(extended, &ground, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ScalarField};
    use crate::matroid::{check_rank_axioms, circuits, is_independent, FreeMatroid, VectorMatroid};

    fn vectors(cols: &[&[i64]]) -> VectorMatroid {
        let cols: Vec<Vec<_>> = cols
            .iter()
            .map(|c| c.iter().map(|&v| int(v)).collect())
            .collect();
        VectorMatroid::from_columns(ScalarField::Rational, &cols).unwrap()
    }

    #[test]
    fn count_matroid_examples() {
        let free = FreeMatroid::new(3);
        let cm = count_matroid(&free, 1, 0).unwrap();
        for mask in 0..8u64 {
            let set = elements_of(mask);
            assert_eq!(cm.rank(&set), free.rank(&set));
        }
        let four = vectors(&[&[1, 0], &[0, 1], &[1, 1], &[1, 2]]);
        let cm = count_matroid(&four, 2, 0).unwrap();
        assert!(is_independent(&cm, &[0, 1, 2, 3]));
        let par = vectors(&[&[1, 1], &[2, 2]]);
        let cm = count_matroid(&par, 2, 1).unwrap();
        assert!(!is_independent(&cm, &[0, 1]));
        assert_eq!(
            count_matroid(&par, 1, 1).unwrap_err(),
            Error::CountMatroidUndefined
        );
    }

    #[test]
    fn single_inequality_is_not_enough() {
        // parallel pair plus a generic element with k=2, p=1: the whole set
        // satisfies 3 <= 2*2-1 but contains the violating pair
        let m = vectors(&[&[1, 0], &[2, 0], &[0, 1]]);
        let cm = count_matroid(&m, 2, 1).unwrap();
        assert!(!is_independent(&cm, &[0, 1, 2]));
        assert_eq!(circuits(&cm, 3).unwrap(), vec![vec![0, 1]]);
    }

    #[test]
    fn count_matroid_satisfies_axioms() {
        let m = vectors(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[1, 1, 0],
            &[2, 2, 0],
            &[0, 0, 1],
            &[1, 2, 3],
        ]);
        for (k, p) in [(1, 0), (2, 0), (2, 1), (3, 2)] {
            let cm = count_matroid(&m, k, p).unwrap();
            assert_eq!(check_rank_axioms(&cm).unwrap(), Ok(()), "k={k} p={p}");
        }
    }

    #[test]
    fn rank_estimate_examples() {
        let four = vectors(&[&[1, 0], &[0, 1], &[1, 1], &[1, 2]]);
        let est = count_matroid_rank_lower_bound_check(&four, 2, 0).unwrap();
        assert_eq!((est.count_rank, est.bound), (4, 3));
        assert!(est.holds);
        let one = vectors(&[&[1, 0]]);
        let est = count_matroid_rank_lower_bound_check(&one, 2, 0).unwrap();
        assert_eq!((est.count_rank, est.bound), (1, 1));
        let par = vectors(&[&[1, 0], &[1, 0], &[1, 0]]);
        assert!(matches!(
            count_matroid_rank_lower_bound_check(&par, 1, 0),
            Err(Error::HypothesisViolated { .. })
        ));
    }

    #[test]
    fn quotient_examples() {
        let free = FreeMatroid::new(3);
        let q = elementary_quotient(&free, &[0, 1], 2).unwrap();
        assert_eq!(q.rank(&[0, 1]), 2);

        let m = vectors(&[&[1, 0], &[0, 1], &[1, 1]]);
        let q = elementary_quotient(&m, &[0, 1], 2).unwrap();
        assert_eq!(q.rank(&[0]), 1);
        assert_eq!(q.rank(&[0, 1]), 1);
        assert!(!is_independent(&q, &[0, 1]));
        assert_eq!(
            elementary_quotient(&m, &[0, 1], 1).err(),
            Some(Error::PivotInGround)
        );
        let with_loop = vectors(&[&[1, 0], &[0, 0]]);
        assert_eq!(
            elementary_quotient(&with_loop, &[0], 1).err(),
            Some(Error::PivotIsLoop)
        );
    }

    #[test]
    fn parallel_extension_quotient_examples() {
        let free = FreeMatroid::new(2);
        let q = parallel_extension_quotient(&free, 0).unwrap();
        assert_eq!(q.rank(&[1]), 1);
        assert_eq!(q.rank(&[0]), 0);
        let par = vectors(&[&[1, 1], &[3, 3]]);
        let q = parallel_extension_quotient(&par, 0).unwrap();
        assert_eq!(q.rank(&[1]), 0);
        assert!(parallel_extension_quotient(&par, 2).is_err());
    }

    #[test]
    fn parallel_extension_keeps_rank() {
        let m = vectors(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]);
        let ext = parallel_extension(&m, &[0, 2]).unwrap();
        assert_eq!(ext.ground_size(), 5);
        assert_eq!(ext.full_rank(), m.full_rank());
        assert_eq!(ext.rank(&[0, 3]), 1);
        assert_eq!(check_rank_axioms(&ext).unwrap(), Ok(()));
    }
}
