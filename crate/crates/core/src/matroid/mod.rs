//! Matroids given by rank oracles, and the operations derived from rank:
//! independence, closure, circuits and flats.

mod table;
mod vector;

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};

pub use table::RankTable;
pub use vector::{fat_point_vector_matroid, FreeMatroid, VectorMatroid};

/// Largest ground set for exhaustive flat enumeration.
pub const FLAT_GUARD: usize = 24;
/// Largest ground set for exhaustive circuit enumeration.
pub const CIRCUIT_GUARD: usize = 20;
/// Largest ground set for the exhaustive rank-axiom check.
pub const AXIOM_GUARD: usize = 12;

/// Elements `0..len`, optionally annotated.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroundSet {
    len: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(len: usize) -> Self {
        GroundSet { len, labels: None }
    }

    pub fn labelled(labels: Vec<String>) -> Self {
        GroundSet {
            len: labels.len(),
            labels: Some(labels),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn label(&self, e: usize) -> String {
        match &self.labels {
            Some(l) => l[e].clone(),
            None => format!("e{e}"),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len
    }
}

/// A matroid presented by its rank function.
///
/// `rank` receives a set of distinct elements of the ground set in any
/// order. Implementations are pure: equal inputs give equal ranks, and
/// oracles are shared freely between threads.
pub trait RankOracle: Send + Sync {
    fn ground(&self) -> &GroundSet;

    fn rank(&self, set: &[usize]) -> usize;

    fn ground_size(&self) -> usize {
        self.ground().len()
    }

    fn full_rank(&self) -> usize {
        let all: Vec<usize> = self.ground().elements().collect();
        self.rank(&all)
    }
}

impl<T: RankOracle + ?Sized> RankOracle for &T {
    fn ground(&self) -> &GroundSet {
        (**self).ground()
    }
    fn rank(&self, set: &[usize]) -> usize {
        (**self).rank(set)
    }
}

impl<T: RankOracle + ?Sized> RankOracle for Box<T> {
    fn ground(&self) -> &GroundSet {
        (**self).ground()
    }
    fn rank(&self, set: &[usize]) -> usize {
        (**self).rank(set)
    }
}

impl<T: RankOracle + ?Sized> RankOracle for Arc<T> {
    fn ground(&self) -> &GroundSet {
        (**self).ground()
    }
    fn rank(&self, set: &[usize]) -> usize {
        (**self).rank(set)
    }
}

/// The submatroid induced on `elements`, re-indexed as `0..elements.len()`.
pub struct Restriction<O> {
    base: O,
    elements: Vec<usize>,
    ground: GroundSet,
}

impl<O: RankOracle> Restriction<O> {
    pub fn new(base: O, elements: Vec<usize>) -> Result<Self> {
        check_subset(&base, &elements)?;
        let ground =
            GroundSet::labelled(elements.iter().map(|&e| base.ground().label(e)).collect());
        Ok(Restriction {
            base,
            elements,
            ground,
        })
    }

    /// Base-matroid index of a local element.
    pub fn base_index(&self, local: usize) -> usize {
        self.elements[local]
    }

    pub fn to_base(&self, set: &[usize]) -> Vec<usize> {
        set.iter().map(|&e| self.elements[e]).collect()
    }
}

impl<O: RankOracle> RankOracle for Restriction<O> {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn rank(&self, set: &[usize]) -> usize {
        self.base.rank(&self.to_base(set))
    }
}

pub(crate) fn check_subset<M: RankOracle + ?Sized>(m: &M, set: &[usize]) -> Result<()> {
    let n = m.ground_size();
    if set.iter().any(|&e| e >= n) {
        return Err(Error::ElementOutOfRange);
    }
    let distinct: BTreeSet<_> = set.iter().collect();
    if distinct.len() != set.len() {
        return Err(Error::InvalidParameters(
            "subset contains repeated elements".into(),
        ));
    }
    Ok(())
}

pub fn is_independent<M: RankOracle + ?Sized>(m: &M, a: &[usize]) -> bool {
    m.rank(a) == a.len()
}

/// `cl(A) = { e | rk(A + e) = rk(A) }`, sorted ascending.
pub fn closure<M: RankOracle + ?Sized>(m: &M, a: &[usize]) -> Vec<usize> {
    let base = m.rank(a);
    let mut with = a.to_vec();
    let mut out = Vec::new();
    for e in m.ground().elements() {
        if a.contains(&e) {
            out.push(e);
            continue;
        }
        with.push(e);
        if m.rank(&with) == base {
            out.push(e);
        }
        with.pop();
    }
    out
}

/// True iff `e` lies in the span of `a`.
pub fn spans<M: RankOracle + ?Sized>(m: &M, a: &[usize], e: usize) -> bool {
    if a.contains(&e) {
        return true;
    }
    let mut with = a.to_vec();
    with.push(e);
    m.rank(&with) == m.rank(a)
}

pub(crate) fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |acc, &e| acc | (1u64 << e))
}

pub(crate) fn elements_of(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        let e = m.trailing_zeros() as usize;
        out.push(e);
        m &= m - 1;
    }
    out
}

/// All inclusion-minimal dependent sets with at most `max_size` elements,
/// ordered by size and then lexicographically.
pub fn circuits<M: RankOracle + ?Sized>(m: &M, max_size: usize) -> Result<Vec<Vec<usize>>> {
    let n = m.ground_size();
    if n > CIRCUIT_GUARD {
        return Err(Error::guard("circuit enumeration", n, CIRCUIT_GUARD));
    }
    // independent[mask]; only masks whose maximal proper subsets are all
    // independent ever reach the oracle
    let mut independent = vec![false; 1usize << n];
    independent[0] = true;
    let mut out = Vec::new();
    for size in 1..=n.min(max_size) {
        for mask in masks_of_size(n, size) {
            let all_sub_independent = elements_of(mask)
                .iter()
                .all(|&e| independent[(mask & !(1 << e)) as usize]);
            if !all_sub_independent {
                continue;
            }
            let set = elements_of(mask);
            if m.rank(&set) == size {
                independent[mask as usize] = true;
            } else {
                out.push(set);
            }
        }
    }
    Ok(out)
}

/// Masks over `n` elements with exactly `size` bits set, in increasing order.
pub(crate) fn masks_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if size == 0 { 0 } else { (1u64 << size) - 1 };
    let mut next = if size <= n { Some(first) } else { None };
    std::iter::from_fn(move || {
        let current = next?;
        if current >= limit {
            return None;
        }
        next = if current == 0 {
            None
        } else {
            // Gosper's hack
            let c = current & current.wrapping_neg();
            let r = current + c;
            Some((((r ^ current) >> 2) / c) | r)
        };
        Some(current)
    })
}

/// The distinct closed sets `cl(S)`, `S ⊆ E`, of rank at least `min_rank`,
/// ordered by rank and then lexicographically.
///
/// Every flat is the closure of an independent set grown one element at a
/// time, so a breadth-first walk over `cl(F + e)` reaches all of them
/// without visiting every subset.
pub fn flats_spanned_by_subsets<M: RankOracle + ?Sized>(
    m: &M,
    min_rank: usize,
) -> Result<Vec<Vec<usize>>> {
    let n = m.ground_size();
    if n > FLAT_GUARD {
        return Err(Error::guard(
            "ground set too large for exhaustive flat enumeration",
            n,
            FLAT_GUARD,
        ));
    }
    let bottom = closure(m, &[]);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(bottom.clone());
    queue.push_back(bottom);
    while let Some(flat) = queue.pop_front() {
        for e in m.ground().elements() {
            if flat.binary_search(&e).is_ok() {
                continue;
            }
            let mut grown = flat.clone();
            grown.push(e);
            let next = closure(m, &grown);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut flats: Vec<(usize, Vec<usize>)> = seen
        .into_iter()
        .map(|f| (m.rank(&f), f))
        .filter(|(r, _)| *r >= min_rank)
        .collect();
    flats.sort();
    Ok(flats.into_iter().map(|(_, f)| f).collect())
}

/// A violated rank axiom, with the sets involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    Bounds {
        set: Vec<usize>,
        rank: usize,
    },
    Monotonicity {
        smaller: Vec<usize>,
        larger: Vec<usize>,
    },
    Submodularity {
        a: Vec<usize>,
        b: Vec<usize>,
    },
}

/// Exhaustively checks normalization, monotonicity and submodularity.
pub fn check_rank_axioms<M: RankOracle + ?Sized>(
    m: &M,
) -> Result<std::result::Result<(), AxiomViolation>> {
    let n = m.ground_size();
    if n > AXIOM_GUARD {
        return Err(Error::guard("rank axiom check", n, AXIOM_GUARD));
    }
    let table = RankTable::from_oracle(m)?;
    let size = 1u64 << n;
    for a in 0..size {
        let ra = table.rank_of_mask(a);
        if ra > a.count_ones() as usize {
            return Ok(Err(AxiomViolation::Bounds {
                set: elements_of(a),
                rank: ra,
            }));
        }
        for e in 0..n {
            let b = a | (1 << e);
            if table.rank_of_mask(b) < ra {
                return Ok(Err(AxiomViolation::Monotonicity {
                    smaller: elements_of(a),
                    larger: elements_of(b),
                }));
            }
        }
    }
    for a in 0..size {
        let ra = table.rank_of_mask(a);
        for b in a..size {
            if table.rank_of_mask(a & b) + table.rank_of_mask(a | b) > ra + table.rank_of_mask(b) {
                return Ok(Err(AxiomViolation::Submodularity {
                    a: elements_of(a),
                    b: elements_of(b),
                }));
            }
        }
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ScalarField};

    fn vectors(cols: &[&[i64]]) -> VectorMatroid {
        let cols: Vec<Vec<_>> = cols
            .iter()
            .map(|c| c.iter().map(|&v| int(v)).collect())
            .collect();
        VectorMatroid::from_columns(ScalarField::Rational, &cols).unwrap()
    }

    #[test]
    fn independence_examples() {
        let par = vectors(&[&[1, 2], &[2, 4]]);
        assert!(is_independent(&par, &[]));
        assert!(!is_independent(&par, &[0, 1]));
        let basis = vectors(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(is_independent(&basis, &[0, 1, 2]));
    }

    #[test]
    fn closure_examples() {
        let m = vectors(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(closure(&m, &[0, 1, 2, 3]), vec![0, 1, 2, 3]);
        assert_eq!(closure(&m, &[0, 1]), vec![0, 1, 2]);
        let rep = vectors(&[&[1, 1], &[1, 1], &[0, 1], &[2, 2]]);
        assert_eq!(closure(&rep, &[0]), vec![0, 1, 3]);
    }

    #[test]
    fn circuit_examples() {
        let free = FreeMatroid::new(4);
        assert!(circuits(&free, 4).unwrap().is_empty());
        let par = vectors(&[&[1, 2], &[2, 4]]);
        assert_eq!(circuits(&par, 2).unwrap(), vec![vec![0, 1]]);
        let generic = vectors(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 2, 3]]);
        assert_eq!(circuits(&generic, 4).unwrap(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn flat_examples() {
        let three = vectors(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let flats = flats_spanned_by_subsets(&three, 2).unwrap();
        assert_eq!(
            flats,
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]
        );
        let repeated = vectors(&[&[1, 1], &[1, 1], &[1, 1], &[1, 1], &[1, 1]]);
        assert!(flats_spanned_by_subsets(&repeated, 2).unwrap().is_empty());
        // three collinear points plus one off the line
        let line = vectors(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
        let flats = flats_spanned_by_subsets(&line, 2).unwrap();
        assert!(flats.contains(&vec![0, 1, 2]));
        let big = FreeMatroid::new(25);
        assert!(flats_spanned_by_subsets(&big, 2).unwrap_err().is_guard());
    }

    #[test]
    fn gosper_enumeration() {
        let masks: Vec<u64> = masks_of_size(4, 2).collect();
        assert_eq!(masks, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(masks_of_size(3, 0).collect::<Vec<_>>(), vec![0]);
        assert!(masks_of_size(2, 3).next().is_none());
    }

    #[test]
    fn restriction_reindexes() {
        let m = vectors(&[&[1, 0], &[0, 1], &[1, 1], &[2, 2]]);
        let r = Restriction::new(&m, vec![2, 3]).unwrap();
        assert_eq!(r.ground_size(), 2);
        assert_eq!(r.rank(&[0, 1]), 1);
        assert!(Restriction::new(&m, vec![4]).is_err());
    }

    #[test]
    fn axioms_hold_for_vector_matroid() {
        let m = vectors(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1], &[2, 0, 0]]);
        assert_eq!(check_rank_axioms(&m).unwrap(), Ok(()));
    }
}
