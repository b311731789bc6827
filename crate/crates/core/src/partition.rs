//! Partitioning a ground set into sets independent in given matroids.
//!
//! The core is the augmenting-path algorithm for matroid partition: blocks
//! grow one element at a time, and an element that fits nowhere is routed
//! through a chain of exchanges found by breadth-first search. When no chain
//! exists the reachable set is a subset `A` with `|A| > Σ rk_j(A)`.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::construct::{
    count_condition_violation, count_matroid, elementary_quotient, parallel_extension,
    HYPOTHESIS_GUARD,
};
use crate::error::{Error, Result};
use crate::matroid::{
    check_subset, elements_of, masks_of_size, RankOracle, RankTable, Restriction,
};

/// Exhaustive assignment search handles at most this many elements.
pub const BRUTE_FORCE_GUARD: usize = 12;
/// Exhaustive assignment search handles at most this many matroids.
pub const BRUTE_FORCE_BLOCKS: usize = 4;

/// `a_j ∉ cl(I_j)` for block `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AvoidanceWitness {
    pub block: usize,
    pub element: usize,
}

/// A partition of `ground` into blocks, block `j` independent in matroid
/// `block_matroid[j]`. Elements are indices of the matroids' ground set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionCertificate {
    pub ground: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
    pub block_matroid: Vec<usize>,
    pub avoidance: Vec<AvoidanceWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateDefect {
    Shape,
    Foreign(usize),
    Overlap(usize),
    Uncovered(usize),
    Dependent(usize),
    Spanned { block: usize, element: usize },
}

impl fmt::Display for CertificateDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateDefect::Shape => write!(f, "block and matroid lists disagree"),
            CertificateDefect::Foreign(e) => write!(f, "element {e} is not in the ground set"),
            CertificateDefect::Overlap(e) => write!(f, "element {e} lies in two blocks"),
            CertificateDefect::Uncovered(e) => write!(f, "element {e} lies in no block"),
            CertificateDefect::Dependent(j) => write!(f, "block {j} is dependent"),
            CertificateDefect::Spanned { block, element } => {
                write!(f, "element {element} lies in the closure of block {block}")
            }
        }
    }
}

impl PartitionCertificate {
    /// Re-checks every claim with fresh rank queries against `matroids`.
    pub fn verify(
        &self,
        matroids: &[&dyn RankOracle],
    ) -> std::result::Result<(), CertificateDefect> {
        if self.blocks.len() != self.block_matroid.len()
            || self.block_matroid.iter().any(|&i| i >= matroids.len())
        {
            return Err(CertificateDefect::Shape);
        }
        let mut seen = std::collections::BTreeSet::new();
        for block in &self.blocks {
            for &e in block {
                if !self.ground.contains(&e) {
                    return Err(CertificateDefect::Foreign(e));
                }
                if !seen.insert(e) {
                    return Err(CertificateDefect::Overlap(e));
                }
            }
        }
        if let Some(&e) = self.ground.iter().find(|e| !seen.contains(e)) {
            return Err(CertificateDefect::Uncovered(e));
        }
        for (j, block) in self.blocks.iter().enumerate() {
            let m = matroids[self.block_matroid[j]];
            if block.iter().any(|&e| e >= m.ground_size()) || m.rank(block) != block.len() {
                return Err(CertificateDefect::Dependent(j));
            }
        }
        for w in &self.avoidance {
            let defect = CertificateDefect::Spanned {
                block: w.block,
                element: w.element,
            };
            let block = self.blocks.get(w.block).ok_or(CertificateDefect::Shape)?;
            let m = matroids[self.block_matroid[w.block]];
            if w.element >= m.ground_size() || block.contains(&w.element) {
                return Err(defect);
            }
            let mut with = block.clone();
            with.push(w.element);
            if m.rank(&with) != block.len() + 1 {
                return Err(defect);
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PartitionOutcome {
    Partition(PartitionCertificate),
    /// A subset `A` with `|A| > Σ_j rk_j(A)`.
    Infeasible(Vec<usize>),
}

impl PartitionOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, PartitionOutcome::Partition(_))
    }

    pub fn certificate(&self) -> Option<&PartitionCertificate> {
        match self {
            PartitionOutcome::Partition(c) => Some(c),
            PartitionOutcome::Infeasible(_) => None,
        }
    }
}

/// Partitions the common ground set into `I_1 ⊔ ... ⊔ I_k` with `I_j`
/// independent in `matroids[j]`, or returns an infeasibility witness.
pub fn edmonds_fulkerson_partition(matroids: &[&dyn RankOracle]) -> Result<PartitionOutcome> {
    let first = matroids
        .first()
        .ok_or_else(|| Error::InvalidParameters("at least one matroid is required".into()))?;
    let n = first.ground_size();
    if matroids.iter().any(|m| m.ground_size() != n) {
        return Err(Error::GroundMismatch);
    }
    let ground: Vec<usize> = (0..n).collect();
    Ok(partition_elements(matroids, &ground))
}

/// Partitions the ground set of `m` into `k` independent sets.
pub fn edmonds_partition(m: &dyn RankOracle, k: usize) -> Result<PartitionOutcome> {
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    edmonds_fulkerson_partition(&vec![m; k])
}

/// Augmenting-path partition of `elements`; the matroids share one index space.
pub(crate) fn partition_elements(
    matroids: &[&dyn RankOracle],
    elements: &[usize],
) -> PartitionOutcome {
    let k = matroids.len();
    let mut sorted = elements.to_vec();
    sorted.sort_unstable();
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k];
    // owner[e] = Some(j) once e is placed in block j
    let universe = sorted.last().map_or(0, |&e| e + 1);
    let mut owner: Vec<Option<usize>> = vec![None; universe];

    for &x in &sorted {
        match augmenting_path(matroids, &blocks, &owner, x) {
            Ok((path, sink_block)) => {
                // path = [x = y0, y1, ..., yt]; yt joins sink_block, each
                // y_i takes the place of y_{i+1} in the block of y_{i+1}
                let last = *path.last().expect("path starts at x");
                let homes: Vec<usize> = path[1..]
                    .iter()
                    .map(|&z| owner[z].expect("exchange target is placed"))
                    .collect();
                for (w, &j) in path.windows(2).zip(&homes) {
                    let (y, z) = (w[0], w[1]);
                    let slot = blocks[j]
                        .iter()
                        .position(|&v| v == z)
                        .expect("z in its block");
                    blocks[j][slot] = y;
                    owner[y] = Some(j);
                }
                blocks[sink_block].push(last);
                owner[last] = Some(sink_block);
            }
            Err(reachable) => return PartitionOutcome::Infeasible(reachable),
        }
    }
    for b in &mut blocks {
        b.sort_unstable();
    }
    PartitionOutcome::Partition(PartitionCertificate {
        ground: sorted,
        blocks,
        block_matroid: (0..k).collect(),
        avoidance: Vec::new(),
    })
}

/// Shortest exchange path from the unplaced `x` to an element that fits in
/// some block directly. On failure returns the reachable set, sorted.
fn augmenting_path(
    matroids: &[&dyn RankOracle],
    blocks: &[Vec<usize>],
    owner: &[Option<usize>],
    x: usize,
) -> std::result::Result<(Vec<usize>, usize), Vec<usize>> {
    let mut parent: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    let mut visited = std::collections::BTreeSet::new();
    let mut queue = VecDeque::new();
    visited.insert(x);
    queue.push_back(x);
    while let Some(y) = queue.pop_front() {
        let home = owner.get(y).copied().flatten();
        // sink: y fits into some block other than its own
        for (j, m) in matroids.iter().enumerate() {
            if home == Some(j) {
                continue;
            }
            let mut with = blocks[j].clone();
            with.push(y);
            if m.rank(&with) == with.len() {
                let mut path = vec![y];
                let mut cur = y;
                while let Some(&p) = parent.get(&cur) {
                    path.push(p);
                    cur = p;
                }
                path.reverse();
                return Ok((path, j));
            }
        }
        for (j, m) in matroids.iter().enumerate() {
            if home == Some(j) {
                continue;
            }
            for (slot, &z) in blocks[j].iter().enumerate() {
                if visited.contains(&z) {
                    continue;
                }
                let mut swapped = blocks[j].clone();
                swapped[slot] = y;
                if m.rank(&swapped) == swapped.len() {
                    visited.insert(z);
                    parent.insert(z, y);
                    queue.push_back(z);
                }
            }
        }
    }
    Err(visited.into_iter().collect())
}

/// `I ⊔ J` from [`inductive_split`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Split {
    pub block: Vec<usize>,
    pub remainder: Vec<usize>,
}

/// Splits `ground` into `I ⊔ J` with `I` independent, `pivot ∉ cl(I)`, and
/// `|B| <= k·rk(B) - p` for every nonempty `B ⊆ J`.
///
/// Requires `|A| <= (k+1)·rk(A) - (p+1)` for nonempty `A ⊆ ground`, checked
/// exhaustively up to [`HYPOTHESIS_GUARD`] elements and trusted beyond.
/// `I` is the first block of a partition into a set independent in `M/e`
/// (or `M_{+e}/e` when the pivot lies in the ground set) and a set
/// independent in the count matroid `M_{k,p}`.
pub fn inductive_split(
    ambient: &dyn RankOracle,
    ground: &[usize],
    pivot: usize,
    k: usize,
    p: usize,
) -> Result<Split> {
    check_subset(ambient, ground)?;
    if ground.len() <= HYPOTHESIS_GUARD {
        if let Some(witness) = count_condition_violation(ambient, ground, k + 1, p + 1)? {
            return Err(Error::HypothesisViolated { witness });
        }
    }
    split_unchecked(ambient, ground, pivot, k, p)
}

fn split_unchecked(
    ambient: &dyn RankOracle,
    ground: &[usize],
    pivot: usize,
    k: usize,
    p: usize,
) -> Result<Split> {
    if pivot >= ambient.ground_size() {
        return Err(Error::ElementOutOfRange);
    }
    if ground.is_empty() {
        return Ok(Split {
            block: Vec::new(),
            remainder: Vec::new(),
        });
    }
    let mut ground = ground.to_vec();
    ground.sort_unstable();
    let quotient: Box<dyn RankOracle + '_> = if ground.contains(&pivot) {
        let copy = ambient.ground_size();
        Box::new(elementary_quotient(
            parallel_extension(ambient, &[pivot])?,
            &ground,
            copy,
        )?)
    } else {
        Box::new(elementary_quotient(ambient, &ground, pivot)?)
    };
    let restricted = Restriction::new(ambient, ground.clone())?;
    let counted = count_matroid(&restricted, k, p)?;
    let local: Vec<usize> = (0..ground.len()).collect();
    match partition_elements(&[quotient.as_ref(), &counted], &local) {
        PartitionOutcome::Partition(cert) => Ok(Split {
            block: restricted.to_base(&cert.blocks[0]),
            remainder: restricted.to_base(&cert.blocks[1]),
        }),
        PartitionOutcome::Infeasible(a) => Err(Error::InvalidParameters(format!(
            "no split exists, so the cardinality hypothesis fails (partition witness {:?})",
            restricted.to_base(&a)
        ))),
    }
}

/// Partition of `ground` into `k` independent blocks with
/// `a_j ∉ cl(I_j)` for `j <= p`, where `(a_1..a_p)` is `pinned` followed by
/// `tail`.
#[derive(Clone)]
pub struct AvoidanceProblem<'a> {
    pub ambient: &'a dyn RankOracle,
    pub ground: Vec<usize>,
    pub k: usize,
    pub p: usize,
    pub pinned: Vec<usize>,
    pub tail: Vec<usize>,
    /// Accept `|A| <= k·rk(A) - p` without checking when `ground` exceeds
    /// [`HYPOTHESIS_GUARD`].
    pub trust_hypothesis: bool,
}

impl AvoidanceProblem<'_> {
    pub fn pivots(&self) -> Vec<usize> {
        self.pinned.iter().chain(&self.tail).copied().collect()
    }
}

/// Solves an [`AvoidanceProblem`] by `p` successive splits, the `j`-th with
/// pivot `a_j` and counts `(k - j, p - j)`, followed by a partition of what
/// remains into `k - p` independent sets.
///
/// Each block depends only on the ground set, `k`, `p` and the pivots before
/// it, so the first `q` blocks are fixed by the pinned prefix.
pub fn avoidance_partition(problem: &AvoidanceProblem<'_>) -> Result<PartitionCertificate> {
    let AvoidanceProblem { ambient, k, p, .. } = *problem;
    if problem.pinned.len() > p {
        return Err(Error::InvalidParameters(format!(
            "{} pinned elements exceed p = {p}",
            problem.pinned.len()
        )));
    }
    if problem.pinned.len() + problem.tail.len() != p {
        return Err(Error::InvalidParameters(format!(
            "pinned and tail must list p = {p} elements together"
        )));
    }
    if k <= p {
        return Err(Error::CountMatroidUndefined);
    }
    check_subset(ambient, &problem.ground)?;
    let pivots = problem.pivots();
    if pivots.iter().any(|&a| a >= ambient.ground_size()) {
        return Err(Error::ElementOutOfRange);
    }
    let mut current = problem.ground.clone();
    current.sort_unstable();
    if current.len() <= HYPOTHESIS_GUARD {
        if let Some(witness) = count_condition_violation(ambient, &current, k, p)? {
            return Err(Error::HypothesisViolated { witness });
        }
    } else if !problem.trust_hypothesis {
        return Err(Error::guard(
            "exhaustive cardinality hypothesis check",
            current.len(),
            HYPOTHESIS_GUARD,
        ));
    }

    let mut blocks = Vec::with_capacity(k);
    let mut avoidance = Vec::with_capacity(p);
    for (j, &a) in pivots.iter().enumerate() {
        let split = split_unchecked(ambient, &current, a, k - j - 1, p - j - 1)?;
        avoidance.push(AvoidanceWitness {
            block: j,
            element: a,
        });
        blocks.push(split.block);
        current = split.remainder;
    }
    match partition_elements(&vec![ambient; k - p], &current) {
        PartitionOutcome::Partition(rest) => blocks.extend(rest.blocks),
        PartitionOutcome::Infeasible(a) => {
            return Err(Error::Internal(format!(
                "remainder admits no partition into {} independent sets (witness {a:?})",
                k - p
            )))
        }
    }
    let mut ground = problem.ground.clone();
    ground.sort_unstable();
    Ok(PartitionCertificate {
        ground,
        block_matroid: vec![0; blocks.len()],
        blocks,
        avoidance,
    })
}

/// Exhaustive search for an assignment of the ground set to blocks with
/// block `j` independent in `matroids[j]`.
pub fn brute_force_partition_oracle(matroids: &[&dyn RankOracle]) -> Result<bool> {
    let first = matroids
        .first()
        .ok_or_else(|| Error::InvalidParameters("at least one matroid is required".into()))?;
    let n = first.ground_size();
    if matroids.iter().any(|m| m.ground_size() != n) {
        return Err(Error::GroundMismatch);
    }
    if n > BRUTE_FORCE_GUARD {
        return Err(Error::guard("brute-force partition", n, BRUTE_FORCE_GUARD));
    }
    if matroids.len() > BRUTE_FORCE_BLOCKS {
        return Err(Error::guard(
            "brute-force partition block count",
            matroids.len(),
            BRUTE_FORCE_BLOCKS,
        ));
    }
    let tables = matroids
        .iter()
        .map(|m| RankTable::from_oracle(*m))
        .collect::<Result<Vec<_>>>()?;
    let mut masks = vec![0u64; tables.len()];
    Ok(assign(&tables, &mut masks, 0, n))
}

fn assign(tables: &[RankTable], masks: &mut [u64], e: usize, n: usize) -> bool {
    if e == n {
        return true;
    }
    for j in 0..tables.len() {
        let grown = masks[j] | (1 << e);
        // independence is hereditary, so dependent partial blocks are dead ends
        if tables[j].rank_of_mask(grown) == grown.count_ones() as usize {
            let saved = masks[j];
            masks[j] = grown;
            if assign(tables, masks, e + 1, n) {
                return true;
            }
            masks[j] = saved;
        }
    }
    false
}

/// Largest number of lines in the optimality example.
pub const OPTIMALITY_MAX_LINES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptimalityVerdict {
    pub t: usize,
    pub k: usize,
    pub p: usize,
    pub ground_size: usize,
    pub rank: usize,
    /// `|A| <= k·rk(A) - p` for every nonempty `A ⊆ E`.
    pub hypothesis_holds: bool,
    pub hypothesis_witness: Option<Vec<usize>>,
    /// Independent sets with at most `t - 2` elements that were examined.
    pub candidates_checked: usize,
    /// An independent `I`, `|I| <= t - 2`, with `|B| <= (k-1)·rk(B) - p`
    /// for every nonempty `B ⊆ E \ I`, if one exists.
    pub qualifying_set: Option<Vec<usize>>,
}

impl OptimalityVerdict {
    pub fn passed(&self) -> bool {
        self.hypothesis_holds && self.qualifying_set.is_none()
    }
}

/// The vectors of the optimality example: `t` lines in general position in
/// `K^{t-1}`, spanned by the standard basis and the all-ones vector, with
/// `k - p` distinct multiples on each line.
pub fn optimality_example_vectors(t: usize, k: usize, p: usize) -> Result<Vec<Vec<i64>>> {
    check_optimality_parameters(t, k, p)?;
    let dim = t - 1;
    let mut out = Vec::with_capacity(t * (k - p));
    for line in 0..t {
        let direction: Vec<i64> = (0..dim)
            .map(|i| if line == dim || i == line { 1 } else { 0 })
            .collect();
        for c in 1..=(k - p) as i64 {
            out.push(direction.iter().map(|&v| v * c).collect());
        }
    }
    Ok(out)
}

fn check_optimality_parameters(t: usize, k: usize, p: usize) -> Result<()> {
    if p == 0 || k <= p {
        return Err(Error::InvalidParameters("requires k > p > 0".into()));
    }
    if p * (t.saturating_sub(1)) < k || t < 2 {
        return Err(Error::ExampleTooSmall);
    }
    if t > OPTIMALITY_MAX_LINES {
        return Err(Error::guard(
            "optimality example lines",
            t,
            OPTIMALITY_MAX_LINES,
        ));
    }
    let size = t * (k - p);
    if size > HYPOTHESIS_GUARD {
        return Err(Error::guard(
            "optimality example ground set",
            size,
            HYPOTHESIS_GUARD,
        ));
    }
    Ok(())
}

/// Builds the example for `(t, k, p)` and checks both of its claims by
/// exhaustive enumeration over all subsets.
pub fn verify_partition_optimality_example(
    t: usize,
    k: usize,
    p: usize,
) -> Result<OptimalityVerdict> {
    use crate::exact::{int, ScalarField};
    use crate::matroid::VectorMatroid;

    let vectors = optimality_example_vectors(t, k, p)?;
    let columns: Vec<Vec<_>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| int(x)).collect())
        .collect();
    let m = VectorMatroid::from_columns(ScalarField::Rational, &columns)?;
    let table = RankTable::from_oracle(&m)?;
    let n = m.ground_size();
    let all: Vec<usize> = (0..n).collect();

    let hypothesis_witness = count_condition_violation(&table, &all, k, p)?;

    // tainted[mask]: some nonempty B ⊆ mask has |B| > (k-1)·rk(B) - p
    let full = 1usize << n;
    let mut tainted: Vec<bool> = (0..full)
        .map(|mask| {
            let f = ((k - 1) * table.rank_of_mask(mask as u64)) as i64 - p as i64;
            mask != 0 && mask.count_ones() as i64 > f
        })
        .collect();
    for e in 0..n {
        for mask in 0..full {
            if mask & (1 << e) != 0 && tainted[mask ^ (1 << e)] {
                tainted[mask] = true;
            }
        }
    }
    let mut candidates_checked = 0;
    let mut qualifying_set = None;
    'search: for size in 0..=t - 2 {
        for mask in masks_of_size(n, size) {
            if table.rank_of_mask(mask) != size {
                continue;
            }
            candidates_checked += 1;
            let rest = (full - 1) & !(mask as usize);
            if !tainted[rest] {
                qualifying_set = Some(elements_of(mask));
                break 'search;
            }
        }
    }
    Ok(OptimalityVerdict {
        t,
        k,
        p,
        ground_size: n,
        rank: m.full_rank(),
        hypothesis_holds: hypothesis_witness.is_none(),
        hypothesis_witness,
        candidates_checked,
        qualifying_set,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ScalarField};
    use crate::matroid::{closure, FreeMatroid, VectorMatroid};

    fn vectors(cols: &[&[i64]]) -> VectorMatroid {
        let cols: Vec<Vec<_>> = cols
            .iter()
            .map(|c| c.iter().map(|&v| int(v)).collect())
            .collect();
        VectorMatroid::from_columns(ScalarField::Rational, &cols).unwrap()
    }

    #[test]
    fn free_matroids_always_partition() {
        let free = FreeMatroid::new(5);
        let out = edmonds_partition(&free, 3).unwrap();
        let cert = out.certificate().unwrap();
        assert_eq!(cert.blocks[0], vec![0, 1, 2, 3, 4]);
        cert.verify(&[&free, &free, &free]).unwrap();
    }

    #[test]
    fn two_copies_of_a_basis() {
        let m = vectors(&[&[1, 0], &[0, 1], &[1, 0], &[0, 1]]);
        let out = edmonds_partition(&m, 2).unwrap();
        let cert = out.certificate().unwrap();
        cert.verify(&[&m, &m]).unwrap();
        assert!(cert.blocks.iter().all(|b| b.len() == 2));
    }

    #[test]
    fn parallel_triple_is_infeasible() {
        let m = vectors(&[&[1, 0], &[2, 0], &[3, 0]]);
        match edmonds_partition(&m, 2).unwrap() {
            PartitionOutcome::Infeasible(a) => {
                assert_eq!(a, vec![0, 1, 2]);
                assert!(a.len() > 2 * m.rank(&a));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
        assert!(!brute_force_partition_oracle(&[&m, &m]).unwrap());
    }

    #[test]
    fn augmentation_is_needed() {
        // the greedy placement of 0 and 2 into block 0 blocks 1 and 3 unless rerouted
        let m = vectors(&[&[1, 0], &[1, 0], &[0, 1], &[0, 1]]);
        let cert = edmonds_partition(&m, 2)
            .unwrap()
            .certificate()
            .unwrap()
            .clone();
        cert.verify(&[&m, &m]).unwrap();
    }

    #[test]
    fn mismatched_grounds() {
        let a = FreeMatroid::new(2);
        let b = FreeMatroid::new(3);
        assert_eq!(
            edmonds_fulkerson_partition(&[&a, &b]),
            Err(Error::GroundMismatch)
        );
    }

    #[test]
    fn split_with_outside_pivot() {
        let m = vectors(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let split = inductive_split(&m, &[0, 1, 2], 3, 1, 0).unwrap();
        let mut with = split.block.clone();
        with.push(3);
        assert_eq!(m.rank(&with), split.block.len() + 1);
        assert!(split.remainder.iter().all(|e| !split.block.contains(e)));
        assert_eq!(split.block.len() + split.remainder.len(), 3);
        assert!(count_condition_violation(&m, &split.remainder, 1, 0)
            .unwrap()
            .is_none());
    }

    #[test]
    fn split_with_inside_pivot_excludes_parallel_elements() {
        let m = vectors(&[&[1, 0], &[0, 1], &[2, 0], &[1, 1], &[0, 3]]);
        let split = inductive_split(&m, &[0, 1, 2, 3, 4], 0, 2, 0).unwrap();
        assert!(!split.block.contains(&0));
        assert!(!split.block.contains(&2));
        assert!(!closure(&m, &split.block).contains(&0));
    }

    #[test]
    fn split_rejects_rank_one_ground() {
        let m = vectors(&[&[1, 0], &[2, 0], &[3, 0]]);
        assert!(matches!(
            inductive_split(&m, &[0, 1, 2], 1, 1, 1),
            Err(Error::HypothesisViolated { .. })
        ));
    }

    #[test]
    fn avoidance_on_a_basis() {
        let m = vectors(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let problem = AvoidanceProblem {
            ambient: &m,
            ground: vec![0, 1, 2],
            k: 2,
            p: 1,
            pinned: vec![3],
            tail: vec![],
            trust_hypothesis: false,
        };
        let cert = avoidance_partition(&problem).unwrap();
        assert_eq!(cert.blocks.len(), 2);
        assert_eq!(
            cert.avoidance,
            vec![AvoidanceWitness {
                block: 0,
                element: 3
            }]
        );
        cert.verify(&[&m]).unwrap();
    }

    #[test]
    fn avoidance_with_p_zero_is_plain_partition() {
        let m = vectors(&[&[1, 0], &[0, 1], &[1, 1], &[1, 2]]);
        let problem = AvoidanceProblem {
            ambient: &m,
            ground: vec![0, 1, 2, 3],
            k: 2,
            p: 0,
            pinned: vec![],
            tail: vec![],
            trust_hypothesis: false,
        };
        let cert = avoidance_partition(&problem).unwrap();
        let plain = edmonds_partition(&m, 2).unwrap();
        assert_eq!(cert.blocks, plain.certificate().unwrap().blocks);
    }

    #[test]
    fn optimality_example() {
        let verdict = verify_partition_optimality_example(4, 3, 1).unwrap();
        assert_eq!((verdict.ground_size, verdict.rank), (8, 3));
        assert!(verdict.hypothesis_holds);
        assert!(verdict.qualifying_set.is_none());
        assert!(verdict.candidates_checked > 0);
        assert_eq!(
            verify_partition_optimality_example(2, 3, 1),
            Err(Error::ExampleTooSmall)
        );
    }
}
