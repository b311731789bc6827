//! Degree-lexicographic monomial bases.

use std::collections::HashMap;

/// Binomial coefficient `C(n, k)`; 0 when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All exponent vectors of total degree `degree` in `nvars` variables, in
/// degree-lexicographic order: `x0^d` first, `x_{n}^d` last.
pub fn monomials(nvars: usize, degree: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, degree as u32);
    out
}

fn fill(out: &mut Vec<Vec<u32>>, current: &mut [u32], var: usize, remaining: u32) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(current.to_vec());
        return;
    }
    if current.is_empty() {
        return;
    }
    for e in (0..=remaining).rev() {
        current[var] = e;
        fill(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}

/// Exponent vectors of total degree strictly below `bound`, grouped by
/// degree and deglex within each degree.
pub fn monomials_below(nvars: usize, bound: usize) -> Vec<Vec<u32>> {
    (0..bound).flat_map(|d| monomials(nvars, d)).collect()
}

/// Position of each monomial of the given degree in [`monomials`] order.
pub fn monomial_index(nvars: usize, degree: usize) -> HashMap<Vec<u32>, usize> {
    monomials(nvars, degree)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_binomials() {
        for nvars in 1..5 {
            for d in 0..6 {
                assert_eq!(monomials(nvars, d).len(), binomial(nvars + d - 1, d));
            }
        }
    }

    #[test]
    fn deglex_order() {
        assert_eq!(
            monomials(3, 2),
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
        assert_eq!(monomials(2, 0), vec![vec![0, 0]]);
    }

    #[test]
    fn below_bound() {
        // partial derivatives of order < 3 in two variables
        assert_eq!(monomials_below(2, 3).len(), 6);
        assert!(monomials_below(2, 0).is_empty());
    }
}
