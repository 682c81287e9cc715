//! Pascalian numbers, two-row standard domino tableaux, diagonal lattice
//! walks, and the bijection `φ` between them.
//!
//! The Pascalian number `⟨n k⟩ = C(n, ⌊(n−k)/2⌋)` counts three things at
//! once: the two-row standard domino tableaux of shape `(n+k, n−k)`, the
//! rightward diagonal lattice walks of `n` steps with height `k`, and the
//! binary strings of length `n` whose running up-down balance peaks at `k`.
//! This module provides each family, the counting formula, and the explicit
//! bijection tying them together.

use crate::error::{Error, Result};
use crate::exec;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// Default ceiling for exhaustive enumeration (2^14 = 16384 objects).
pub const DEFAULT_ENUMERATION_CAP: u32 = 14;

/// Exact binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut result = BigInt::one();
    for i in 0..k {
        result = result * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    result
}

/// `⟨n k⟩` without the range check; callers guarantee `k ≤ n`.
pub(crate) fn pasc(n: u32, k: u32) -> BigInt {
    debug_assert!(k <= n);
    binomial(u64::from(n), u64::from(n - k) / 2)
}

/// The Pascalian number `⟨n k⟩ = C(n, ⌊(n−k)/2⌋)`.
///
/// Errors with [`Error::Domain`] when `k > n`.
pub fn pascalian_number(n: u32, k: u32) -> Result<BigInt> {
    if k > n {
        return Err(Error::Domain(format!(
            "pascalian_number requires 0 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(pasc(n, k))
}

/// Row `n` of the Pascalian triangle, `k = 0..=n`.
pub fn triangle_row(n: u32) -> Vec<BigInt> {
    (0..=n).map(|k| pasc(n, k)).collect()
}

/// A two-row standard domino tableau with `n` dominos, encoded by the set of
/// labels whose dominos lie horizontally in row 1. The encoding is total and
/// injective: the remaining placements are forced, so the label set alone
/// determines the tableau.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    n: u32,
    subset: Vec<u32>, // sorted, distinct labels in 1..=n
}

impl Tableau {
    /// Builds a tableau from its horizontal-row-1 label set.
    ///
    /// Errors with [`Error::Domain`] if a label repeats or lies outside
    /// `1..=n`.
    pub fn new(n: u32, subset: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut labels: Vec<u32> = subset.into_iter().collect();
        labels.sort_unstable();
        for pair in labels.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::Domain(format!("repeated label {}", pair[0])));
            }
        }
        if let (Some(&lo), Some(&hi)) = (labels.first(), labels.last()) {
            if lo < 1 || hi > n {
                return Err(Error::Domain(format!(
                    "labels must lie in 1..={n}, got {lo}..={hi}"
                )));
            }
        }
        Ok(Tableau { n, subset: labels })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Sorted labels of the dominos horizontal in row 1.
    pub fn subset(&self) -> &[u32] {
        &self.subset
    }

    pub fn contains(&self, label: u32) -> bool {
        self.subset.binary_search(&label).is_ok()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, label) in self.subset.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{label}")?;
        }
        write!(f, "}}")
    }
}

/// A rightward diagonal lattice walk, one `bool` per step (`true` = up).
/// Index 0 is the first step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    steps: Vec<bool>,
}

impl Walk {
    pub fn new(steps: Vec<bool>) -> Self {
        Walk { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    /// Number of up steps.
    pub fn ups(&self) -> usize {
        self.steps.iter().filter(|&&s| s).count()
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            write!(f, "{}", if s { 'U' } else { 'D' })?;
        }
        Ok(())
    }
}

/// All `2^n` tableaux of `B_n` in lexicographic order of their label sets,
/// under the default enumeration cap.
pub fn enumerate_tableaux(n: u32) -> Result<Vec<Tableau>> {
    enumerate_tableaux_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

/// All `2^n` tableaux of `B_n` with an explicit cap on `n`.
///
/// The order is lexicographic on the sorted label sequence:
/// `{} < {1} < {1,2} < ... < {2} < ...`.
pub fn enumerate_tableaux_with_cap(n: u32, cap: u32) -> Result<Vec<Tableau>> {
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    let mut out = Vec::with_capacity(1usize << n);
    let mut current = Vec::new();
    fn rec(n: u32, start: u32, current: &mut Vec<u32>, out: &mut Vec<Tableau>) {
        out.push(Tableau {
            n,
            subset: current.clone(),
        });
        for label in start..=n {
            current.push(label);
            rec(n, label + 1, current, out);
            current.pop();
        }
    }
    rec(n, 1, &mut current, &mut out);
    Ok(out)
}

/// Shape `(λ1, λ2)` of a tableau, recovered by replaying the forced
/// insertions of dominos `1..=n`: a label in the set extends row 1 by two, a
/// label outside extends row 2 by two when the rows differ and otherwise
/// stacks vertically.
pub fn shape_of(t: &Tableau) -> (u32, u32) {
    let mut row1 = 0u32;
    let mut row2 = 0u32;
    for label in 1..=t.n {
        if t.contains(label) {
            row1 += 2;
        } else if row1 != row2 {
            row2 += 2;
        } else {
            row1 += 1;
            row2 += 1;
        }
    }
    (row1, row2)
}

/// The bijection from tableaux to walks: step `n+1−s` is up exactly when
/// label `s` is in the tableau's horizontal-row-1 set.
pub fn phi(t: &Tableau) -> Walk {
    let n = t.n;
    let steps = (1..=n).map(|j| t.contains(n + 1 - j)).collect();
    Walk { steps }
}

/// Height of a walk: the maximum over prefixes of (#ups − #downs). The empty
/// prefix contributes 0, so the height is never negative.
pub fn walk_height(w: &Walk) -> u32 {
    let mut level: i64 = 0;
    let mut max: i64 = 0;
    for &up in &w.steps {
        level += if up { 1 } else { -1 };
        max = max.max(level);
    }
    max as u32
}

/// Histogram of walk heights over all `2^n` walks, index `k` = height, under
/// the default cap.
pub fn height_histogram(n: u32) -> Result<Vec<BigInt>> {
    height_histogram_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

/// Histogram of walk heights over all `2^n` walks with an explicit cap.
pub fn height_histogram_with_cap(n: u32, cap: u32) -> Result<Vec<BigInt>> {
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    let total = 1u64 << n;
    // Chunked scan over the bit encodings; each chunk folds into local u64
    // counters, which are safe because no height bucket can exceed 2^n.
    let chunk_count = 64usize.min(total as usize).max(1);
    let chunk_len = total.div_ceil(chunk_count as u64);
    let partials = exec::map_indexed(chunk_count, |c| {
        let lo = c as u64 * chunk_len;
        let hi = (lo + chunk_len).min(total);
        let mut counts = vec![0u64; n as usize + 1];
        for mask in lo..hi {
            let mut level: i32 = 0;
            let mut max: i32 = 0;
            for bit in 0..n {
                level += if mask >> bit & 1 == 1 { 1 } else { -1 };
                max = max.max(level);
            }
            counts[max as usize] += 1;
        }
        counts
    });
    let mut histogram = vec![BigInt::zero(); n as usize + 1];
    for counts in partials {
        for (slot, c) in histogram.iter_mut().zip(counts) {
            *slot += c;
        }
    }
    Ok(histogram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Independent count of n-step walks with height exactly k, straight from
    /// the definition.
    fn brute_force_height_count(n: u32, k: u32) -> u64 {
        let mut count = 0;
        for mask in 0u64..(1 << n) {
            let mut level: i32 = 0;
            let mut max: i32 = 0;
            for bit in 0..n {
                level += if mask >> bit & 1 == 1 { 1 } else { -1 };
                max = max.max(level);
            }
            if max == k as i32 {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn pascalian_examples() {
        assert_eq!(pascalian_number(4, 0).unwrap(), big(6));
        assert_eq!(pascalian_number(5, 5).unwrap(), big(1));
        // 495 = number of 12-step walks of height 4, counted exhaustively.
        assert_eq!(brute_force_height_count(12, 4), 495);
        assert_eq!(pascalian_number(12, 4).unwrap(), big(495));
    }

    #[test]
    fn pascalian_rejects_out_of_range_k() {
        assert!(matches!(pascalian_number(3, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn triangle_rows_match_figure() {
        let expected: [&[i64]; 6] = [
            &[1],
            &[1, 1],
            &[2, 1, 1],
            &[3, 3, 1, 1],
            &[6, 4, 4, 1, 1],
            &[10, 10, 5, 5, 1, 1],
        ];
        for (n, row) in expected.iter().enumerate() {
            let got = triangle_row(n as u32);
            let want: Vec<BigInt> = row.iter().map(|&v| big(v)).collect();
            assert_eq!(got, want, "row {n}");
        }
    }

    #[test]
    fn triangle_row_sums() {
        let row = triangle_row(8);
        let sum: BigInt = row.iter().sum();
        assert_eq!(sum, big(256));
        let sum_sq: BigInt = row.iter().map(|v| v * v).sum();
        assert_eq!(sum_sq, big(12870)); // C(16, 8)
    }

    #[test]
    fn pascalian_recursion_holds() {
        assert_eq!(pasc(1, 0), big(1));
        assert_eq!(pasc(1, 1), big(1));
        for n in 2..=200u32 {
            assert_eq!(pasc(n, n), big(1));
            assert_eq!(pasc(n, n - 1), big(1));
            assert_eq!(pasc(n, 0), pasc(n - 1, 0) + pasc(n - 1, 1));
            for k in 1..n - 1 {
                assert_eq!(pasc(n, k), pasc(n - 1, k - 1) + pasc(n - 1, k + 1));
            }
        }
    }

    #[test]
    fn enumerate_small() {
        let ts = enumerate_tableaux(2).unwrap();
        assert_eq!(ts.len(), 4);
        let mut shapes: Vec<(u32, u32)> = ts.iter().map(shape_of).collect();
        shapes.sort_unstable();
        assert_eq!(shapes, vec![(2, 2), (2, 2), (3, 1), (4, 0)]);

        assert_eq!(enumerate_tableaux(1).unwrap().len(), 2);
    }

    #[test]
    fn enumerate_is_lexicographic_and_complete() {
        let ts = enumerate_tableaux(3).unwrap();
        let subsets: Vec<Vec<u32>> = ts.iter().map(|t| t.subset().to_vec()).collect();
        let expected: Vec<Vec<u32>> = vec![
            vec![],
            vec![1],
            vec![1, 2],
            vec![1, 2, 3],
            vec![1, 3],
            vec![2],
            vec![2, 3],
            vec![3],
        ];
        assert_eq!(subsets, expected);
    }

    #[test]
    fn enumerate_n10_shape_counts() {
        let ts = enumerate_tableaux(10).unwrap();
        assert_eq!(ts.len(), 1024);
        let square = ts.iter().filter(|t| shape_of(t) == (10, 10)).count();
        assert_eq!(square, 252); // C(10, 5)
        for k in 0..=10u32 {
            let count = ts
                .iter()
                .filter(|t| shape_of(t) == (10 + k, 10 - k))
                .count();
            assert_eq!(BigInt::from(count), pasc(10, k), "shape (10+{k}, 10-{k})");
        }
    }

    #[test]
    fn enumeration_cap_enforced() {
        assert!(matches!(
            enumerate_tableaux(15),
            Err(Error::EnumerationCap { n: 15, cap: 14 })
        ));
        assert_eq!(enumerate_tableaux_with_cap(15, 16).unwrap().len(), 32768);
    }

    #[test]
    fn shape_replay_examples() {
        let t = Tableau::new(2, [1, 2]).unwrap();
        assert_eq!(shape_of(&t), (4, 0));
        let t = Tableau::new(2, []).unwrap();
        assert_eq!(shape_of(&t), (2, 2));
        let t = Tableau::new(1, []).unwrap();
        assert_eq!(shape_of(&t), (1, 1));
    }

    #[test]
    fn tableau_rejects_bad_labels() {
        assert!(Tableau::new(2, [3]).is_err());
        assert!(Tableau::new(2, [0]).is_err());
        assert!(Tableau::new(3, [2, 2]).is_err());
    }

    #[test]
    fn phi_examples() {
        let t = Tableau::new(2, [1, 2]).unwrap();
        let w = phi(&t);
        assert_eq!(w.to_string(), "UU");
        assert_eq!(walk_height(&w), 2);

        let t = Tableau::new(2, []).unwrap();
        let w = phi(&t);
        assert_eq!(w.to_string(), "DD");
        assert_eq!(walk_height(&w), 0);

        let t = Tableau::new(2, [2]).unwrap();
        assert_eq!(shape_of(&t), (3, 1));
        let w = phi(&t);
        assert_eq!(w.to_string(), "UD");
        assert_eq!(walk_height(&w), 1);
    }

    #[test]
    fn walk_height_examples() {
        let w = Walk::new(vec![false, false]);
        assert_eq!(walk_height(&w), 0);
        let w = Walk::new(vec![true, true]);
        assert_eq!(walk_height(&w), 2);
        // UDDDUU: prefix sums 1,0,-1,-2,-1,0
        let w = Walk::new(vec![true, false, false, false, true, true]);
        assert_eq!(walk_height(&w), 1);
        assert_eq!(walk_height(&Walk::new(vec![])), 0);
    }

    #[test]
    fn histogram_small() {
        assert_eq!(
            height_histogram(2).unwrap(),
            vec![big(2), big(1), big(1)]
        );
        assert_eq!(height_histogram(1).unwrap(), vec![big(1), big(1)]);
    }

    #[test]
    fn histogram_matches_triangle_row() {
        for n in [3u32, 7, 12] {
            assert_eq!(height_histogram(n).unwrap(), triangle_row(n), "n = {n}");
        }
    }

    #[test]
    fn phi_is_bijective_with_statistics() {
        for n in 1..=10u32 {
            let ts = enumerate_tableaux(n).unwrap();
            let mut seen = HashSet::new();
            for t in &ts {
                let w = phi(t);
                assert_eq!(w.len() as u32, n);
                // point 1: up steps = horizontal dominos in row 1
                assert_eq!(w.ups(), t.subset().len());
                let (l1, l2) = shape_of(t);
                // point 2: equal rows iff height 0
                assert_eq!(l1 == l2, walk_height(&w) == 0);
                // point 3: shape (n+k, n-k) iff height k
                assert_eq!(l1 - l2, 2 * walk_height(&w));
                assert!(seen.insert(w.steps().to_vec()), "phi collision at n={n}");
            }
            assert_eq!(seen.len(), 1usize << n);
        }
    }

    #[test]
    fn subset_size_distribution_is_binomial() {
        for n in 1..=10u32 {
            let ts = enumerate_tableaux(n).unwrap();
            for k in 0..=n {
                let count = ts.iter().filter(|t| t.subset().len() == k as usize).count();
                assert_eq!(BigInt::from(count), binomial(n.into(), k.into()));
            }
        }
    }
}
