//! Integer partitions, Young diagrams, cycle types, and their statistics.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers; it
//! doubles as a Young diagram (row lengths, English convention) and as the
//! label of an irreducible representation of `S_n`. A [`CycleType`] is the
//! multiplicity vector of cycle lengths of a permutation; it doubles as the
//! weight of a ribbon tableau.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// Coset on which a walk equilibrates: the alternating group, its
/// complement, or the full symmetric group (aperiodic walks only).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CosetId {
    Even,
    Odd,
    Full,
}

/// An integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Creates a partition, validating that parts are positive and weakly
    /// decreasing. The empty partition (of 0) is allowed.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p >= 1);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p >= 1));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single row `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Single column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// Total size `n` (number of cells).
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (0-based), 0 past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// First row length; 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.part(0)
    }

    /// Transposed diagram. An involution.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Self::empty();
        }
        let cols = self.parts[0];
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols {
            parts.push(self.parts.iter().take_while(|&&p| p > j).count());
        }
        Partition { parts }
    }

    /// Level `r = n - first row`: the number of cells outside the first row.
    pub fn level(&self) -> usize {
        self.size() - self.first_part()
    }

    /// `(r, r_sym)` where `r = n - λ1` and `r_sym = max(n - λ1, n - λ1')`.
    ///
    /// Eigenvalue bounds use the smaller of the two levels instead; see
    /// [`crate::characters::classical_transposition_bound`].
    pub fn levels(&self) -> (usize, usize) {
        let n = self.size();
        let r = n - self.first_part();
        let r_conj = n - self.rows();
        (r, r.max(r_conj))
    }

    /// Smaller of the level of the diagram and of its conjugate.
    pub fn min_level(&self) -> usize {
        let n = self.size();
        (n - self.first_part()).min(n - self.rows())
    }

    /// Diagram minus its first row: `(λ2, λ3, ...)`.
    pub fn strip_first_row(&self) -> Partition {
        if self.parts.len() <= 1 {
            return Self::empty();
        }
        Partition {
            parts: self.parts[1..].to_vec(),
        }
    }

    /// Cell-wise containment of Young diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    /// Cells of the diagram as `(row, col)` pairs, 0-based, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p {
                out.push((i, j));
            }
        }
        out
    }

    /// Cycle type of a permutation whose cycle lengths are the parts.
    pub fn to_cycle_type(&self) -> CycleType {
        CycleType::from_parts(&self.parts).expect("partition parts are positive")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Every partition of `n`, each exactly once, in lexicographically
/// descending order: `(n)` first, `(1^n)` last.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(remaining: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted_unchecked(stack.clone()));
            return;
        }
        let top = remaining.min(max_part);
        for next in (1..=top).rev() {
            stack.push(next);
            rec(remaining - next, next, stack, out);
            stack.pop();
        }
    }
    rec(n, n, &mut stack, &mut out);
    out
}

/// Number of integer partitions `p(n)`, exact, via Euler's pentagonal
/// number recurrence (OEIS A000041). `O(n^{3/2})` table construction.
pub fn partition_count(n: usize) -> BigUint {
    let mut table: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    table[0] = BigUint::one();
    for m in 1..=n {
        let mut acc = num_bigint::BigInt::zero();
        let mut k: usize = 1;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = k % 2 == 1;
            let mut term = num_bigint::BigInt::from(table[m - g1].clone());
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                term += num_bigint::BigInt::from(table[m - g2].clone());
            }
            if sign {
                acc += term;
            } else {
                acc -= term;
            }
            k += 1;
        }
        table[m] = acc.to_biguint().expect("partition counts are nonnegative");
    }
    table[n].clone()
}

/// `n!` as an exact big integer.
pub fn factorial(n: usize) -> BigUint {
    let mut out = BigUint::one();
    for i in 2..=n {
        out *= BigUint::from(i);
    }
    out
}

/// Binomial coefficient `C(n, k)`, exact.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut out = BigUint::one();
    for i in 0..k {
        out = out * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    out
}

/// Cycle type of a permutation: sparse map `i -> f_i` of cycle-length
/// multiplicities, with `n = Σ i·f_i`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<usize, usize>", into = "BTreeMap<usize, usize>")]
pub struct CycleType {
    multiplicities: BTreeMap<usize, usize>,
    n: usize,
}

impl CycleType {
    /// Builds a cycle type from a multiplicity map. Zero multiplicities are
    /// dropped; cycle length 0 is rejected.
    pub fn from_multiplicities(map: BTreeMap<usize, usize>) -> Result<Self> {
        if map.keys().any(|&i| i == 0) {
            return Err(Error::InvalidCycleType("cycle length 0".into()));
        }
        let multiplicities: BTreeMap<usize, usize> =
            map.into_iter().filter(|&(_, f)| f > 0).collect();
        let n = multiplicities.iter().map(|(&i, &f)| i * f).sum();
        Ok(CycleType { multiplicities, n })
    }

    /// Builds a cycle type from a list of cycle lengths (any order).
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &p in parts {
            if p == 0 {
                return Err(Error::InvalidCycleType("cycle length 0".into()));
            }
            *map.entry(p).or_insert(0) += 1;
        }
        Self::from_multiplicities(map)
    }

    /// The identity class `1^n`.
    pub fn identity(n: usize) -> Self {
        Self::from_multiplicities(BTreeMap::from([(1, n)])).expect("valid")
    }

    /// The class `2^s 1^{n-2s}` of involutions with `s` two-cycles.
    pub fn involution(n: usize, s: usize) -> Result<Self> {
        if 2 * s > n {
            return Err(Error::InvalidCycleType(format!(
                "{s} two-cycles do not fit in S_{n}"
            )));
        }
        Self::from_multiplicities(BTreeMap::from([(1, n - 2 * s), (2, s)]))
    }

    /// The transposition class `2 1^{n-2}`.
    pub fn transposition(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DegreeTooSmall {
                what: "transposition class",
                min: 2,
                got: n,
            });
        }
        Self::involution(n, 1)
    }

    /// Single `n`-cycle.
    pub fn single_cycle(n: usize) -> Result<Self> {
        Self::from_parts(&[n])
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Multiplicity `f_i` of `i`-cycles.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.multiplicities.get(&i).copied().unwrap_or(0)
    }

    /// Number of fixed points `f_1`.
    pub fn fixed_points(&self) -> usize {
        self.multiplicity(1)
    }

    /// Support size `n - f_1`.
    pub fn support(&self) -> usize {
        self.n - self.fixed_points()
    }

    /// True when the class is `{id}` (all parts 1, or empty).
    pub fn is_identity(&self) -> bool {
        self.support() == 0
    }

    /// Iterates `(i, f_i)` with `f_i >= 1`, increasing in `i`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.multiplicities.iter().map(|(&i, &f)| (i, f))
    }

    /// Cycle lengths in weakly increasing order.
    pub fn parts(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, f) in self.iter() {
            out.extend(std::iter::repeat(i).take(f));
        }
        out
    }

    /// Dense multiplicity vector `[f_1, f_2, ..., f_max]`.
    pub fn dense(&self) -> Vec<usize> {
        let max = self.multiplicities.keys().next_back().copied().unwrap_or(0);
        let mut out = vec![0; max];
        for (i, f) in self.iter() {
            out[i - 1] = f;
        }
        out
    }

    /// The same data as a partition (cycle lengths weakly decreasing).
    pub fn to_partition(&self) -> Partition {
        let mut parts = self.parts();
        parts.reverse();
        Partition::from_sorted_unchecked(parts)
    }

    /// Sign of any permutation in the class: `(-1)^{Σ (i-1) f_i}`.
    pub fn sign(&self) -> i8 {
        let transpositions: usize = self.iter().map(|(i, f)| (i - 1) * f).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Centralizer order `z = Π i^{f_i} f_i!`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for (i, f) in self.iter() {
            z *= BigUint::from(i).pow(f as u32) * factorial(f);
        }
        z
    }

    /// Conjugacy class size `n! / z`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.n) / self.centralizer_order()
    }
}

impl TryFrom<BTreeMap<usize, usize>> for CycleType {
    type Error = Error;
    fn try_from(map: BTreeMap<usize, usize>) -> Result<Self> {
        CycleType::from_multiplicities(map)
    }
}

impl From<CycleType> for BTreeMap<usize, usize> {
    fn from(ct: CycleType) -> Self {
        ct.multiplicities
    }
}

impl fmt::Display for CycleType {
    /// Multiplicity notation, e.g. `1^3 2` for one 2-cycle on 5 points.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicities.is_empty() {
            return write!(f, "()");
        }
        let mut first = true;
        for (i, m) in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{i}")?;
            } else {
                write!(f, "{i}^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType({self})")
    }
}

/// Exact representation of `f_i^{1/i}`: the multiplicity together with the
/// root index. Comparisons are exact (cross-powers of big integers), the
/// floating value is for display and downstream estimates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootValue {
    pub multiplicity: usize,
    pub index: usize,
}

impl RootValue {
    pub fn value(&self) -> f64 {
        (self.multiplicity as f64).powf(1.0 / self.index as f64)
    }

    /// Exact comparison of `f^{1/i}` against `g^{1/j}` via `f^j` vs `g^i`.
    pub fn cmp_exact(&self, other: &RootValue) -> std::cmp::Ordering {
        let lhs = BigUint::from(self.multiplicity).pow(other.index as u32);
        let rhs = BigUint::from(other.multiplicity).pow(self.index as u32);
        lhs.cmp(&rhs)
    }
}

/// The cycle statistics governing finite-level character bounds.
#[derive(Debug, Clone)]
pub struct CycleStats {
    /// `max_i f_i^{1/i}` over all cycle lengths with `f_i >= 1`.
    pub max_root: RootValue,
    /// Same maximum restricted to lengths `i >= 2`; `None` means the
    /// maximum over an empty set, which evaluates to 0.
    pub long_cycle_root: Option<RootValue>,
    /// `ln(max_root) / ln(n)`.
    pub growth_exponent: f64,
}

impl CycleStats {
    /// Floating value of the unrestricted maximum.
    pub fn max_root_value(&self) -> f64 {
        self.max_root.value()
    }

    /// Floating value of the `i >= 2` maximum, 0 when the set is empty.
    pub fn long_cycle_value(&self) -> f64 {
        self.long_cycle_root.map_or(0.0, |r| r.value())
    }
}

/// Computes the maxima of `f_i^{1/i}` (over all `i`, and over `i >= 2`)
/// together with the logarithmic rescaling of the first.
///
/// Requires `n >= 2` so that the rescaling by `ln n` is well defined. Ties
/// are resolved toward the smallest cycle length.
pub fn cycle_stats(alpha: &CycleType) -> Result<CycleStats> {
    let n = alpha.size();
    if n < 2 {
        return Err(Error::DegreeTooSmall {
            what: "cycle_stats",
            min: 2,
            got: n,
        });
    }
    let mut best: Option<RootValue> = None;
    let mut best_long: Option<RootValue> = None;
    for (i, f) in alpha.iter() {
        let cand = RootValue {
            multiplicity: f,
            index: i,
        };
        if best.map_or(true, |b| cand.cmp_exact(&b) == std::cmp::Ordering::Greater) {
            best = Some(cand);
        }
        if i >= 2 && best_long.map_or(true, |b| cand.cmp_exact(&b) == std::cmp::Ordering::Greater) {
            best_long = Some(cand);
        }
    }
    let max_root = best.expect("n >= 2 implies a nonempty cycle type");
    let growth_exponent = max_root.value().ln() / (n as f64).ln();
    Ok(CycleStats {
        max_root,
        long_cycle_root: best_long,
        growth_exponent,
    })
}

/// Stationary coset for a class walk: the odd coset exactly when both the
/// class and the time are odd, the alternating group otherwise.
pub fn coset_target(class_sign: i8, t: usize) -> CosetId {
    if class_sign < 0 && t % 2 == 1 {
        CosetId::Odd
    } else {
        CosetId::Even
    }
}

/// Fully fragments the smallest ribbon of size at least 2: with
/// `I = min{i >= 2 : f_i >= 1}`, moves one `I`-cycle into `I` fixed points.
/// Preserves the total size and strictly increases `f_1`.
pub fn fragment_smallest(alpha: &CycleType) -> Result<CycleType> {
    let smallest = alpha.iter().map(|(i, _)| i).find(|&i| i >= 2);
    let i = smallest.ok_or(Error::NothingToFragment)?;
    let mut map: BTreeMap<usize, usize> = alpha.iter().collect();
    *map.get_mut(&i).expect("present") -= 1;
    *map.entry(1).or_insert(0) += i;
    CycleType::from_multiplicities(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn enumeration_order_and_counts() {
        let parts4: Vec<Vec<usize>> = enumerate_partitions(4)
            .into_iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            parts4,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(10).len(), 42);
    }

    #[test]
    fn count_matches_enumeration() {
        for n in 0..=40 {
            assert_eq!(
                partition_count(n),
                BigUint::from(enumerate_partitions(n).len()),
                "n = {n}"
            );
        }
        assert_eq!(partition_count(52), BigUint::from(281589u64));
        assert_eq!(partition_count(0), BigUint::one());
        // the enumeration agrees at the deck size too
        assert_eq!(enumerate_partitions(52).len(), 281589);
    }

    #[test]
    fn conjugate_examples() {
        let p = Partition::new(vec![37, 10, 6, 3, 2]).unwrap();
        assert_eq!(p.conjugate().first_part(), 5);
        assert_eq!(p.cells().len(), p.size());
        assert_eq!(Partition::row(7).conjugate(), Partition::column(7));
        let self_conj = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(self_conj.conjugate(), self_conj);
    }

    #[test]
    fn levels_examples() {
        let n = 9;
        assert_eq!(Partition::row(n).levels(), (0, n - 1));
        let hook = Partition::new(vec![n - 1, 1]).unwrap();
        assert_eq!(hook.levels(), (1, n - 2));
        let p = Partition::new(vec![4, 2]).unwrap();
        assert_eq!(p.levels(), (2, 4));
        assert_eq!(p.min_level(), 2);
    }

    #[test]
    fn cycle_stats_examples() {
        // f_1 = 4, f_2 = 6 on n = 16: max is 4^{1/1}, exponent 1/2
        let a = CycleType::from_multiplicities(BTreeMap::from([(1, 4), (2, 6)])).unwrap();
        let s = cycle_stats(&a).unwrap();
        assert_eq!(s.max_root.multiplicity, 4);
        assert_eq!(s.max_root.index, 1);
        assert!((s.growth_exponent - 0.5).abs() < 1e-12);

        let id = CycleType::identity(12);
        let s = cycle_stats(&id).unwrap();
        assert_eq!(s.max_root_value(), 12.0);
        assert_eq!(s.long_cycle_value(), 0.0);
        assert!((s.growth_exponent - 1.0).abs() < 1e-12);

        let cyc = CycleType::single_cycle(12).unwrap();
        let s = cycle_stats(&cyc).unwrap();
        assert_eq!(s.max_root_value(), 1.0);
        assert!(s.growth_exponent.abs() < 1e-12);

        assert!(cycle_stats(&CycleType::identity(1)).is_err());
    }

    #[test]
    fn coset_targets() {
        assert_eq!(coset_target(-1, 1), CosetId::Odd);
        assert_eq!(coset_target(-1, 2), CosetId::Even);
        assert_eq!(coset_target(1, 7), CosetId::Even);
    }

    #[test]
    fn fragmentation_examples() {
        // 1^9 7^2 11 -> 1^16 7 11
        let a = CycleType::from_multiplicities(BTreeMap::from([(1, 9), (7, 2), (11, 1)])).unwrap();
        let b = fragment_smallest(&a).unwrap();
        assert_eq!(
            b,
            CycleType::from_multiplicities(BTreeMap::from([(1, 16), (7, 1), (11, 1)])).unwrap()
        );

        let two = CycleType::single_cycle(2).unwrap();
        assert_eq!(fragment_smallest(&two).unwrap(), CycleType::identity(2));

        let a = CycleType::from_parts(&[1, 3]).unwrap();
        assert_eq!(fragment_smallest(&a).unwrap(), CycleType::identity(4));

        assert!(fragment_smallest(&CycleType::identity(5)).is_err());
    }

    #[test]
    fn fragmentation_terminates_in_fixed_points() {
        for lam in enumerate_partitions(9) {
            let mut a = lam.to_cycle_type();
            let mut guard = 0;
            while !a.is_identity() {
                let next = fragment_smallest(&a).unwrap();
                assert_eq!(next.size(), a.size());
                assert!(next.fixed_points() > a.fixed_points());
                a = next;
                guard += 1;
                assert!(guard <= 9);
            }
        }
    }

    #[test]
    fn sign_matches_brute_force_parity() {
        // compare the multiplicity formula against transposition counting
        // over all of S_n for small n
        fn perm_parity(perm: &[usize]) -> i8 {
            let mut seen = vec![false; perm.len()];
            let mut transpositions = 0;
            for start in 0..perm.len() {
                if seen[start] {
                    continue;
                }
                let mut len = 0;
                let mut at = start;
                while !seen[at] {
                    seen[at] = true;
                    at = perm[at];
                    len += 1;
                }
                transpositions += len - 1;
            }
            if transpositions % 2 == 0 {
                1
            } else {
                -1
            }
        }
        fn cycle_type_of(perm: &[usize]) -> CycleType {
            let mut seen = vec![false; perm.len()];
            let mut parts = Vec::new();
            for start in 0..perm.len() {
                if seen[start] {
                    continue;
                }
                let mut len = 0;
                let mut at = start;
                while !seen[at] {
                    seen[at] = true;
                    at = perm[at];
                    len += 1;
                }
                parts.push(len);
            }
            CycleType::from_parts(&parts).unwrap()
        }
        for n in 1..=8 {
            let mut perm: Vec<usize> = (0..n).collect();
            loop {
                assert_eq!(cycle_type_of(&perm).sign(), perm_parity(&perm));
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
    }

    pub(crate) fn next_permutation(arr: &mut [usize]) -> bool {
        if arr.len() < 2 {
            return false;
        }
        let mut i = arr.len() - 1;
        while i > 0 && arr[i - 1] >= arr[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = arr.len() - 1;
        while arr[j] <= arr[i - 1] {
            j -= 1;
        }
        arr.swap(i - 1, j);
        arr[i..].reverse();
        true
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=8 {
            let total: BigUint = enumerate_partitions(n)
                .iter()
                .map(|p| p.to_cycle_type().class_size())
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn serde_round_trip() {
        let p = Partition::new(vec![5, 3, 1]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[5,3,1]");
        assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());

        let a = CycleType::from_parts(&[2, 1, 1, 1]).unwrap();
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"1":3,"2":1}"#);
        assert_eq!(serde_json::from_str::<CycleType>(&json).unwrap(), a);
        assert_eq!(a.dense(), vec![3, 1]);
        assert_eq!(a.parts(), vec![1, 1, 1, 2]);
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=20 {
            for p in enumerate_partitions(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().size(), n);
            }
        }
    }

    proptest! {
        #[test]
        fn enumeration_is_strictly_descending(n in 1usize..=16) {
            let all = enumerate_partitions(n);
            for w in all.windows(2) {
                prop_assert!(w[0] > w[1]);
            }
            for p in &all {
                prop_assert_eq!(p.size(), n);
            }
        }
    }
}
