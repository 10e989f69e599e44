//! Exact dimensions, skew standard-tableau counts, and brute-force ribbon
//! tableau enumeration.
//!
//! The enumeration here is deliberately simple and independent of the
//! character engine: it serves as the oracle that the memoized recursion in
//! [`crate::characters`] is checked against.

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::young::{factorial, CycleType, Partition};
use crate::Result;

/// Dimension `d_λ` of the irreducible representation labelled by `λ`:
/// `n! / Π hooks`, exact.
pub fn dimension(shape: &Partition) -> BigUint {
    let n = shape.size();
    if n == 0 {
        return BigUint::one();
    }
    let conj = shape.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - 1 - j;
            let leg = conj.part(j) - 1 - i;
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    factorial(n) / hooks
}

/// A skew diagram `outer \ inner` with `inner ⊆ outer` cell-wise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InnerNotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of cells of the skew diagram.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }
}

/// Number of standard tableaux of the skew shape, exact, via the
/// determinant formula `N! · det[ 1 / (λ_i - μ_j - i + j)! ]`.
///
/// Results are memoized on the normalized `(outer, inner)` pair.
pub fn skew_syt_count(shape: &SkewShape) -> BigUint {
    static MEMO: OnceLock<Mutex<HashMap<(Vec<usize>, Vec<usize>), BigUint>>> = OnceLock::new();
    let key = (shape.outer.parts().to_vec(), shape.inner.parts().to_vec());
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = memo.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let value = skew_syt_count_determinant(&shape.outer, &shape.inner);
    memo.lock().unwrap().insert(key, value.clone());
    value
}

fn skew_syt_count_determinant(outer: &Partition, inner: &Partition) -> BigUint {
    let rows = outer.rows();
    if rows == 0 {
        return BigUint::one();
    }
    let size = outer.size() - inner.size();
    let mut matrix = vec![vec![BigRational::zero(); rows]; rows];
    for i in 0..rows {
        for j in 0..rows {
            // entry 1/(λ_i - μ_j - i + j)!, zero for negative arguments
            let a = outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64;
            if a >= 0 {
                matrix[i][j] = BigRational::new(BigInt::one(), BigInt::from(factorial(a as usize)));
            }
        }
    }
    let det = determinant(matrix);
    let count = det * BigRational::from(BigInt::from(factorial(size)));
    debug_assert!(count.is_integer() && !count.is_negative());
    count
        .to_integer()
        .to_biguint()
        .expect("count is nonnegative")
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(pivot) = pivot else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col].clone();
        let inv = m[col][col].recip();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() * inv.clone();
            for c in col..n {
                let sub = factor.clone() * m[col][c].clone();
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Recursive corner-peeling count of skew standard tableaux; used to
/// cross-check the determinant route on small shapes.
#[allow(dead_code)]
pub(crate) fn skew_syt_count_peeling(outer: &Partition, inner: &Partition) -> BigUint {
    if outer.size() == inner.size() {
        return BigUint::one();
    }
    let mut total = BigUint::zero();
    for i in 0..outer.rows() {
        let row = outer.part(i);
        // the last cell of row i is removable iff it stays outside inner
        // and the next row is strictly shorter
        if row > inner.part(i) && outer.part(i + 1) < row {
            let mut parts = outer.parts().to_vec();
            parts[i] -= 1;
            parts.retain(|&p| p > 0);
            let smaller = Partition::from_sorted_unchecked(parts);
            total += skew_syt_count_peeling(&smaller, inner);
        }
    }
    total
}

/// One way of removing a border strip: the remaining shape and the strip's
/// height (rows spanned minus one).
#[derive(Debug, Clone)]
pub(crate) struct StripRemoval {
    pub shape: Partition,
    pub height: usize,
}

/// All ways to remove a border strip of `len` cells from `shape` so that a
/// Young diagram remains, via first-column hook lengths (beta-numbers).
pub(crate) fn border_strip_removals(shape: &Partition, len: usize) -> Vec<StripRemoval> {
    let rows = shape.rows();
    if len == 0 || len > shape.size() {
        return Vec::new();
    }
    let beta: Vec<usize> = (0..rows).map(|i| shape.part(i) + rows - 1 - i).collect();
    let mut out = Vec::new();
    for i in 0..rows {
        if beta[i] < len {
            continue;
        }
        let target = beta[i] - len;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&b| target < b && b < beta[i]).count();
        let mut new_beta = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<usize> = new_beta
            .iter()
            .enumerate()
            .map(|(k, &b)| b - (rows - 1 - k))
            .collect();
        parts.retain(|&p| p > 0);
        out.push(StripRemoval {
            shape: Partition::from_sorted_unchecked(parts),
            height,
        });
    }
    out
}

/// A ribbon tableau: an ordered tiling of a diagram by border strips.
///
/// `ribbons[k]` holds the cells (0-based `(row, col)`) of the `k`-th ribbon
/// in placement order, `heights[k]` its height. Serializes as a JSON list of
/// `{"cells": [[row, col], ...], "height": h}` in placement order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonTableau {
    pub ribbons: Vec<Vec<(usize, usize)>>,
    pub heights: Vec<usize>,
    pub weight: CycleType,
}

impl RibbonTableau {
    /// Total height: the sum of the per-ribbon heights.
    pub fn height(&self) -> usize {
        self.heights.iter().sum()
    }

    /// Sign `(-1)^{height}` of the tableau.
    pub fn sign(&self) -> i8 {
        if self.height() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl Serialize for RibbonTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            cells: &'a [(usize, usize)],
            height: usize,
        }
        let mut seq = serializer.serialize_seq(Some(self.ribbons.len()))?;
        for (cells, &height) in self.ribbons.iter().zip(&self.heights) {
            seq.serialize_element(&Entry { cells, height })?;
        }
        seq.end()
    }
}

fn check_sizes(shape: &Partition, weight_size: usize) -> Result<()> {
    if shape.size() != weight_size {
        return Err(Error::SizeMismatch {
            shape: shape.size(),
            weight: weight_size,
        });
    }
    Ok(())
}

/// Enumerates every ribbon tableau of the given shape and weight exactly
/// once. Ribbons are placed in the fixed order of the weight's parts sorted
/// weakly increasing; the enumeration peels them back from the last
/// (largest) label. The signed sum over tableaux is independent of the
/// placement order, but the count per fixed order is not, so this order is
/// part of the contract. Intended as an oracle for `|λ| <= 14` or so.
pub fn enumerate_ribbon_tableaux(
    shape: &Partition,
    weight: &CycleType,
) -> Result<Vec<RibbonTableau>> {
    check_sizes(shape, weight.size())?;
    let parts = weight.parts(); // weakly increasing
    let mut out = Vec::new();
    let mut removals: Vec<(Vec<(usize, usize)>, usize)> = Vec::new();
    peel(
        shape,
        &parts,
        &Partition::empty(),
        &mut removals,
        &mut |removals| {
            let mut ribbons: Vec<Vec<(usize, usize)>> = Vec::with_capacity(removals.len());
            let mut heights = Vec::with_capacity(removals.len());
            for (cells, height) in removals.iter().rev() {
                ribbons.push(cells.clone());
                heights.push(*height);
            }
            out.push(RibbonTableau {
                ribbons,
                heights,
                weight: weight.clone(),
            });
        },
    );
    Ok(out)
}

/// Depth-first peel of the last ribbon; `visit` fires on complete peels with
/// the removals in peel order (reverse placement order).
fn peel(
    shape: &Partition,
    parts: &[usize],
    floor: &Partition,
    removals: &mut Vec<(Vec<(usize, usize)>, usize)>,
    visit: &mut impl FnMut(&Vec<(Vec<(usize, usize)>, usize)>),
) {
    let Some((&last, rest)) = parts.split_last() else {
        visit(removals);
        return;
    };
    for removal in border_strip_removals(shape, last) {
        if !removal.shape.contains(floor) {
            continue;
        }
        let cells = cell_difference(shape, &removal.shape);
        removals.push((cells, removal.height));
        peel(&removal.shape, rest, floor, removals, visit);
        removals.pop();
    }
}

fn cell_difference(big: &Partition, small: &Partition) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..big.rows() {
        for j in small.part(i)..big.part(i) {
            out.push((i, j));
        }
    }
    out
}

/// Number of ribbon tableaux of the given shape and weight, memoized on the
/// remaining `(shape, parts)` pair. Equivalent to
/// `enumerate_ribbon_tableaux(...).len()` but does not materialize cells.
pub fn count_ribbon_tableaux(shape: &Partition, weight: &CycleType) -> Result<BigUint> {
    check_sizes(shape, weight.size())?;
    let mut memo: HashMap<(Vec<usize>, Vec<usize>), BigUint> = HashMap::new();
    fn rec(
        shape: &Partition,
        parts: &[usize],
        memo: &mut HashMap<(Vec<usize>, Vec<usize>), BigUint>,
    ) -> BigUint {
        let Some((&last, rest)) = parts.split_last() else {
            return BigUint::one();
        };
        let key = (shape.parts().to_vec(), parts.to_vec());
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        let mut total = BigUint::zero();
        for removal in border_strip_removals(shape, last) {
            total += rec(&removal.shape, rest, memo);
        }
        memo.insert(key, total.clone());
        total
    }
    Ok(rec(shape, &weight.parts(), &mut memo))
}

/// Number of ways to tile the skew shape by ribbons of the given lengths,
/// placed in weakly increasing order.
pub fn skew_ribbon_cover_count(shape: &SkewShape, lengths: &[usize]) -> Result<BigUint> {
    let total: usize = lengths.iter().sum();
    if total != shape.size() {
        return Err(Error::SizeMismatch {
            shape: shape.size(),
            weight: total,
        });
    }
    let mut parts = lengths.to_vec();
    parts.sort_unstable();
    let mut memo: HashMap<(Vec<usize>, Vec<usize>), BigUint> = HashMap::new();
    fn rec(
        shape: &Partition,
        floor: &Partition,
        parts: &[usize],
        memo: &mut HashMap<(Vec<usize>, Vec<usize>), BigUint>,
    ) -> BigUint {
        let Some((&last, rest)) = parts.split_last() else {
            return BigUint::one();
        };
        let key = (shape.parts().to_vec(), parts.to_vec());
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        let mut total = BigUint::zero();
        for removal in border_strip_removals(shape, last) {
            if removal.shape.contains(floor) {
                total += rec(&removal.shape, floor, rest, memo);
            }
        }
        memo.insert(key, total.clone());
        total
    }
    Ok(rec(shape.outer(), shape.inner(), &parts, &mut memo))
}

/// Signed count `Σ_T (-1)^{height(T)}` over all ribbon tableaux of the
/// given shape and weight; by the Murnaghan–Nakayama rule this equals the
/// character value, which is how the character engine is validated.
pub fn signed_ribbon_sum(shape: &Partition, weight: &CycleType) -> Result<BigInt> {
    check_sizes(shape, weight.size())?;
    let mut memo: HashMap<(Vec<usize>, Vec<usize>), BigInt> = HashMap::new();
    fn rec(
        shape: &Partition,
        parts: &[usize],
        memo: &mut HashMap<(Vec<usize>, Vec<usize>), BigInt>,
    ) -> BigInt {
        let Some((&last, rest)) = parts.split_last() else {
            return BigInt::one();
        };
        let key = (shape.parts().to_vec(), parts.to_vec());
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        let mut total = BigInt::zero();
        for removal in border_strip_removals(shape, last) {
            let sub = rec(&removal.shape, rest, memo);
            if removal.height % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        memo.insert(key, total.clone());
        total
    }
    Ok(rec(shape, &weight.parts(), &mut memo))
}

/// Second-order estimate of the dimension ratio `d_μ / d_λ` between a
/// level-`r` diagram of `n` cells and the level-`r` sub-diagram with the
/// same rows below the first, on `f` cells: `(f/n)^r (1 - T(r)·k/(f·n))`
/// with `k = n - f` and `T(r)` the `r`-th triangular number.
pub fn dimension_ratio_estimate(r: usize, n: usize, f: usize) -> Result<f64> {
    if !(2 * r <= f && f <= n) {
        return Err(Error::InvalidParameter(format!(
            "need 0 <= r <= f/2 <= n/2, got r={r}, f={f}, n={n}"
        )));
    }
    if r == 0 {
        return Ok(1.0);
    }
    let k = (n - f) as f64;
    let triangular = (r * (r + 1) / 2) as f64;
    let ratio = (f as f64 / n as f64).powi(r as i32);
    Ok(ratio * (1.0 - triangular * k / (f as f64 * n as f64)))
}
