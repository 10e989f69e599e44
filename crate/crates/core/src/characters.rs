//! Exact character evaluation for symmetric groups, fast closed forms, and
//! finite-level estimators.
//!
//! The engine evaluates `ch^λ(σ)` by recursive border-strip removal, always
//! removing the largest remaining cycle length first (long ribbons admit the
//! fewest placements, which prunes the recursion fastest). Once only
//! fixed points remain, the signed count collapses to the dimension of the
//! remaining shape, since every all-ones tiling is flat. Results are
//! memoized globally on the `(remaining shape, remaining multiset)` pair and
//! are exact big integers throughout.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::tableaux::{border_strip_removals, dimension};
use crate::young::{cycle_stats, enumerate_partitions, factorial, CycleType, Partition};
use crate::Result;

/// An exact character value: the raw trace `ch^λ(σ)` and its normalization
/// `χ^λ(σ) = ch^λ(σ) / d_λ` (always in `[-1, 1]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterValue {
    pub raw: BigInt,
    pub normalized: BigRational,
}

type MemoKey = (Box<[u32]>, Box<[u32]>);

fn memo() -> &'static Mutex<HashMap<MemoKey, BigInt>> {
    static MEMO: OnceLock<Mutex<HashMap<MemoKey, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn memo_key(shape: &Partition, parts: &[usize]) -> MemoKey {
    (
        shape.parts().iter().map(|&p| p as u32).collect(),
        parts.iter().map(|&p| p as u32).collect(),
    )
}

/// `ch` on the remaining shape for the remaining multiset of cycle lengths,
/// sorted ascending; removes from the back (largest first).
fn raw_character_rec(shape: &Partition, parts: &[usize]) -> BigInt {
    let Some((&largest, rest)) = parts.split_last() else {
        return BigInt::one(); // empty shape: sizes are checked upstream
    };
    if largest == 1 {
        // only fixed points left: d_shape flat tilings, all of height 0
        return BigInt::from(dimension(shape));
    }
    let key = memo_key(shape, parts);
    if let Some(hit) = memo().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let mut total = BigInt::zero();
    for removal in border_strip_removals(shape, largest) {
        let sub = raw_character_rec(&removal.shape, rest);
        if removal.height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo().lock().unwrap().insert(key, total.clone());
    total
}

/// Exact irreducible character `ch^λ` evaluated on the class `α`, via the
/// memoized border-strip recursion.
pub fn character(shape: &Partition, class: &CycleType) -> Result<CharacterValue> {
    if shape.size() != class.size() {
        return Err(Error::SizeMismatch {
            shape: shape.size(),
            weight: class.size(),
        });
    }
    let raw = raw_character_rec(shape, &class.parts());
    let dim = BigInt::from(dimension(shape));
    Ok(CharacterValue {
        normalized: BigRational::new(raw.clone(), dim),
        raw,
    })
}

/// Normalized character of the transposition class via the content-sum
/// closed form `χ^λ(T) = [Σ_j λ_j (λ_j - 2j + 1)] / (n(n-1))`, exact.
/// Coincides with the border-strip evaluation on `2·1^{n-2}`.
pub fn transposition_character(shape: &Partition) -> Result<BigRational> {
    let n = shape.size();
    if n < 2 {
        return Err(Error::DegreeTooSmall {
            what: "transposition_character",
            min: 2,
            got: n,
        });
    }
    let mut sum = BigInt::zero();
    for (idx, &p) in shape.parts().iter().enumerate() {
        let j = (idx + 1) as i64;
        sum += BigInt::from(p) * (BigInt::from(p as i64) - BigInt::from(2 * j - 1));
    }
    Ok(BigRational::new(sum, BigInt::from(n) * BigInt::from(n - 1)))
}

/// Exact rational form of the classical transposition eigenvalue bound.
///
/// Conjugating a diagram flips the sign of its transposition eigenvalue, so
/// the bound is driven by the smaller of the levels of `λ` and `λ'`:
/// with `R = min(n - λ1, n - λ1')`, the bound is
/// `1 - 2R(n - R + 1)/(n(n-1))` when `1 <= R <= n/2`, and `1/2` otherwise.
/// Dominates `|χ^λ(T)|`; not meaningful for `λ = (n)` or `(1^n)` (`R = 0`).
pub fn classical_transposition_bound_exact(shape: &Partition) -> Result<BigRational> {
    let n = shape.size();
    if n < 2 {
        return Err(Error::DegreeTooSmall {
            what: "classical_transposition_bound",
            min: 2,
            got: n,
        });
    }
    let r = shape.min_level();
    if r == 0 {
        return Err(Error::InvalidParameter(
            "bound applies to neither the trivial nor the sign diagram".into(),
        ));
    }
    if 2 * r <= n {
        let num = BigInt::from(2 * r) * BigInt::from(n - r + 1);
        let den = BigInt::from(n) * BigInt::from(n - 1);
        Ok(BigRational::one() - BigRational::new(num, den))
    } else {
        Ok(BigRational::new(BigInt::one(), BigInt::from(2)))
    }
}

/// Floating-point convenience wrapper around
/// [`classical_transposition_bound_exact`].
pub fn classical_transposition_bound(shape: &Partition) -> Result<f64> {
    Ok(rational_to_f64(&classical_transposition_bound_exact(
        shape,
    )?))
}

/// First-order finite-level character estimate and its error scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteLevelEstimate {
    /// `(f/n)^r` where `f` is the number of fixed points and `r` the level.
    pub value: f64,
    /// `k/f^2` with `k = n - f`: the scale of the relative error.
    pub error_scale: f64,
}

/// Estimates `χ^λ(σ) ≈ (f/n)^r` for a level-`r` diagram and a class with
/// `f >= 1` fixed points, together with the error scale `k/f²`. Classes
/// without fixed points are rejected (the estimate's hypothesis fails).
pub fn finite_level_estimate(shape: &Partition, class: &CycleType) -> Result<FiniteLevelEstimate> {
    if shape.size() != class.size() {
        return Err(Error::SizeMismatch {
            shape: shape.size(),
            weight: class.size(),
        });
    }
    let f = class.fixed_points();
    if f == 0 {
        return Err(Error::InvalidParameter(
            "finite_level_estimate requires at least one fixed point".into(),
        ));
    }
    let n = shape.size();
    let r = shape.level();
    let k = n - f;
    Ok(FiniteLevelEstimate {
        value: (f as f64 / n as f64).powi(r as i32),
        error_scale: k as f64 / (f as f64 * f as f64),
    })
}

/// Limit of `d_λ χ^λ(σ_n)^{t_n}` along window sequences
/// `t_n = (ln n + c + o(1)) / ln(n / f_1)`: the value `e^{-rc} d_{λ*} / r!`
/// where `r` is the level of `λ` and `λ*` is `λ` minus its first row.
pub fn character_power_limit(shape: &Partition, c: f64) -> f64 {
    let r = shape.level();
    let d_star = dimension(&shape.strip_first_row())
        .to_f64()
        .expect("small dimension");
    let r_fact = factorial(r).to_f64().expect("small factorial");
    (-(r as f64) * c).exp() * d_star / r_fact
}

/// Ratio `|ch^λ(α)| / M(α)^r` between a raw character and the cycle-root
/// bound at the diagram's level. Used to monitor the implicit constant of
/// the finite-level bound; nothing is asserted about its size.
pub fn character_bound_ratio(shape: &Partition, class: &CycleType) -> Result<f64> {
    let value = character(shape, class)?;
    let r = shape.level();
    if r == 0 {
        return Ok(value.raw.to_f64().unwrap_or(f64::NAN).abs());
    }
    let stats = cycle_stats(class)?;
    let m_pow_r = (stats.max_root.multiplicity as f64).powf(r as f64 / stats.max_root.index as f64);
    Ok(bigint_abs_to_f64(&value.raw) / m_pow_r)
}

/// Diagnostic `|χ^λ(α)|·n^{r/2}` used to visualize the decay of characters
/// of classes with few fixed points; plot data only, never asserted.
pub fn level_scaled_character(shape: &Partition, class: &CycleType) -> Result<f64> {
    let value = character(shape, class)?;
    let n = shape.size() as f64;
    let r = shape.level() as f64;
    Ok(rational_to_f64(&value.normalized).abs() * n.powf(r / 2.0))
}

fn bigint_abs_to_f64(x: &BigInt) -> f64 {
    x.abs().to_f64().unwrap_or(f64::INFINITY)
}

pub(crate) fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // fall back to a quotient of floats when the parts overflow
        let n = x.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = x.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Full character table of `S_n`: every `ch^λ(α)` with dimensions and class
/// sizes, ready for Fourier sums over conjugacy classes.
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    classes: Vec<CycleType>,
    /// `raw[i][j] = ch^{partitions[i]}(classes[j])`
    raw: Vec<Vec<BigInt>>,
    dims: Vec<BigUint>,
    class_sizes: Vec<BigUint>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions = enumerate_partitions(n);
        let classes: Vec<CycleType> = partitions.iter().map(|p| p.to_cycle_type()).collect();
        let raw: Vec<Vec<BigInt>> = partitions
            .iter()
            .map(|shape| {
                classes
                    .iter()
                    .map(|class| raw_character_rec(shape, &class.parts()))
                    .collect()
            })
            .collect();
        let dims = partitions.iter().map(dimension).collect();
        let class_sizes = classes.iter().map(|c| c.class_size()).collect();
        CharacterTable {
            n,
            partitions,
            classes,
            raw,
            dims,
            class_sizes,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn raw(&self, shape_idx: usize, class_idx: usize) -> &BigInt {
        &self.raw[shape_idx][class_idx]
    }

    pub fn dimension(&self, shape_idx: usize) -> &BigUint {
        &self.dims[shape_idx]
    }

    pub fn class_size(&self, class_idx: usize) -> &BigUint {
        &self.class_sizes[class_idx]
    }

    pub fn normalized(&self, shape_idx: usize, class_idx: usize) -> BigRational {
        BigRational::new(
            self.raw[shape_idx][class_idx].clone(),
            BigInt::from(self.dims[shape_idx].clone()),
        )
    }

    pub fn index_of_partition(&self, shape: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == shape)
    }

    pub fn index_of_class(&self, class: &CycleType) -> Option<usize> {
        self.classes.iter().position(|c| c == class)
    }
}
