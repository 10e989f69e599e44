//! Certified reproduction of the transposition-shuffle numerics: main term,
//! error term, and mixing-time brackets, parametric in the degree with
//! `n = 52` as the golden configuration.
//!
//! All quantities are enclosed in [`CertifiedInterval`]s backed by exact
//! rational endpoints, so enclosure is by construction rather than by
//! floating-point error analysis. The only irrational ingredients are `1/e`
//! (bracketed by consecutive partial sums of its alternating series) and
//! one integer square root (bracketed by the floor root and its
//! successor).
//!
//! The distance `d(t)` of the pure transposition walk to its coset target
//! satisfies `|d(t) - m_n(t)| <= ε_n(t)` with
//!
//! - `m_n(t) = ((n-1)/e) ((n-3)/(n-1))^t`, and
//! - `ε_n(t) = Σ_{r=2}^{⌊(n-1)/2⌋} n^r (1 - 2r(n-r+1)/(n(n-1)))^t
//!            + sqrt(p(n)·n!)/2^{t+1} + 1/(n-2)!`.
//!
//! Lower brackets for the mixing time additionally use that `d` is
//! nonincreasing: convolving both the walk distribution and the uniform
//! coset measure by one more uniform step cannot increase total variation,
//! and one more step maps the uniform measure on the current coset to the
//! uniform measure on the next one. The same fact is cross-validated
//! exactly at small degrees in [`crate::walks`].

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::young::{factorial, partition_count};
use crate::Result;

/// A closed interval with exact rational endpoints, `lo <= hi`, used so
/// that every derived quantity provably encloses its true value.
#[derive(Debug, Clone, PartialEq)]
pub struct CertifiedInterval {
    lo: BigRational,
    hi: BigRational,
}

impl CertifiedInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        CertifiedInterval { lo, hi }
    }

    pub fn point(value: BigRational) -> Self {
        CertifiedInterval {
            lo: value.clone(),
            hi: value,
        }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        self.hi.clone() - self.lo.clone()
    }

    pub fn contains(&self, value: &BigRational) -> bool {
        &self.lo <= value && value <= &self.hi
    }

    pub fn add(&self, rhs: &CertifiedInterval) -> Self {
        CertifiedInterval::new(
            self.lo.clone() + rhs.lo.clone(),
            self.hi.clone() + rhs.hi.clone(),
        )
    }

    pub fn mul(&self, rhs: &CertifiedInterval) -> Self {
        let candidates = [
            self.lo.clone() * rhs.lo.clone(),
            self.lo.clone() * rhs.hi.clone(),
            self.hi.clone() * rhs.lo.clone(),
            self.hi.clone() * rhs.hi.clone(),
        ];
        let lo = candidates.iter().min().expect("nonempty").clone();
        let hi = candidates.iter().max().expect("nonempty").clone();
        CertifiedInterval { lo, hi }
    }

    /// Multiplies by an exact scalar.
    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_negative() {
            CertifiedInterval::new(
                self.hi.clone() * factor.clone(),
                self.lo.clone() * factor.clone(),
            )
        } else {
            CertifiedInterval::new(
                self.lo.clone() * factor.clone(),
                self.hi.clone() * factor.clone(),
            )
        }
    }

    /// Midpoint as a float; for display, never for certification.
    pub fn midpoint_f64(&self) -> f64 {
        let mid = (self.lo.clone() + self.hi.clone()) / BigRational::from(BigInt::from(2));
        mid.to_f64().unwrap_or(f64::NAN)
    }

    /// Outward-rounded `f64` endpoints (one ulp of slack each way).
    pub fn to_f64_outward(&self) -> (f64, f64) {
        (
            next_down(self.lo.to_f64().unwrap_or(f64::NEG_INFINITY)),
            next_up(self.hi.to_f64().unwrap_or(f64::INFINITY)),
        )
    }
}

fn next_up(x: f64) -> f64 {
    if x.is_nan() || x == f64::INFINITY {
        return x;
    }
    if x == 0.0 {
        return f64::from_bits(1);
    }
    let bits = x.to_bits();
    if x > 0.0 {
        f64::from_bits(bits + 1)
    } else {
        f64::from_bits(bits - 1)
    }
}

fn next_down(x: f64) -> f64 {
    -next_up(-x)
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Encloses `1/e` between consecutive partial sums of `Σ (-1)^i / i!`.
/// The width after `terms` terms is `1/(terms+1)!`; the default used by the
/// numerics (26 terms) gives width below `1e-26`.
pub fn inv_e_interval(terms: usize) -> CertifiedInterval {
    let terms = terms.max(4);
    let mut partial = BigRational::zero();
    let mut previous = BigRational::zero();
    for i in 0..=terms {
        previous = partial.clone();
        let term = BigRational::new(BigInt::one(), BigInt::from(factorial(i)));
        if i % 2 == 0 {
            partial += term;
        } else {
            partial -= term;
        }
    }
    // alternating series: consecutive partial sums bracket the limit
    if partial <= previous {
        CertifiedInterval::new(partial, previous)
    } else {
        CertifiedInterval::new(previous, partial)
    }
}

/// Default width of the `1/e` bracket, as a power of two.
pub const DEFAULT_PRECISION_BITS: u32 = 128;

/// Series terms needed to bring the `1/e` bracket width `1/(m+1)!` below
/// `2^-bits`.
fn inv_e_terms(bits: u32) -> usize {
    let target = BigUint::one() << bits;
    let mut m = 4;
    while factorial(m + 1) <= target {
        m += 1;
    }
    m
}

/// `1/e` enclosed to width below `2^-bits`.
pub fn inv_e_interval_bits(bits: u32) -> CertifiedInterval {
    inv_e_interval(inv_e_terms(bits))
}

/// Main term `m_n(t) = ((n-1)/e) ((n-3)/(n-1))^t`, enclosed to relative
/// width below `2^-bits` (the only slack comes from the `1/e` bracket).
pub fn main_term_bits(n: usize, t: usize, bits: u32) -> Result<CertifiedInterval> {
    if n < 3 {
        return Err(Error::DegreeTooSmall {
            what: "main_term",
            min: 3,
            got: n,
        });
    }
    let ratio_pow = rational(n as i64 - 3, n as i64 - 1).pow(t as i32);
    let scale = BigRational::from(BigInt::from(n as i64 - 1)) * ratio_pow;
    Ok(inv_e_interval_bits(bits).scale(&scale))
}

/// [`main_term_bits`] at the default 128-bit precision.
pub fn main_term(n: usize, t: usize) -> Result<CertifiedInterval> {
    main_term_bits(n, t, DEFAULT_PRECISION_BITS)
}

/// Exact value of the level sum
/// `Σ_{r=2}^{⌊(n-1)/2⌋} n^r (1 - 2r(n-r+1)/(n(n-1)))^t`, the dominant part
/// of the error term.
pub fn error_term_level_sum(n: usize, t: usize) -> Result<BigRational> {
    if n < 3 {
        return Err(Error::DegreeTooSmall {
            what: "error_term",
            min: 3,
            got: n,
        });
    }
    let mut acc = BigRational::zero();
    for r in 2..=(n - 1) / 2 {
        acc += level_term(n, r, t);
    }
    Ok(acc)
}

fn level_eigenvalue_bound(n: usize, r: usize) -> BigRational {
    BigRational::one()
        - BigRational::new(
            BigInt::from(2 * r) * BigInt::from(n - r + 1),
            BigInt::from(n) * BigInt::from(n - 1),
        )
}

fn level_term(n: usize, r: usize, t: usize) -> BigRational {
    BigRational::from(BigInt::from(n).pow(r as u32)) * level_eigenvalue_bound(n, r).pow(t as i32)
}

/// Certified enclosure of the error term `ε_n(t)`; its upper endpoint is a
/// proven bound on `|d(t) - m_n(t)|`.
pub fn error_term(n: usize, t: usize) -> Result<CertifiedInterval> {
    let level_sum = CertifiedInterval::point(error_term_level_sum(n, t)?);
    // sqrt(p(n) n!) bracketed by the floor square root and its successor
    let radicand: BigUint = partition_count(n) * factorial(n);
    let root = radicand.sqrt();
    let pow2 = BigRational::new(BigInt::one(), BigInt::from(2u8).pow(t as u32 + 1));
    let middle = CertifiedInterval::new(
        BigRational::from(BigInt::from(root.clone())) * pow2.clone(),
        BigRational::from(BigInt::from(root + BigUint::one())) * pow2,
    );
    let tail = CertifiedInterval::point(BigRational::new(
        BigInt::one(),
        BigInt::from(factorial(n - 2)),
    ));
    Ok(level_sum.add(&middle).add(&tail))
}

/// Certified bracket `[max(0, m - ε), m + ε]` for the walk's distance to
/// coset stationarity at time `t`.
pub fn distance_bracket(n: usize, t: usize) -> Result<CertifiedInterval> {
    let m = main_term(n, t)?;
    let eps = error_term(n, t)?;
    let lo = (m.lo().clone() - eps.hi().clone()).max(BigRational::zero());
    let hi = m.hi().clone() + eps.hi().clone();
    Ok(CertifiedInterval::new(lo, hi))
}

const TMIX_SEARCH_LIMIT: usize = 1_000_000;

/// Certified mixing-time bracket `(L, U)` for threshold `eps`:
///
/// - `U = min{t : hi(t) <= eps}` certifies `t_mix(eps) <= U`;
/// - `L - 1 = max{t < U : lo(t) > eps}` certifies `t_mix(eps) >= L`, since
///   the distance is nonincreasing in `t` (see the module docs), so a
///   single certified `lo(t*) > eps` pushes the mixing time past `t*`.
pub fn tmix_bracket(n: usize, eps: &BigRational) -> Result<(usize, usize)> {
    if *eps <= BigRational::zero() || *eps >= BigRational::one() {
        return Err(Error::InvalidParameter(format!(
            "threshold must lie in (0,1), got {eps}"
        )));
    }
    let mut scanner = BracketScanner::new(n)?;
    let mut lows: Vec<BigRational> = Vec::new();
    let mut upper = None;
    for t in 0..=TMIX_SEARCH_LIMIT {
        let (lo, hi) = scanner.bracket(t);
        if &hi <= eps {
            upper = Some(t);
            break;
        }
        lows.push(lo);
    }
    let Some(upper) = upper else {
        return Err(Error::MixingTimeNotFound {
            limit: TMIX_SEARCH_LIMIT,
            eps: eps.to_string(),
        });
    };
    let lower = lows
        .iter()
        .rposition(|lo| lo > eps)
        .map_or(0, |t_star| t_star + 1);
    Ok((lower, upper))
}

/// Fixed-point scale of the scanner's error-term upper bounds.
const SCAN_FRACTION_BITS: u32 = 512;

/// Incremental evaluator of the distance bracket. The main term stays an
/// exact rational (one power, advanced by one multiplication per step); the
/// error term is accumulated as a fixed-point integer with all roundings
/// directed upward, so the scanned `(lo, hi)` pair still encloses the true
/// bracket while the per-step cost stays integer-only.
struct BracketScanner {
    n: usize,
    t: usize,
    inv_e: CertifiedInterval,
    ratio: BigRational,
    ratio_pow: BigRational,
    /// per level: (dimension bound n^r, eigenvalue-bound numerator and
    /// denominator, running power scaled by 2^SCAN_FRACTION_BITS)
    levels: Vec<(BigUint, BigUint, BigUint, BigUint)>,
    /// ceil(sqrt(p(n) n!) + 1) * 2^SCAN_FRACTION_BITS / 2^{t+1}
    middle: BigUint,
    /// ceil(2^SCAN_FRACTION_BITS / (n-2)!)
    tail: BigUint,
}

fn ceil_div(a: BigUint, b: &BigUint) -> BigUint {
    (a + (b - BigUint::one())) / b
}

impl BracketScanner {
    fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::DegreeTooSmall {
                what: "tmix_bracket",
                min: 3,
                got: n,
            });
        }
        let one_fixed = BigUint::one() << SCAN_FRACTION_BITS;
        let levels = (2..=(n - 1) / 2)
            .map(|r| {
                let bound = level_eigenvalue_bound(n, r);
                (
                    BigUint::from(n).pow(r as u32),
                    bound.numer().to_biguint().expect("bound in (0,1)"),
                    bound.denom().to_biguint().expect("positive"),
                    one_fixed.clone(),
                )
            })
            .collect();
        let radicand: BigUint = partition_count(n) * factorial(n);
        let middle = (radicand.sqrt() + BigUint::one()) << (SCAN_FRACTION_BITS - 1);
        Ok(BracketScanner {
            n,
            t: 0,
            inv_e: inv_e_interval_bits(DEFAULT_PRECISION_BITS),
            ratio: rational(n as i64 - 3, n as i64 - 1),
            ratio_pow: BigRational::one(),
            levels,
            middle,
            tail: ceil_div(one_fixed, &factorial(n - 2)),
        })
    }

    /// Bracket at time `t`; must be called with nondecreasing `t`.
    fn bracket(&mut self, t: usize) -> (BigRational, BigRational) {
        assert!(t >= self.t, "scanner runs forward only");
        let two = BigUint::from(2u32);
        while self.t < t {
            self.ratio_pow *= self.ratio.clone();
            for (_, num, den, pow) in &mut self.levels {
                *pow = ceil_div(pow.clone() * &*num, den);
            }
            self.middle = ceil_div(self.middle.clone(), &two);
            self.t += 1;
        }
        let scale = BigRational::from(BigInt::from(self.n as i64 - 1)) * self.ratio_pow.clone();
        let m = self.inv_e.scale(&scale);
        let mut eps_fixed = self.tail.clone() + &self.middle;
        for (dim, _, _, pow) in &self.levels {
            eps_fixed += dim * pow;
        }
        let eps_hi = BigRational::new(
            BigInt::from(eps_fixed),
            BigInt::from(BigUint::one() << SCAN_FRACTION_BITS),
        );
        let lo = (m.lo().clone() - eps_hi.clone()).max(BigRational::zero());
        let hi = m.hi().clone() + eps_hi;
        (lo, hi)
    }
}

/// Exact counts of even and odd derangements, via the alternating-sum
/// formula `D_n = n! Σ_{i<=n} (-1)^i/i!` and the parity-difference identity
/// `D_even - D_odd = (-1)^{n-1} (n-1)` (the determinant of the all-ones
/// matrix with zero diagonal).
pub fn derangement_parity(n: usize) -> (BigUint, BigUint) {
    let mut total = BigInt::zero(); // D_n = Σ (-1)^i n!/i!
    for i in 0..=n {
        let term = BigInt::from(factorial(n) / factorial(i));
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    let diff = if n % 2 == 1 {
        BigInt::from(n as i64 - 1)
    } else {
        -BigInt::from(n as i64) + BigInt::one()
    };
    let even = (&total + &diff) / BigInt::from(2);
    let odd = (total - diff) / BigInt::from(2);
    (
        even.to_biguint().expect("even derangement count"),
        odd.to_biguint().expect("odd derangement count"),
    )
}

/// Parity forecast for the lazy transposition walk at time `t`.
#[derive(Debug, Clone)]
pub struct ParityForecast {
    /// Exact `P(X_t even) = (1 + (2/n - 1)^t)/2`: the walk is even iff the
    /// number of non-identity steps, `Binomial(t, 1 - 1/n)`, is even. At
    /// even `t` this agrees with the identity-pick form `(1 + (1-2/n)^t)/2`;
    /// at odd `t` the sign of the base flips. Cross-validated against the
    /// exact convolution oracle.
    pub exact: BigRational,
    /// Poisson approximation `(1 + (-1)^t e^{-2t/n})/2`.
    pub poisson: f64,
}

/// Probability that the lazy transposition walk sits at an even permutation
/// after `t` steps, exact and in Poisson approximation.
pub fn lazy_parity_probability(n: usize, t: usize) -> Result<ParityForecast> {
    if n < 2 {
        return Err(Error::DegreeTooSmall {
            what: "lazy_parity_probability",
            min: 2,
            got: n,
        });
    }
    let base = rational(2, n as i64) - BigRational::one();
    let exact = (BigRational::one() + base.pow(t as i32)) / BigRational::from(BigInt::from(2));
    let sign = if t % 2 == 0 { 1.0 } else { -1.0 };
    let poisson = (1.0 + sign * (-2.0 * t as f64 / n as f64).exp()) / 2.0;
    Ok(ParityForecast { exact, poisson })
}
