//! Driving-measure specifications, their Fourier eigenvalues, exact
//! total-variation distances, and truncation/comparison error bounds.
//!
//! Distances are computed two independent ways: `tv_fourier` sums over
//! conjugacy classes (never over permutations; the class sizes `n!/z`
//! collapse the group sum), while [`convolution_oracle`] convolves the
//! driving measure in the group algebra with exact rationals. The two must
//! agree as exact rational equalities on every feasible input.

mod oracle;

pub use oracle::{convolution_oracle, cycle_type_of, GroupDistribution};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::characters::{character, rational_to_f64, transposition_character, CharacterTable};
use crate::error::Error;
use crate::young::{binomial, coset_target, factorial, CosetId, CycleType, Partition};
use crate::Result;

/// The driving measures supported by the library. All are constant on
/// conjugacy classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkKind {
    /// Uniform measure on a single nontrivial conjugacy class.
    Class(CycleType),
    /// Uniform on transpositions, no laziness. Periodic.
    PureTranspositions,
    /// `1/n δ_id + (1 - 1/n) Unif(transpositions)`. Aperiodic.
    LazyTranspositions,
    /// Uniform on involutions with exactly `s` two-cycles.
    Involutions(usize),
    /// Involutions with `Binomial(n/2, 1-p)` two-cycles. Aperiodic.
    RandomInvolution(BigRational),
    /// The binomially truncated involution mixture: the number of
    /// two-cycles is conditioned to the window of radius `ceil(n^{4/5})`
    /// around its mean.
    TruncatedRandomInvolution(BigRational),
}

/// A conjugacy-invariant random walk specification on `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkSpec {
    n: usize,
    kind: WalkKind,
}

impl WalkSpec {
    pub fn class(n: usize, class: CycleType) -> Result<Self> {
        if class.size() != n {
            return Err(Error::SizeMismatch {
                shape: n,
                weight: class.size(),
            });
        }
        if class.is_identity() {
            return Err(Error::InvalidParameter(
                "class walk must use a nontrivial class".into(),
            ));
        }
        Ok(WalkSpec {
            n,
            kind: WalkKind::Class(class),
        })
    }

    pub fn pure_transpositions(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DegreeTooSmall {
                what: "transposition walk",
                min: 2,
                got: n,
            });
        }
        Ok(WalkSpec {
            n,
            kind: WalkKind::PureTranspositions,
        })
    }

    pub fn lazy_transpositions(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DegreeTooSmall {
                what: "transposition walk",
                min: 2,
                got: n,
            });
        }
        Ok(WalkSpec {
            n,
            kind: WalkKind::LazyTranspositions,
        })
    }

    pub fn involutions(n: usize, two_cycles: usize) -> Result<Self> {
        if 2 * two_cycles > n {
            return Err(Error::InvalidParameter(format!(
                "{two_cycles} two-cycles do not fit in S_{n}"
            )));
        }
        if two_cycles == 0 {
            return Err(Error::InvalidParameter(
                "involution walk needs at least one two-cycle".into(),
            ));
        }
        Ok(WalkSpec {
            n,
            kind: WalkKind::Involutions(two_cycles),
        })
    }

    pub fn random_involution(n: usize, p: BigRational) -> Result<Self> {
        Self::check_involution_mixture(n, &p)?;
        Ok(WalkSpec {
            n,
            kind: WalkKind::RandomInvolution(p),
        })
    }

    /// The truncated mixture is defined for even `n` only; odd degrees are
    /// rejected rather than given an ad-hoc meaning.
    pub fn truncated_random_involution(n: usize, p: BigRational) -> Result<Self> {
        Self::check_involution_mixture(n, &p)?;
        Ok(WalkSpec {
            n,
            kind: WalkKind::TruncatedRandomInvolution(p),
        })
    }

    fn check_involution_mixture(n: usize, p: &BigRational) -> Result<()> {
        if n % 2 != 0 || n == 0 {
            return Err(Error::InvalidParameter(format!(
                "involution mixtures are defined for even n, got {n}"
            )));
        }
        if *p <= BigRational::zero() || *p >= BigRational::one() {
            return Err(Error::InvalidParameter(format!(
                "mixture parameter must lie in (0,1), got {p}"
            )));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &WalkKind {
        &self.kind
    }

    /// Sign of the driving class for periodic walks; `None` for the
    /// aperiodic kinds (lazy transpositions and the involution mixtures,
    /// which put positive mass on the identity).
    pub fn class_sign(&self) -> Option<i8> {
        match &self.kind {
            WalkKind::Class(c) => Some(c.sign()),
            WalkKind::PureTranspositions => Some(-1),
            WalkKind::Involutions(s) => Some(if s % 2 == 0 { 1 } else { -1 }),
            WalkKind::LazyTranspositions
            | WalkKind::RandomInvolution(_)
            | WalkKind::TruncatedRandomInvolution(_) => None,
        }
    }

    /// The coset the walk equilibrates on after `t` steps.
    pub fn natural_target(&self, t: usize) -> CosetId {
        match self.class_sign() {
            Some(sign) => coset_target(sign, t),
            None => CosetId::Full,
        }
    }

    /// Fourier eigenvalue of the walk at the representation `shape`, exact.
    ///
    /// Class walks give the normalized character of the class; the lazy
    /// walk shifts it by the laziness; involution mixtures average the
    /// involution characters with binomial weights (restricted and
    /// renormalized for the truncated kind).
    ///
    /// For the mixtures the per-`s` characters are evaluated through the
    /// border-strip recursion, which stays cheap for low-level shapes;
    /// general shapes are accepted only for `n <= 12`.
    pub fn eigenvalue(&self, shape: &Partition) -> Result<BigRational> {
        if shape.size() != self.n {
            return Err(Error::SizeMismatch {
                shape: shape.size(),
                weight: self.n,
            });
        }
        match &self.kind {
            WalkKind::Class(class) => Ok(character(shape, class)?.normalized),
            WalkKind::PureTranspositions => transposition_character(shape),
            WalkKind::LazyTranspositions => {
                let lazy = BigRational::new(BigInt::one(), BigInt::from(self.n));
                let chi = transposition_character(shape)?;
                Ok(lazy.clone() + (BigRational::one() - lazy) * chi)
            }
            WalkKind::Involutions(s) => {
                let class = CycleType::involution(self.n, *s)?;
                Ok(character(shape, &class)?.normalized)
            }
            WalkKind::RandomInvolution(p) => {
                self.check_mixture_shape(shape)?;
                let half = self.n / 2;
                let mut acc = BigRational::zero();
                for s in 0..=half {
                    let class = CycleType::involution(self.n, s)?;
                    acc += binomial_weight(half, s, p) * character(shape, &class)?.normalized;
                }
                Ok(acc)
            }
            WalkKind::TruncatedRandomInvolution(p) => {
                self.check_mixture_shape(shape)?;
                let half = self.n / 2;
                let (lo, hi) = truncation_window(self.n, p);
                let mut acc = BigRational::zero();
                let mut mass = BigRational::zero();
                for s in lo..=hi.min(half) {
                    let w = binomial_weight(half, s, p);
                    let class = CycleType::involution(self.n, s)?;
                    acc += w.clone() * character(shape, &class)?.normalized;
                    mass += w;
                }
                Ok(acc / mass)
            }
        }
    }

    fn check_mixture_shape(&self, shape: &Partition) -> Result<()> {
        if self.n > 12 && shape.level() > 4 {
            return Err(Error::DegreeTooLarge {
                what: "involution-mixture eigenvalue at level > 4",
                max: 12,
                got: self.n,
            });
        }
        Ok(())
    }

    /// The driving measure as `(class, total weight on the class)` pairs.
    pub fn class_weights(&self) -> Vec<(CycleType, BigRational)> {
        match &self.kind {
            WalkKind::Class(class) => vec![(class.clone(), BigRational::one())],
            WalkKind::PureTranspositions => vec![(
                CycleType::transposition(self.n).expect("n >= 2"),
                BigRational::one(),
            )],
            WalkKind::LazyTranspositions => {
                let lazy = BigRational::new(BigInt::one(), BigInt::from(self.n));
                vec![
                    (CycleType::identity(self.n), lazy.clone()),
                    (
                        CycleType::transposition(self.n).expect("n >= 2"),
                        BigRational::one() - lazy,
                    ),
                ]
            }
            WalkKind::Involutions(s) => vec![(
                CycleType::involution(self.n, *s).expect("validated"),
                BigRational::one(),
            )],
            WalkKind::RandomInvolution(p) => {
                let half = self.n / 2;
                (0..=half)
                    .map(|s| {
                        (
                            CycleType::involution(self.n, s).expect("s <= n/2"),
                            binomial_weight(half, s, p),
                        )
                    })
                    .collect()
            }
            WalkKind::TruncatedRandomInvolution(p) => {
                let half = self.n / 2;
                let (lo, hi) = truncation_window(self.n, p);
                let mass = truncation_mass(self.n, p);
                (lo..=hi.min(half))
                    .map(|s| {
                        (
                            CycleType::involution(self.n, s).expect("s <= n/2"),
                            binomial_weight(half, s, p) / mass.clone(),
                        )
                    })
                    .collect()
            }
        }
    }
}

/// `C(half, s) (1-p)^s p^{half-s}`, exact.
pub fn binomial_weight(half: usize, s: usize, p: &BigRational) -> BigRational {
    let q = BigRational::one() - p.clone();
    BigRational::from(BigInt::from(binomial(half, s))) * q.pow(s as i32) * p.pow((half - s) as i32)
}

/// Smallest integer `m` with `m >= n^{4/5}`, computed exactly.
pub fn truncation_radius(n: usize) -> usize {
    let n4 = BigUint::from(n).pow(4);
    let mut m = (n as f64).powf(0.8).ceil() as usize;
    while BigUint::from(m).pow(5) < n4 {
        m += 1;
    }
    while m > 0 && BigUint::from(m - 1).pow(5) >= n4 {
        m -= 1;
    }
    m
}

/// Integer window `[(1-p)n/2 - m, (1-p)n/2 + m] ∩ [0, n/2]` with
/// `m = ceil(n^{4/5})`, as inclusive bounds on the two-cycle count.
pub fn truncation_window(n: usize, p: &BigRational) -> (usize, usize) {
    let m = BigRational::from(BigInt::from(truncation_radius(n)));
    let mean =
        (BigRational::one() - p.clone()) * BigRational::new(BigInt::from(n), BigInt::from(2));
    let lo_rat = mean.clone() - m.clone();
    let hi_rat = mean + m;
    let lo = if lo_rat <= BigRational::zero() {
        0
    } else {
        lo_rat.ceil().to_integer().to_usize().expect("small")
    };
    let half = n / 2;
    let hi = if hi_rat >= BigRational::from(BigInt::from(half)) {
        half
    } else {
        hi_rat.floor().to_integer().to_usize().expect("small")
    };
    (lo, hi)
}

/// Binomial mass of the truncation window, exact.
pub fn truncation_mass(n: usize, p: &BigRational) -> BigRational {
    let half = n / 2;
    let (lo, hi) = truncation_window(n, p);
    (lo..=hi.min(half))
        .map(|s| binomial_weight(half, s, p))
        .sum()
}

/// Exact total-variation distance of the walk at time `t` to the uniform
/// measure on `target`, via Fourier inversion summed over conjugacy
/// classes:
///
/// `(1/2) Σ_{K ⊆ target} |K| · |Σ_λ (d_λ/n!) eig_λ^t ch^λ(K)|`
///
/// with `|K| = n!/z_K`. For periodic (class) walks the target must be the
/// walk's coset at time `t` and the trivial and sign representations drop
/// out; for aperiodic walks the target must be `Full` and only the trivial
/// representation drops out. Feasible for `n <= 12`.
pub fn tv_fourier(walk: &WalkSpec, t: usize, target: CosetId) -> Result<BigRational> {
    let n = walk.n();
    if n > 12 {
        return Err(Error::DegreeTooLarge {
            what: "tv_fourier",
            max: 12,
            got: n,
        });
    }
    if target != walk.natural_target(t) {
        return Err(Error::TargetMismatch { target, t });
    }
    let table = CharacterTable::new(n);
    let order = BigInt::from(factorial(n));
    let skip_sign = target != CosetId::Full;

    // eig^t per representation, exact
    let mut weights: Vec<Option<BigRational>> = Vec::with_capacity(table.partitions().len());
    for (idx, shape) in table.partitions().iter().enumerate() {
        let trivial = shape == &Partition::row(n);
        let sign_rep = shape == &Partition::column(n) && n > 1;
        if trivial || (skip_sign && sign_rep) {
            weights.push(None);
            continue;
        }
        let eig = walk.eigenvalue(shape)?;
        let d = BigRational::new(BigInt::from(table.dimension(idx).clone()), order.clone());
        weights.push(Some(d * eig.pow(t as i32)));
    }

    let mut total = BigRational::zero();
    for (k, class) in table.classes().iter().enumerate() {
        let included = match target {
            CosetId::Full => true,
            CosetId::Even => class.sign() == 1,
            CosetId::Odd => class.sign() == -1,
        };
        if !included {
            continue;
        }
        let mut term = BigRational::zero();
        for (idx, weight) in weights.iter().enumerate() {
            if let Some(w) = weight {
                term += w.clone() * BigRational::from(table.raw(idx, k).clone());
            }
        }
        total += BigRational::from(BigInt::from(table.class_size(k).clone())) * term.abs();
    }
    Ok(total / BigRational::from(BigInt::from(2)))
}

fn spectral_exponent_sum(walk: &WalkSpec, exponent: usize) -> Result<f64> {
    let n = walk.n();
    let feasible = match walk.kind() {
        WalkKind::PureTranspositions | WalkKind::LazyTranspositions => 30,
        _ => 12,
    };
    if n > feasible {
        return Err(Error::DegreeTooLarge {
            what: "spectral distance",
            max: feasible,
            got: n,
        });
    }
    let periodic = walk.class_sign().is_some();
    let mut acc = 0.0f64;
    for shape in crate::young::enumerate_partitions(n) {
        if shape == Partition::row(n) {
            continue;
        }
        if periodic && shape == Partition::column(n) && n > 1 {
            continue;
        }
        let eig = walk.eigenvalue(&shape)?;
        if eig.is_zero() {
            continue;
        }
        let d = crate::tableaux::dimension(&shape)
            .to_f64()
            .unwrap_or(f64::INFINITY);
        let ln_term = 2.0 * d.ln() + exponent as f64 * rational_to_f64(&eig).abs().ln();
        acc += ln_term.exp();
    }
    Ok(0.5 * acc)
}

/// `L²` distance to (coset) stationarity at time `t`:
/// `sqrt((1/2) Σ d_λ² |eig_λ|^{2t})` with the trivial representation (and,
/// for periodic walks, the sign representation) excluded. Fast for the
/// transposition walks up to `n = 30`, general walks up to `n = 12`.
pub fn l2_distance(walk: &WalkSpec, t: usize) -> Result<f64> {
    Ok(spectral_exponent_sum(walk, 2 * t)?.sqrt())
}

/// `L^∞` distance at the (even) doubled time `t_double`:
/// `(1/2) Σ d_λ² |eig_λ|^{t_double}` over the same set, so that
/// `linf(2t) = l2(t)²`.
pub fn linf_distance(walk: &WalkSpec, t_double: usize) -> Result<f64> {
    spectral_exponent_sum(walk, t_double)
}

/// Certified bound on the total-variation change when the Fourier sum is
/// truncated: `Σ d_α |u_α|` over the discarded representations, given as
/// `(dimension, |coefficient|)` pairs.
pub fn truncation_error_bound(discarded: &[(f64, f64)]) -> f64 {
    discarded.iter().map(|(d, u)| d * u.abs()).sum()
}

/// Bound `Σ d_α |u_α - v_α|` dominating the difference of the distances
/// driven by the coefficient families `u` and `v` over a common index set.
pub fn comparison_bound(
    dims: &[BigUint],
    u: &[BigRational],
    v: &[BigRational],
) -> Result<BigRational> {
    if dims.len() != u.len() || u.len() != v.len() {
        return Err(Error::InvalidParameter(format!(
            "index sets differ: {} dims, {} u, {} v",
            dims.len(),
            u.len(),
            v.len()
        )));
    }
    let mut acc = BigRational::zero();
    for ((d, a), b) in dims.iter().zip(u).zip(v) {
        acc += BigRational::from(BigInt::from(d.clone())) * (a.clone() - b.clone()).abs();
    }
    Ok(acc)
}
