//! Closed-form limit objects: the Poisson total-variation profile, cutoff
//! times, and the limiting `L²`/`L^∞`/θ-moment curves.

use std::sync::OnceLock;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::Error;
use crate::tableaux::dimension;
use crate::young::{enumerate_partitions, factorial};
use crate::Result;

/// One point of a limit curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProfilePoint {
    pub a: f64,
    pub value: f64,
}

/// Combined tail mass below which the Poisson series is truncated.
const POISSON_TAIL: f64 = 1e-15;

/// Total-variation distance between two Poisson laws,
/// `(1/2) Σ_k |pmf(λ1, k) - pmf(λ2, k)|`, summed until the combined
/// remaining tail mass of both laws drops below `1e-15`.
///
/// Terms are evaluated in log space (`exp(k ln λ - λ - ln k!)`), so large
/// rates never overflow intermediate factorials.
pub fn poisson_tv(lambda1: f64, lambda2: f64) -> Result<f64> {
    if !(lambda1 > 0.0) || !(lambda2 > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "Poisson rates must be positive, got {lambda1}, {lambda2}"
        )));
    }
    if lambda1.is_infinite() || lambda2.is_infinite() {
        return Ok(if lambda1 == lambda2 { 0.0 } else { 1.0 });
    }
    let (ln1, ln2) = (lambda1.ln(), lambda2.ln());
    let mut ln_factorial = 0.0f64;
    let mut half_l1 = 0.0f64;
    let mut overlap = 0.0f64;
    // past k >= 2λ the pmf at least halves each step, so the remaining
    // tail of each law is bounded by its current pmf
    let geometric_from = (2.0 * lambda1.max(lambda2)).ceil() as usize + 1;
    let mut k = 0usize;
    loop {
        if k > 0 {
            ln_factorial += (k as f64).ln();
        }
        let p1 = (k as f64 * ln1 - lambda1 - ln_factorial).exp();
        let p2 = (k as f64 * ln2 - lambda2 - ln_factorial).exp();
        half_l1 += 0.5 * (p1 - p2).abs();
        overlap += p1.min(p2);
        if k >= geometric_from && p1 + p2 < POISSON_TAIL {
            break;
        }
        k += 1;
    }
    // the two routes agree up to the truncated tail; near 1 the overlap
    // form is the accurate one (the L1 sum carries O(k·ε) rounding)
    if half_l1 >= 0.5 {
        Ok((1.0 - overlap).clamp(0.0, 1.0))
    } else {
        Ok(half_l1)
    }
}

/// The cutoff profile `a ↦ d_TV(Poiss(1), Poiss(1 + e^{-a}))`: strictly
/// decreasing, tending to 1 as `a → -∞` and 0 as `a → +∞`.
///
/// In `f64` the value saturates at 1 once the two laws are essentially
/// disjoint (around `a ≈ -4.4`); below that the returned value is exactly 1.
pub fn profile_value(a: f64) -> f64 {
    let shift = (-a).exp();
    if shift.is_infinite() {
        return 1.0;
    }
    poisson_tv(1.0, 1.0 + shift).expect("rates are positive")
}

/// Cutoff time `ln n / ln(n / f1)` of a class walk with `f1` fixed points.
pub fn cutoff_time_class(n: usize, f1: usize) -> Result<f64> {
    if f1 < 1 || f1 > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "fixed-point count must lie in [1, n-1], got f1={f1}, n={n}"
        )));
    }
    Ok((n as f64).ln() / (n as f64 / f1 as f64).ln())
}

/// Window time `(ln n + a) / ln(1/p)` of the involution walk.
pub fn involution_window_time(n: usize, p: f64, a: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "parameter must lie in (0,1), got {p}"
        )));
    }
    Ok(((n as f64).ln() + a) / (1.0 / p).ln())
}

const MAX_MOMENT_LEVEL: usize = 40;

/// `(d_μ / r!)` for all `μ ⊢ r`, cached for `r <= 40`.
fn normalized_dims(r: usize) -> &'static [f64] {
    static CACHE: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        (0..=MAX_MOMENT_LEVEL)
            .map(|r| {
                let r_fact = factorial(r).to_f64().expect("fits through r = 40");
                enumerate_partitions(r)
                    .iter()
                    .map(|mu| dimension(mu).to_f64().expect("fits") / r_fact)
                    .collect()
            })
            .collect()
    });
    &cache[r]
}

/// Truncated limit moment `Σ_{r=1}^{r_max} e^{-a r θ} Σ_{μ⊢r} (d_μ/r!)^θ`.
///
/// For `θ = 2` the inner sum collapses to `1/r!` and the full series equals
/// `e^{e^{-2a}} - 1`. Convergence is driven by `p(r)/√(r!)`; `r_max = 40`
/// puts the tail below `1e-12` for every `a >= -1`.
pub fn limit_moment(a: f64, theta: f64, r_max: usize) -> Result<f64> {
    if !(theta > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "theta must be positive, got {theta}"
        )));
    }
    if r_max > MAX_MOMENT_LEVEL {
        return Err(Error::InvalidParameter(format!(
            "limit_moment supports r_max <= {MAX_MOMENT_LEVEL}, got {r_max}"
        )));
    }
    let mut acc = 0.0;
    for r in 1..=r_max {
        let inner: f64 = normalized_dims(r).iter().map(|d| d.powf(theta)).sum();
        acc += (-a * r as f64 * theta).exp() * inner;
    }
    Ok(acc)
}

/// Limiting `L^∞` distance `e^{e^{-2a}} - 1` inside the cutoff window.
pub fn linf_limit(a: f64) -> f64 {
    ((-2.0 * a).exp()).exp() - 1.0
}

/// Limiting `L²` distance `sqrt(e^{e^{-2a}} - 1)`.
pub fn l2_limit(a: f64) -> f64 {
    linf_limit(a).sqrt()
}

/// Samples the TV profile on a uniform grid, for plotting.
pub fn profile_curve(a_min: f64, a_max: f64, step: f64) -> Vec<ProfilePoint> {
    let mut out = Vec::new();
    let mut a = a_min;
    while a <= a_max + 1e-12 {
        out.push(ProfilePoint {
            a,
            value: profile_value(a),
        });
        a += step;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn poisson_tv_basics() {
        assert_eq!(poisson_tv(3.0, 3.0).unwrap(), 0.0);
        assert!(poisson_tv(0.0, 1.0).is_err());
        // direct series value for (1, 2)
        let v = poisson_tv(1.0, 2.0).unwrap();
        assert_relative_eq!(v, 0.3297531, epsilon = 1e-6);
    }

    #[test]
    fn small_perturbation_linearization() {
        // d/dε TV(Poiss(1), Poiss(1+ε)) at 0+ is 1/e: the series
        // (1/2) Σ |k-1|/k! e^{-1} telescopes to e^{-1}
        let eps = (-10.0f64).exp();
        let v = poisson_tv(1.0, 1.0 + eps).unwrap();
        let normalized = v * std::f64::consts::E / eps;
        assert!(
            (normalized - 1.0).abs() < 1e-3,
            "normalized slope {normalized}"
        );
    }

    #[test]
    fn profile_limits_and_order() {
        assert!(profile_value(40.0) < 1e-15);
        assert!(profile_value(-5.0) > profile_value(0.0));
        assert!(profile_value(0.0) > profile_value(5.0));
        assert_relative_eq!(profile_value(0.0), 0.3297531, epsilon = 1e-6);
        // f64 saturation deep in the left tail
        assert_eq!(profile_value(-10.0), 1.0);
    }

    #[test]
    fn profile_monotonicity_grid() {
        // weakly decreasing across [-10, 10]; strictly decreasing from -4
        // on, where f64 still resolves the distance from 1
        let mut prev = f64::INFINITY;
        for i in 0..=200 {
            let a = -10.0 + 0.1 * i as f64;
            let v = profile_value(a);
            assert!(v <= prev, "profile increased at a = {a}");
            if a >= -3.95 {
                assert!(v < prev, "profile not strictly decreasing at a = {a}");
            }
            prev = v;
        }
    }

    #[test]
    fn cutoff_times() {
        let t = cutoff_time_class(52, 50).unwrap();
        assert_relative_eq!(t, 100.7437, epsilon = 1e-3);
        assert_relative_eq!(cutoff_time_class(52, 1).unwrap(), 1.0, epsilon = 1e-15);
        // transposition walk time is ~ (n/2) ln n
        let trans = cutoff_time_class(52, 50).unwrap();
        let classic = 0.5 * 52.0 * (52.0f64).ln();
        assert!((trans / classic - 1.0).abs() < 0.03);
        assert!(cutoff_time_class(52, 0).is_err());
        assert!(cutoff_time_class(52, 52).is_err());
    }

    #[test]
    fn involution_window_times() {
        let t = involution_window_time(100, 1.0 / std::f64::consts::E, 0.0).unwrap();
        assert_relative_eq!(t, (100.0f64).ln(), epsilon = 1e-12);
        let t = involution_window_time(10_000, 0.5, 0.0).unwrap();
        assert_relative_eq!(t, 13.2877, epsilon = 1e-3);
        assert!(involution_window_time(10, 0.0, 0.0).is_err());
        assert!(involution_window_time(10, 1.0, 0.0).is_err());
        // p -> 0 sends the window time to 0
        assert!(involution_window_time(10, 1e-12, 0.0).unwrap() < 0.1);
    }

    #[test]
    fn limit_moment_matches_closed_form_at_theta_two() {
        for a in [-1.0, 0.0, 1.0, 3.0] {
            let truncated = limit_moment(a, 2.0, 40).unwrap();
            assert!(
                (truncated - linf_limit(a)).abs() < 1e-10,
                "a = {a}: {truncated} vs {}",
                linf_limit(a)
            );
        }
        assert_relative_eq!(
            limit_moment(0.0, 2.0, 40).unwrap(),
            std::f64::consts::E - 1.0,
            epsilon = 1e-10
        );
        // tail decay: the last 20 levels contribute < 1e-12 at a = 0
        let short = limit_moment(0.0, 2.0, 20).unwrap();
        let long = limit_moment(0.0, 2.0, 40).unwrap();
        assert!((long - short).abs() < 1e-12);
        assert!(limit_moment(0.0, 2.0, 41).is_err());
        assert!(limit_moment(0.0, 0.0, 10).is_err());
    }

    #[test]
    fn l2_limit_is_sqrt_of_linf_limit() {
        for a in [-2.0, -0.5, 0.0, 1.0, 4.0] {
            assert_relative_eq!(l2_limit(a) * l2_limit(a), linf_limit(a), epsilon = 1e-12);
        }
    }

    #[test]
    fn limit_moment_vanishes_for_large_window() {
        assert!(limit_moment(30.0, 2.0, 40).unwrap() < 1e-20);
    }

    proptest! {
        #[test]
        fn poisson_tv_is_symmetric(a in 0.05f64..30.0, b in 0.05f64..30.0) {
            let lhs = poisson_tv(a, b).unwrap();
            let rhs = poisson_tv(b, a).unwrap();
            prop_assert!((lhs - rhs).abs() < 1e-12);
            prop_assert!((0.0..=1.0 + 1e-12).contains(&lhs));
        }

        #[test]
        fn poisson_tv_triangle_inequality(
            a in 0.05f64..20.0,
            b in 0.05f64..20.0,
            c in 0.05f64..20.0,
        ) {
            let ab = poisson_tv(a, b).unwrap();
            let bc = poisson_tv(b, c).unwrap();
            let ac = poisson_tv(a, c).unwrap();
            prop_assert!(ac <= ab + bc + 1e-12);
        }
    }
}
