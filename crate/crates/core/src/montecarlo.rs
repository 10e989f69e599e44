//! Seedable simulation of the shuffles and empirical checks of the
//! fixed-point Poisson prediction.
//!
//! Reproducibility: all randomness comes from the ChaCha12 counter-based
//! generator (algorithm id [`RNG_ALGORITHM`]). Trials are split into
//! fixed-size batches and batch `b` draws from stream `b` of the seeded
//! generator, so results are byte-identical for a given [`SimConfig`]
//! regardless of how many worker threads execute the batches.

use std::collections::BTreeMap;

use rand::distributions::Distribution;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

use crate::error::Error;
use crate::walks::{WalkKind, WalkSpec};
use crate::young::CycleType;
use crate::Result;

/// Identifier of the RNG scheme recorded in simulation metadata.
pub const RNG_ALGORITHM: &str = "chacha12/batch-streams-v1";

/// Trials per RNG stream; fixed so that the batch split (and therefore the
/// output) does not depend on the worker-pool size.
const BATCH_SIZE: u64 = 4096;

/// A reproducible simulation request.
#[derive(Debug, Clone)]
pub struct SimConfig {
    pub walk: WalkSpec,
    pub t: usize,
    pub trials: u64,
    pub seed: u64,
}

impl SimConfig {
    pub fn new(walk: WalkSpec, t: usize, trials: u64, seed: u64) -> Result<Self> {
        if trials == 0 {
            return Err(Error::InvalidParameter("trials must be >= 1".into()));
        }
        Ok(SimConfig {
            walk,
            t,
            trials,
            seed,
        })
    }
}

/// Draws one step of the walk: a permutation of `0..n` as an image array.
///
/// Class steps are sampled by a uniform arrangement of the `n` symbols cut
/// into cycles of the prescribed lengths. Every permutation with that cycle
/// type arises from exactly `Π i^{f_i} f_i!` arrangements (rotations of each
/// cycle and reorderings of equal-length cycles), so the class element is
/// uniform. The mixtures first draw the number of two-cycles from the
/// binomial (truncated by rejection for the windowed kind), then delegate.
pub fn sample_step<R: Rng>(walk: &WalkSpec, rng: &mut R) -> Vec<usize> {
    let n = walk.n();
    match walk.kind() {
        WalkKind::Class(class) => sample_class(class, rng),
        WalkKind::PureTranspositions => {
            let mut perm: Vec<usize> = (0..n).collect();
            let (i, j) = distinct_pair(n, rng);
            perm.swap(i, j);
            perm
        }
        WalkKind::LazyTranspositions => {
            // two independent uniform picks; equal picks give the identity,
            // which is exactly the 1/n laziness
            let mut perm: Vec<usize> = (0..n).collect();
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            perm.swap(i, j);
            perm
        }
        WalkKind::Involutions(s) => sample_involution(n, *s, rng),
        WalkKind::RandomInvolution(p) => {
            let s = sample_two_cycle_count(n, p, rng);
            sample_involution(n, s, rng)
        }
        WalkKind::TruncatedRandomInvolution(p) => {
            let (lo, hi) = crate::walks::truncation_window(n, p);
            loop {
                let s = sample_two_cycle_count(n, p, rng);
                if (lo..=hi).contains(&s) {
                    return sample_involution(n, s, rng);
                }
            }
        }
    }
}

fn sample_two_cycle_count<R: Rng>(n: usize, p: &num_rational::BigRational, rng: &mut R) -> usize {
    use num_traits::ToPrimitive;
    let success = 1.0 - p.to_f64().expect("p in (0,1)");
    let binomial = rand_distr::Binomial::new((n / 2) as u64, success).expect("valid parameters");
    binomial.sample(rng) as usize
}

fn distinct_pair<R: Rng>(n: usize, rng: &mut R) -> (usize, usize) {
    let i = rng.gen_range(0..n);
    let j = rng.gen_range(0..n - 1);
    (i, if j >= i { j + 1 } else { j })
}

fn sample_involution<R: Rng>(n: usize, s: usize, rng: &mut R) -> Vec<usize> {
    let mut symbols: Vec<usize> = (0..n).collect();
    partial_shuffle(&mut symbols, 2 * s, rng);
    let mut perm: Vec<usize> = (0..n).collect();
    for pair in symbols[..2 * s].chunks(2) {
        perm.swap(pair[0], pair[1]);
    }
    perm
}

fn sample_class<R: Rng>(class: &CycleType, rng: &mut R) -> Vec<usize> {
    let n = class.size();
    let mut symbols: Vec<usize> = (0..n).collect();
    shuffle(&mut symbols, rng);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut at = 0;
    for (len, count) in class.iter() {
        for _ in 0..count {
            let cycle = &symbols[at..at + len];
            for k in 0..len {
                perm[cycle[k]] = cycle[(k + 1) % len];
            }
            at += len;
        }
    }
    perm
}

// Fisher-Yates, spelled out so the sampling scheme is pinned by this crate
// rather than by rand's (potentially version-dependent) shuffle.
fn shuffle<R: Rng>(arr: &mut [usize], rng: &mut R) {
    for i in (1..arr.len()).rev() {
        let j = rng.gen_range(0..=i);
        arr.swap(i, j);
    }
}

fn partial_shuffle<R: Rng>(arr: &mut [usize], prefix: usize, rng: &mut R) {
    let n = arr.len();
    for i in 0..prefix.min(n.saturating_sub(1)) {
        let j = rng.gen_range(i..n);
        arr.swap(i, j);
    }
}

fn batch_rng(seed: u64, batch: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(batch);
    rng
}

fn batch_ranges(trials: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut batch = 0;
    while start < trials {
        let len = BATCH_SIZE.min(trials - start);
        out.push((batch, len));
        start += len;
        batch += 1;
    }
    out
}

/// Empirical law of the number of fixed points of the walk at time `t`:
/// a map `k -> count` over the configured trials. Deterministic for a given
/// config; batches run in parallel on disjoint RNG streams.
pub fn fixed_point_histogram(config: &SimConfig) -> BTreeMap<usize, u64> {
    let histograms: Vec<BTreeMap<usize, u64>> = batch_ranges(config.trials)
        .into_par_iter()
        .map(|(batch, len)| {
            let mut rng = batch_rng(config.seed, batch);
            let mut hist = BTreeMap::new();
            for _ in 0..len {
                let fixed = simulate_fixed_points(&config.walk, config.t, &mut rng);
                *hist.entry(fixed).or_insert(0) += 1;
            }
            hist
        })
        .collect();
    let mut merged = BTreeMap::new();
    for hist in histograms {
        for (k, v) in hist {
            *merged.entry(k).or_insert(0) += v;
        }
    }
    merged
}

fn simulate_fixed_points<R: Rng>(walk: &WalkSpec, t: usize, rng: &mut R) -> usize {
    let n = walk.n();
    match walk.kind() {
        // transposition walks apply in-place swaps
        WalkKind::PureTranspositions => {
            let mut deck: Vec<usize> = (0..n).collect();
            for _ in 0..t {
                let (i, j) = distinct_pair(n, rng);
                deck.swap(i, j);
            }
            count_fixed(&deck)
        }
        WalkKind::LazyTranspositions => {
            let mut deck: Vec<usize> = (0..n).collect();
            for _ in 0..t {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                deck.swap(i, j);
            }
            count_fixed(&deck)
        }
        _ => {
            let mut deck: Vec<usize> = (0..n).collect();
            for _ in 0..t {
                let step = sample_step(walk, rng);
                deck = compose(&deck, &step);
            }
            count_fixed(&deck)
        }
    }
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

fn count_fixed(perm: &[usize]) -> usize {
    perm.iter().enumerate().filter(|&(i, &x)| i == x).count()
}

/// Empirical probability that the lazy transposition walk is at an even
/// permutation after `t` steps. Rejects other walk kinds.
pub fn empirical_parity(config: &SimConfig) -> Result<f64> {
    if *config.walk.kind() != WalkKind::LazyTranspositions {
        return Err(Error::InvalidParameter(
            "empirical_parity applies to the lazy transposition walk".into(),
        ));
    }
    let n = config.walk.n();
    let t = config.t;
    let even_counts: u64 = batch_ranges(config.trials)
        .into_par_iter()
        .map(|(batch, len)| {
            let mut rng = batch_rng(config.seed, batch);
            let mut even = 0u64;
            for _ in 0..len {
                let mut parity_even = true;
                for _ in 0..t {
                    let i = rng.gen_range(0..n);
                    let j = rng.gen_range(0..n);
                    if i != j {
                        parity_even = !parity_even;
                    }
                }
                if parity_even {
                    even += 1;
                }
            }
            even
        })
        .sum();
    Ok(even_counts as f64 / config.trials as f64)
}

/// Total variation between an empirical histogram and the Poisson law with
/// the given rate, summed over the histogram support together with the
/// Poisson tail down to mass `1e-15`.
pub fn tv_to_poisson(histogram: &BTreeMap<usize, u64>, trials: u64, rate: f64) -> f64 {
    let max_hist = histogram.keys().next_back().copied().unwrap_or(0);
    let mut acc = 0.0;
    let mut cdf = 0.0;
    let mut ln_factorial = 0.0;
    let mut k = 0usize;
    loop {
        if k > 0 {
            ln_factorial += (k as f64).ln();
        }
        let pois = (k as f64 * rate.ln() - rate - ln_factorial).exp();
        cdf += pois;
        let emp = histogram.get(&k).copied().unwrap_or(0) as f64 / trials as f64;
        acc += (emp - pois).abs();
        if k >= max_hist && k as f64 > rate && 1.0 - cdf < 1e-15 {
            break;
        }
        k += 1;
    }
    0.5 * acc
}
