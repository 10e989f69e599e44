//! Exact small-degree walk distributions via group-algebra convolution.
//!
//! The whole group algebra of `S_n` is materialized for `n <= 7`, the
//! driving measure is written over a common denominator, and `t`-fold
//! convolution is carried out on integer numerators. Everything downstream
//! (total variation, push-forwards) is exact rational arithmetic.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::young::{factorial, CosetId, CycleType};
use crate::Result;

use super::WalkSpec;

const MAX_ORACLE_DEGREE: usize = 7;

/// Exact distribution of a walk on `S_n`, supported on the whole group.
///
/// Internally the probabilities share one denominator; [`Self::probability`]
/// exposes them as reduced rationals.
#[derive(Debug, Clone)]
pub struct GroupDistribution {
    n: usize,
    perms: Vec<Vec<usize>>,
    denom: BigUint,
    numer: Vec<BigUint>,
}

/// Exact distribution of the walk after `t` steps from the identity,
/// feasible for `n <= 7`.
pub fn convolution_oracle(walk: &WalkSpec, t: usize) -> Result<GroupDistribution> {
    let n = walk.n();
    if n > MAX_ORACLE_DEGREE {
        return Err(Error::DegreeTooLarge {
            what: "convolution_oracle",
            max: MAX_ORACLE_DEGREE,
            got: n,
        });
    }
    let perms = all_permutations(n);
    let rank: HashMap<Vec<usize>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();

    // expand the driving measure to elements over one denominator
    let class_weights = walk.class_weights();
    let mut denom = BigUint::one();
    for (class, weight) in &class_weights {
        let per_element = weight.clone() / BigRational::from(BigInt::from(class.class_size()));
        denom = num_integer::lcm(denom, per_element.denom().to_biguint().expect("positive"));
    }
    let mut step_elements: Vec<(usize, BigUint)> = Vec::new();
    for (class, weight) in &class_weights {
        let per_element = weight.clone() / BigRational::from(BigInt::from(class.class_size()));
        let scaled = per_element * BigRational::from(BigInt::from(denom.clone()));
        debug_assert!(scaled.is_integer());
        let numer = scaled.to_integer().to_biguint().expect("positive weight");
        for (idx, perm) in perms.iter().enumerate() {
            if &cycle_type_of(perm) == class {
                step_elements.push((idx, numer.clone()));
            }
        }
    }

    // composition tables: target rank of σ·g for each σ, per step element
    let tables: Vec<Vec<usize>> = step_elements
        .iter()
        .map(|&(g, _)| {
            perms
                .iter()
                .map(|sigma| rank[&compose(sigma, &perms[g])])
                .collect()
        })
        .collect();

    let id = rank[&(0..n).collect::<Vec<usize>>()];
    let mut numer = vec![BigUint::zero(); perms.len()];
    numer[id] = BigUint::one();
    for _ in 0..t {
        let mut next = vec![BigUint::zero(); perms.len()];
        for (sigma, mass) in numer.iter().enumerate() {
            if mass.is_zero() {
                continue;
            }
            for ((_, w), table) in step_elements.iter().zip(&tables) {
                next[table[sigma]] += mass * w;
            }
        }
        numer = next;
    }
    Ok(GroupDistribution {
        n,
        perms,
        denom: denom.pow(t as u32),
        numer,
    })
}

impl GroupDistribution {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Point mass at the identity (the walk at time 0).
    pub fn point_mass_at_identity(n: usize) -> Result<Self> {
        if n > MAX_ORACLE_DEGREE {
            return Err(Error::DegreeTooLarge {
                what: "GroupDistribution",
                max: MAX_ORACLE_DEGREE,
                got: n,
            });
        }
        let perms = all_permutations(n);
        let id = perms
            .iter()
            .position(|p| p.iter().enumerate().all(|(i, &x)| i == x))
            .expect("identity present");
        let mut numer = vec![BigUint::zero(); perms.len()];
        numer[id] = BigUint::one();
        Ok(GroupDistribution {
            n,
            perms,
            denom: BigUint::one(),
            numer,
        })
    }

    /// Exact probability of one permutation (as an image array).
    pub fn probability(&self, perm: &[usize]) -> BigRational {
        match self.perms.iter().position(|p| p == perm) {
            Some(idx) => BigRational::new(
                BigInt::from(self.numer[idx].clone()),
                BigInt::from(self.denom.clone()),
            ),
            None => BigRational::zero(),
        }
    }

    /// Iterates `(permutation, exact probability)` over the whole group.
    pub fn probabilities(&self) -> impl Iterator<Item = (&[usize], BigRational)> + '_ {
        self.perms.iter().zip(&self.numer).map(|(p, m)| {
            (
                p.as_slice(),
                BigRational::new(BigInt::from(m.clone()), BigInt::from(self.denom.clone())),
            )
        })
    }

    /// Exact total mass; 1 for every distribution produced here.
    pub fn total_mass(&self) -> BigRational {
        let total: BigUint = self.numer.iter().sum();
        BigRational::new(BigInt::from(total), BigInt::from(self.denom.clone()))
    }

    /// Exact total-variation distance to the uniform measure on the target
    /// coset (or on the full group).
    pub fn tv_to_uniform(&self, target: CosetId) -> BigRational {
        let order = factorial(self.n);
        // uniform numerator over the common denominator order · denom
        let uniform: BigUint = match target {
            CosetId::Full => self.denom.clone(),
            _ => BigUint::from(2u32) * &self.denom,
        };
        let mut l1 = BigUint::zero();
        for (perm, mass) in self.perms.iter().zip(&self.numer) {
            let on_target = match target {
                CosetId::Full => true,
                CosetId::Even => parity(perm) == 1,
                CosetId::Odd => parity(perm) == -1,
            };
            let scaled_mass = mass * &order;
            if on_target {
                if scaled_mass >= uniform {
                    l1 += scaled_mass - &uniform;
                } else {
                    l1 += &uniform - scaled_mass;
                }
            } else {
                l1 += scaled_mass;
            }
        }
        BigRational::new(
            BigInt::from(l1),
            BigInt::from(2u32) * BigInt::from(&self.denom * order),
        )
    }

    /// Exact push-forward under the fixed-point count: entry `k` is the
    /// probability of exactly `k` fixed points.
    pub fn fixed_point_law(&self) -> Vec<BigRational> {
        let mut buckets = vec![BigUint::zero(); self.n + 1];
        for (perm, mass) in self.perms.iter().zip(&self.numer) {
            let fixed = perm.iter().enumerate().filter(|&(i, &x)| i == x).count();
            buckets[fixed] += mass;
        }
        buckets
            .into_iter()
            .map(|b| BigRational::new(BigInt::from(b), BigInt::from(self.denom.clone())))
            .collect()
    }

    /// Exact probability that the permutation is even.
    pub fn even_mass(&self) -> BigRational {
        let mut even = BigUint::zero();
        for (perm, mass) in self.perms.iter().zip(&self.numer) {
            if parity(perm) == 1 {
                even += mass;
            }
        }
        BigRational::new(BigInt::from(even), BigInt::from(self.denom.clone()))
    }
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity((1..=n).product::<usize>().max(1));
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        if !next_permutation(&mut current) {
            break;
        }
    }
    out
}

fn next_permutation(arr: &mut [usize]) -> bool {
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

/// `(p·q)(x) = p(q(x))`.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

/// Cycle type of a permutation given as an image array.
pub fn cycle_type_of(perm: &[usize]) -> CycleType {
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
    CycleType::from_parts(&parts).expect("cycle lengths are positive")
}

pub(crate) fn parity(perm: &[usize]) -> i8 {
    cycle_type_of(perm).sign()
}
