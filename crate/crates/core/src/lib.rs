//! Exact-arithmetic toolkit for conjugacy-invariant random walks on
//! symmetric groups.
//!
//! The crate computes irreducible characters of `S_n` (via the
//! Murnaghan–Nakayama recursion, with ribbon-tableau enumeration as an
//! independent oracle), hook-length dimensions, Fourier-analytic total
//! variation distances to (coset) stationarity, Poisson cutoff-profile
//! limit curves, and certified mixing-time brackets for the transposition
//! shuffle on a 52-card deck.
//!
//! Modules:
//!
//! - [`young`]: integer partitions, cycle types, and their statistics;
//! - [`tableaux`]: exact dimensions, skew tableau counts, ribbon tableaux;
//! - [`characters`]: exact character evaluation and finite-level estimators;
//! - [`walks`]: walk specifications, eigenvalues, and exact distances;
//! - [`profiles`]: Poisson profile and limit-norm curves;
//! - [`certify`]: interval-certified mixing-time brackets (n = 52 and general);
//! - [`montecarlo`]: seedable simulation of the shuffles.

#![forbid(unsafe_code)]

pub mod certify;
pub mod characters;
pub mod error;
pub mod montecarlo;
pub mod profiles;
pub mod tableaux;
pub mod walks;
pub mod young;

pub use error::Error;
pub use young::{CosetId, CycleType, Partition};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
