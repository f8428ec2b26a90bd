//! Exact distributions of conjugacy-class random walks on the symmetric
//! group `S_n`.
//!
//! Everything here is computed in arbitrary-precision rational arithmetic:
//! no floating point enters any computation path, so equalities, orderings
//! and probability comparisons are exact. The main pipeline is
//!
//! 1. [`partitions`] — partitions, cycle types and the likelihood orders
//!    used to describe walk distributions;
//! 2. [`characters`] — irreducible characters of `S_n` (Murnaghan–Nakayama
//!    plus closed forms for the families that drive walk analysis);
//! 3. [`charpoly`] — character polynomials in the binomial/falling-factorial
//!    basis, evaluating characters from cycle counts;
//! 4. [`walks`] — walk specifications, exact `t`-step class distributions by
//!    Fourier inversion, and an independent class-algebra convolution oracle;
//! 5. [`analysis`] — likelihood rankings, certified stabilization times for
//!    pairwise orderings, and exact distances to stationarity.
//!
//! The crate is the library behind the `symwalk` command-line tool.

#![forbid(unsafe_code)]

pub mod analysis;
pub mod arith;
pub mod characters;
pub mod charpoly;
pub(crate) mod csvio;
pub mod error;
pub(crate) mod jsonio;
pub mod partitions;
pub mod walks;

pub use analysis::{
    certified_stabilization_time, check_order, linf_distance, predicted_side, rank, separation,
    stabilization_report, stabilization_survey, stationary_split, tv_distance, CertOutcome,
    OrderPrediction, ParityLead, RankReport, Side, SplitReport, SplitRow,
    StabilizationCertificate, StabilizationReport, SurveyReport,
};
pub use characters::{
    char_ratio, character, dimension, ncycle_character, three_cycle_ratio,
    transposition_ratio_two_row_with_tail, CharacterTable,
};
pub use charpoly::{character_polynomial, CharPolynomial};
pub use error::{Error, Result};
pub use partitions::{
    compare, enumerate_partitions, extremes, Comparison, CycleType, OrderKind, Parity, Partition,
};
pub use walks::{
    builtin_walk, convolve_oracle, difference, distribution, eigenvalue, eigenvalues,
    ncycle_distribution_by_hooks, parse_fraction, ClassDistribution, Eigenvalue, WalkKind,
    WalkSpec,
};

/// Exact rational scalar used throughout the crate.
pub type Rational = num::BigRational;

/// Exact integer scalar used throughout the crate.
pub type Int = num::BigInt;
