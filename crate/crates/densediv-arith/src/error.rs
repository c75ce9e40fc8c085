//! Error types for the integer-side computations.
//!
//! Every fallible operation states its failure mode here; none of them panic
//! on bad input. Budget errors are distinct from validation errors so callers
//! (notably the CLI) can map them to different exit codes.

use thiserror::Error;

/// Hard cap on values accepted by [`crate::membership::is_practical_oracle`].
/// The subset-sum table costs O(n·τ(n)/64); beyond this the oracle is not the
/// right tool.
pub const PRACTICAL_ORACLE_CAP: u64 = 1_000_000;

/// Hard cap on the divisor count accepted by divisor-list operations.
/// Inputs this composite signal a misuse of the test oracles.
pub const DIVISOR_CAP: u64 = 100_000;

/// Largest `x` accepted by the enumeration of chained-factorization families.
pub const ENUMERATION_BUDGET: u64 = 1_000_000_000;

/// Largest `x` accepted by the segmented sifted-sum sieve.
pub const SIEVE_BUDGET: u64 = 2_000_000_000;

/// Errors raised by the arithmetic layer.
#[derive(Debug, Error, PartialEq)]
pub enum ArithError {
    /// `max_divisor_ratio(1)` is undefined: a single divisor has no
    /// consecutive pair.
    #[error("n = 1 has a single divisor; the maximal consecutive-divisor ratio is undefined")]
    SingleDivisor,

    /// The divisor list would exceed [`DIVISOR_CAP`] entries.
    #[error("divisor count cap exceeded: tau({n}) = {tau} > {cap}")]
    DivisorCapExceeded { n: u64, tau: u64, cap: u64 },

    /// The subset-sum practicality oracle is capped at
    /// [`PRACTICAL_ORACLE_CAP`].
    #[error("practicality oracle capped at {cap}; got n = {n}")]
    PracticalOracleCap { n: u64, cap: u64 },

    /// Family enumeration refuses `x` beyond [`ENUMERATION_BUDGET`].
    #[error("enumeration budget exceeded: x = {x} > {budget}")]
    EnumerationBudget { x: u64, budget: u64 },

    /// The sifted-sum sieve refuses `x` beyond [`SIEVE_BUDGET`].
    #[error("sieve budget exceeded: x = {x} > {budget}")]
    SieveBudget { x: u64, budget: u64 },

    /// The dense-divisor rule needs `t >= 2`; smaller `t` admits only `n = 1`
    /// and violates the chain-bound hypothesis.
    #[error("dense rule requires t >= 2 (got t = {t})")]
    InvalidDenseT { t: f64 },

    /// A chain-bound function must satisfy `theta(1) >= 2`.
    #[error("chain bound at n = 1 must be >= 2 (got {theta1})")]
    InvalidThetaAtOne { theta1: f64 },

    /// Parameter out of an operation's stated domain.
    #[error("parameter out of domain: {msg}")]
    Domain { msg: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, ArithError>;
