//! Exact arithmetic for prime-chain families of integers.
//!
//! A *chain family* is defined by a rule ϑ: an integer
//! `n = p1^a1 ··· pk^ak` (primes ascending) belongs to the family when each
//! prime is admitted by the rule evaluated on the product of the earlier
//! prime powers, `p_i <= ϑ(p1^a1 ··· p_{i-1}^{a_{i-1}})`. Two rules are
//! built in with exact integer comparisons:
//!
//! * `ϑ(n) = t·n` — the integers whose sorted divisors never jump by more
//!   than a factor `t` (for `t >= 2`);
//! * `ϑ(n) = 1 + σ(n)` — the practical numbers.
//!
//! The crate provides:
//!
//! * [`FactoredInteger`] and [`factorize`] — values carried with their
//!   factorization, divisor lists, divisor sums, and factor counts;
//! * [`ThetaRule`] — rule construction and exact admission tests;
//! * membership tests plus independent divisor-gap and subset-sum oracles;
//! * depth-first enumeration of all members up to `x`, sequential or
//!   work-split across threads ([`for_each_member`], [`par_members_fold`]);
//! * checkpoint serialization of enumerations with full re-validation;
//! * segmented-sieve characteristic sums over `y`-rough integers
//!   ([`sifted_char_sum`]), the counting side of the recursion that links a
//!   family to its sifted complement.
//!
//! Everything here is exact: membership decisions never round, sums over
//! members use integer or complex arithmetic with exact integer exponents,
//! and caps/budgets are explicit [`ArithError`] variants rather than silent
//! truncations.

pub mod checkpoint;
mod enumerate;
mod error;
mod factored;
mod membership;
pub mod primes;
mod sifted;
mod theta;

pub use enumerate::{
    count_dense, count_members, enumerate_members, enumerate_members_from, for_each_member,
    par_members_fold, MemberView,
};
pub use error::{
    ArithError, Result, DIVISOR_CAP, ENUMERATION_BUDGET, PRACTICAL_ORACLE_CAP, SIEVE_BUDGET,
};
pub use factored::{factorize, FactoredInteger};
pub use membership::{is_member, is_member_value, is_practical_oracle, is_t_dense_oracle};
pub use sifted::{char_sum, sifted_char_sum};
pub use theta::{ChainPrefix, CustomRule, NuMode, ThetaRule};
