//! Chain rules: the bound ϑ that decides which prime may extend a prefix.
//!
//! A value `n = p1^a1 ··· pk^ak` (primes ascending) belongs to the family
//! generated by a rule ϑ when every prime satisfies
//! `p_i <= ϑ(p1^a1 ··· p_{i-1}^{a_{i-1}})` — each prime is admitted by the
//! rule evaluated on the product of all *earlier* prime powers, while its own
//! exponent is unconstrained. `1` always belongs.
//!
//! Two concrete rules get exact integer arithmetic:
//!
//! * [`ThetaRule::DenseT`]: `ϑ(n) = t·n`, which generates exactly the
//!   integers whose sorted divisors climb by factors of at most `t`.
//!   The comparison `p <= t·n` is decided exactly by splitting the `f64`
//!   bound into mantissa and exponent — no rounding leaks into membership.
//! * [`ThetaRule::Practical`]: `ϑ(n) = 1 + σ(n)`, which generates exactly
//!   the practical numbers (every `m <= n` is a subset sum of divisors).
//!
//! [`ThetaRule::Custom`] accepts any user rule with `ϑ(1) >= 2`; its
//! comparisons go through `f64`, which is the documented contract for custom
//! rules (the built-in rules never do this).

use std::fmt;
use std::sync::Arc;

use crate::error::{ArithError, Result};

/// Which prime-factor count a statistic is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NuMode {
    /// Ω(n): prime factors counted with multiplicity.
    BigOmega,
    /// ω(n): distinct prime factors.
    SmallOmega,
}

impl NuMode {
    /// Select the matching count from an `(Ω, ω)` pair.
    #[inline]
    pub fn pick(self, big_omega: u32, small_omega: u32) -> u32 {
        match self {
            NuMode::BigOmega => big_omega,
            NuMode::SmallOmega => small_omega,
        }
    }

    /// Canonical label: `"Omega"` (with multiplicity) or `"omega"` (distinct).
    pub fn as_str(self) -> &'static str {
        match self {
            NuMode::BigOmega => "Omega",
            NuMode::SmallOmega => "omega",
        }
    }
}

impl fmt::Display for NuMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for NuMode {
    type Err = ArithError;

    /// Case matters for the bare names (`"Omega"` vs `"omega"`); the
    /// unambiguous long forms are accepted in any case.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Omega" => return Ok(NuMode::BigOmega),
            "omega" => return Ok(NuMode::SmallOmega),
            _ => {}
        }
        match s.to_ascii_lowercase().as_str() {
            "big-omega" | "big_omega" | "big" => Ok(NuMode::BigOmega),
            "small-omega" | "small_omega" | "small" | "distinct" => Ok(NuMode::SmallOmega),
            _ => Err(ArithError::Domain {
                msg: format!("unknown factor-count mode '{s}' (use Omega or omega)"),
            }),
        }
    }
}

/// The state a rule may inspect when deciding whether a prime can extend a
/// chain prefix: the prefix value, its divisor sum, and its factorization.
#[derive(Debug, Clone, Copy)]
pub struct ChainPrefix<'a> {
    pub value: u64,
    pub sigma: u128,
    pub factors: &'a [(u64, u32)],
}

impl ChainPrefix<'_> {
    /// The prefix `1` every chain starts from.
    pub fn unit() -> ChainPrefix<'static> {
        ChainPrefix {
            value: 1,
            sigma: 1,
            factors: &[],
        }
    }
}

type CustomFn = dyn Fn(ChainPrefix<'_>) -> f64 + Send + Sync;

#[derive(Clone)]
enum CustomKind {
    /// `ϑ = ∞`: every prime is admitted; the family is all of `1..=x`.
    Unbounded,
    Bounded(Arc<CustomFn>),
}

/// A named user-supplied rule (see [`ThetaRule::custom`]).
#[derive(Clone)]
pub struct CustomRule {
    tag: String,
    kind: CustomKind,
}

impl fmt::Debug for CustomRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomRule").field("tag", &self.tag).finish()
    }
}

/// A chain rule ϑ. See the module docs for the membership condition.
#[derive(Debug, Clone)]
pub enum ThetaRule {
    /// `ϑ(n) = t·n` with `t >= 2`; generates the `t`-dense integers.
    DenseT(f64),
    /// `ϑ(n) = 1 + σ(n)`; generates the practical numbers.
    Practical,
    /// Arbitrary rule with `ϑ(1) >= 2`, evaluated through `f64`.
    Custom(CustomRule),
}

impl ThetaRule {
    /// The divisor-density rule `ϑ(n) = t·n`. Requires finite `t >= 2`
    /// (below 2 the chain condition can strand the prime 2 itself and the
    /// divisor-ratio characterization breaks).
    pub fn dense_t(t: f64) -> Result<Self> {
        if !t.is_finite() || t < 2.0 {
            return Err(ArithError::InvalidDenseT { t });
        }
        Ok(ThetaRule::DenseT(t))
    }

    /// The practical-number rule `ϑ(n) = 1 + σ(n)`.
    pub fn practical() -> Self {
        ThetaRule::Practical
    }

    /// A rule that admits every prime (`ϑ = ∞`); useful for full-range
    /// consistency checks, where the family is all integers up to `x`.
    pub fn unbounded(tag: impl Into<String>) -> Self {
        ThetaRule::Custom(CustomRule {
            tag: tag.into(),
            kind: CustomKind::Unbounded,
        })
    }

    /// A named custom rule. Validates `ϑ(1) >= 2`, without which no chain
    /// can start. Comparisons for custom rules are performed in `f64`.
    pub fn custom<F>(tag: impl Into<String>, f: F) -> Result<Self>
    where
        F: Fn(ChainPrefix<'_>) -> f64 + Send + Sync + 'static,
    {
        let theta1 = f(ChainPrefix::unit());
        if !(theta1 >= 2.0) {
            return Err(ArithError::InvalidThetaAtOne { theta1 });
        }
        Ok(ThetaRule::Custom(CustomRule {
            tag: tag.into(),
            kind: CustomKind::Bounded(Arc::new(f)),
        }))
    }

    /// ϑ(prefix) as a float, `f64::INFINITY` for unbounded rules. For the
    /// built-in rules this is the exact value whenever it fits in 53 bits.
    pub fn eval(&self, prefix: ChainPrefix<'_>) -> f64 {
        match self {
            ThetaRule::DenseT(t) => t * prefix.value as f64,
            ThetaRule::Practical => 1.0 + prefix.sigma as f64,
            ThetaRule::Custom(c) => match &c.kind {
                CustomKind::Unbounded => f64::INFINITY,
                CustomKind::Bounded(f) => f(prefix),
            },
        }
    }

    /// Exact test `p <= ϑ(prefix)` — the chain extension condition.
    pub fn allows_next_prime(&self, prefix: ChainPrefix<'_>, p: u64) -> bool {
        match self {
            ThetaRule::DenseT(t) => scaled_le(p, *t, prefix.value),
            ThetaRule::Practical => (p as u128) <= 1 + prefix.sigma,
            ThetaRule::Custom(c) => match &c.kind {
                CustomKind::Unbounded => true,
                CustomKind::Bounded(f) => (p as f64) <= f(prefix),
            },
        }
    }

    /// Upper bound on any prime that can appear in a member `<= x`, used to
    /// size prime tables. Every admissible prime `p` satisfies
    /// `prefix·p <= x` and `p <= ϑ(prefix)`; for the dense rule this forces
    /// `p^2 <= t·x`, and for the practical rule `p^2 < p·(1+σ(prefix)) <= 8x`
    /// (since `σ(n) < 7n` for `n < 2^63`). Custom rules get the trivial
    /// bound `x`.
    pub fn max_prime_bound(&self, x: u64) -> u64 {
        match self {
            ThetaRule::DenseT(t) => ((*t * x as f64).sqrt() as u64).saturating_add(2),
            ThetaRule::Practical => ((8.0 * x as f64).sqrt() as u64).saturating_add(2),
            ThetaRule::Custom(_) => x.max(2),
        }
    }
}

impl fmt::Display for ThetaRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThetaRule::DenseT(t) => write!(f, "dense(t={t})"),
            ThetaRule::Practical => write!(f, "practical"),
            ThetaRule::Custom(c) => write!(f, "custom({})", c.tag),
        }
    }
}

/// Exact test `p <= t·n` for finite `t >= 2` and `n >= 1`.
///
/// Splits `t` into `m·2^e` with integer `m < 2^53` (so `e >= -51`) and
/// compares `p·2^{-e} <= m·n` in `u128`; both sides fit with room to spare.
/// For `e >= 0` the right side only grows, and overflow means "huge", i.e.
/// the test holds.
pub(crate) fn scaled_le(p: u64, t: f64, n: u64) -> bool {
    debug_assert!(t.is_finite() && t >= 2.0);
    let bits = t.to_bits();
    let exponent = ((bits >> 52) & 0x7ff) as i32;
    let mantissa = (bits & ((1u64 << 52) - 1)) | (1u64 << 52);
    let e = exponent - 1075; // t = mantissa * 2^e, mantissa in [2^52, 2^53)
    let rhs = mantissa as u128 * n as u128;
    if e >= 0 {
        match rhs.checked_shl(e as u32) {
            Some(shifted) => (p as u128) <= shifted,
            None => true,
        }
    } else {
        ((p as u128) << (-e) as u32) <= rhs
    }
}
