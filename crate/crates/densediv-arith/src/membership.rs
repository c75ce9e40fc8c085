//! Membership tests: the chain condition, plus two independent oracles that
//! characterize the built-in rules without mentioning chains at all.
//!
//! The oracles exist so the chain machinery can be cross-validated against
//! first-principles definitions: `is_t_dense_oracle` inspects actual divisor
//! gaps, and `is_practical_oracle` runs the subset-sum definition. Property
//! tests assert they agree with [`is_member`] under the matching rule.

use crate::error::{ArithError, Result, PRACTICAL_ORACLE_CAP};
use crate::factored::{factorize, FactoredInteger};
use crate::theta::{scaled_le, ChainPrefix, ThetaRule};

/// Does `n` satisfy the chain condition of `rule`?
///
/// Walks the factorization smallest prime first, checking each prime against
/// ϑ of the product of the earlier prime powers. `1` is always a member.
pub fn is_member(rule: &ThetaRule, n: &FactoredInteger) -> bool {
    let mut value: u64 = 1;
    let mut sigma: u128 = 1;
    for (i, &(p, e)) in n.factors().iter().enumerate() {
        let prefix = ChainPrefix {
            value,
            sigma,
            factors: &n.factors()[..i],
        };
        if !rule.allows_next_prime(prefix, p) {
            return false;
        }
        let mut term: u128 = 1;
        let mut pk: u128 = 1;
        for _ in 0..e {
            value *= p; // cannot overflow: value * p^e divides n
            pk *= p as u128;
            term += pk;
        }
        sigma *= term;
    }
    true
}

/// Convenience wrapper: factorize, then test membership.
pub fn is_member_value(rule: &ThetaRule, n: u64) -> bool {
    is_member(rule, &factorize(n))
}

/// Divisor-gap oracle: do the sorted divisors `1 = d_1 < ··· < d_τ = n`
/// satisfy `d_{i+1} <= t·d_i` for every consecutive pair?
///
/// Comparisons are exact (same mantissa/exponent split the dense rule uses),
/// so this agrees with the chain characterization bit-for-bit. Requires
/// finite `t >= 2` and fails for integers whose divisor list exceeds the
/// listing cap.
pub fn is_t_dense_oracle(n: u64, t: f64) -> Result<bool> {
    if !t.is_finite() || t < 2.0 {
        return Err(ArithError::InvalidDenseT { t });
    }
    if n == 1 {
        return Ok(true);
    }
    let divs = factorize(n).divisors_sorted()?;
    Ok(divs.windows(2).all(|w| scaled_le(w[1], t, w[0])))
}

/// Subset-sum oracle for practical numbers: is every `m <= n` a sum of
/// distinct divisors of `n`?
///
/// Runs the textbook bitset dynamic program over the divisors (ascending),
/// bailing out early once all of `1..=n` is reachable. Capped at
/// [`PRACTICAL_ORACLE_CAP`] because the bitset is Θ(n) words of state.
pub fn is_practical_oracle(n: u64) -> Result<bool> {
    if n > PRACTICAL_ORACLE_CAP {
        return Err(ArithError::PracticalOracleCap {
            n,
            cap: PRACTICAL_ORACLE_CAP,
        });
    }
    if n == 1 {
        return Ok(true);
    }
    if n % 2 == 1 {
        // An odd n > 1 cannot represent 2.
        return Ok(false);
    }
    let divs = factorize(n).divisors_sorted()?;
    let n = n as usize;
    // reachable[m] = bit m of the word array; bit 0 (empty sum) starts set.
    let words = n / 64 + 1;
    let mut reachable = vec![0u64; words];
    reachable[0] = 1;
    for &d in &divs {
        let d = d as usize;
        // reachable |= reachable << d, truncated to sums <= n.
        let word_shift = d / 64;
        let bit_shift = d % 64;
        for i in (word_shift..words).rev() {
            let mut v = reachable[i - word_shift] << bit_shift;
            if bit_shift > 0 && i > word_shift {
                v |= reachable[i - word_shift - 1] >> (64 - bit_shift);
            }
            reachable[i] |= v;
        }
        if all_sums_reachable(&reachable, n) {
            return Ok(true);
        }
    }
    Ok(all_sums_reachable(&reachable, n))
}

/// Are bits `1..=n` all set?
fn all_sums_reachable(reachable: &[u64], n: usize) -> bool {
    let full_words = (n + 1) / 64;
    if reachable[..full_words].iter().any(|&w| w != u64::MAX) {
        return false;
    }
    if reachable[0] & 1 == 0 {
        return false; // bit 0 is always set in practice; keep the check honest
    }
    let rem_bits = (n + 1) % 64;
    if rem_bits == 0 {
        return true;
    }
    let mask = (1u64 << rem_bits) - 1;
    reachable[full_words] & mask == mask
}
