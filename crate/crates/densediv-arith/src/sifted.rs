//! Sifted characteristic sums over `y`-rough integers.
//!
//! `sifted_char_sum(x, y, z, mode)` computes
//!
//! ```text
//! Σ { z^ν(m) : m <= x, every prime factor of m exceeds y }
//! ```
//!
//! with ν = Ω or ω. The unit `m = 1` always participates (empty product).
//! With `y = 1` nothing is sifted and the result is the plain characteristic
//! sum over `1..=x`; with `y >= x` only the unit survives.
//!
//! Implementation: a segmented sieve over `[2, x]`. Each segment keeps the
//! undivided cofactor of every integer plus running Ω/ω counts; primes up to
//! `√x` strip their full power from each multiple, and a surviving cofactor
//! `> 1` is one extra prime factor (necessarily `> √x`). An integer is
//! `y`-rough exactly when no stripping prime `<= y` touched it and its
//! surviving cofactor (if any) exceeds `y`. Factor counts are exact, so the
//! weights `z^ν` are too.

use num_complex::Complex64;

use crate::error::{ArithError, Result, SIEVE_BUDGET};
use crate::primes::sieve_primes;
use crate::theta::NuMode;

const SEGMENT_LEN: usize = 1 << 20;

/// Largest factor count an integer below the sieve budget can have
/// (`2^31 > 2·10^9`), with headroom.
const MAX_NU: usize = 40;

/// Exact characteristic sum over the `y`-rough integers up to `x`.
///
/// Validates `y >= 1` and `|z| <= 2`, and refuses `x` beyond the sieve
/// budget. `y` may be any float (including `∞`); prime comparisons against
/// it are exact for `y < 2^53`.
pub fn sifted_char_sum(x: u64, y: f64, z: Complex64, mode: NuMode) -> Result<Complex64> {
    if !(y >= 1.0) {
        return Err(ArithError::Domain {
            msg: format!("sift bound y must be >= 1, got {y}"),
        });
    }
    if !(z.norm() <= 2.0 + 1e-12) {
        return Err(ArithError::Domain {
            msg: format!("characteristic weight must satisfy |z| <= 2, got |z| = {}", z.norm()),
        });
    }
    if x == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if y >= x as f64 {
        return Ok(Complex64::new(1.0, 0.0)); // only m = 1 survives
    }
    if x > SIEVE_BUDGET {
        return Err(ArithError::SieveBudget {
            x,
            budget: SIEVE_BUDGET,
        });
    }

    let mut z_pow = [Complex64::new(0.0, 0.0); MAX_NU + 1];
    z_pow[0] = Complex64::new(1.0, 0.0);
    for k in 1..=MAX_NU {
        z_pow[k] = z_pow[k - 1] * z;
    }

    let sqrt_x = (x as f64).sqrt() as u64 + 1;
    let primes = sieve_primes(sqrt_x);

    let mut total = z_pow[0]; // m = 1
    let mut cofactor = vec![0u64; SEGMENT_LEN];
    let mut big = vec![0u8; SEGMENT_LEN];
    let mut small = vec![0u8; SEGMENT_LEN];
    let mut smooth = vec![false; SEGMENT_LEN]; // hit by a prime <= y

    let mut lo = 2u64;
    while lo <= x {
        let hi = (lo + SEGMENT_LEN as u64 - 1).min(x); // inclusive
        let len = (hi - lo + 1) as usize;
        for i in 0..len {
            cofactor[i] = lo + i as u64;
            big[i] = 0;
            small[i] = 0;
            smooth[i] = false;
        }
        for &p in &primes {
            if p > hi {
                break;
            }
            let p_is_small = (p as f64) <= y;
            let first = (lo.div_ceil(p) * p).max(p * 2);
            let mut m = first;
            while m <= hi {
                let i = (m - lo) as usize;
                let mut e = 0u8;
                while cofactor[i] % p == 0 {
                    cofactor[i] /= p;
                    e += 1;
                }
                big[i] += e;
                small[i] += 1;
                if p_is_small {
                    smooth[i] = true;
                }
                m += p;
            }
        }
        for i in 0..len {
            let rem = cofactor[i];
            if rem > 1 {
                // One remaining prime factor > √x (m = p included: the
                // multiples loop starts at 2p, so primes keep rem = p).
                big[i] += 1;
                small[i] += 1;
                if (rem as f64) <= y {
                    smooth[i] = true;
                }
            }
            if !smooth[i] {
                let nu = mode.pick(big[i] as u32, small[i] as u32) as usize;
                total += z_pow[nu.min(MAX_NU)];
            }
        }
        lo = hi + 1;
    }
    Ok(total)
}

/// Plain characteristic sum `Σ_{m <= x} z^ν(m)` (no sifting).
pub fn char_sum(x: u64, z: Complex64, mode: NuMode) -> Result<Complex64> {
    sifted_char_sum(x, 1.0, z, mode)
}
