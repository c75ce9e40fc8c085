//! Entire-function building blocks:
//!
//! * `I(s) = ∫_0^s (e^t - 1)/t dt` and `T(s) = ∫_0^s (1 - e^{-t})/t dt`
//!   (so `T(s) = -I(-s)`), evaluated to ~1e-13 relative on `|s| <= 50`;
//! * the power-series coefficient families `b_k`, `a_k`, `c_k` defined by
//!   `e^{zT(s)} = Σ b_k(z) s^k`, `e^{-s+zT(s)} = Σ a_k(z) s^k`, and
//!   `c_k = e^{-γz} b_k`, which also give `e^{zJ(u)} = Σ c_k(z) u^{k-z}`;
//! * [`exp_zj`], the closed form `e^{zJ(u)} = u^{-z} e^{z(T(u)-γ)}` from the
//!   identity `u·e^{J(u)} = e^{-γ + T(u)}`.
//!
//! ### Why `I` is *not* one power series
//!
//! The Maclaurin series `Σ s^k/(k·k!)` is perfectly conditioned only while
//! `e^{|s|}` stays small: its largest term is ~`e^{|s|}`, so in floating
//! point the sum loses `e^{|s|}·ε` absolutely, which is catastrophic for
//! large imaginary or negative `s`. Instead we use the exact splitting
//!
//! ```text
//! I(s) = I(s/2) + ∫_{1/2}^{1} (e^{su} - 1)/u du
//! ```
//!
//! (substitute `u = v/2` in `∫_0^{1/2}`), halving until `|s| <= 8` where the
//! series is safe, and evaluating each bounded-interval integral by
//! Gauss–Legendre. Every intermediate has magnitude comparable to the
//! answer, so the relative error stays at the 1e-13 level across `|s| <= 50`.

use num_complex::Complex64;

use crate::constants::EULER_GAMMA;
use crate::error::{Result, SpecialError};
use crate::quad::integrate;

/// Largest `|s|` accepted by [`eval_i`]/[`eval_t`].
pub const SERIES_DOMAIN_RADIUS: f64 = 50.0;

/// Below this the Maclaurin series is used directly.
const SERIES_SAFE_RADIUS: f64 = 8.0;

/// `I(s) = ∫_0^s (e^t - 1)/t dt = Σ_{k>=1} s^k/(k·k!)` for `|s| <= 50`.
pub fn eval_i(s: Complex64) -> Result<Complex64> {
    if !s.is_finite() || s.norm() > SERIES_DOMAIN_RADIUS {
        return Err(SpecialError::Domain {
            msg: format!("I(s) evaluated only for |s| <= {SERIES_DOMAIN_RADIUS}, got |s| = {}", s.norm()),
        });
    }
    Ok(eval_i_unchecked(s))
}

fn eval_i_unchecked(s: Complex64) -> Complex64 {
    if s.norm() <= SERIES_SAFE_RADIUS {
        return maclaurin(s);
    }
    let tail = integrate(
        |u| {
            let w = s * u;
            exp_m1(w) / u
        },
        0.5,
        1.0,
        48,
    );
    eval_i_unchecked(s * 0.5) + tail
}

fn maclaurin(s: Complex64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0); // s^k / k!
    for k in 1..200 {
        term *= s / k as f64;
        let contrib = term / k as f64;
        sum += contrib;
        if contrib.norm() < 1e-16 * sum.norm() + 1e-300 {
            break;
        }
    }
    sum
}

/// `e^w - 1` without cancellation for small `|w|`.
pub fn exp_m1(w: Complex64) -> Complex64 {
    if w.norm() > 0.5 {
        return w.exp() - 1.0;
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0); // w^k / k!
    for k in 1..40 {
        term *= w / k as f64;
        sum += term;
        if term.norm() < 1e-18 * (sum.norm() + 1e-30) {
            break;
        }
    }
    sum
}

/// `T(s) = ∫_0^s (1 - e^{-t})/t dt = -I(-s)` for `|s| <= 50`.
pub fn eval_t(s: Complex64) -> Result<Complex64> {
    Ok(-eval_i(-s)?)
}

/// Real-argument convenience for [`eval_t`].
pub fn eval_t_real(u: f64) -> Result<f64> {
    Ok(eval_t(Complex64::new(u, 0.0))?.re)
}

/// `e^{zJ(u)} = u^{-z} e^{z(T(u) - γ)}`, valid for `0 < u <= 50`.
///
/// This is the closed form behind the expansion `Σ c_k(z) u^{k-z}`; for
/// `u <= 1` it is the stable way to evaluate `e^{zJ(u)}` (the direct route
/// through `J` would need `e^{z(-γ - ln u - I(-u))}` anyway — same thing).
pub fn exp_zj(z: Complex64, u: f64) -> Result<Complex64> {
    if !(u > 0.0) {
        return Err(SpecialError::Domain {
            msg: format!("exp_zj requires u > 0, got {u}"),
        });
    }
    let t = eval_t(Complex64::new(u, 0.0))?;
    Ok(Complex64::new(u, 0.0).powc(-z) * (z * (t - EULER_GAMMA)).exp())
}

/// Maximum coefficient order served by [`coeff_table`].
pub const MAX_COEFF_ORDER: usize = 60;

/// The three coefficient families up to order `k_max`, all for one `z`.
#[derive(Debug, Clone)]
pub struct CoeffTable {
    pub z: Complex64,
    /// `e^{zT(s)} = Σ b[k] s^k`
    pub b: Vec<Complex64>,
    /// `e^{-s+zT(s)} = Σ a[k] s^k`
    pub a: Vec<Complex64>,
    /// `c[k] = e^{-γz} b[k]`, so `e^{zJ(u)} = Σ c[k] u^{k-z}`
    pub c: Vec<Complex64>,
}

/// Compute `b_k, a_k, c_k` for `k = 0..=k_max` (`k_max <= 60`).
///
/// `T(s) = Σ_{j>=1} t_j s^j` with `t_j = (-1)^{j+1}/(j·j!)`, and
/// differentiating `e^{zT}` gives the convolution recurrence
/// `k·b_k = z·Σ_{j=1}^{k} j·t_j·b_{k-j}`. The `a_k` follow by convolving
/// with the series of `e^{-s}`.
pub fn coeff_table(z: Complex64, k_max: usize) -> Result<CoeffTable> {
    if k_max > MAX_COEFF_ORDER {
        return Err(SpecialError::Domain {
            msg: format!("coefficient order {k_max} exceeds maximum {MAX_COEFF_ORDER}"),
        });
    }
    // j·t_j = (-1)^{j+1}/j!
    let mut jt = vec![0.0f64; k_max + 1];
    let mut factorial = 1.0f64;
    for (j, slot) in jt.iter_mut().enumerate().skip(1) {
        factorial *= j as f64;
        *slot = if j % 2 == 1 { 1.0 } else { -1.0 } / factorial;
    }

    let mut b = vec![Complex64::new(0.0, 0.0); k_max + 1];
    b[0] = Complex64::new(1.0, 0.0);
    for k in 1..=k_max {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 1..=k {
            acc += jt[j] * b[k - j];
        }
        b[k] = z * acc / k as f64;
    }

    let mut a = vec![Complex64::new(0.0, 0.0); k_max + 1];
    let mut inv_fact = vec![0.0f64; k_max + 1];
    inv_fact[0] = 1.0;
    for j in 1..=k_max {
        inv_fact[j] = inv_fact[j - 1] / j as f64;
    }
    for k in 0..=k_max {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..=k {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * inv_fact[j] * b[k - j];
        }
        a[k] = acc;
    }

    let scale = (-z * EULER_GAMMA).exp();
    let c = b.iter().map(|&bk| scale * bk).collect();

    Ok(CoeffTable { z, b, a, c })
}
