//! Euler products over primes for the two factor-counting modes.
//!
//! For ν = Ω (with multiplicity) the generating Dirichlet series of `z^ν`
//! factors as `Π_p (1 - z·p^{-s})^{-1}`, and for ν = ω as
//! `Π_p (1 + z/(p^s - 1))`. Normalizing by `ζ(s)^z` gives the entire-at-
//! `s=1` products
//!
//! ```text
//! H_Ω(z) = Π_p (1 - z/p)^{-1} (1 - 1/p)^z
//! H_ω(z) = Π_p (1 + z/(p-1))  (1 - 1/p)^z
//! ```
//!
//! and the finite sieve factors up to `y`
//!
//! ```text
//! G_Ω(y, z) = Π_{p<=y} (1 - z/p)          G_ω(y, z) = Π_{p<=y} (1 + z/(p-1))^{-1}
//! ```
//!
//! from which `h_ν(y, z) = H_ν(z)·G_ν(y, z)/Γ(z)` and the logarithmic
//! `s`-derivative combination `J_ν(y, z) = H'_ν/H_ν + G'_ν/G_ν + γz - 1`
//! (all derivatives at `s = 1`). `h` and `J` are the constants that graft
//! prime-by-prime information onto the Laplace-side asymptotics: for `y`
//! large, `h_ν(y,z) ≈ e^{-γz}/(Γ(z) (ln y)^z)` and `J_ν(y,z) ≈ z·ln y - 1`.
//!
//! Products and sums run over primes `p <= 10^6`; the omitted `p > 10^6`
//! tails are restored analytically:
//!
//! * for `ln H_ν`, via the `p^{-2}`/`p^{-3}` expansion of each log-factor
//!   and pinned prime-zeta values `P(2), P(3)` minus their exact partial
//!   sums (remaining error `O(Σ_{p>10^6} p^{-4}) ~ 1e-19`);
//! * for the `H'/H` sums, whose terms are `~ ln p/p²`, via partial
//!   summation against the exact Chebyshev sum `θ(10^6)`:
//!   `Σ_{p>P} ln p/p² ≈ 2/P - θ(P)/P²` (error `O(P^{-3/2})` under the
//!   prime number theorem with classical error term).

use std::sync::OnceLock;

use densediv_arith::primes::sieve_primes;
use densediv_arith::NuMode;
use num_complex::Complex64;

use crate::constants::EULER_GAMMA;
use crate::error::{Result, SpecialError};
use crate::gamma::recip_gamma;

/// Prime cutoff for explicit products/sums.
const PRIME_CUTOFF: u64 = 1_000_000;

/// Prime zeta values `P(k) = Σ_p p^{-k}` (50-digit references).
const PRIME_ZETA_2: f64 = 0.452_247_420_041_065_498_506_5;
const PRIME_ZETA_3: f64 = 0.174_762_639_299_443_536_423_1;

struct PrimeData {
    primes: Vec<u64>,
    /// Σ_{p <= cutoff} p^{-2}
    s2: f64,
    /// Σ_{p <= cutoff} p^{-3}
    s3: f64,
    /// θ(cutoff) = Σ_{p <= cutoff} ln p
    theta: f64,
}

static PRIME_DATA: OnceLock<PrimeData> = OnceLock::new();

fn prime_data() -> &'static PrimeData {
    PRIME_DATA.get_or_init(|| {
        let primes = sieve_primes(PRIME_CUTOFF);
        let mut s2 = 0.0;
        let mut s3 = 0.0;
        let mut theta = 0.0;
        for &p in primes.iter().rev() {
            // Ascending magnitude: tiny terms first for a clean summation.
            let inv = 1.0 / p as f64;
            s2 += inv * inv;
            s3 += inv * inv * inv;
        }
        for &p in &primes {
            theta += (p as f64).ln();
        }
        PrimeData {
            primes,
            s2,
            s3,
            theta,
        }
    })
}

fn validate(y: f64, z: Complex64) -> Result<()> {
    if !(1.5..=PRIME_CUTOFF as f64).contains(&y) {
        return Err(SpecialError::Domain {
            msg: format!("sieve level y must lie in [1.5, 1e6], got {y}"),
        });
    }
    validate_z(z)
}

fn validate_z(z: Complex64) -> Result<()> {
    let d = (z - Complex64::new(1.0, 0.0)).norm();
    if d > 0.5 + 1e-12 {
        return Err(SpecialError::Domain {
            msg: format!("Euler products require |z - 1| <= 1/2, got |z-1| = {d}"),
        });
    }
    Ok(())
}

/// `H_ν(z)` over all primes (explicit to 10^6, analytic log-tail beyond).
fn h_infinite(z: Complex64, mode: NuMode) -> Complex64 {
    let data = prime_data();
    let mut prod = Complex64::new(1.0, 0.0);
    for &p in &data.primes {
        let pf = p as f64;
        let zeta_factor = (z * (1.0 - 1.0 / pf).ln()).exp();
        let local = match mode {
            NuMode::BigOmega => zeta_factor / (1.0 - z / pf),
            NuMode::SmallOmega => (1.0 + z / (pf - 1.0)) * zeta_factor,
        };
        prod *= local;
    }
    let d2 = PRIME_ZETA_2 - data.s2;
    let d3 = PRIME_ZETA_3 - data.s3;
    let log_tail = match mode {
        // ln[(1-z w)^{-1}(1-w)^z] = (z²-z)/2 w² + (z³-z)/3 w³ + O(w⁴)
        NuMode::BigOmega => (z * z - z) / 2.0 * d2 + (z * z * z - z) / 3.0 * d3,
        // ln[(1+z w/(1-w))(1-w)^z] = (z-z²)/2 w² + (2z/3 - z² + z³/3) w³ + O(w⁴)
        NuMode::SmallOmega => {
            (z - z * z) / 2.0 * d2 + (2.0 * z / 3.0 - z * z + z * z * z / 3.0) * d3
        }
    };
    prod * log_tail.exp()
}

/// `(H'_ν/H_ν)(1, z)`: logarithmic `s`-derivative at `s = 1`, PNT tail.
fn h_log_deriv(z: Complex64, mode: NuMode) -> Complex64 {
    let data = prime_data();
    let mut sum = Complex64::new(0.0, 0.0);
    match mode {
        NuMode::BigOmega => {
            for &p in &data.primes {
                let pf = p as f64;
                sum += pf.ln() / ((pf - 1.0) * (pf - z));
            }
            sum *= z * (1.0 - z);
            let pf = PRIME_CUTOFF as f64;
            sum += z * (1.0 - z) * (2.0 / pf - data.theta / (pf * pf));
        }
        NuMode::SmallOmega => {
            for &p in &data.primes {
                let pf = p as f64;
                sum += pf.ln() / ((pf - 1.0) * (pf - 1.0 + z));
            }
            sum *= z * (z - 1.0);
            let pf = PRIME_CUTOFF as f64;
            sum += z * (z - 1.0) * (2.0 / pf - data.theta / (pf * pf));
        }
    }
    sum
}

/// `G_ν(y, z)` and `(G'_ν/G_ν)(1, y, z)` in one pass over `p <= y`.
fn g_factor_and_log_deriv(y: f64, z: Complex64, mode: NuMode) -> (Complex64, Complex64) {
    let data = prime_data();
    let mut prod = Complex64::new(1.0, 0.0);
    let mut dsum = Complex64::new(0.0, 0.0);
    for &p in &data.primes {
        let pf = p as f64;
        if pf > y {
            break;
        }
        match mode {
            NuMode::BigOmega => {
                prod *= 1.0 - z / pf;
                dsum += z * pf.ln() / (pf - z);
            }
            NuMode::SmallOmega => {
                prod /= 1.0 + z / (pf - 1.0);
                dsum += z * pf * pf.ln() / ((pf - 1.0) * (pf - 1.0 + z));
            }
        }
    }
    (prod, dsum)
}

/// `h_ν(y, z) = H_ν(z) · G_ν(y, z) / Γ(z)` for `1.5 <= y <= 10^6`,
/// `|z - 1| <= 1/2`.
pub fn euler_h(y: f64, z: Complex64, mode: NuMode) -> Result<Complex64> {
    validate(y, z)?;
    let (g, _) = g_factor_and_log_deriv(y, z, mode);
    Ok(h_infinite(z, mode) * g * recip_gamma(z))
}

/// `J_ν(y, z) = (H'_ν/H_ν)(1,z) + (G'_ν/G_ν)(1,y,z) + γz - 1` for
/// `1.5 <= y <= 10^6`, `|z - 1| <= 1/2`.
pub fn euler_j(y: f64, z: Complex64, mode: NuMode) -> Result<Complex64> {
    validate(y, z)?;
    let (_, gd) = g_factor_and_log_deriv(y, z, mode);
    Ok(h_log_deriv(z, mode) + gd + EULER_GAMMA * z - 1.0)
}

/// Leading characteristic-sum coefficient `λ_{ν,0}(z) = H_ν(z)/Γ(z)`:
/// `Σ_{n<=x} z^{ν(n)} = x (ln x)^{z-1} (λ_0 + λ_1/ln x + O(1/ln²x))`.
pub fn lambda0(z: Complex64, mode: NuMode) -> Result<Complex64> {
    validate_z(z)?;
    Ok(h_infinite(z, mode) * recip_gamma(z))
}

/// Second coefficient `λ_{ν,1}(z) = (z-1)·λ_0(z)·(H'_ν/H_ν + γz - 1)`.
pub fn lambda1(z: Complex64, mode: NuMode) -> Result<Complex64> {
    validate_z(z)?;
    let l0 = h_infinite(z, mode) * recip_gamma(z);
    let j_empty = h_log_deriv(z, mode) + EULER_GAMMA * z - 1.0;
    Ok((z - 1.0) * l0 * j_empty)
}
