//! The delay-differential function ω_z: the unique solution of
//!
//! ```text
//! u·ω_z(u) = z                    (1 <= u <= 2)
//! (u·ω_z(u))' = z·ω_z(u-1)        (u > 2)
//! ```
//!
//! extended by `ω_z(u) = 0` for `u < 1` (the value *at* `u = 1` is `z`).
//! For `z = 1` this is the classical Buchstab function, tending to `e^{-γ}`;
//! for general `z` it decays or grows like `u^{z-1}`.
//!
//! ### Marching scheme
//!
//! Write `W(u) = u·ω_z(u)`, so `W' = z·ω_z(u-1)` is known one unit back.
//! Each step of size `h` applies Simpson's rule to `∫ W'`; the midpoint
//! history value comes from cubic Hermite interpolation on the stored grid
//! (the DDE itself supplies exact grid derivatives,
//! `ω' = (z·ω(u-1) - ω)/u`). `h` must divide 1 so that `u - 1` always lands
//! on the grid. ω is C¹ on `(2, ∞)` but only C⁰ at `u = 2`, so the stored
//! derivative at the `u = 2` node is the *right* derivative — exactly what
//! interpolation on `[2, 2+h]` needs; on `[1, 2]` the closed form `z/u` is
//! used directly and the kink never enters a stencil.
//!
//! Measured against closed forms on `[2, 3]` and the asymptotic expansion,
//! the march holds ~1e-13 absolute accuracy at `h = 0.005`.
//!
//! ### Asymptotic expansion
//!
//! With the coefficient families of [`crate::series::coeff_table`],
//!
//! ```text
//! ω_z(u) ≈ Σ_{k=0}^{K} c_k(z) u^{z-1-k} / Γ(z-k)                 (plain)
//! ω_z(u) ≈ e^{-γz} Σ_{k=0}^{K} a_k(z) (u+1)^{z-1-k} / Γ(z-k)     (shifted)
//! ```
//!
//! where `1/Γ` vanishes at nonpositive integers (so at `z = 1` both
//! truncations collapse to the constant `e^{-γ}`). The truncation error
//! falls like `u^{Re z - K - 2}`.

use num_complex::Complex64;

use crate::error::{Result, SpecialError};
use crate::gamma::recip_gamma;
use crate::series::coeff_table;

/// A complex-valued function sampled on a uniform grid together with its
/// derivatives, evaluated between nodes by cubic Hermite interpolation.
#[derive(Debug, Clone)]
pub struct SampledFunction {
    start: f64,
    step: f64,
    values: Vec<Complex64>,
    derivs: Vec<Complex64>,
}

impl SampledFunction {
    pub fn new(
        start: f64,
        step: f64,
        values: Vec<Complex64>,
        derivs: Vec<Complex64>,
    ) -> Result<Self> {
        if !(step > 0.0) || values.len() < 2 || values.len() != derivs.len() {
            return Err(SpecialError::Domain {
                msg: "sampled function needs a positive step and matching value/derivative \
                      arrays of length >= 2"
                    .into(),
            });
        }
        Ok(Self {
            start,
            step,
            values,
            derivs,
        })
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn end(&self) -> f64 {
        self.start + self.step * (self.values.len() - 1) as f64
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value_at(&self, i: usize) -> Complex64 {
        self.values[i]
    }

    pub fn deriv_at(&self, i: usize) -> Complex64 {
        self.derivs[i]
    }

    /// Cubic Hermite evaluation; errs if `u` lies outside the grid by more
    /// than a rounding margin.
    pub fn eval(&self, u: f64) -> Result<Complex64> {
        let n = self.values.len();
        let t = (u - self.start) / self.step;
        if t < -1e-9 || t > (n - 1) as f64 + 1e-9 {
            return Err(SpecialError::OutOfRange {
                u,
                lo: self.start,
                hi: self.end(),
            });
        }
        let i = (t.floor() as usize).min(n - 2);
        let tau = (t - i as f64).clamp(0.0, 1.0);
        let (v0, v1) = (self.values[i], self.values[i + 1]);
        let (d0, d1) = (self.derivs[i], self.derivs[i + 1]);
        let t2 = tau * tau;
        let t3 = t2 * tau;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + tau;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        Ok(h00 * v0 + h10 * self.step * d0 + h01 * v1 + h11 * self.step * d1)
    }
}

/// A marched solution of the ω_z delay-differential equation on `[1, u_max]`.
#[derive(Debug, Clone)]
pub struct OmegaSolution {
    z: Complex64,
    u_max: f64,
    grid: SampledFunction,
}

/// Largest supported `u_max`.
pub const OMEGA_U_MAX: f64 = 200.0;

/// Largest supported step.
pub const OMEGA_H_MAX: f64 = 0.01;

/// March ω_z from the closed form on `[1, 2]` out to `u_max`.
///
/// Requirements: `1/2 <= |z| <= 2`, `0 < h <= 0.01` with `1/h` an integer,
/// `3 <= u_max <= 200` with `u_max - 1` a multiple of `h`.
pub fn solve_omega(z: Complex64, u_max: f64, h: f64) -> Result<OmegaSolution> {
    let r = z.norm();
    if !(0.5..=2.0 + 1e-12).contains(&r) {
        return Err(SpecialError::Domain {
            msg: format!("solve_omega requires 1/2 <= |z| <= 2, got |z| = {r}"),
        });
    }
    if !(h > 0.0 && h <= OMEGA_H_MAX) {
        return Err(SpecialError::Domain {
            msg: format!("step must satisfy 0 < h <= {OMEGA_H_MAX}, got {h}"),
        });
    }
    let spu = (1.0 / h).round();
    if spu < 1.0 || (spu * h - 1.0).abs() > 1e-9 {
        return Err(SpecialError::Domain {
            msg: format!("step h = {h} must divide 1 exactly (history lookups land on the grid)"),
        });
    }
    let spu = spu as usize;
    if !(3.0..=OMEGA_U_MAX).contains(&u_max) {
        return Err(SpecialError::Domain {
            msg: format!("u_max must lie in [3, {OMEGA_U_MAX}], got {u_max}"),
        });
    }
    let n = ((u_max - 1.0) / h).round() as usize;
    if ((n as f64) * h + 1.0 - u_max).abs() > 1e-6 {
        return Err(SpecialError::Domain {
            msg: format!("u_max = {u_max} must be 1 + a multiple of h = {h}"),
        });
    }

    let mut values = vec![Complex64::new(0.0, 0.0); n + 1];
    let mut derivs = vec![Complex64::new(0.0, 0.0); n + 1];

    // Closed form on [1, 2]: ω = z/u, ω' = -z/u².
    for i in 0..=spu.min(n) {
        let u = 1.0 + i as f64 * h;
        values[i] = z / u;
        derivs[i] = -z / (u * u);
    }
    // Right derivative at the kink u = 2 (what [2, 2+h] interpolation needs).
    if spu <= n {
        derivs[spu] = (z * z - z / 2.0) / 2.0;
    }

    for i in spu..n {
        let u = 1.0 + i as f64 * h;
        let j = i - spu; // grid index of u - 1
        let s_left = values[j];
        let s_right = values[j + 1];
        // Hermite midpoint of the history interval [u-1, u-1+h]. The grid
        // stores the right-sided derivative at the kink u = 2; an interval
        // *ending* there lies left of the kink and needs -z/4 instead.
        let d_right = if j + 1 == spu {
            -z / 4.0
        } else {
            derivs[j + 1]
        };
        let s_mid = 0.5 * (s_left + s_right) + (derivs[j] - d_right) * (h / 8.0);
        let w_next = u * values[i] + z * (h / 6.0) * (s_left + 4.0 * s_mid + s_right);
        let u_next = u + h;
        values[i + 1] = w_next / u_next;
        derivs[i + 1] = (z * values[j + 1] - values[i + 1]) / u_next;
    }

    Ok(OmegaSolution {
        z,
        u_max,
        grid: SampledFunction::new(1.0, h, values, derivs)?,
    })
}

impl OmegaSolution {
    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn u_max(&self) -> f64 {
        self.u_max
    }

    pub fn step(&self) -> f64 {
        self.grid.step()
    }

    /// Total evaluation: `0` below 1, the exact closed form `z/u` on
    /// `[1, 2]`, Hermite interpolation of the marched grid on `(2, u_max]`.
    pub fn eval(&self, u: f64) -> Result<Complex64> {
        if u < 1.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if u <= 2.0 {
            return Ok(self.z / u);
        }
        if u > self.u_max + 1e-9 {
            return Err(SpecialError::OutOfRange {
                u,
                lo: 1.0,
                hi: self.u_max,
            });
        }
        self.grid.eval(u.min(self.u_max))
    }

    /// Independent consistency check of the marched values: a five-point
    /// central difference of `W(u) = u·ω(u)` (values only — the stored
    /// derivatives play no part) against the delay equation's right side.
    /// Returns `|W'_numeric(u) - z·ω(u-1)|`.
    ///
    /// Meaningful only where `W` is smooth across the whole stencil: keep
    /// `u` at least `2h` away from the breakpoints at integer arguments
    /// (where ω has finite-order kinks) and inside `[2 + 2h, u_max - 2h]`.
    pub fn residual(&self, u: f64) -> Result<f64> {
        let h = self.grid.step();
        if u - 2.0 * h < 2.0 || u + 2.0 * h > self.u_max + 1e-9 {
            return Err(SpecialError::Domain {
                msg: format!("residual stencil at u = {u} leaves the marched range"),
            });
        }
        let w = |v: f64| -> Result<Complex64> { Ok(v * self.eval(v)?) };
        let num = (-w(u + 2.0 * h)? + 8.0 * w(u + h)? - 8.0 * w(u - h)? + w(u - 2.0 * h)?)
            / (12.0 * h);
        Ok((num - self.z * self.eval(u - 1.0)?).norm())
    }
}

/// Truncated asymptotic expansion of ω_z at large `u` (see module docs);
/// sums `k = 0..=big_k` with `big_k <= 10`.
pub fn omega_asymptotic(z: Complex64, u: f64, big_k: usize, shifted: bool) -> Result<Complex64> {
    if big_k > 10 {
        return Err(SpecialError::Domain {
            msg: format!("asymptotic order {big_k} exceeds maximum 10"),
        });
    }
    if !(u > 1.0) {
        return Err(SpecialError::Domain {
            msg: format!("asymptotic expansion needs u > 1, got {u}"),
        });
    }
    let table = coeff_table(z, big_k)?;
    let mut sum = Complex64::new(0.0, 0.0);
    if shifted {
        let base = Complex64::new(u + 1.0, 0.0);
        let scale = (-z * crate::constants::EULER_GAMMA).exp();
        for k in 0..=big_k {
            let power = base.powc(z - 1.0 - k as f64);
            sum += scale * table.a[k] * power * recip_gamma(z - k as f64);
        }
    } else {
        let base = Complex64::new(u, 0.0);
        for k in 0..=big_k {
            let power = base.powc(z - 1.0 - k as f64);
            sum += table.c[k] * power * recip_gamma(z - k as f64);
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::EXP_MINUS_GAMMA;

    fn polar(phi: f64) -> Complex64 {
        Complex64::from_polar(1.0, phi)
    }

    #[test]
    fn closed_form_on_second_interval() {
        // On [2, 3]: u·ω_z(u) = z + z² ln(u-1).
        let sol = solve_omega(Complex64::new(1.0, 0.0), 10.0, 0.005).unwrap();
        let got = sol.eval(2.5).unwrap();
        let expect = (1.0 + 1.5f64.ln()) / 2.5;
        assert!((got.re - expect).abs() < 1e-11, "{} vs {expect}", got.re);
        assert!(got.im.abs() < 1e-15);

        let z = polar(0.1);
        let sol = solve_omega(z, 10.0, 0.005).unwrap();
        let got = sol.eval(2.5).unwrap();
        let expect = (z + z * z * 1.5f64.ln()) / 2.5;
        assert!(
            (got - expect).norm() < 1e-11,
            "ω_z(2.5): {got} vs {expect}"
        );
        // 50-digit pin of the same value.
        let pin = Complex64::new(
            0.556_954_786_486_249_402_061_8,
            0.072_154_759_334_169_731_687_33,
        );
        assert!((got - pin).norm() < 1e-11);
    }

    #[test]
    fn step_and_domain_validation() {
        let z = Complex64::new(1.0, 0.0);
        assert!(solve_omega(z, 10.0, 0.003).is_err()); // 1/h not integral
        assert!(solve_omega(z, 10.0, 0.02).is_err()); // h too big
        assert!(solve_omega(z, 10.25, 0.005).is_ok()); // grid-aligned u_max
        assert!(solve_omega(z, 10.2501, 0.005).is_err());
        assert!(solve_omega(z, 300.0, 0.005).is_err());
        assert!(solve_omega(Complex64::new(0.2, 0.0), 10.0, 0.005).is_err());
        assert!(solve_omega(Complex64::new(3.0, 0.0), 10.0, 0.005).is_err());
    }

    #[test]
    fn support_and_boundary_conventions() {
        let z = polar(-0.2);
        let sol = solve_omega(z, 5.0, 0.01).unwrap();
        assert_eq!(sol.eval(0.5).unwrap(), Complex64::new(0.0, 0.0));
        assert!((sol.eval(1.0).unwrap() - z).norm() < 1e-15); // value at 1 is z
        assert!((sol.eval(2.0).unwrap() - z / 2.0).norm() < 1e-15);
        // Continuity across the kink at 2.
        let left = sol.eval(2.0 - 1e-9).unwrap();
        let right = sol.eval(2.0 + 1e-9).unwrap();
        assert!((left - right).norm() < 1e-7);
        assert!(sol.eval(5.1).is_err());
    }

    #[test]
    fn buchstab_limit() {
        let sol = solve_omega(Complex64::new(1.0, 0.0), 50.0, 0.005).unwrap();
        for u in [20.0, 30.0, 49.5] {
            let got = sol.eval(u).unwrap();
            assert!(
                (got.re - EXP_MINUS_GAMMA).abs() < 1e-6 && got.im.abs() < 1e-12,
                "ω₁({u}) = {got}"
            );
        }
    }

    #[test]
    fn residual_is_small_away_from_breakpoints() {
        let sol = solve_omega(polar(0.1), 12.0, 0.005).unwrap();
        for u in [2.3, 2.7, 3.4, 5.5, 9.9] {
            let r = sol.residual(u).unwrap();
            assert!(r < 1e-8, "residual {r:e} at u = {u}");
        }
    }

    #[test]
    fn conjugating_z_conjugates_omega() {
        let z = polar(0.15);
        let a = solve_omega(z, 20.0, 0.005).unwrap();
        let b = solve_omega(z.conj(), 20.0, 0.005).unwrap();
        for u in [1.5, 2.5, 7.25, 19.0] {
            let va = a.eval(u).unwrap();
            let vb = b.eval(u).unwrap();
            assert!((va.conj() - vb).norm() < 1e-14, "u={u}");
        }
    }

    #[test]
    fn asymptotic_agrees_at_large_u() {
        let z = polar(0.1);
        let sol = solve_omega(z, 60.0, 0.005).unwrap();
        for shifted in [false, true] {
            let asym = omega_asymptotic(z, 50.0, 8, shifted).unwrap();
            let exact = sol.eval(50.0).unwrap();
            assert!(
                (asym - exact).norm() < 1e-10,
                "shifted={shifted}: {asym} vs {exact}"
            );
        }
    }

    #[test]
    fn asymptotic_at_unit_z_is_constant() {
        // Every correction term carries 1/Γ(nonpositive integer) = 0.
        let one = Complex64::new(1.0, 0.0);
        for shifted in [false, true] {
            let v = omega_asymptotic(one, 25.0, 10, shifted).unwrap();
            assert!((v.re - EXP_MINUS_GAMMA).abs() < 1e-15 && v.im == 0.0);
        }
    }

    #[test]
    fn magnitude_bound_samples() {
        // |ω_z(u)| <= |z| u^{|z|-1}
        for phi in [-0.3, 0.1, 0.25] {
            let z = polar(phi);
            let sol = solve_omega(z, 30.0, 0.005).unwrap();
            let mut u = 1.0;
            while u <= 30.0 {
                let v = sol.eval(u).unwrap().norm();
                let bound = z.norm() * u.powf(z.norm() - 1.0);
                assert!(v <= bound + 1e-9, "u={u} phi={phi}: {v} > {bound}");
                u += 0.37;
            }
        }
    }
}
