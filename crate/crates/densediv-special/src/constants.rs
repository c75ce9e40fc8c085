//! The constant system: γ and e^{-γ} as pinned literals, and the derived
//! constants
//!
//! ```text
//! C = 1/(1 - e^{-γ})
//! A = e^{-γ} (Σ_{k>=2} b_k(1)/(k-1)  -  1)
//! W = ∫_1^∞ (e^{J(u)} - 1) / u du
//! B = A + W
//! K = e^{-γ} C² (1 - γ + B·C)
//! V = C + 2K
//! ```
//!
//! `C` is the mean-growth constant of the chained-family factor counts and
//! `V` the corresponding variance constant; `A`, `W`, `B`, `K` are the
//! intermediate combinations that produce `V`. The series for `A` converges
//! superexponentially (|b_k(1)| < 4e-19 by k = 30), and the integrand of `W`
//! decays like `e^{-u}/u²`, so panels out to `u = 40` put truncation far
//! below double precision.

use serde::Serialize;

use crate::error::Result;
use crate::expint::eval_j;
use crate::quad::integrate_panels_real;
use crate::series::coeff_table;

/// Euler–Mascheroni constant γ (20 significant digits).
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_61;

/// e^{-γ} (20 significant digits).
pub const EXP_MINUS_GAMMA: f64 = 0.561_459_483_566_885_169_82;

/// All derived constants, in one JSON-serializable report.
#[derive(Debug, Clone, Serialize)]
pub struct ConstantsReport {
    pub gamma: f64,
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "W")]
    pub w: f64,
    #[serde(rename = "B")]
    pub b: f64,
    #[serde(rename = "C")]
    pub c: f64,
    #[serde(rename = "K")]
    pub k: f64,
    #[serde(rename = "V")]
    pub v: f64,
}

/// Compute the full constant system from scratch (series + quadrature).
pub fn compute_constants() -> Result<ConstantsReport> {
    let c = 1.0 / (1.0 - EXP_MINUS_GAMMA);

    let table = coeff_table(num_complex::Complex64::new(1.0, 0.0), 60)?;
    let mut series = -1.0f64;
    for k in 2..=60 {
        series += table.b[k].re / (k as f64 - 1.0);
    }
    let a = EXP_MINUS_GAMMA * series;

    let w = integrate_panels_real(
        |u| {
            let j = eval_j(u).expect("u in [1, 40] is positive");
            j.exp_m1() / u
        },
        &[1.0, 2.0, 4.0, 8.0, 16.0, 28.0, 40.0],
        48,
    );

    let b = a + w;
    let k = EXP_MINUS_GAMMA * c * c * (1.0 - EULER_GAMMA + b * c);
    let v = c + 2.0 * k;

    Ok(ConstantsReport {
        gamma: EULER_GAMMA,
        a,
        w,
        b,
        c,
        k,
        v,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::gamma_real;

    #[test]
    fn gamma_literal_matches_digamma() {
        // γ = -Γ'(1); Richardson-extrapolated central differences of ln Γ.
        let d = |h: f64| (gamma_real(1.0 + h).ln() - gamma_real(1.0 - h).ln()) / (2.0 * h);
        let h = 1e-3;
        let refined = (4.0 * d(h / 2.0) - d(h)) / 3.0;
        assert!(
            (refined + EULER_GAMMA).abs() < 1e-9,
            "digamma cross-check: {refined} vs {}",
            -EULER_GAMMA
        );
        assert!((EXP_MINUS_GAMMA - (-EULER_GAMMA).exp()).abs() < 1e-16);
    }

    #[test]
    fn derived_constants_match_pins() {
        // Reference values computed independently with 50-digit arithmetic.
        let r = compute_constants().unwrap();
        assert!((r.c - 2.280_291_016_514_360_428_286_746_812_32).abs() < 1e-12);
        assert!((r.a - -0.429_801_361_821_074_855_482_305_676_939).abs() < 1e-12);
        assert!((r.w - 0.104_243_010_510_873_446_744_837_313_995).abs() < 1e-12);
        assert!((r.b - -0.325_558_351_310_201_408_737_468_362_944).abs() < 1e-12);
        assert!((r.k - -0.933_003_458_342_558_244_983_377_190_003).abs() < 1e-11);
        assert!((r.v - 0.414_284_099_829_243_938_319_992_432_319).abs() < 1e-11);
    }

    #[test]
    fn internal_identities() {
        let r = compute_constants().unwrap();
        assert!((r.b - (r.a + r.w)).abs() < 1e-15);
        assert!((r.v - (r.c + 2.0 * r.k)).abs() < 1e-15);
        assert!((r.c * (1.0 - EXP_MINUS_GAMMA) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn json_report_has_exact_keys() {
        let r = compute_constants().unwrap();
        let json = serde_json::to_value(&r).unwrap();
        let obj = json.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(|s| s.as_str()).collect();
        keys.sort_unstable();
        assert_eq!(keys, vec!["A", "B", "C", "K", "V", "W", "gamma"]);
    }
}
