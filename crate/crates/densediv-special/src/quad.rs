//! Gauss–Legendre quadrature: nodes by Newton iteration on the Legendre
//! recurrence, plus single-interval and multi-panel integrators for real and
//! complex integrands.

use num_complex::Complex64;

/// Nodes and weights for `n`-point Gauss–Legendre quadrature on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2, "need at least two nodes");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi-style initial guess, then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(n, x);
            dp = d;
            let step = p / d;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// `(P_n(x), P_n'(x))` via the three-term recurrence.
fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0f64;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// ∫_a^b f(u) du with `n`-point Gauss–Legendre.
pub fn integrate<F: FnMut(f64) -> Complex64>(mut f: F, a: f64, b: f64, n: usize) -> Complex64 {
    let (nodes, weights) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = Complex64::new(0.0, 0.0);
    for (x, w) in nodes.iter().zip(&weights) {
        acc += *w * f(mid + half * x);
    }
    half * acc
}

/// ∫ f over consecutive panels `[breaks[0], breaks[1]], …`, each with
/// `n`-point Gauss–Legendre. Panels let integrands with kinks or scale
/// changes keep spectral accuracy per piece.
pub fn integrate_panels<F: FnMut(f64) -> Complex64>(
    mut f: F,
    breaks: &[f64],
    n: usize,
) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for w in breaks.windows(2) {
        acc += integrate(&mut f, w[0], w[1], n);
    }
    acc
}

/// Real-valued convenience wrapper over [`integrate_panels`].
pub fn integrate_panels_real<F: FnMut(f64) -> f64>(mut f: F, breaks: &[f64], n: usize) -> f64 {
    integrate_panels(|u| Complex64::new(f(u), 0.0), breaks, n).re
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_are_symmetric_and_weights_sum_to_two() {
        for n in [5, 16, 48] {
            let (nodes, weights) = gauss_legendre(n);
            let wsum: f64 = weights.iter().sum();
            assert!((wsum - 2.0).abs() < 1e-13, "n={n}");
            for i in 0..n {
                assert!((nodes[i] + nodes[n - 1 - i]).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn exact_for_polynomials() {
        // 10-point GL is exact through degree 19.
        let val = integrate(
            |u| Complex64::new(u.powi(19) + 3.0 * u * u, 0.0),
            0.0,
            1.0,
            10,
        );
        assert!((val.re - (1.0 / 20.0 + 1.0)).abs() < 1e-14);
    }

    #[test]
    fn oscillatory_complex_integral() {
        // ∫_0^1 e^{iωu} du = (e^{iω} - 1)/(iω)
        let omega = 12.0;
        let val = integrate(
            |u| (Complex64::new(0.0, omega * u)).exp(),
            0.0,
            1.0,
            48,
        );
        let expect = ((Complex64::new(0.0, omega)).exp() - 1.0) / Complex64::new(0.0, omega);
        assert!((val - expect).norm() < 1e-13);
    }

    #[test]
    fn panels_match_single_interval() {
        let f = |u: f64| Complex64::new((3.0 * u).sin() * u.exp(), (2.0 * u).cos());
        let whole = integrate(f, 0.0, 4.0, 64);
        let split = integrate_panels(f, &[0.0, 1.0, 2.5, 4.0], 48);
        assert!((whole - split).norm() < 1e-12);
    }
}
