//! Special-function layer: the analytic machinery behind chained-divisor
//! asymptotics.
//!
//! The crate provides
//!
//! * entire-function series `I(s) = Σ s^k/(k·k!)` and `T(s) = -I(-s)`
//!   ([`eval_i`], [`eval_t`]), the exponential integral `J(u) = E₁(u)`
//!   ([`eval_j`]), and the coefficient families `b_k(z)`, `a_k(z)`,
//!   `c_k(z) = e^{-γz} b_k(z)` tied to the generating function
//!   `e^{zJ(u)} = Σ c_k(z) u^{k-z}` ([`coeff_table`]);
//! * the complex gamma function and its reciprocal ([`gamma`],
//!   [`recip_gamma`]) via a Lanczos approximation;
//! * Gauss–Legendre quadrature utilities ([`gauss_legendre`],
//!   [`integrate`], [`integrate_panels`]);
//! * the delay-differential generalization `ω_z` of Buchstab's function —
//!   `(u·ω_z(u))' = z·ω_z(u-1)` with `u·ω_z(u) = z` on `[1,2]` — solved by
//!   marching ([`solve_omega`]) and by its large-`u` asymptotic expansion
//!   ([`omega_asymptotic`]);
//! * Euler products over primes for the factor-counting modes Ω/ω:
//!   `h_ν(y,z)`, `J_ν(y,z)` and the characteristic-sum coefficients
//!   `λ_{ν,0}, λ_{ν,1}` ([`euler_h`], [`euler_j`], [`lambda0`],
//!   [`lambda1`]);
//! * the derived constants `C = 1/(1-e^{-γ})`, `K`, `V = C + 2K`
//!   ([`compute_constants`]).

pub mod constants;
pub mod error;
pub mod euler;
pub mod expint;
pub mod gamma;
pub mod omega;
pub mod quad;
pub mod series;

pub use constants::{compute_constants, ConstantsReport, EULER_GAMMA, EXP_MINUS_GAMMA};
pub use error::{Result, SpecialError};
pub use euler::{euler_h, euler_j, lambda0, lambda1};
pub use expint::eval_j;
pub use gamma::{gamma, gamma_real, recip_gamma};
pub use omega::{
    omega_asymptotic, solve_omega, OmegaSolution, SampledFunction, OMEGA_H_MAX, OMEGA_U_MAX,
};
pub use quad::{gauss_legendre, integrate, integrate_panels, integrate_panels_real};
pub use series::{
    coeff_table, eval_i, eval_t, eval_t_real, exp_zj, CoeffTable, MAX_COEFF_ORDER,
    SERIES_DOMAIN_RADIUS,
};
