//! Self-contained real special functions backing every covariance formula:
//! Γ / ln Γ / ψ, the power-law kernel γ_ζ, the Matérn kernel M_θ and the
//! isotropic Bessel kernel Λ_d.

mod bessel_j;
mod bessel_k;
mod gamma;
mod power_law;

pub use bessel_j::lambda_d;
pub use bessel_k::matern;
pub use gamma::{cos_pi, digamma, gamma_fn, lgamma_sign, ln_gamma, sin_pi, EULER_GAMMA};
pub use power_law::power_law_gc;

pub(crate) use bessel_k::ln_matern_zero;
pub(crate) use power_law::power_law_log;
