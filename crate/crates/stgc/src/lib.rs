//! Space–time generalized covariance functions of the power-law spectral
//! model f(τ, ω) = (|τ|^{2α₁} + |ω|²)^{-ν} on ℝ^{d₁} × ℝ^{d₂}.
//!
//! The crate evaluates the generalized covariance G̃(r, s) by four formula
//! families — a convergent power series, spatial/temporal axis closed forms,
//! the α₁ = 1 isotropic closed forms, and an asymptotic expansion for small
//! (s/2)^{2/α₁}/(r/2)² — stitched together by an error-aware dispatcher.
//! An independent adaptive-quadrature oracle integrates the spectral
//! representation directly, and a validation harness turns conditional
//! positive definiteness, scaling laws and dimple-freeness into executable
//! checks. Intrinsic (IRF-k₀) kriging demonstrates the kernel downstream.

pub mod engine;
pub mod error;
mod numeric;
pub mod params;
pub mod special;

pub use engine::{
    gc_aniso, gc_asymptotic, gc_axis_r, gc_axis_s, gc_eval, gc_isotropic, gc_series,
    h_asym_coeffs,
};
pub use error::{GcError, KrigingError, OracleError, SpecialError};
pub use params::{c_coeff, derive, Branch, Derived, EvalPolicy, GCValue, ModelParams};
