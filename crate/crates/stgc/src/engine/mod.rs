//! Evaluation of G̃(r, s) by four formula families and an error-aware
//! dispatcher: convergent series, spatial/temporal axis closed forms,
//! α₁ = 1 isotropic closed forms, and the asymptotic expansion.

mod asymptotic;
mod axis;
mod eval;
mod isotropic;
mod series;

pub use asymptotic::{gc_asymptotic, h_asym_coeffs};
pub use axis::{gc_axis_r, gc_axis_s};
pub use eval::{gc_aniso, gc_eval};
pub use isotropic::gc_isotropic;
pub use series::gc_series;

pub(crate) use asymptotic::{h1_log, h2_log, hcondition_distance};
