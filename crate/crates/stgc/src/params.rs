//! Model parameters, derived smoothness indices, evaluation policy and the
//! evaluation result type.

use crate::error::GcError;
use crate::special::ln_gamma;

/// Parameters of the spectral model (|τ|^{2α₁}/σ₁^{2α₁} + |ω|²/σ₂²)^{-ν}
/// on ℝ^{d₁} × ℝ^{d₂}, with b₁ = σ₁, b₂ = σ₂.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub alpha1: f64,
    pub nu: f64,
    pub d1: u32,
    pub d2: u32,
    pub b1: f64,
    pub b2: f64,
}

/// Derived smoothness indices: θ = ν - d₂/2, θ' = θ - d₁/(2α₁),
/// k₀ = ⌊α₁θ'⌋ (minimal IRF order), ν₀ = (k₀ + d₁/2)/α₁ + d₂/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Derived {
    pub theta: f64,
    pub theta_prime: f64,
    pub k0: u32,
    pub nu0: f64,
}

impl ModelParams {
    pub fn new(alpha1: f64, nu: f64, d1: u32, d2: u32) -> Result<Self, GcError> {
        Self::with_scales(alpha1, nu, d1, d2, 1.0, 1.0)
    }

    pub fn with_scales(
        alpha1: f64,
        nu: f64,
        d1: u32,
        d2: u32,
        b1: f64,
        b2: f64,
    ) -> Result<Self, GcError> {
        let p = ModelParams { alpha1, nu, d1, d2, b1, b2 };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), GcError> {
        if !self.alpha1.is_finite() || self.alpha1 < 1.0 {
            return Err(GcError::InvalidParams(format!(
                "alpha1 must be >= 1: got {}",
                self.alpha1
            )));
        }
        if !self.nu.is_finite() {
            return Err(GcError::InvalidParams(format!("nu must be finite: got {}", self.nu)));
        }
        if self.d1 == 0 || self.d2 == 0 {
            return Err(GcError::InvalidParams(format!(
                "dimensions must be positive: got d1={}, d2={}",
                self.d1, self.d2
            )));
        }
        if !(self.b1 > 0.0) || !(self.b2 > 0.0) {
            return Err(GcError::InvalidParams(format!(
                "scales must be positive: got b1={}, b2={}",
                self.b1, self.b2
            )));
        }
        let theta = self.nu - 0.5 * self.d2 as f64;
        let theta_prime = theta - self.d1 as f64 / (2.0 * self.alpha1);
        if !(theta_prime > 0.0) {
            return Err(GcError::InvalidParams(format!(
                "theta_prime must be positive: got {theta_prime}"
            )));
        }
        Ok(())
    }

    /// θ, θ', k₀, ν₀ for valid parameters.
    pub fn derive(&self) -> Result<Derived, GcError> {
        self.validate()?;
        let theta = self.nu - 0.5 * self.d2 as f64;
        let theta_prime = theta - self.d1 as f64 / (2.0 * self.alpha1);
        let a1tp = self.alpha1 * theta_prime;
        // snap floor at near-integer boundaries so e.g. α₁θ' = 2 - 1e-16
        // still reports k₀ = 2
        let k0 = if (a1tp - a1tp.round()).abs() < 1e-9 {
            a1tp.round() as u32
        } else {
            a1tp.floor() as u32
        };
        let nu0 = (k0 as f64 + 0.5 * self.d1 as f64) / self.alpha1 + 0.5 * self.d2 as f64;
        Ok(Derived { theta, theta_prime, k0, nu0 })
    }

    /// Same model at ν + dnu (used by the near-singularity perturbation).
    pub(crate) fn with_nu_offset(&self, dnu: f64) -> ModelParams {
        ModelParams { nu: self.nu + dnu, ..*self }
    }
}

/// Free-function form of [`ModelParams::derive`].
pub fn derive(params: &ModelParams) -> Result<Derived, GcError> {
    params.derive()
}

/// Evaluation policy: tolerances, branch crossover and singularity guards.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPolicy {
    /// Relative tolerance for series truncation and branch acceptance.
    pub rel_tol: f64,
    /// Hard cap on series terms.
    pub max_terms: usize,
    /// Branch crossover on z = (s/2)^{2/α₁} / (r/2)²: series for z above,
    /// asymptotic expansion below.
    pub z_crossover: f64,
    /// Distance of α₁θ' or an asymptotic index to the nearest excluded
    /// integer below which the ν ± ε perturbation fallback kicks in.
    pub singular_guard: f64,
    /// Perturbation step ε for the fallback.
    pub perturb_eps: f64,
}

impl Default for EvalPolicy {
    fn default() -> Self {
        EvalPolicy {
            rel_tol: 1e-10,
            max_terms: 500,
            z_crossover: 0.5,
            singular_guard: 1e-4,
            perturb_eps: 1e-5,
        }
    }
}

impl EvalPolicy {
    pub fn validate(&self) -> Result<(), GcError> {
        if !(self.rel_tol > 0.0)
            || self.max_terms == 0
            || !(self.z_crossover > 0.0 && self.z_crossover < 2.0)
            || !(self.singular_guard > 0.0)
            || !(self.perturb_eps > 0.0)
        {
            return Err(GcError::InvalidParams(format!("invalid evaluation policy: {self:?}")));
        }
        Ok(())
    }
}

/// Which formula family produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Series,
    AxisR,
    AxisS,
    Isotropic,
    Asymptotic,
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Branch::Series => "series",
            Branch::AxisR => "axis_r",
            Branch::AxisS => "axis_s",
            Branch::Isotropic => "isotropic",
            Branch::Asymptotic => "asymptotic",
        };
        f.write_str(s)
    }
}

/// An evaluation result with its provenance and honest error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GCValue {
    pub value: f64,
    pub branch: Branch,
    /// Truncation plus cancellation estimate, absolute.
    pub err_est: f64,
    /// Terms consumed by the producing expansion.
    pub terms: u32,
}

/// ln c_m(α₁) = (d₁+d₂)/2 · ln π + ln Γ((d₁+2m)/(2α₁)) - ln m! - ln Γ(m+d₁/2).
pub(crate) fn ln_c_coeff(m: u32, alpha1: f64, d1: u32, d2: u32) -> f64 {
    let mf = m as f64;
    let d1f = d1 as f64;
    0.5 * (d1 + d2) as f64 * std::f64::consts::PI.ln()
        + ln_gamma((d1f + 2.0 * mf) / (2.0 * alpha1))
        - ln_gamma(mf + 1.0)
        - ln_gamma(mf + 0.5 * d1f)
}

/// c_m(α₁), the series coefficient of Theorem 1, computed in log space.
pub fn c_coeff(m: u32, params: &ModelParams) -> f64 {
    ln_c_coeff(m, params.alpha1, params.d1, params.d2).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn derive_examples() {
        let d = ModelParams::new(2.0, 2.0, 1, 1).unwrap().derive().unwrap();
        assert_eq!((d.theta, d.theta_prime, d.k0), (1.5, 1.25, 2));
        let d = ModelParams::new(1.0, 1.5, 1, 1).unwrap().derive().unwrap();
        assert_eq!((d.theta, d.theta_prime, d.k0), (1.0, 0.5, 0));
        let d = ModelParams::new(2.0, 0.95, 1, 1).unwrap().derive().unwrap();
        assert_relative_eq!(d.theta, 0.45, max_relative = 1e-15);
        assert_relative_eq!(d.theta_prime, 0.2, max_relative = 1e-14);
        assert_eq!(d.k0, 0);
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(ModelParams::new(0.5, 2.0, 1, 1).is_err()); // alpha1 < 1
        assert!(ModelParams::new(2.0, 0.3, 1, 1).is_err()); // theta' <= 0
        let err = ModelParams::new(2.0, 0.3, 1, 1).unwrap_err();
        assert!(err.to_string().contains("theta_prime must be positive"));
        assert!(ModelParams::new(1.5, 2.0, 0, 1).is_err());
        assert!(ModelParams::with_scales(1.5, 2.0, 1, 1, 0.0, 1.0).is_err());
    }

    #[test]
    fn nu0_matches_integer_case() {
        // alpha1*theta' = 2 exactly => nu = nu0
        let p = ModelParams::new(2.0, 1.75, 1, 1).unwrap();
        let d = p.derive().unwrap();
        assert_eq!(d.k0, 2);
        assert_relative_eq!(d.nu0, p.nu, max_relative = 1e-15);
    }

    #[test]
    fn c_coeff_closed_forms() {
        // c_0(1) = π^{(d1+d2)/2} for any d1 (Γ ratio cancels)
        let p = ModelParams::new(1.0, 1.5, 1, 1).unwrap();
        assert_relative_eq!(c_coeff(0, &p), PI, max_relative = 1e-13);
        let p = ModelParams::new(1.0, 1.5, 1, 1).unwrap();
        assert_relative_eq!(c_coeff(1, &p), PI, max_relative = 1e-13);
        // c_0(2) with d1=d2=1: √π Γ(1/4)
        let p = ModelParams::new(2.0, 2.0, 1, 1).unwrap();
        assert_relative_eq!(c_coeff(0, &p), 6.4262262437091159, max_relative = 1e-13);
        // frozen: c_1(1.5) d=1,1 and c_5(1.5) d1=2
        let p = ModelParams::new(1.5, 2.0, 1, 1).unwrap();
        assert_relative_eq!(c_coeff(1, &p), 3.5449077018110321, max_relative = 1e-13);
        let p = ModelParams::new(1.5, 2.0, 2, 1).unwrap();
        assert_relative_eq!(c_coeff(5, &p), 0.0023201366653465449, max_relative = 1e-13);
    }
}
