//! α₁ = 1 closed forms: G̃ depends on (r, s) only through r² + s².

use crate::engine::axis::INT_SNAP;
use crate::error::GcError;
use crate::params::{Branch, EvalPolicy, GCValue, ModelParams};
use crate::special::{ln_gamma, sin_pi};

pub fn gc_isotropic(
    r: f64,
    s: f64,
    params: &ModelParams,
    policy: &EvalPolicy,
) -> Result<GCValue, GcError> {
    policy.validate()?;
    let d = params.derive()?;
    if params.alpha1 != 1.0 {
        return Err(GcError::BranchPrecondition("gc_isotropic", "alpha1 == 1"));
    }
    if !(r >= 0.0 && s >= 0.0) {
        return Err(GcError::BranchPrecondition("gc_isotropic", "r, s >= 0"));
    }
    let rho2 = r * r + s * s;
    if rho2 == 0.0 {
        return Ok(GCValue { value: 0.0, branch: Branch::Isotropic, err_est: 0.0, terms: 0 });
    }
    let tp = d.theta_prime;
    let half_dims = 0.5 * (params.d1 + params.d2) as f64;
    let value = if (tp - tp.round()).abs() <= INT_SNAP * tp.max(1.0) {
        // (-1)^{k+1} π^{(d₁+d₂)/2} / (k! Γ(ν) 2^{2k}) · ρ^{2k} log(ρ²), k = θ'
        let k = tp.round() as i32;
        let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
        sign * (half_dims * std::f64::consts::PI.ln()
            - ln_gamma(k as f64 + 1.0)
            - ln_gamma(params.nu)
            - 2.0 * k as f64 * std::f64::consts::LN_2)
            .exp()
            * rho2.powi(k)
            * rho2.ln()
    } else {
        // -π^{(d₁+d₂+2)/2} / (sin(πθ')Γ(θ'+1)Γ(ν)2^{2θ'}) · ρ^{2θ'}
        let sp = sin_pi(tp);
        let ln_mag = (half_dims + 1.0) * std::f64::consts::PI.ln()
            - sp.abs().ln()
            - ln_gamma(tp + 1.0)
            - ln_gamma(params.nu)
            - 2.0 * tp * std::f64::consts::LN_2
            + tp * rho2.ln();
        -sp.signum() * ln_mag.exp()
    };
    if !value.is_finite() {
        return Err(GcError::Overflow);
    }
    Ok(GCValue { value, branch: Branch::Isotropic, err_est: value.abs() * 1e-14, terms: 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::axis::{gc_axis_r, gc_axis_s};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn pol() -> EvalPolicy {
        EvalPolicy::default()
    }

    #[test]
    fn isotropic_frozen_values() {
        let p = ModelParams::new(1.0, 1.5, 1, 1).unwrap();
        let v = gc_isotropic(1.0, 0.0, &p, &pol()).unwrap();
        assert_relative_eq!(v.value, -6.2831853071795865, max_relative = 1e-13);
        // closed form -π²/(2 Γ(1.5)²)
        let g32 = crate::special::gamma_fn(1.5).unwrap();
        assert_relative_eq!(v.value, -PI * PI / (2.0 * g32 * g32), max_relative = 1e-13);
        let v = gc_isotropic(3.0, 4.0, &p, &pol()).unwrap();
        assert_relative_eq!(v.value, -31.415926535897932, max_relative = 1e-13);
    }

    #[test]
    fn rotational_invariance() {
        let p = ModelParams::new(1.0, 1.5, 1, 1).unwrap();
        let a = gc_isotropic(3.0, 4.0, &p, &pol()).unwrap().value;
        let b = gc_isotropic(5.0, 0.0, &p, &pol()).unwrap().value;
        assert_relative_eq!(a, b, max_relative = 1e-14);
        assert_eq!(gc_isotropic(0.0, 0.0, &p, &pol()).unwrap().value, 0.0);
    }

    #[test]
    fn integer_theta_prime_log_form() {
        // ν = 2, d₁ = d₂ = 1: θ' = 1 exactly; G̃(1,1) = (π/4)·2·ln 2
        let p = ModelParams::new(1.0, 2.0, 1, 1).unwrap();
        let v = gc_isotropic(1.0, 1.0, &p, &pol()).unwrap();
        assert_relative_eq!(
            v.value,
            PI / 4.0 * 2.0 * (2.0f64).ln(),
            max_relative = 1e-13
        );
        // frozen non-integer θ' = 1.5 case (ν = 2.5)
        let p = ModelParams::new(1.0, 2.5, 1, 1).unwrap();
        let v = gc_isotropic(1.0, 1.0, &p, &pol()).unwrap();
        assert_relative_eq!(v.value, 1.9746146391814961, max_relative = 1e-13);
    }

    #[test]
    fn isotropic_consistent_with_axes() {
        // gc_isotropic(r,0) = gc_axis_r(r), gc_isotropic(0,s) = gc_axis_s(s)
        let p = ModelParams::new(1.0, 1.5, 1, 1).unwrap();
        for &x in &[0.2, 1.0, 5.5] {
            let a = gc_isotropic(x, 0.0, &p, &pol()).unwrap().value;
            let b = gc_axis_r(x, &p, &pol()).unwrap().value;
            assert_relative_eq!(a, b, max_relative = 1e-12);
            let a = gc_isotropic(0.0, x, &p, &pol()).unwrap().value;
            let b = gc_axis_s(x, &p, &pol()).unwrap().value;
            assert_relative_eq!(a, b, max_relative = 1e-12);
        }
    }

    #[test]
    fn wrong_alpha_rejected() {
        let p = ModelParams::new(1.5, 2.0, 1, 1).unwrap();
        assert!(matches!(
            gc_isotropic(1.0, 1.0, &p, &pol()),
            Err(GcError::BranchPrecondition(_, _))
        ));
    }
}
