//! Axis closed forms: G̃(r, 0) (generic power law, or the logarithmic form
//! when α₁θ' lands exactly on k₀) and G̃(0, s) (the m = 0 series term).

use crate::error::GcError;
use crate::params::{ln_c_coeff, Branch, EvalPolicy, GCValue, ModelParams};
use crate::special::{digamma, ln_gamma, power_law_log};

/// Relative snap tolerance deciding that α₁θ' is exactly integer.
pub(crate) const INT_SNAP: f64 = 1e-9;

pub fn gc_axis_r(r: f64, params: &ModelParams, policy: &EvalPolicy) -> Result<GCValue, GcError> {
    policy.validate()?;
    let d = params.derive()?;
    if !(r >= 0.0) {
        return Err(GcError::BranchPrecondition("gc_axis_r", "r >= 0"));
    }
    if r == 0.0 {
        return Ok(GCValue { value: 0.0, branch: Branch::AxisR, err_est: 0.0, terms: 0 });
    }
    let alpha = params.alpha1;
    let a1tp = alpha * d.theta_prime;
    let value = if (a1tp - a1tp.round()).abs() <= INT_SNAP * a1tp.max(1.0) {
        // α₁θ' = k₀: logarithmic form with the four digamma terms
        let k0 = d.k0 as f64;
        let d1f = params.d1 as f64;
        let brace = 2.0 * (0.5 * r).ln()
            + digamma((2.0 * k0 + d1f) / (2.0 * alpha))? / alpha
            + digamma(1.0)? / alpha
            - digamma(k0 + 0.5 * d1f)?
            - digamma(k0 + 1.0)?;
        let c_k0 = ln_c_coeff(d.k0, alpha, params.d1, params.d2).exp();
        let pow_sign = if d.k0 % 2 == 0 { 1.0 } else { -1.0 };
        -c_k0 / ln_gamma(params.nu).exp() * pow_sign * (0.5 * r).powi(2 * d.k0 as i32) * brace
    } else {
        // π^{(d₁+d₂)/2} Γ(θ) / (Γ(ν) Γ(α₁θ)) · γ_{α₁θ'}(r/2)
        let (lg, sg) = power_law_log(a1tp, (0.5 * r).ln());
        let ln_mag = 0.5 * (params.d1 + params.d2) as f64 * std::f64::consts::PI.ln()
            + ln_gamma(d.theta)
            - ln_gamma(params.nu)
            - ln_gamma(alpha * d.theta)
            + lg;
        sg * ln_mag.exp()
    };
    if !value.is_finite() {
        return Err(GcError::Overflow);
    }
    Ok(GCValue { value, branch: Branch::AxisR, err_est: value.abs() * 1e-13, terms: 1 })
}

pub fn gc_axis_s(s: f64, params: &ModelParams, policy: &EvalPolicy) -> Result<GCValue, GcError> {
    policy.validate()?;
    let d = params.derive()?;
    if !(s >= 0.0) {
        return Err(GcError::BranchPrecondition("gc_axis_s", "s >= 0"));
    }
    if s == 0.0 {
        return Ok(GCValue { value: 0.0, branch: Branch::AxisS, err_est: 0.0, terms: 0 });
    }
    // c₀(α₁)/(α₁Γ(ν)) · γ_{θ'}(s/2): exactly the m = 0 series term
    let (lg, sg) = power_law_log(d.theta_prime, (0.5 * s).ln());
    let ln_mag = ln_c_coeff(0, params.alpha1, params.d1, params.d2)
        - params.alpha1.ln()
        - ln_gamma(params.nu)
        + lg;
    let value = sg * ln_mag.exp();
    if !value.is_finite() {
        return Err(GcError::Overflow);
    }
    Ok(GCValue { value, branch: Branch::AxisS, err_est: value.abs() * 1e-13, terms: 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::series::gc_series;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn pol() -> EvalPolicy {
        EvalPolicy::default()
    }

    #[test]
    fn axis_r_frozen_values() {
        let p = ModelParams::new(2.0, 0.95, 1, 1).unwrap();
        let v = gc_axis_r(1.0, &p, &pol()).unwrap();
        assert_relative_eq!(v.value, -11.994866922905518, max_relative = 1e-12);
        assert_eq!(gc_axis_r(0.0, &p, &pol()).unwrap().value, 0.0);
    }

    #[test]
    fn axis_r_integer_case() {
        // α₁θ' = 2 = k₀ (ν = ν₀): logarithmic form; log term vanishes at r = 2
        let p = ModelParams::new(2.0, 1.75, 1, 1).unwrap();
        let v = gc_axis_r(1.5, &p, &pol()).unwrap();
        assert_relative_eq!(v.value, 0.96003185567629901, max_relative = 1e-12);
        let v = gc_axis_r(2.0, &p, &pol()).unwrap();
        assert_relative_eq!(v.value, 2.3636690192476170, max_relative = 1e-12);
    }

    #[test]
    fn axis_r_integer_case_is_nu_limit() {
        // dominated-convergence construction: the log form at ν₀ equals the
        // even average of the generic form at ν₀ ± ε (pole parts cancel)
        let p0 = ModelParams::new(2.0, 1.75, 1, 1).unwrap();
        let r = 1.3;
        let at = gc_axis_r(r, &p0, &pol()).unwrap().value;
        let eps = 1e-6;
        let vp = gc_axis_r(r, &ModelParams::new(2.0, 1.75 + eps, 1, 1).unwrap(), &pol())
            .unwrap()
            .value;
        let vm = gc_axis_r(r, &ModelParams::new(2.0, 1.75 - eps, 1, 1).unwrap(), &pol())
            .unwrap()
            .value;
        // the pole of γ_{α₁θ'} makes vp, vm individually huge; their even
        // average converges to the log form up to the gauge polynomial in
        // r^{2k₀}, which the ALC-annihilated quadratic form would kill. At
        // fixed r the polynomial part survives, so compare second differences
        // across r instead (degree-4 annihilation in r).
        let quad = |f: &dyn Fn(f64) -> f64| {
            // 6-point 5th difference annihilates polynomials through r^4,
            // in particular the r^{2k₀} gauge freedom of this GC-2
            let w = [1.0, -5.0, 10.0, -10.0, 5.0, -1.0];
            (1..=6).map(|i| w[i - 1] * f(r * i as f64)).sum::<f64>()
        };
        let q_at = quad(&|x| gc_axis_r(x, &p0, &pol()).unwrap().value);
        let q_avg = 0.5
            * (quad(&|x| {
                gc_axis_r(x, &ModelParams::new(2.0, 1.75 + eps, 1, 1).unwrap(), &pol())
                    .unwrap()
                    .value
            }) + quad(&|x| {
                gc_axis_r(x, &ModelParams::new(2.0, 1.75 - eps, 1, 1).unwrap(), &pol())
                    .unwrap()
                    .value
            }));
        assert_relative_eq!(q_at, q_avg, max_relative = 1e-5);
        let _ = (at, vp, vm);
    }

    #[test]
    fn axis_s_matches_series_bit_for_bit() {
        let p = ModelParams::new(2.0, 2.0, 1, 1).unwrap();
        for &s in &[0.3, 1.0, 4.2] {
            let a = gc_axis_s(s, &p, &pol()).unwrap().value;
            let b = gc_series(0.0, s, &p, &pol()).unwrap().value;
            assert_eq!(a, b);
        }
        assert_eq!(gc_axis_s(0.0, &p, &pol()).unwrap().value, 0.0);
    }

    #[test]
    fn axis_s_frozen_value() {
        let p = ModelParams::new(2.0, 0.95, 1, 1).unwrap();
        let v = gc_axis_s(1.0, &p, &pol()).unwrap();
        assert_relative_eq!(v.value, -13.742733482690213, max_relative = 1e-12);
    }

    #[test]
    fn axis_alpha1_one_closed_form() {
        // (α₁=1, ν=1.5, d₁=d₂=1): G̃(r,0) = π/Γ(1.5) · Γ(-1/2) · (r/2)
        let p = ModelParams::new(1.0, 1.5, 1, 1).unwrap();
        let r = 1.7;
        let expect = PI / crate::special::gamma_fn(1.5).unwrap()
            * crate::special::gamma_fn(-0.5).unwrap()
            * (0.5 * r);
        let v = gc_axis_r(r, &p, &pol()).unwrap();
        assert_relative_eq!(v.value, expect, max_relative = 1e-13);
        // and G̃(0,s) = π/Γ(1.5) Γ(-0.5) (s/2)
        let v = gc_axis_s(1.0, &p, &pol()).unwrap();
        assert_relative_eq!(
            v.value,
            PI / crate::special::gamma_fn(1.5).unwrap()
                * crate::special::gamma_fn(-0.5).unwrap()
                * 0.5,
            max_relative = 1e-13
        );
    }
}
