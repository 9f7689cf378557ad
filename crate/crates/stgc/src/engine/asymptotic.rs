//! Asymptotic expansion of G̃(r, s) for small z = (s/2)^{2/α₁}/(r/2)²:
//!
//! G̃ ~ π^{(d₁+d₂)/2}/(Γ(ν)α₁) Σ_ℓ { h*₁ℓ (s/2)^{2θ} (r/2)^{-d₁}
//!                                 + h*₂ℓ (r/2)^{2α₁θ'} } w^ℓ,
//! w = (s/2)²/(r/2)^{2α₁}, truncated at the smallest term. The h*
//! coefficients use the sine forms (duplication formula applied) with all
//! Γ factors in log space and explicit sign tracking.

use crate::engine::axis::gc_axis_r;
use crate::error::GcError;
use crate::numeric::ScaledSum;
use crate::params::{Branch, Derived, EvalPolicy, GCValue, ModelParams};
use crate::special::{lgamma_sign, ln_gamma, sin_pi};

/// (ln |h*₁ℓ|, sign); exact zero when sin(πℓα₁) = 0, so all ℓ for integer α₁.
pub(crate) fn h1_log(ell: u32, alpha1: f64, theta: f64, d1: u32) -> (f64, f64) {
    let lf = ell as f64;
    let s_num = sin_pi(lf * alpha1);
    if s_num == 0.0 {
        return (f64::NEG_INFINITY, 0.0);
    }
    let s_den = sin_pi(theta);
    let ln_mag = alpha1.ln() + s_num.abs().ln() + ln_gamma(0.5 * d1 as f64 + lf * alpha1)
        + ln_gamma(lf * alpha1 + 1.0)
        - s_den.abs().ln()
        - ln_gamma(theta + lf + 1.0)
        - ln_gamma(lf + 1.0);
    (ln_mag, s_num.signum() * s_den.signum())
}

/// (ln |h*₂ℓ|, sign).
pub(crate) fn h2_log(ell: u32, alpha1: f64, theta: f64, theta_prime: f64) -> (f64, f64) {
    let lf = ell as f64;
    let s_num = sin_pi(alpha1 * (theta - lf));
    if s_num == 0.0 {
        return (f64::NEG_INFINITY, 0.0);
    }
    let s_den = sin_pi(theta);
    let (g1, sg1) = lgamma_sign((lf - theta_prime) * alpha1);
    let (g2, sg2) = lgamma_sign((lf - theta) * alpha1 + 1.0);
    let (g3, sg3) = lgamma_sign(1.0 - theta + lf);
    let ln_mag = alpha1.ln() + s_num.abs().ln() + g1 + g2
        - s_den.abs().ln()
        - g3
        - ln_gamma(lf + 1.0);
    (ln_mag, s_num.signum() * s_den.signum() * sg1 * sg2 / sg3)
}

/// Distance of (θ, (θ'-ℓ)α₁, (θ-ℓ)α₁) to the excluded integer sets over
/// ℓ = 0..ell_max; the dispatcher perturbs ν when this dips below the guard.
pub(crate) fn hcondition_distance(params: &ModelParams, d: &Derived, ell_max: u32) -> f64 {
    let dist_to_whole = |x: f64| -> f64 {
        let r = x.round();
        if r >= -0.25 {
            (x - r.max(0.0)).abs()
        } else {
            f64::INFINITY
        }
    };
    let dist_to_nat = |x: f64| -> f64 {
        let r = x.round();
        if r >= 0.75 {
            (x - r).abs()
        } else {
            f64::INFINITY
        }
    };
    let mut dist = dist_to_whole(d.theta);
    for ell in 0..=ell_max {
        let lf = ell as f64;
        dist = dist
            .min(dist_to_whole((d.theta_prime - lf) * params.alpha1))
            .min(dist_to_nat((d.theta - lf) * params.alpha1));
    }
    dist
}

/// H-function expansion coefficients (h*₁ℓ, h*₂ℓ) for generic parameters.
pub fn h_asym_coeffs(ell: u32, params: &ModelParams) -> Result<(f64, f64), GcError> {
    let d = params.derive()?;
    let guard = EvalPolicy::default().singular_guard;
    let lf = ell as f64;
    let dist_to_whole = |x: f64| {
        let r = x.round();
        if r >= -0.25 {
            (x - r.max(0.0)).abs()
        } else {
            f64::INFINITY
        }
    };
    let checks = [
        ("theta", dist_to_whole(d.theta)),
        ("(theta'-l)*alpha1", dist_to_whole((d.theta_prime - lf) * params.alpha1)),
        ("(theta-l)*alpha1", {
            let x = (d.theta - lf) * params.alpha1;
            let r = x.round();
            if r >= 0.75 {
                (x - r).abs()
            } else {
                f64::INFINITY
            }
        }),
    ];
    for (what, dist) in checks {
        if dist < guard {
            return Err(GcError::NearPole { what: format!("{what} at ell={ell}"), guard });
        }
    }
    let (l1, s1) = h1_log(ell, params.alpha1, d.theta, params.d1);
    let (l2, s2) = h2_log(ell, params.alpha1, d.theta, d.theta_prime);
    let h1 = if s1 == 0.0 { 0.0 } else { s1 * l1.exp() };
    let h2 = s2 * l2.exp();
    if !h1.is_finite() || !h2.is_finite() {
        return Err(GcError::Overflow);
    }
    Ok((h1, h2))
}

pub fn gc_asymptotic(
    r: f64,
    s: f64,
    params: &ModelParams,
    policy: &EvalPolicy,
) -> Result<GCValue, GcError> {
    policy.validate()?;
    let d = params.derive()?;
    if !(r > 0.0) {
        return Err(GcError::BranchPrecondition("gc_asymptotic", "r > 0"));
    }
    if !(s >= 0.0) {
        return Err(GcError::BranchPrecondition("gc_asymptotic", "s >= 0"));
    }
    if params.alpha1 == 1.0 {
        return Err(GcError::BranchPrecondition(
            "gc_asymptotic",
            "alpha1 > 1 (alpha1 = 1 routes to gc_isotropic)",
        ));
    }
    if s == 0.0 {
        // only the h*₂₀ term survives; identical to the axis closed form
        let axis = gc_axis_r(r, params, policy)?;
        return Ok(GCValue { branch: Branch::Asymptotic, ..axis });
    }
    let alpha = params.alpha1;
    let ln_half_r = (0.5 * r).ln();
    let ln_half_s = (0.5 * s).ln();
    let ln_pref =
        0.5 * (params.d1 + params.d2) as f64 * std::f64::consts::PI.ln() - ln_gamma(params.nu) - alpha.ln();
    let ln_a = 2.0 * d.theta * ln_half_s - params.d1 as f64 * ln_half_r;
    let ln_b = 2.0 * alpha * d.theta_prime * ln_half_r;
    let ln_w = 2.0 * ln_half_s - 2.0 * alpha * ln_half_r;

    let mut sum = ScaledSum::new();
    let mut prev_mag = f64::INFINITY;
    let mut err_ln = f64::NEG_INFINITY;
    let mut terms = 0u32;
    for ell in 0..policy.max_terms as u32 {
        let (l1, s1) = h1_log(ell, alpha, d.theta, params.d1);
        let (l2, s2) = h2_log(ell, alpha, d.theta, d.theta_prime);
        if l2 == f64::INFINITY || l1 == f64::INFINITY {
            return Err(GcError::NearPole {
                what: format!("h coefficient pole at ell={ell}"),
                guard: 0.0,
            });
        }
        let p1 = if s1 == 0.0 { f64::NEG_INFINITY } else { ln_pref + l1 + ln_a + ell as f64 * ln_w };
        let p2 = if s2 == 0.0 { f64::NEG_INFINITY } else { ln_pref + l2 + ln_b + ell as f64 * ln_w };
        let mag = p1.max(p2);
        if ell >= 1 && mag >= prev_mag {
            // terms stopped decreasing: optimal truncation, first omitted
            // term is the error estimate
            err_ln = mag;
            break;
        }
        sum.add_log(p1, s1);
        sum.add_log(p2, s2);
        terms = ell + 1;
        err_ln = mag;
        if mag <= policy.rel_tol.ln() + sum.ln_abs() - 9.0 {
            break;
        }
        prev_mag = mag;
    }
    let (value, cancel) = sum.value_with_cancellation();
    if !value.is_finite() {
        return Err(GcError::Overflow);
    }
    let err_est = err_ln.min(700.0).exp() + cancel;
    Ok(GCValue { value, branch: Branch::Asymptotic, err_est, terms })
}
