//! Convergent power series for G̃(r, s), s > 0, α₁ > 1:
//! G̃(r,s) = Σ_m c_m(α₁)/(α₁ Γ(ν)) {-(r/2)²}^m γ_{θ'-m/α₁}(s/2).
//!
//! Terms are assembled in log space (Γ-ratio coefficients overflow near
//! m ≈ 170 in direct form) and accumulated with a compensated scaled sum;
//! the cancellation estimate max|term|·ε rides along in err_est so the
//! dispatcher can detect the small-z instability and switch branches.

use crate::error::GcError;
use crate::numeric::ScaledSum;
use crate::params::{ln_c_coeff, Branch, EvalPolicy, GCValue, ModelParams};
use crate::special::{ln_gamma, power_law_log};

pub fn gc_series(
    r: f64,
    s: f64,
    params: &ModelParams,
    policy: &EvalPolicy,
) -> Result<GCValue, GcError> {
    policy.validate()?;
    let d = params.derive()?;
    if !(s > 0.0) {
        return Err(GcError::BranchPrecondition("gc_series", "s > 0"));
    }
    if !(r >= 0.0) {
        return Err(GcError::BranchPrecondition("gc_series", "r >= 0"));
    }
    if params.alpha1 == 1.0 {
        return Err(GcError::BranchPrecondition(
            "gc_series",
            "alpha1 > 1 (alpha1 = 1 routes to gc_isotropic)",
        ));
    }
    let alpha = params.alpha1;
    let ln_pref = -alpha.ln() - ln_gamma(params.nu);
    let ln_half_s = (0.5 * s).ln();
    let ln_r2_sq = if r > 0.0 { 2.0 * (0.5 * r).ln() } else { f64::NEG_INFINITY };

    let mut sum = ScaledSum::new();
    let mut m: u32 = 0;
    let mut prev_ln_term = f64::INFINITY;
    let mut decreasing = false;
    let mut consec_small = 0;
    let mut last_ln_term = f64::NEG_INFINITY;
    loop {
        let zeta = d.theta_prime - m as f64 / alpha;
        let (lg, sg) = power_law_log(zeta, ln_half_s);
        let ln_term = ln_c_coeff(m, alpha, params.d1, params.d2) + ln_pref
            + m as f64 * ln_r2_sq
            + lg;
        let sign = if m % 2 == 0 { sg } else { -sg };
        sum.add_log(ln_term, sign);
        last_ln_term = ln_term;
        m += 1;
        if r == 0.0 {
            // {-(r/2)²}^m kills every m >= 1
            last_ln_term = f64::NEG_INFINITY;
            break;
        }
        if ln_term < prev_ln_term {
            decreasing = true;
        }
        if decreasing && ln_term <= policy.rel_tol.ln() + sum.ln_abs() {
            consec_small += 1;
            if consec_small >= 3 {
                break;
            }
        } else {
            consec_small = 0;
        }
        prev_ln_term = ln_term;
        if m as usize >= policy.max_terms {
            let last_ratio = (last_ln_term - sum.ln_abs()).exp();
            return Err(GcError::NoConvergence { max_terms: policy.max_terms, last_ratio });
        }
    }
    let (value, cancel) = sum.value_with_cancellation();
    if !value.is_finite() {
        return Err(GcError::Overflow);
    }
    let err_est = last_ln_term.min(700.0).exp() + cancel;
    Ok(GCValue { value, branch: Branch::Series, err_est, terms: m })
}
