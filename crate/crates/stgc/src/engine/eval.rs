//! Error-aware dispatcher over the four formula families, plus the
//! geometric-anisotropy wrapper.

use crate::engine::asymptotic::{gc_asymptotic, hcondition_distance};
use crate::engine::axis::{gc_axis_r, gc_axis_s};
use crate::engine::isotropic::gc_isotropic;
use crate::engine::series::gc_series;
use crate::error::GcError;
use crate::params::{Branch, EvalPolicy, GCValue, ModelParams};
use nalgebra::DMatrix;

/// Asymptotic branch with the ν ± ε perturbation fallback when the expansion
/// indices sit too close to the excluded integer set (the logarithmic-case
/// asymptotics); the even average cancels both the pole and the O(ε) term.
fn asymptotic_guarded(
    r: f64,
    s: f64,
    params: &ModelParams,
    policy: &EvalPolicy,
) -> Result<GCValue, GcError> {
    let d = params.derive()?;
    let dist = hcondition_distance(params, &d, 64);
    if dist >= policy.singular_guard {
        return gc_asymptotic(r, s, params, policy);
    }
    let eps = policy.perturb_eps;
    let plus = gc_asymptotic(r, s, &params.with_nu_offset(eps), policy)?;
    let minus = gc_asymptotic(r, s, &params.with_nu_offset(-eps), policy)?;
    let value = 0.5 * (plus.value + minus.value);
    let err_est = 0.5 * (plus.err_est + minus.err_est)
        + f64::EPSILON * (plus.value.abs() + minus.value.abs())
        + eps * eps * value.abs();
    Ok(GCValue { value, branch: Branch::Asymptotic, err_est, terms: plus.terms.max(minus.terms) })
}

fn dispatch(r: f64, s: f64, params: &ModelParams, policy: &EvalPolicy) -> Result<GCValue, GcError> {
    if params.alpha1 == 1.0 {
        return gc_isotropic(r, s, params, policy);
    }
    if s == 0.0 {
        return gc_axis_r(r, params, policy);
    }
    if r == 0.0 {
        return gc_axis_s(s, params, policy);
    }
    let z = (0.5 * s).powf(2.0 / params.alpha1) / ((0.5 * r) * (0.5 * r));
    let (first, second): (
        fn(f64, f64, &ModelParams, &EvalPolicy) -> Result<GCValue, GcError>,
        fn(f64, f64, &ModelParams, &EvalPolicy) -> Result<GCValue, GcError>,
    ) = if z >= policy.z_crossover {
        (gc_series, asymptotic_guarded)
    } else {
        (asymptotic_guarded, gc_series)
    };
    match first(r, s, params, policy) {
        Ok(v) if v.err_est <= policy.rel_tol * v.value.abs() => Ok(v),
        Ok(v) => {
            // degraded primary branch: try the other family, keep the
            // better-attested value
            match second(r, s, params, policy) {
                Ok(w) if w.err_est < v.err_est => Ok(w),
                _ => Ok(v),
            }
        }
        Err(first_err) => match second(r, s, params, policy) {
            Ok(w) => Ok(w),
            Err(_) => Err(first_err),
        },
    }
}

/// G̃ for the scaled spectral model: b₁^{d₁} b₂^{d₂} · G̃_unit(b₁r, b₂s).
pub fn gc_eval(r: f64, s: f64, params: &ModelParams, policy: &EvalPolicy) -> Result<GCValue, GcError> {
    params.validate()?;
    policy.validate()?;
    if !(r >= 0.0 && s >= 0.0 && r.is_finite() && s.is_finite()) {
        return Err(GcError::InvalidParams(format!(
            "lags must be finite and nonnegative: got r={r}, s={s}"
        )));
    }
    let unit = ModelParams { b1: 1.0, b2: 1.0, ..*params };
    let mut out = dispatch(params.b1 * r, params.b2 * s, &unit, policy)?;
    let pref = params.b1.powi(params.d1 as i32) * params.b2.powi(params.d2 as i32);
    out.value *= pref;
    out.err_est *= pref;
    if !out.value.is_finite() {
        return Err(GcError::Overflow);
    }
    Ok(out)
}

/// Geometric anisotropy: G̃(|Ax|, |By|).
pub fn gc_aniso(
    x: &[f64],
    y: &[f64],
    a: &DMatrix<f64>,
    b: &DMatrix<f64>,
    params: &ModelParams,
    policy: &EvalPolicy,
) -> Result<GCValue, GcError> {
    if x.len() != params.d1 as usize || a.nrows() != params.d1 as usize || a.ncols() != x.len() {
        return Err(GcError::InvalidParams(format!(
            "spatial dimension mismatch: x has {}, A is {}x{}, d1 = {}",
            x.len(),
            a.nrows(),
            a.ncols(),
            params.d1
        )));
    }
    if y.len() != params.d2 as usize || b.nrows() != params.d2 as usize || b.ncols() != y.len() {
        return Err(GcError::InvalidParams(format!(
            "temporal dimension mismatch: y has {}, B is {}x{}, d2 = {}",
            y.len(),
            b.nrows(),
            b.ncols(),
            params.d2
        )));
    }
    let ax = a * nalgebra::DVector::from_column_slice(x);
    let by = b * nalgebra::DVector::from_column_slice(y);
    gc_eval(ax.norm(), by.norm(), params, policy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pol() -> EvalPolicy {
        EvalPolicy::default()
    }

    #[test]
    fn origin_is_zero() {
        for p in [
            ModelParams::new(1.0, 1.5, 1, 1).unwrap(),
            ModelParams::new(1.5, 2.0, 1, 1).unwrap(),
            ModelParams::new(2.0, 0.95, 2, 1).unwrap(),
        ] {
            let v = gc_eval(0.0, 0.0, &p, &pol()).unwrap();
            assert_eq!(v.value, 0.0);
        }
    }

    #[test]
    fn routing() {
        let p = ModelParams::new(1.5, 2.0, 1, 1).unwrap();
        assert_eq!(gc_eval(1.0, 0.0, &p, &pol()).unwrap().branch, Branch::AxisR);
        assert_eq!(gc_eval(0.0, 1.0, &p, &pol()).unwrap().branch, Branch::AxisS);
        // large z: series; tiny z: asymptotic
        assert_eq!(gc_eval(0.5, 2.0, &p, &pol()).unwrap().branch, Branch::Series);
        assert_eq!(gc_eval(4.0, 1e-4, &p, &pol()).unwrap().branch, Branch::Asymptotic);
        let p1 = ModelParams::new(1.0, 1.5, 1, 1).unwrap();
        assert_eq!(gc_eval(1.0, 1.0, &p1, &pol()).unwrap().branch, Branch::Isotropic);
    }

    #[test]
    fn dispatcher_matches_frozen_series_values() {
        let p = ModelParams::new(1.5, 2.0, 1, 1).unwrap();
        assert_relative_eq!(
            gc_eval(1.0, 2.0, &p, &pol()).unwrap().value,
            20.716147498733383,
            max_relative = 1e-11
        );
        let p = ModelParams::new(1.5, 1.2, 1, 1).unwrap();
        // deep asymptotic region, frozen quadrature anchor
        assert_relative_eq!(
            gc_eval(2.0, 0.01, &p, &pol()).unwrap().value,
            -16.325934639679576,
            max_relative = 1e-7
        );
    }

    #[test]
    fn mixed_scaling_homogeneity() {
        // G̃(λr, λ^{α₁}s) = λ^{2α₁θ'} G̃(r,s)
        let cases = [(1.5, 2.0, 1u32, 1u32), (2.5, 1.4, 2, 1), (1.0, 1.5, 1, 1)];
        for (a, nu, d1, d2) in cases {
            let p = ModelParams::new(a, nu, d1, d2).unwrap();
            let d = p.derive().unwrap();
            let (r, s) = (0.8, 1.1);
            let base = gc_eval(r, s, &p, &pol()).unwrap().value;
            for &lam in &[0.5_f64, 2.0, 7.0] {
                let scaled = gc_eval(lam * r, lam.powf(a) * s, &p, &pol()).unwrap().value;
                assert_relative_eq!(
                    scaled,
                    lam.powf(2.0 * a * d.theta_prime) * base,
                    max_relative = 1e-10
                );
            }
        }
    }

    #[test]
    fn scale_parameters_are_jacobian_weighted() {
        let (b1, b2) = (1.7, 0.6);
        let p = ModelParams::with_scales(1.5, 2.0, 2, 1, b1, b2).unwrap();
        let unit = ModelParams::new(1.5, 2.0, 2, 1).unwrap();
        let (r, s) = (0.9, 1.3);
        let lhs = gc_eval(r, s, &p, &pol()).unwrap().value;
        let rhs = b1 * b1 * b2 * gc_eval(b1 * r, b2 * s, &unit, &pol()).unwrap().value;
        assert_relative_eq!(lhs, rhs, max_relative = 1e-13);
    }

    #[test]
    fn aniso_reduces_to_isotropic_norms() {
        let p = ModelParams::new(1.5, 2.0, 2, 1).unwrap();
        let a = DMatrix::<f64>::identity(2, 2);
        let b = DMatrix::<f64>::identity(1, 1);
        let x = [0.3, -0.4];
        let y = [1.2];
        let v_id = gc_aniso(&x, &y, &a, &b, &p, &pol()).unwrap().value;
        let v_norm = gc_eval(0.5, 1.2, &p, &pol()).unwrap().value;
        assert_relative_eq!(v_id, v_norm, max_relative = 1e-14);
        // scaling A = cI
        let c = 2.5;
        let v_scaled = gc_aniso(&x, &y, &(c * &a), &b, &p, &pol()).unwrap().value;
        assert_relative_eq!(
            v_scaled,
            gc_eval(c * 0.5, 1.2, &p, &pol()).unwrap().value,
            max_relative = 1e-14
        );
        // rotation leaves the value unchanged
        let ang: f64 = 0.7;
        let rot =
            DMatrix::from_row_slice(2, 2, &[ang.cos(), -ang.sin(), ang.sin(), ang.cos()]);
        let v_rot = gc_aniso(&x, &y, &rot, &b, &p, &pol()).unwrap().value;
        assert_relative_eq!(v_rot, v_norm, max_relative = 1e-12);
    }

    #[test]
    fn aniso_dimension_mismatch() {
        let p = ModelParams::new(1.5, 2.0, 2, 1).unwrap();
        let a = DMatrix::<f64>::identity(3, 3);
        let b = DMatrix::<f64>::identity(1, 1);
        assert!(gc_aniso(&[0.1, 0.2], &[0.3], &a, &b, &p, &pol()).is_err());
    }
}
