//! Matérn kernel M_θ(t) = t^θ K_θ(t) for real order θ.
//!
//! K is seeded at reduced order |μ| <= 1/2 by Temme's series (t < 2) or the
//! Thompson–Barnett continued fraction (t >= 2), then lifted with the upward
//! recurrence written directly on M so small t cannot overflow:
//! M_{ν+1}(t) = 2ν M_ν(t) + t² M_{ν-1}(t). Half-integer orders take the
//! closed-form path from K_{1/2}(t) = sqrt(π/(2t)) e^{-t}.

use super::gamma::{gamma_fn, ln_gamma, sin_pi, temme_gam12};
use crate::error::SpecialError;
use std::f64::consts::{FRAC_PI_2, PI};

const MAX_ITER: usize = 500;

/// Temme-series seeds (K_μ(x), K_{μ+1}(x)) for |μ| <= 1/2 and 0 < x <= 2.
fn temme_knu(mu: f64, x: f64) -> Result<(f64, f64), SpecialError> {
    debug_assert!(mu.abs() <= 0.5 + 1e-14 && x > 0.0 && x <= 2.0);
    let (gam1, gam2) = temme_gam12(mu);
    let ln_half_x = (0.5 * x).ln();
    let sigma = -mu * ln_half_x;
    let fact = if mu.abs() < 1e-14 { 1.0 } else { PI * mu / sin_pi(mu) };
    let sinhc = if sigma.abs() < 1e-4 {
        1.0 + sigma * sigma / 6.0
    } else {
        sigma.sinh() / sigma
    };
    let mut f = fact * (gam1 * sigma.cosh() - gam2 * sinhc * ln_half_x);
    let mut p = 0.5 * (-mu * ln_half_x).exp() * gamma_fn(1.0 + mu)?;
    let mut q = 0.5 * (mu * ln_half_x).exp() * gamma_fn(1.0 - mu)?;
    let x2_4 = 0.25 * x * x;
    let mut coef = 1.0;
    let mut sum = f;
    let mut sum1 = p;
    for k in 1..=MAX_ITER {
        let kf = k as f64;
        f = (kf * f + p + q) / (kf * kf - mu * mu);
        p /= kf - mu;
        q /= kf + mu;
        let h = p - kf * f;
        coef *= x2_4 / kf;
        sum += coef * f;
        sum1 += coef * h;
        if (coef * f).abs() < sum.abs() * f64::EPSILON
            && (coef * h).abs() < sum1.abs() * f64::EPSILON
        {
            return Ok((sum, 2.0 * sum1 / x));
        }
    }
    Err(SpecialError::NoConvergence(MAX_ITER))
}

/// Steed/Thompson–Barnett CF2 seeds (K_μ(x), K_{μ+1}(x)) for x >= 2.
fn cf2_knu(mu: f64, x: f64) -> Result<(f64, f64), SpecialError> {
    debug_assert!(mu.abs() <= 0.5 + 1e-14 && x >= 2.0);
    let mut a = mu * mu - 0.25;
    let mut b = 2.0 * (x + 1.0);
    let mut d = 1.0 / b;
    let mut delta = d;
    let mut f = d;
    let mut prev = 0.0;
    let mut cur = 1.0;
    let mut q = -a;
    let mut c = -a;
    let mut s = 1.0 + q * delta;
    for k in 2..=MAX_ITER {
        let kf = k as f64;
        a -= 2.0 * (kf - 1.0);
        b += 2.0;
        d = 1.0 / (a * d + b);
        delta *= b * d - 1.0;
        f += delta;
        let t = (prev - (b - 2.0) * cur) / a;
        prev = cur;
        cur = t;
        c *= -a / kf;
        q += c * t;
        s += q * delta;
        if (q * delta).abs() < s.abs() * (0.5 * f64::EPSILON) {
            let kmu = (FRAC_PI_2 / x).sqrt() * (-x).exp() / s;
            let kmu1 = kmu * (mu + x + 0.5 + (mu * mu - 0.25) * f) / x;
            return Ok((kmu, kmu1));
        }
    }
    Err(SpecialError::NoConvergence(MAX_ITER))
}

/// M_ν(t) for ν >= 0, t > 0.
fn matern_nonneg(nu: f64, t: f64) -> Result<f64, SpecialError> {
    let n = nu.round();
    let mu = nu - n;
    let steps = n as i64;
    // half-integer closed forms: K_{1/2}, K_{3/2} then the M recurrence
    let two_nu = 2.0 * nu;
    if two_nu == two_nu.round() && (two_nu.round() as i64) % 2 != 0 {
        let e = (-t).exp();
        let base = FRAC_PI_2.sqrt();
        if nu == 0.5 {
            return Ok(base * e);
        }
        let mut prev = base * e / t; // M_{-1/2}
        let mut cur = base * e; // M_{1/2}
        let mut ord = 0.5;
        while ord < nu - 0.25 {
            let next = 2.0 * ord * cur + t * t * prev;
            prev = cur;
            cur = next;
            ord += 1.0;
        }
        return Ok(cur);
    }
    let (kmu, kmu1) = if t < 2.0 { temme_knu(mu, t)? } else { cf2_knu(mu, t)? };
    let tp = t.powf(mu);
    let mut prev = tp * kmu; // M_mu
    let mut cur = tp * t * kmu1; // M_{mu+1}
    if steps == 0 {
        return Ok(prev);
    }
    for i in 1..steps {
        let next = 2.0 * (mu + i as f64) * cur + t * t * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Matérn kernel M_θ(t) = t^θ K_θ(t), θ real, t >= 0.
///
/// M_θ(0) = 2^{θ-1} Γ(θ) for θ > 0; θ <= 0 at t = 0 is a domain error.
pub fn matern(theta: f64, t: f64) -> Result<f64, SpecialError> {
    if !(t >= 0.0) || theta.is_nan() {
        return Err(SpecialError::Domain(format!(
            "matern requires t >= 0, got theta={theta}, t={t}"
        )));
    }
    if t == 0.0 {
        if theta > 0.0 {
            return Ok((2.0f64).powf(theta - 1.0) * gamma_fn(theta)?);
        }
        return Err(SpecialError::Domain(format!(
            "matern diverges at t = 0 for theta = {theta} <= 0"
        )));
    }
    if theta >= 0.0 {
        matern_nonneg(theta, t)
    } else {
        // K is even in its order: M_θ = t^{2θ} M_{-θ}
        Ok(t.powf(2.0 * theta) * matern_nonneg(-theta, t)?)
    }
}

/// ln M_θ(0) = (θ-1) ln 2 + ln Γ(θ) for θ > 0.
pub(crate) fn ln_matern_zero(theta: f64) -> f64 {
    debug_assert!(theta > 0.0);
    (theta - 1.0) * std::f64::consts::LN_2 + ln_gamma(theta)
}
