//! Isotropic Bessel kernel Λ_d(t) = Σ_m (-t²/4)^m / (m! (d/2)_m)
//!                               = 2^{(d-2)/2} Γ(d/2) t^{-(d-2)/2} J_{(d-2)/2}(t).
//!
//! The alternating series loses digits once t² >> d, so large t switches to
//! the Bessel-J closed form: exact trig expressions for odd d (half-integer
//! order, upward recurrence) and Miller's normalized downward recurrence for
//! even d (integer order).

use super::gamma::ln_gamma;
use std::f64::consts::{LN_2, PI};

/// Branch switch: series below, Bessel form above.
const T_SWITCH: f64 = 8.0;

/// J_n(x) for integer n >= 0 by Miller's algorithm (J_0 + 2ΣJ_{2k} = 1).
fn bessel_j_int(n: u32, x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let start = (x + 14.0 * x.cbrt() + 28.0).max(n as f64 + 16.0) as usize;
    let m = (start + 1) & !1usize; // even
    let mut j_hi = 0.0_f64;
    let mut j = 1e-30_f64;
    let mut sum = 0.0_f64;
    let mut saved = 0.0_f64;
    for k in (1..=m).rev() {
        let j_lo = (2.0 * k as f64 / x) * j - j_hi;
        j_hi = j;
        j = j_lo;
        let idx = k - 1;
        if idx == n as usize {
            saved = j;
        }
        if idx % 2 == 0 {
            sum += if idx == 0 { j } else { 2.0 * j };
        }
        if j.abs() > 1e250 {
            j *= 1e-250;
            j_hi *= 1e-250;
            sum *= 1e-250;
            saved *= 1e-250;
        }
    }
    saved / sum
}

/// J_{(d-2)/2}(t) for odd d via the half-integer closed forms.
fn bessel_j_half(d: u32, t: f64) -> f64 {
    debug_assert!(d % 2 == 1 && t > 0.0);
    let pref = (2.0 / (PI * t)).sqrt();
    let mut prev = pref * t.cos(); // J_{-1/2}
    let mut cur = pref * t.sin(); // J_{+1/2}
    if d == 1 {
        return prev;
    }
    let steps = (d - 3) / 2;
    let mut ord = 0.5;
    for _ in 0..steps {
        let next = (2.0 * ord / t) * cur - prev;
        prev = cur;
        cur = next;
        ord += 1.0;
    }
    cur
}

/// Λ_d(t); entire in t, even, Λ_d(0) = 1.
pub fn lambda_d(d: u32, t: f64) -> f64 {
    assert!(d >= 1, "lambda_d requires d >= 1");
    let t = t.abs();
    if t == 0.0 {
        return 1.0;
    }
    match d {
        1 => return t.cos(),
        3 => return t.sin() / t,
        _ => {}
    }
    if t < T_SWITCH || t * t < 4.0 * d as f64 {
        // Σ (-t²/4)^m / (m! (d/2)_m)
        let z = -0.25 * t * t;
        let half_d = 0.5 * d as f64;
        let mut term = 1.0_f64;
        let mut sum = 1.0_f64;
        let mut comp = 0.0_f64;
        for m in 1..600 {
            let mf = m as f64;
            term *= z / (mf * (half_d + mf - 1.0));
            let y = term - comp;
            let s = sum + y;
            comp = (s - sum) - y;
            sum = s;
            if term.abs() < 1e-18 * sum.abs().max(1e-3) {
                break;
            }
        }
        return sum;
    }
    let half = 0.5 * (d as f64 - 2.0);
    let j = if d % 2 == 1 {
        bessel_j_half(d, t)
    } else {
        bessel_j_int(d / 2 - 1, t)
    };
    (half * LN_2 + ln_gamma(0.5 * d as f64) - half * t.ln()).exp() * j
}
