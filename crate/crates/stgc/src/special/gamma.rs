//! Gamma-family scalar functions: Γ, ln Γ (with sign), digamma, and the
//! Temme auxiliary coefficients used by the modified-Bessel evaluation.
//!
//! Positive arguments use the Lanczos-type approximation from Pugh (2004)
//! with g = 10.900511 and 11 coefficients; negative arguments go through the
//! reflection formula with argument-reduced sin(πx).

use crate::error::SpecialError;
use std::f64::consts::{E, PI};
use std::sync::OnceLock;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const LN_PI: f64 = 1.144_729_885_849_400_2;
const TWO_SQRT_E_OVER_PI: f64 = 1.860_382_734_205_265_7;
const LN_2_SQRT_E_OVER_PI: f64 = 0.620_782_237_635_245_2;
const LANCZOS_R: f64 = 10.900511;

const LANCZOS_DK: [f64; 11] = [
    2.485_740_891_387_535_5e-5,
    1.051_423_785_817_219_7,
    -3.456_870_972_220_162_5,
    4.512_277_094_668_948,
    -2.982_852_253_235_766_4,
    1.056_397_115_771_267,
    -1.954_287_731_916_458_7e-1,
    1.709_705_434_044_412e-2,
    -5.719_261_174_043_057e-4,
    4.633_994_733_599_057e-6,
    -2.719_949_084_886_077_2e-9,
];

fn lanczos_sum(x: f64) -> f64 {
    // Σ d_k / (x + k - 1), k = 1..10, plus d_0; valid for x >= 0.5.
    let mut s = LANCZOS_DK[0];
    for (k, dk) in LANCZOS_DK.iter().enumerate().skip(1) {
        s += dk / (x + k as f64 - 1.0);
    }
    s
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// sin(πx) with the argument reduced modulo 2 before multiplying by π,
/// so large or near-integer x keep full relative accuracy.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = x.rem_euclid(2.0); // exact for |x| < 2^52
    let (r, sign) = if r > 1.0 { (r - 1.0, -1.0) } else { (r, 1.0) };
    // r in [0,1]; fold onto [0, 0.5]
    let v = if r <= 0.5 { (PI * r).sin() } else { (PI * (1.0 - r)).sin() };
    sign * v
}

/// cos(πx) via sin(π(x + 1/2)) with the same reduction.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < 0.5 {
        LN_PI
            - (PI * x).sin().ln()
            - lanczos_sum(1.0 - x).ln()
            - LN_2_SQRT_E_OVER_PI
            - (0.5 - x) * ((0.5 - x + LANCZOS_R) / E).ln()
    } else {
        lanczos_sum(x).ln()
            + LN_2_SQRT_E_OVER_PI
            + (x - 0.5) * ((x - 0.5 + LANCZOS_R) / E).ln()
    }
}

/// (ln |Γ(x)|, sign of Γ(x)) for any non-pole real x.
pub fn lgamma_sign(x: f64) -> (f64, f64) {
    if x > 0.0 {
        (ln_gamma(x), 1.0)
    } else {
        // reflection: Γ(x) = π / (sin(πx) Γ(1-x)); Γ(1-x) > 0 here
        let s = sin_pi(x);
        (LN_PI - s.abs().ln() - ln_gamma(1.0 - x), s.signum())
    }
}

/// Γ(x) for real non-pole x; reflection for x < 0.
pub fn gamma_fn(x: f64) -> Result<f64, SpecialError> {
    if x.is_nan() {
        return Err(SpecialError::Domain("gamma of NaN".into()));
    }
    if is_nonpositive_integer(x) {
        return Err(SpecialError::Pole(x));
    }
    let v = if x < 0.5 {
        PI / (sin_pi(x)
            * lanczos_sum(1.0 - x)
            * TWO_SQRT_E_OVER_PI
            * ((0.5 - x + LANCZOS_R) / E).powf(0.5 - x))
    } else {
        lanczos_sum(x) * TWO_SQRT_E_OVER_PI * ((x - 0.5 + LANCZOS_R) / E).powf(x - 0.5)
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(SpecialError::Overflow)
    }
}

const DIGAMMA_ASYMP: [f64; 8] = [
    // B_{2k} / (2k), k = 1..8
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

/// Digamma ψ(x) = d/dx ln Γ(x); recurrence into x >= 10 and the Bernoulli
/// asymptotic expansion, reflection for x < 0.
pub fn digamma(x: f64) -> Result<f64, SpecialError> {
    if x.is_nan() {
        return Err(SpecialError::Domain("digamma of NaN".into()));
    }
    if is_nonpositive_integer(x) {
        return Err(SpecialError::Pole(x));
    }
    if x < 0.0 {
        // ψ(x) = ψ(1-x) - π cot(πx)
        let cot = cos_pi(x) / sin_pi(x);
        return Ok(digamma(1.0 - x)? - PI * cot);
    }
    let mut result = 0.0;
    let mut xx = x;
    while xx < 10.0 {
        result -= 1.0 / xx;
        xx += 1.0;
    }
    result += xx.ln() - 0.5 / xx;
    let inv_x2 = 1.0 / (xx * xx);
    let mut pow = inv_x2;
    for c in DIGAMMA_ASYMP {
        result -= c * pow;
        pow *= inv_x2;
    }
    Ok(result)
}

/// ζ(2)..ζ(Z_MAX) by Euler–Maclaurin; feeds the Temme coefficient series.
const Z_MAX: usize = 36;

fn zeta_table() -> &'static [f64; Z_MAX - 1] {
    static TABLE: OnceLock<[f64; Z_MAX - 1]> = OnceLock::new();
    TABLE.get_or_init(|| {
        const N: f64 = 16.0;
        // B_{2j}/(2j)! for j = 1..6
        const EM: [f64; 6] = [
            1.0 / 12.0,
            -1.0 / 720.0,
            1.0 / 30240.0,
            -1.0 / 1209600.0,
            1.0 / 47900160.0,
            -8.220_635_246_624_329e-9, // 691/(2730*13!)
        ];
        let mut out = [0.0_f64; Z_MAX - 1];
        for (i, slot) in out.iter_mut().enumerate() {
            let s = (i + 2) as f64;
            // Σ_{n<N} n^{-s} + N^{-s}/2 + N^{1-s}/(s-1) + Σ_j B_{2j}/(2j)! (s)_{2j-1} N^{-s-2j+1}
            let mut acc = 0.0;
            for n in (1..16).rev() {
                acc += (n as f64).powf(-s);
            }
            acc += 0.5 * N.powf(-s) + N.powf(1.0 - s) / (s - 1.0);
            let mut rising = s; // (s)_{2j-1}
            let mut npow = N.powf(-s - 1.0);
            for (j, em) in EM.iter().enumerate() {
                acc += em * rising * npow;
                let two_j = 2.0 * (j as f64 + 1.0);
                rising *= (s + two_j - 1.0) * (s + two_j);
                npow /= N * N;
            }
            *slot = acc;
        }
        out
    })
}

/// ζ(k) for integer k >= 2 (table-backed).
pub fn zeta_int(k: usize) -> f64 {
    debug_assert!((2..=Z_MAX).contains(&k));
    zeta_table()[k - 2]
}

/// Temme's Γ-ratio coefficients for |μ| <= 1/2:
/// gam1 = [1/Γ(1-μ) - 1/Γ(1+μ)]/(2μ), gam2 = [1/Γ(1-μ) + 1/Γ(1+μ)]/2.
///
/// The small-|μ| branch expands ln 1/Γ(1±μ) in ζ-series so gam1 keeps full
/// accuracy through the removable singularity at μ = 0.
pub(crate) fn temme_gam12(mu: f64) -> (f64, f64) {
    debug_assert!(mu.abs() <= 0.5 + 1e-14);
    if mu.abs() > 0.25 {
        let rp = 1.0 / gamma_fn(1.0 + mu).expect("no pole");
        let rm = 1.0 / gamma_fn(1.0 - mu).expect("no pole");
        return ((rm - rp) / (2.0 * mu), 0.5 * (rm + rp));
    }
    // odd part of -ln Γ(1+x): A/μ = γ + Σ_{j>=1} ζ(2j+1) μ^{2j}/(2j+1)
    // even part:              B   = -Σ_{j>=1} ζ(2j) μ^{2j}/(2j)
    let mu2 = mu * mu;
    let mut a_over_mu = EULER_GAMMA;
    let mut b = 0.0;
    let mut pow = mu2;
    for j in 1..=16 {
        let k_odd = 2 * j + 1;
        a_over_mu += zeta_int(k_odd) * pow / k_odd as f64;
        b -= zeta_int(2 * j) * pow / (2 * j) as f64;
        pow *= mu2;
        if pow < 1e-20 {
            break;
        }
    }
    let a = mu * a_over_mu;
    let sinhc = if a.abs() < 1e-4 {
        1.0 + a * a / 6.0
    } else {
        a.sinh() / a
    };
    let eb = b.exp();
    (-eb * a_over_mu * sinhc, eb * a.cosh())
}
