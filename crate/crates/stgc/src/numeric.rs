//! Small numeric helpers shared by the engine and the oracle: compensated
//! accumulation, and a compensated accumulator over (ln |term|, sign) pairs
//! whose terms can individually over- or underflow f64.

/// Neumaier-compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Compensated sum of terms supplied as sign · exp(ln_mag), carried as a
/// mantissa sum against a running log-scale so that huge intermediate terms
/// cancel without overflowing.
#[derive(Debug, Clone)]
pub(crate) struct ScaledSum {
    scale: f64, // current log-scale; stored mantissas are value * exp(-scale)
    acc: Kahan,
    max_term: f64, // max |term| mantissa at current scale
}

impl ScaledSum {
    pub fn new() -> Self {
        ScaledSum { scale: f64::NEG_INFINITY, acc: Kahan::default(), max_term: 0.0 }
    }

    pub fn add_log(&mut self, ln_mag: f64, sign: f64) {
        if sign == 0.0 || ln_mag == f64::NEG_INFINITY {
            return;
        }
        if self.scale == f64::NEG_INFINITY {
            self.scale = ln_mag;
        } else if ln_mag > self.scale + 40.0 {
            // rescale so the new term's mantissa is O(1)
            let shrink = (self.scale - ln_mag).exp();
            self.acc = {
                let mut k = Kahan::default();
                k.add(self.acc.value() * shrink);
                k
            };
            self.max_term *= shrink;
            self.scale = ln_mag;
        }
        let mant = sign * (ln_mag - self.scale).exp();
        self.acc.add(mant);
        self.max_term = self.max_term.max(mant.abs());
    }

    /// ln |current partial sum| (−∞ if zero so far).
    pub fn ln_abs(&self) -> f64 {
        let v = self.acc.value().abs();
        if v == 0.0 {
            f64::NEG_INFINITY
        } else {
            self.scale + v.ln()
        }
    }

    /// (value, cancellation estimate = max |term| · ε); Err on overflow.
    pub fn value_with_cancellation(&self) -> (f64, f64) {
        if self.scale == f64::NEG_INFINITY {
            return (0.0, 0.0);
        }
        let e = self.scale.exp();
        (self.acc.value() * e, self.max_term * e * f64::EPSILON)
    }

    /// (ln|value|, sign) without leaving log space.
    pub fn to_log(&self) -> (f64, f64) {
        let v = self.acc.value();
        if v == 0.0 || self.scale == f64::NEG_INFINITY {
            (f64::NEG_INFINITY, 0.0)
        } else {
            (self.scale + v.abs().ln(), v.signum())
        }
    }
}
