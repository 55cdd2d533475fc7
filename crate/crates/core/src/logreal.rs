//! Signed log-magnitude reals.
//!
//! Quantities at the e^{2*Lambda_n} scale overflow f64 near n ~ 10^5, so
//! every value that carries that factor is handled as (sign, ln|x|).
//! Multiplication and division are exact in log space; addition goes
//! through a stable log-sum-exp.

use crate::numeric::{ln_bigint, sign_of};
use num_bigint::BigInt;
use num_traits::Signed;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogReal {
    sign: i8,
    ln_abs: f64,
}

impl LogReal {
    pub fn zero() -> Self {
        Self {
            sign: 0,
            ln_abs: f64::NEG_INFINITY,
        }
    }

    pub fn from_parts(sign: i8, ln_abs: f64) -> Self {
        if sign == 0 {
            Self::zero()
        } else {
            Self { sign, ln_abs }
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::zero()
        } else {
            Self {
                sign: if x > 0.0 { 1 } else { -1 },
                ln_abs: x.abs().ln(),
            }
        }
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        let sign = sign_of(x);
        if sign == 0 {
            Self::zero()
        } else {
            Self {
                sign,
                ln_abs: ln_bigint(&x.abs()),
            }
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// ln|x|; negative infinity for zero.
    pub fn ln_abs(&self) -> f64 {
        self.ln_abs
    }

    /// Back to f64, overflowing to +-inf when out of range.
    pub fn to_f64(&self) -> f64 {
        self.sign as f64 * self.ln_abs.exp()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_parts(self.sign * other.sign, self.ln_abs + other.ln_abs)
    }

    pub fn div(&self, other: &Self) -> Self {
        debug_assert!(other.sign != 0, "division by LogReal zero");
        Self::from_parts(self.sign * other.sign, self.ln_abs - other.ln_abs)
    }

    /// Stable signed addition via log-sum-exp.
    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return *other;
        }
        if other.is_zero() {
            return *self;
        }
        let (hi, lo) = if self.ln_abs >= other.ln_abs {
            (self, other)
        } else {
            (other, self)
        };
        let d = lo.ln_abs - hi.ln_abs; // <= 0
        if hi.sign == lo.sign {
            Self::from_parts(hi.sign, hi.ln_abs + d.exp().ln_1p())
        } else {
            let rest = -(-d.exp()).ln_1p(); // -ln(1 - e^d) >= 0
            if d == 0.0 {
                Self::zero()
            } else {
                Self::from_parts(hi.sign, hi.ln_abs - rest)
            }
        }
    }

    /// Signed ratio self/other as f64.
    pub fn ratio(&self, other: &Self) -> f64 {
        debug_assert!(other.sign != 0);
        (self.sign * other.sign) as f64 * (self.ln_abs - other.ln_abs).exp()
    }
}
