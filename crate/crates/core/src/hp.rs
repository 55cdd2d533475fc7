//! Thin high-precision real/complex layer over `astro_float`.
//!
//! Only what the eta comparison needs: field arithmetic, exp, sqrt and
//! absolute value, at a caller-chosen mantissa width. Complex square
//! roots assume Re z > 0 (the only regime used here), which permits the
//! stable half-angle-free formula.

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_complex::Complex64;

const RM: RoundingMode = RoundingMode::ToEven;

pub struct HpCtx {
    p: usize,
    cc: Consts,
}

#[derive(Debug, Clone)]
pub struct HpComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl HpCtx {
    pub fn new(bits: usize) -> Self {
        Self {
            p: bits.max(64),
            cc: Consts::new().expect("constants cache"),
        }
    }

    pub fn bits(&self) -> usize {
        self.p
    }

    pub fn from_f64(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.p)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, RM)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.p, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.p, RM)
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.p, RM)
    }

    pub fn exp(&mut self, a: &BigFloat) -> BigFloat {
        a.exp(self.p, RM, &mut self.cc)
    }

    pub fn sin(&mut self, a: &BigFloat) -> BigFloat {
        a.sin(self.p, RM, &mut self.cc)
    }

    pub fn cos(&mut self, a: &BigFloat) -> BigFloat {
        a.cos(self.p, RM, &mut self.cc)
    }

    /// Round to f64 through the raw mantissa words.
    pub fn to_f64(x: &BigFloat) -> f64 {
        if x.is_zero() {
            return 0.0;
        }
        if x.is_nan() {
            return f64::NAN;
        }
        if x.is_inf_pos() {
            return f64::INFINITY;
        }
        if x.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        let (words, _p, sign, exponent, _inexact) =
            x.as_raw_parts().expect("finite number has raw parts");
        // mantissa is little-endian; value = 0.mantissa * 2^exponent
        let mut frac = 0.0f64;
        for (i, w) in words.iter().rev().take(2).enumerate() {
            frac += *w as f64 * 2f64.powi(-64 * (i as i32 + 1));
        }
        let v = frac * 2f64.powi(exponent);
        if sign == Sign::Neg {
            -v
        } else {
            v
        }
    }

    // ---- complex helpers (principal branch, Re z > 0 domain) ----

    pub fn cfrom(&self, z: Complex64) -> HpComplex {
        HpComplex {
            re: self.from_f64(z.re),
            im: self.from_f64(z.im),
        }
    }

    pub fn cto_f64(z: &HpComplex) -> Complex64 {
        Complex64::new(Self::to_f64(&z.re), Self::to_f64(&z.im))
    }

    pub fn cadd(&self, a: &HpComplex, b: &HpComplex) -> HpComplex {
        HpComplex {
            re: self.add(&a.re, &b.re),
            im: self.add(&a.im, &b.im),
        }
    }

    pub fn csub(&self, a: &HpComplex, b: &HpComplex) -> HpComplex {
        HpComplex {
            re: self.sub(&a.re, &b.re),
            im: self.sub(&a.im, &b.im),
        }
    }

    pub fn cmul(&self, a: &HpComplex, b: &HpComplex) -> HpComplex {
        HpComplex {
            re: self.sub(&self.mul(&a.re, &b.re), &self.mul(&a.im, &b.im)),
            im: self.add(&self.mul(&a.re, &b.im), &self.mul(&a.im, &b.re)),
        }
    }

    pub fn cdiv(&self, a: &HpComplex, b: &HpComplex) -> HpComplex {
        let den = self.add(&self.mul(&b.re, &b.re), &self.mul(&b.im, &b.im));
        let re = self.add(&self.mul(&a.re, &b.re), &self.mul(&a.im, &b.im));
        let im = self.sub(&self.mul(&a.im, &b.re), &self.mul(&a.re, &b.im));
        HpComplex {
            re: self.div(&re, &den),
            im: self.div(&im, &den),
        }
    }

    pub fn cabs(&self, a: &HpComplex) -> BigFloat {
        self.sqrt(&self.add(&self.mul(&a.re, &a.re), &self.mul(&a.im, &a.im)))
    }

    pub fn cexp(&mut self, a: &HpComplex) -> HpComplex {
        let r = self.exp(&a.re);
        let c = self.cos(&a.im);
        let s = self.sin(&a.im);
        HpComplex {
            re: self.mul(&r, &c),
            im: self.mul(&r, &s),
        }
    }

    /// Principal sqrt for Re z > 0: re = sqrt((|z|+re)/2), im = im/(2 re).
    pub fn csqrt_re_pos(&self, a: &HpComplex) -> HpComplex {
        let two = self.from_f64(2.0);
        let abs = self.cabs(a);
        let re = self.sqrt(&self.div(&self.add(&abs, &a.re), &two));
        let im = self.div(&a.im, &self.mul(&two, &re));
        HpComplex { re, im }
    }
}
