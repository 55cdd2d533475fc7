//! The euler-product side of 1/(q;q)_inf against its modular main term.
//!
//! For z with Re z in (0, 1/4] and |Im z| <= sqrt(Re z),
//!
//!   1/(e^{-z}; e^{-z})_inf = (z^{1/2}/sqrt(2 pi)) e^{-z/24 + pi^2/(6z)} + O(|z|^{1/2}).
//!
//! Both sides reach e^{pi^2 Re(1/z)/6} scale while their difference stays
//! O(|z|^{1/2}); verifying the additive bound therefore needs ~40 decimal
//! digits of working precision. Everything here runs on the
//! high-precision layer and only the comparison quantities are rounded.

use crate::error::{Error, Result};
use crate::hp::{HpCtx, HpComplex};
use num_complex::Complex64;

/// Outcome of one comparison. `exact` and `main_term` can overflow f64
/// for very small Re z; `abs_diff` and `rel_diff` are computed at full
/// precision before rounding and stay meaningful.
#[derive(Debug, Clone, Copy)]
pub struct EtaCompare {
    pub exact: Complex64,
    pub main_term: Complex64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub additive_bound: f64,
}

/// Product truncation big enough that the dropped tail of
/// prod 1/(1 - e^{-nz}) is below the working precision.
pub fn eta_trunc_for(z: Complex64, bits: u32) -> usize {
    let x = z.re;
    (((bits as f64 + 16.0) * std::f64::consts::LN_2 + (1.0 / x).ln() + 5.0) / x).ceil() as usize
}

/// Compare the truncated product of 1/(e^{-z}; e^{-z})_inf against the
/// modular main term. `n_trunc` factors are multiplied; `bits` selects
/// the retained precision (internally padded by 64 guard bits).
pub fn eta_inv_compare(z: Complex64, n_trunc: usize, bits: u32) -> Result<EtaCompare> {
    if !(z.re > 0.0 && z.re <= 0.25) {
        return Err(Error::Domain(format!(
            "eta_inv_compare needs Re z in (0, 1/4], got {}",
            z.re
        )));
    }
    if z.im.abs() > z.re.sqrt() {
        return Err(Error::Domain(format!(
            "eta_inv_compare needs |Im z| <= sqrt(Re z), got {z}"
        )));
    }
    if n_trunc < 8 {
        return Err(Error::Config("eta product truncation too small".into()));
    }

    let mut cx = HpCtx::new(bits.max(128) as usize + 64);
    let hz = cx.cfrom(z);
    let one = HpComplex {
        re: cx.from_f64(1.0),
        im: cx.from_f64(0.0),
    };

    // prod_{n=1..N} 1/(1 - w^n) with w = e^{-z}, one multiply per factor
    let neg_z = HpComplex {
        re: cx.from_f64(-z.re),
        im: cx.from_f64(-z.im),
    };
    let w1 = cx.cexp(&neg_z);
    let mut wn = one.clone();
    let mut exact = one.clone();
    for _ in 0..n_trunc {
        wn = cx.cmul(&wn, &w1);
        let factor = cx.csub(&one, &wn);
        exact = cx.cdiv(&exact, &factor);
    }

    // (z^{1/2}/sqrt(2 pi)) e^{-z/24 + pi^2/(6 z)}
    let pi = cx.pi();
    let two_pi = cx.mul(&cx.from_f64(2.0), &pi);
    let pi_sq = cx.mul(&pi, &pi);
    let z24 = HpComplex {
        re: cx.div(&hz.re, &cx.from_f64(-24.0)),
        im: cx.div(&hz.im, &cx.from_f64(-24.0)),
    };
    let six_z = HpComplex {
        re: cx.mul(&hz.re, &cx.from_f64(6.0)),
        im: cx.mul(&hz.im, &cx.from_f64(6.0)),
    };
    let pole = cx.cdiv(
        &HpComplex {
            re: pi_sq,
            im: cx.from_f64(0.0),
        },
        &six_z,
    );
    let arg = cx.cadd(&z24, &pole);
    let expo = cx.cexp(&arg);
    let sqrt_z = cx.csqrt_re_pos(&hz);
    let sqrt_2pi = cx.sqrt(&two_pi);
    let mut main = cx.cmul(&sqrt_z, &expo);
    main = HpComplex {
        re: cx.div(&main.re, &sqrt_2pi),
        im: cx.div(&main.im, &sqrt_2pi),
    };

    let diff = cx.csub(&exact, &main);
    let abs_diff = HpCtx::to_f64(&cx.cabs(&diff));
    let ratio = cx.cdiv(&diff, &main);
    let rel_diff = HpCtx::to_f64(&cx.cabs(&ratio));

    Ok(EtaCompare {
        exact: HpCtx::cto_f64(&exact),
        main_term: HpCtx::cto_f64(&main),
        abs_diff,
        rel_diff,
        additive_bound: z.norm().sqrt(),
    })
}
