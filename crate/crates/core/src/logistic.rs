//! Derivatives of the logistic kernel f(w) = 1/(1+e^w).
//!
//! Since f' = f^2 - f, the r-th derivative is P_r(f) for an integer
//! polynomial P_r with P_0(X) = X and P_{r+1} = P_r' * (X^2 - X). The
//! polynomials are evaluated in exact rational arithmetic at the floating
//! point value of f, which removes the (pi/sqrt(2))^r cancellation the
//! plain Horner loop would suffer at higher orders.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::Mutex;

/// Derivative-order budget; P_65 already has ~90-digit coefficients.
pub const MAX_DERIV_ORDER: u32 = 64;

/// Integer coefficients of P_r, lowest degree first.
#[derive(Debug, Clone)]
pub struct LogisticDerivPoly {
    pub order: u32,
    pub coeffs: Vec<BigInt>,
}

static POLYS: Mutex<Vec<LogisticDerivPoly>> = Mutex::new(Vec::new());

/// P_r, memoized.
pub fn logistic_poly(r: u32) -> Result<LogisticDerivPoly> {
    if r > MAX_DERIV_ORDER {
        return Err(Error::DerivBudget(r, MAX_DERIV_ORDER));
    }
    let mut polys = POLYS.lock().unwrap();
    if polys.is_empty() {
        polys.push(LogisticDerivPoly {
            order: 0,
            coeffs: vec![BigInt::zero(), BigInt::one()],
        });
    }
    while polys.len() <= r as usize {
        let prev = &polys.last().unwrap().coeffs;
        // P' then multiply by (X^2 - X)
        let dp: Vec<BigInt> = prev
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        let mut next = vec![BigInt::zero(); dp.len() + 2];
        for (i, c) in dp.iter().enumerate() {
            next[i + 2] += c;
            next[i + 1] -= c;
        }
        let order = polys.len() as u32;
        polys.push(LogisticDerivPoly {
            order,
            coeffs: next,
        });
    }
    Ok(polys[r as usize].clone())
}

/// f(w) = 1/(1+e^w), overflow-safe on both sides.
pub fn logistic_value(w: f64) -> f64 {
    if w > 0.0 {
        let t = (-w).exp();
        t / (1.0 + t)
    } else {
        1.0 / (1.0 + w.exp())
    }
}

fn logistic_value_complex(w: Complex64) -> Complex64 {
    if w.re > 0.0 {
        let t = (-w).exp();
        t / (Complex64::new(1.0, 0.0) + t)
    } else {
        Complex64::new(1.0, 0.0) / (Complex64::new(1.0, 0.0) + w.exp())
    }
}

fn eval_exact(coeffs: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + BigRational::from(c.clone());
    }
    acc
}

/// d^r/dw^r [1/(1+e^w)] at real w.
pub fn logistic_deriv(r: u32, w: f64) -> Result<f64> {
    let poly = logistic_poly(r)?;
    let f = BigRational::from_float(logistic_value(w))
        .ok_or_else(|| Error::Domain(format!("non-finite logistic argument {w}")))?;
    Ok(crate::numeric::rat_to_f64(&eval_exact(&poly.coeffs, &f)))
}

/// d^r/dw^r [1/(1+e^w)] at complex w (exact-polynomial evaluation on the
/// complex rational made from the f64 value of f).
pub fn logistic_deriv_complex(r: u32, w: Complex64) -> Result<Complex64> {
    let poly = logistic_poly(r)?;
    let f = logistic_value_complex(w);
    let fre = BigRational::from_float(f.re)
        .ok_or_else(|| Error::Domain(format!("non-finite logistic argument {w}")))?;
    let fim = BigRational::from_float(f.im)
        .ok_or_else(|| Error::Domain(format!("non-finite logistic argument {w}")))?;
    let mut acc_re = BigRational::zero();
    let mut acc_im = BigRational::zero();
    for c in poly.coeffs.iter().rev() {
        // (acc_re + i acc_im) * (fre + i fim) + c
        let re = &acc_re * &fre - &acc_im * &fim + BigRational::from(c.clone());
        let im = &acc_re * &fim + &acc_im * &fre;
        acc_re = re;
        acc_im = im;
    }
    Ok(Complex64::new(
        crate::numeric::rat_to_f64(&acc_re),
        crate::numeric::rat_to_f64(&acc_im),
    ))
}
