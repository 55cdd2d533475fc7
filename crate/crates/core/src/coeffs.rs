//! Exact rational coefficient tables for the asymptotic machinery.
//!
//! - a_j(mu) = (1/(8^j j!)) prod_{s=1..j} ((2 mu)^2 - (2s-1)^2), the
//!   coefficients of the large-argument expansion of I_mu; a polynomial
//!   of degree 2j in mu, even in mu.
//! - gamma_l(mu, nu) = sum_{h=0..nu} (-1)^h C(nu,h) a_l(mu + nu - h), the
//!   coefficients of the normalized alternating Bessel combination; a
//!   polynomial of degree 2l - nu in mu, identically zero for 2l < nu.
//! - c_l(j) = (1/2 - j)^l - (-1)^l (1/2 + j)^l, the Taylor coefficients of
//!   (e^{w/2} - e^{-w/2}) e^{-jw}.
//!
//! Everything here is exact; floats only appear when a caller converts a
//! finished rational.

use crate::halfint::HalfInt;
use crate::numeric::{binomial_big, factorial_big};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::Mutex;

/// a_j(mu), exact.
pub fn a_coeff(j: u32, mu: HalfInt) -> BigRational {
    let two_mu_sq = BigInt::from(mu.twice()) * BigInt::from(mu.twice());
    let mut prod = BigInt::one();
    for s in 1..=j as i64 {
        prod *= &two_mu_sq - BigInt::from((2 * s - 1) * (2 * s - 1));
    }
    let denom = BigInt::from(8u32).pow(j) * factorial_big(j);
    BigRational::new(prod, denom)
}

/// gamma_l(mu, nu), exact.
pub fn gamma_coeff(l: u32, mu: HalfInt, nu: u32) -> BigRational {
    let mut acc = BigRational::zero();
    for h in 0..=nu {
        let term = BigRational::from(binomial_big(nu, h)) * a_coeff(l, mu.add_int((nu - h) as i64));
        if h % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// c_l(j), exact. Requires l >= 1.
pub fn c_coeff(l: u32, j: i64) -> BigRational {
    debug_assert!(l >= 1);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let a = (&half - BigRational::from(BigInt::from(j))).pow(l as i32);
    let b = (&half + BigRational::from(BigInt::from(j))).pow(l as i32);
    if l % 2 == 0 {
        a - b
    } else {
        a + b
    }
}

/// Memoized view of the three tables, safe for concurrent lookup-or-insert.
#[derive(Debug, Default)]
pub struct CoeffTables {
    a: Mutex<HashMap<(u32, i64), BigRational>>,
    gamma: Mutex<HashMap<(u32, i64, u32), BigRational>>,
    c: Mutex<HashMap<(u32, i64), BigRational>>,
}

impl CoeffTables {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn a(&self, j: u32, mu: HalfInt) -> BigRational {
        let key = (j, mu.twice());
        if let Some(v) = self.a.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = a_coeff(j, mu);
        self.a.lock().unwrap().insert(key, v.clone());
        v
    }

    pub fn gamma(&self, l: u32, mu: HalfInt, nu: u32) -> BigRational {
        let key = (l, mu.twice(), nu);
        if let Some(v) = self.gamma.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = gamma_coeff(l, mu, nu);
        self.gamma.lock().unwrap().insert(key, v.clone());
        v
    }

    pub fn c(&self, l: u32, j: i64) -> BigRational {
        let key = (l, j);
        if let Some(v) = self.c.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = c_coeff(l, j);
        self.c.lock().unwrap().insert(key, v.clone());
        v
    }
}
