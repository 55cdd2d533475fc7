//! The differential operators Upsilon_{h,r}(k; w, d_w) acting on the
//! logistic kernel.
//!
//! Upsilon_{h,0} = d_w^h, and for r >= 1
//!
//!   Upsilon_{h,r} = r! sum_{s+l=r} ((k-1/2)^s / s!) Upsilon_{h,s,l},
//!   Upsilon_{h,s,l} = (3/pi^2)^l sum_{v=0..2l}
//!                       gamma_l(s+h+3/2, v) (w^v / v!) d_w^{v+h+2s}.
//!
//! Every rational part is exact; the transcendental factor (3/pi^2)^l is
//! carried symbolically as the exponent l (3^l goes into the rational
//! coefficient) and only becomes a float on application.
//!
//! On the gamma argument: the operators arise from Hankel-contour
//! integrals of (w-1)^v w^{s+h+1/2} e^{(u/2)(w+1/w)}, and expanding
//! (w-1)^v binomially yields the alternating Bessel combination
//! sum_h (-1)^h C(v,h) I_{mu-v+h} with mu = -s-h-3/2 — orders descending
//! from mu. Because a_j is even in its order, the 1/u-expansion of that
//! combination is gamma_l evaluated at -mu = s+h+3/2. (Writing
//! gamma_l(-s-h-3/2, v) instead silently flips the odd-degree part and
//! costs the expansion two orders of accuracy; the exact-count oracles
//! in the tests pin the correct orientation.)

use crate::coeffs::{c_coeff, gamma_coeff};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::logistic::{logistic_deriv, MAX_DERIV_ORDER};
use crate::numeric::{factorial_big, rat_to_f64};
use num_rational::BigRational;
use num_traits::Zero;

/// One term coeff * pi^(-2*pi2_neg_pow) * w^w_pow * d_w^deriv.
#[derive(Debug, Clone)]
pub struct UpsilonTerm {
    pub coeff: BigRational,
    pub pi2_neg_pow: u32,
    pub w_pow: u32,
    pub deriv: u32,
}

/// Upsilon_{h,r}(k; w, d_w) as an exact term list.
#[derive(Debug, Clone)]
pub struct UpsilonOperator {
    pub k: u32,
    pub h: u32,
    pub r: u32,
    pub terms: Vec<UpsilonTerm>,
}

/// Build Upsilon_{h,r}(k; w, d_w). For r = 0 this is the single term d_w^h.
pub fn build_upsilon(k: u32, h: u32, r: u32) -> Result<UpsilonOperator> {
    if k < 1 || h < 1 {
        return Err(Error::Domain(format!(
            "upsilon requires k >= 1 and h >= 1, got k={k}, h={h}"
        )));
    }
    if h + 2 * r > MAX_DERIV_ORDER {
        return Err(Error::DerivBudget(h + 2 * r, MAX_DERIV_ORDER));
    }
    let mut terms = Vec::new();
    if r == 0 {
        terms.push(UpsilonTerm {
            coeff: BigRational::from_integer(1.into()),
            pi2_neg_pow: 0,
            w_pow: 0,
            deriv: h,
        });
        return Ok(UpsilonOperator { k, h, r, terms });
    }
    let r_fact = BigRational::from(factorial_big(r));
    let k_half = BigRational::new((2 * k as i64 - 1).into(), 2.into());
    for s in 0..=r {
        let l = r - s;
        let base = &r_fact / BigRational::from(factorial_big(s)) * k_half.pow(s as i32);
        let three_l = BigRational::from_integer(3.into()).pow(l as i32);
        let mu = HalfInt::from_twice(2 * (s + h) as i64 + 3);
        for v in 0..=2 * l {
            let g = gamma_coeff(l, mu, v);
            if g.is_zero() {
                continue;
            }
            let coeff = &base * g * &three_l / BigRational::from(factorial_big(v));
            terms.push(UpsilonTerm {
                coeff,
                pi2_neg_pow: l,
                w_pow: v,
                deriv: v + h + 2 * s,
            });
        }
    }
    Ok(UpsilonOperator { k, h, r, terms })
}

impl UpsilonOperator {
    /// Apply to the logistic kernel at w.
    pub fn apply(&self, w: f64) -> Result<f64> {
        let mut acc = 0.0;
        for t in &self.terms {
            acc += rat_to_f64(&t.coeff)
                * std::f64::consts::PI.powi(-2 * t.pi2_neg_pow as i32)
                * w.powi(t.w_pow as i32)
                * logistic_deriv(t.deriv, w)?;
        }
        Ok(acc)
    }

    /// c_h(j) for this operator family; exposed for the expansion driver.
    pub fn c(l: u32, j: i64) -> BigRational {
        c_coeff(l, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn r0_is_plain_derivative() {
        let op = build_upsilon(3, 4, 0).unwrap();
        assert_eq!(op.terms.len(), 1);
        assert_eq!(op.terms[0].deriv, 4);
        assert_eq!(op.terms[0].w_pow, 0);
        assert_eq!(op.terms[0].coeff, rat(1, 1));
        assert_relative_eq!(
            op.apply(0.7).unwrap(),
            logistic_deriv(4, 0.7).unwrap(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn h1_r1_term_structure() {
        // (s,l) = (1,0): (k-1/2) d^3
        // (s,l) = (0,1): (3/pi^2) [gamma_1(5/2,0) d + gamma_1(5/2,1) w d^2
        //                          + gamma_1(5/2,2) (w^2/2) d^3]
        // with gamma_1(5/2, .) = (3, 3, 1)
        let k = 2;
        let op = build_upsilon(k, 1, 1).unwrap();
        assert_eq!(op.terms.len(), 4);
        let find = |v: u32, d: u32| -> &UpsilonTerm {
            op.terms
                .iter()
                .find(|t| t.w_pow == v && t.deriv == d)
                .unwrap()
        };
        let t = find(0, 3);
        assert_eq!(t.coeff, rat(3, 2)); // k - 1/2 at k = 2
        assert_eq!(t.pi2_neg_pow, 0);
        let t = find(0, 1);
        assert_eq!(t.coeff, rat(9, 1)); // 3 * 3^1
        assert_eq!(t.pi2_neg_pow, 1);
        let t = find(1, 2);
        assert_eq!(t.coeff, rat(9, 1)); // 3 * 3^1
        let t = find(2, 3);
        assert_eq!(t.coeff, rat(3, 2)); // 1 * 3 / 2!
        assert_eq!(t.pi2_neg_pow, 1);
    }

    #[test]
    fn apply_matches_term_by_term_f64_composition() {
        // operator linearity: term-by-term evaluation agrees with apply
        let op = build_upsilon(2, 1, 1).unwrap();
        for &w in &[0.0f64, 0.4, 1.283] {
            let direct = op.apply(w).unwrap();
            let mut manual = 0.0;
            for t in &op.terms {
                manual += rat_to_f64(&t.coeff)
                    * std::f64::consts::PI.powi(-2 * t.pi2_neg_pow as i32)
                    * w.powi(t.w_pow as i32)
                    * logistic_deriv(t.deriv, w).unwrap();
            }
            assert_relative_eq!(direct, manual, max_relative = 1e-12);
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(build_upsilon(2, 60, 4).is_err());
        assert!(build_upsilon(2, 0, 1).is_err());
    }
}
