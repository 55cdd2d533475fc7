//! Modified Bessel functions of half-integer order and the normalized
//! alternating combination H-hat.
//!
//! For half-odd orders the large-argument expansion terminates, giving
//! the exact closed form
//!
//!   I_nu(u) = (A_nu(1/u) e^u + B_nu(1/u) e^{-u}) / sqrt(2 pi u),
//!
//! with integer-coefficient polynomials A, B generated from the seeds
//! A_{1/2} = 1, B_{1/2} = -1, A_{-1/2} = B_{-1/2} = 1 by the three-term
//! recurrence I_{nu-1} - I_{nu+1} = (2 nu / u) I_nu. The recurrence runs
//! on exact integers, so the usual instability of upward float
//! recursion never enters; floats appear only at final evaluation.
//!
//! H-hat is
//!
//!   Hhat_{mu,nu}(u) = sqrt(2 pi u) e^{-u}
//!                       sum_{h=0..nu} (-1)^h C(nu,h) I_{mu+nu-h}(u)
//!                   ~ sum_{l >= nu/2} (-1)^l gamma_l(mu,nu) / u^l.
//!
//! The alternating sum cancels roughly nu*log2(u) leading bits; both
//! sides are therefore assembled as exact rationals (u enters as the
//! exact rational value of the f64 argument) and only the final
//! comparison quantities are rounded.

use crate::coeffs::gamma_coeff;
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::logreal::LogReal;
use crate::numeric::{binomial_big, rat_to_f64};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex};

/// Largest twice-order kept in the closed-form table (|nu| <= 41/2).
pub const MAX_TWICE_ORDER: i64 = 41;

type PolyPair = Arc<(Vec<BigInt>, Vec<BigInt>)>;

static POLY_CACHE: Mutex<Option<HashMap<i64, PolyPair>>> = Mutex::new(None);

fn poly_mul_shift(dst: &mut Vec<BigInt>, src: &[BigInt], factor: i64) {
    // dst += factor * x * src
    if dst.len() < src.len() + 1 {
        dst.resize(src.len() + 1, BigInt::zero());
    }
    for (i, c) in src.iter().enumerate() {
        dst[i + 1] += c * factor;
    }
}

fn closed_form_polys(twice_nu: i64) -> Result<PolyPair> {
    if twice_nu % 2 == 0 {
        return Err(Error::Domain(format!(
            "integer Bessel order {}/2 has no terminating closed form",
            twice_nu
        )));
    }
    if twice_nu.abs() > MAX_TWICE_ORDER {
        return Err(Error::Domain(format!(
            "Bessel order {}/2 outside the closed-form table (|order| <= {}/2)",
            twice_nu, MAX_TWICE_ORDER
        )));
    }
    let mut guard = POLY_CACHE.lock().unwrap();
    let cache = guard.get_or_insert_with(HashMap::new);
    if let Some(p) = cache.get(&twice_nu) {
        return Ok(p.clone());
    }
    cache.insert(
        1,
        Arc::new((vec![BigInt::one()], vec![-BigInt::one()])),
    );
    cache.insert(-1, Arc::new((vec![BigInt::one()], vec![BigInt::one()])));
    // ascend: A_{T} = A_{T-4} - (T-2) x A_{T-2} for odd T >= 3
    let mut t = 3i64;
    while t <= twice_nu.max(1) {
        if !cache.contains_key(&t) {
            let lower = cache[&(t - 4)].clone();
            let mid = cache[&(t - 2)].clone();
            let mut a = lower.0.clone();
            let mut b = lower.1.clone();
            poly_mul_shift(&mut a, &mid.0, -(t - 2));
            poly_mul_shift(&mut b, &mid.1, -(t - 2));
            cache.insert(t, Arc::new((a, b)));
        }
        t += 2;
    }
    // descend: A_{T} = A_{T+4} + (T+2) x A_{T+2} for odd T <= -3
    let mut t = -3i64;
    while t >= twice_nu.min(-1) {
        if !cache.contains_key(&t) {
            let upper = cache[&(t + 4)].clone();
            let mid = cache[&(t + 2)].clone();
            let mut a = upper.0.clone();
            let mut b = upper.1.clone();
            poly_mul_shift(&mut a, &mid.0, t + 2);
            poly_mul_shift(&mut b, &mid.1, t + 2);
            cache.insert(t, Arc::new((a, b)));
        }
        t -= 2;
    }
    Ok(cache[&twice_nu].clone())
}

fn eval_poly_rat(coeffs: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + BigRational::from(c.clone());
    }
    acc
}

fn rational_recip_of(u: f64) -> Result<BigRational> {
    let ur = BigRational::from_float(u)
        .ok_or_else(|| Error::Domain(format!("non-finite Bessel argument {u}")))?;
    if ur.is_zero() {
        return Err(Error::Domain("Bessel argument must be positive".into()));
    }
    Ok(ur.recip())
}

/// I_nu(u) for half-odd nu, log-scaled.
pub fn bessel_i_halfint(nu: HalfInt, u: f64) -> Result<LogReal> {
    if !nu.is_half_odd() {
        return Err(Error::Domain(format!(
            "bessel_i_halfint needs a half-odd order, got {nu}"
        )));
    }
    if !(u > 0.0) {
        return Err(Error::Domain(format!("bessel_i_halfint needs u > 0, got {u}")));
    }
    let polys = closed_form_polys(nu.twice())?;
    let t = rational_recip_of(u)?;
    let a = rat_to_f64(&eval_poly_rat(&polys.0, &t));
    let b = rat_to_f64(&eval_poly_rat(&polys.1, &t));
    let s = a + b * (-2.0 * u).exp();
    if s == 0.0 {
        return Ok(LogReal::zero());
    }
    let ln = u - 0.5 * (2.0 * PI * u).ln() + s.abs().ln();
    Ok(LogReal::from_parts(if s > 0.0 { 1 } else { -1 }, ln))
}

/// Result of comparing exact Hhat against its truncated 1/u expansion.
#[derive(Debug, Clone, Copy)]
pub struct HHatCompare {
    pub exact: f64,
    pub series: f64,
    /// exact - series, computed without cancellation loss
    pub diff: f64,
    /// |gamma_{L+1}|/u^{L+1}; coefficient falls back to 1 when the next
    /// gamma vanishes identically (the expansion can terminate early at
    /// half-integer orders)
    pub first_omitted: f64,
}

/// Exact Hhat_{mu,nu}(u) versus the expansion truncated at l <= l_trunc.
pub fn h_hat(mu: HalfInt, nu: u32, u: f64, l_trunc: u32) -> Result<HHatCompare> {
    if !mu.is_half_odd() {
        return Err(Error::Domain(format!("h_hat needs half-odd mu, got {mu}")));
    }
    if !(u >= 10.0) {
        return Err(Error::Domain(format!(
            "h_hat is an asymptotic comparison, needs u >= 10, got {u}"
        )));
    }
    if nu > 8 {
        return Err(Error::Domain(format!("h_hat supports nu <= 8, got {nu}")));
    }
    let t = rational_recip_of(u)?;

    // exact side: sum of closed forms, assembled as rationals
    let mut sum_a = BigRational::zero();
    let mut sum_b = BigRational::zero();
    for h in 0..=nu {
        let polys = closed_form_polys(mu.add_int((nu - h) as i64).twice())?;
        let c = BigRational::from(binomial_big(nu, h));
        let a = eval_poly_rat(&polys.0, &t) * &c;
        let b = eval_poly_rat(&polys.1, &t) * &c;
        if h % 2 == 0 {
            sum_a += a;
            sum_b += b;
        } else {
            sum_a -= a;
            sum_b -= b;
        }
    }

    // series side: sum_{l=ceil(nu/2)..l_trunc} (-1)^l gamma_l(mu,nu) t^l
    let mut series = BigRational::zero();
    let mut tl = BigRational::one();
    let start = nu.div_ceil(2);
    for _ in 0..start {
        tl *= &t;
    }
    for l in start..=l_trunc {
        let term = gamma_coeff(l, mu, nu) * &tl;
        if l % 2 == 0 {
            series += term;
        } else {
            series -= term;
        }
        tl *= &t;
    }

    let next = gamma_coeff(l_trunc + 1, mu, nu);
    let next_abs = if next.is_zero() {
        BigRational::one()
    } else {
        next.abs()
    };
    let first_omitted = rat_to_f64(&(next_abs * &tl));

    let reflection = rat_to_f64(&sum_b) * (-2.0 * u).exp();
    Ok(HHatCompare {
        exact: rat_to_f64(&sum_a) + reflection,
        series: rat_to_f64(&series),
        diff: rat_to_f64(&(&sum_a - &series)) + reflection,
        first_omitted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Ascending power series I_nu(u) = sum_j (u/2)^{2j+nu} / (j! Gamma(j+nu+1)),
    /// an oracle independent of the closed forms.
    fn bessel_series_oracle(twice_nu: i64, u: f64) -> f64 {
        fn gamma_half(twice_x: i64) -> f64 {
            // Gamma at half-integers or integers, via recursion from
            // Gamma(1/2) = sqrt(pi) and Gamma(1) = 1
            if twice_x % 2 == 0 {
                let mut acc = 1.0;
                let mut k = twice_x / 2;
                assert!(k >= 1);
                while k > 1 {
                    acc *= (k - 1) as f64;
                    k -= 1;
                }
                acc
            } else {
                let mut acc = PI.sqrt();
                let mut t = 1i64; // Gamma(1/2)
                while t < twice_x {
                    acc *= t as f64 / 2.0;
                    t += 2;
                }
                while t > twice_x {
                    t -= 2;
                    acc /= t as f64 / 2.0;
                }
                acc
            }
        }
        let nu = twice_nu as f64 / 2.0;
        let mut total = 0.0;
        for j in 0..200i64 {
            let tg = twice_nu + 2 * (j + 1); // twice (j + nu + 1)
            let term = (u / 2.0).powf(2.0 * j as f64 + nu)
                / ((1..=j).map(|x| x as f64).product::<f64>() * gamma_half(tg));
            total += term;
            if term.abs() < 1e-18 * total.abs() && j > 3 {
                break;
            }
        }
        total
    }

    #[test]
    fn classical_closed_forms() {
        for &u in &[10.0f64, 25.0, 50.0] {
            let expect = (2.0 / (PI * u)).sqrt() * u.sinh();
            assert_relative_eq!(
                bessel_i_halfint(HalfInt::from_twice(1), u).unwrap().to_f64(),
                expect,
                max_relative = 1e-13
            );
            let expect = (2.0 / (PI * u)).sqrt() * u.cosh();
            assert_relative_eq!(
                bessel_i_halfint(HalfInt::from_twice(-1), u).unwrap().to_f64(),
                expect,
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn matches_power_series_oracle() {
        for twice in [-9i64, -5, -3, 3, 5, 9, 11] {
            let v = bessel_i_halfint(HalfInt::from_twice(twice), 10.0)
                .unwrap()
                .to_f64();
            assert_relative_eq!(
                v,
                bessel_series_oracle(twice, 10.0),
                max_relative = 1e-10
            );
        }
    }

    #[test]
    fn recurrence_invariant() {
        // I_{nu-1}(u) - I_{nu+1}(u) = (2 nu / u) I_nu(u)
        for &u in &[10.0f64, 50.0] {
            for twice in (-9..=9i64).step_by(2) {
                let nu = HalfInt::from_twice(twice);
                let lo = bessel_i_halfint(nu.add_int(-1), u).unwrap().to_f64();
                let hi = bessel_i_halfint(nu.add_int(1), u).unwrap().to_f64();
                let mid = bessel_i_halfint(nu, u).unwrap().to_f64();
                assert_relative_eq!(
                    lo - hi,
                    twice as f64 / u * mid,
                    max_relative = 1e-10
                );
            }
        }
    }

    #[test]
    fn order_domain_is_enforced() {
        assert!(bessel_i_halfint(HalfInt::from_int(2), 10.0).is_err());
        assert!(bessel_i_halfint(HalfInt::from_twice(43), 10.0).is_err());
        assert!(bessel_i_halfint(HalfInt::from_twice(1), 0.0).is_err());
    }

    #[test]
    fn h_hat_leading_term_is_one() {
        // nu = 0: series leading term gamma_0 = 1
        let r = h_hat(HalfInt::from_twice(-5), 0, 1000.0, 0).unwrap();
        assert_relative_eq!(r.series, 1.0, max_relative = 1e-15);
        assert_relative_eq!(r.exact, 1.0, max_relative = 1e-2);
    }

    #[test]
    fn h_hat_nu2_series_starts_at_l1() {
        // gamma_1(mu, 2) = 1, so the first series term is -1/u
        let u = 100.0;
        let r = h_hat(HalfInt::from_twice(-7), 2, u, 1).unwrap();
        assert_relative_eq!(r.series, -1.0 / u, max_relative = 1e-14);
    }

    #[test]
    fn h_hat_truncation_bound_spot_checks() {
        let r = h_hat(HalfInt::from_twice(-5), 1, 50.0, 3).unwrap();
        assert!(
            r.diff.abs() <= 2.0 * r.first_omitted,
            "diff {} vs bound {}",
            r.diff,
            r.first_omitted
        );
        // degenerate next coefficient: gamma_4(-5/2, 0) = 0, fallback keeps
        // the bound meaningful
        let r = h_hat(HalfInt::from_twice(-5), 0, 30.0, 3).unwrap();
        assert!(r.first_omitted > 0.0);
        assert!(r.diff.abs() <= 2.0 * r.first_omitted);
    }

    #[test]
    fn h_hat_domain_checks() {
        assert!(h_hat(HalfInt::from_twice(-5), 1, 5.0, 3).is_err());
        assert!(h_hat(HalfInt::from_twice(-5), 9, 50.0, 3).is_err());
        assert!(h_hat(HalfInt::from_int(1), 1, 50.0, 3).is_err());
    }
}
