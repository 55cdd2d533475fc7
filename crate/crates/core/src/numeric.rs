//! Small numeric helpers shared across modules: natural logs of big
//! integers, rational-to-float conversion, factorials and binomials.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Natural log of a positive big integer.
///
/// Extracts the top 63 bits as an exact mantissa, so the result carries
/// the full f64 accuracy regardless of the integer's size.
pub fn ln_bigint(x: &BigInt) -> f64 {
    debug_assert!(x.is_positive(), "ln_bigint requires a positive argument");
    let bits = x.bits();
    if bits <= 63 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 63;
    let top: BigInt = x >> shift;
    top.to_f64().expect("63-bit value").ln() + shift as f64 * std::f64::consts::LN_2
}

/// Convert a big rational to f64 without overflowing on huge numerators
/// or denominators. The quotient is computed to ~96 bits before rounding.
pub fn rat_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let negative = r.is_negative();
    let num = r.numer().abs();
    let den = r.denom().abs();
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    // scale so the integer quotient keeps ~96 significant bits
    let extra = 96 - (nb - db);
    let (q, e) = if extra >= 0 {
        ((num << extra as u64) / den, -extra)
    } else {
        (num / (den << (-extra) as u64), -extra)
    };
    let qf = q.to_f64().unwrap_or(f64::INFINITY);
    let v = qf * pow2(e);
    if negative {
        -v
    } else {
        v
    }
}

/// 2^e as f64 (exact in range), saturating to 0 or +inf outside it.
fn pow2(e: i64) -> f64 {
    if e > 1023 {
        f64::INFINITY
    } else if e < -1070 {
        0.0
    } else {
        2.0f64.powi(e as i32)
    }
}

pub fn factorial_big(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

pub fn binomial_big(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// sech(x), overflow-safe for large |x|.
pub fn sech(x: f64) -> f64 {
    let ax = x.abs();
    2.0 / (ax.exp() + (-ax).exp())
}

/// Sign of a big integer as -1, 0, +1.
pub fn sign_of(x: &BigInt) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use num_bigint::BigInt;

    #[test]
    fn ln_bigint_matches_f64_for_small_values() {
        for v in [1u64, 2, 10, 12345, 1 << 40] {
            assert_relative_eq!(
                ln_bigint(&BigInt::from(v)),
                (v as f64).ln(),
                max_relative = 1e-15
            );
        }
    }

    #[test]
    fn ln_bigint_handles_huge_values() {
        // 10^100: ln = 100 ln 10
        let x = BigInt::from(10u32).pow(100);
        assert_relative_eq!(
            ln_bigint(&x),
            100.0 * std::f64::consts::LN_10,
            max_relative = 1e-14
        );
    }

    #[test]
    fn rat_to_f64_basic_and_huge() {
        let r = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_relative_eq!(rat_to_f64(&r), 1.0 / 3.0, max_relative = 1e-15);
        // huge numerator and denominator with a modest quotient
        let a = BigInt::from(7u32).pow(200);
        let b = BigInt::from(7u32).pow(199) * 2;
        let r = BigRational::new(a, b);
        assert_relative_eq!(rat_to_f64(&r), 3.5, max_relative = 1e-14);
        let neg = BigRational::new(BigInt::from(-5), BigInt::from(4));
        assert_relative_eq!(rat_to_f64(&neg), -1.25, max_relative = 1e-15);
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial_big(4, 2), BigInt::from(6));
        assert_eq!(binomial_big(4, 5), BigInt::from(0));
        assert_eq!(factorial_big(5), BigInt::from(120));
    }
}
