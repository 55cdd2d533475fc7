//! Asymptotic evaluation of N_k(m,n) and the closed-form right-hand
//! sides used by the inequality comparisons.
//!
//! The truncated expansion is
//!
//!   N_k(m+j,n) ~ (sqrt(3) beta^2 e^{pi^2/(3 beta)} / (2 pi^2))
//!                  * sum_{h=1..h_max} (c_h(j)/h!) J_{k,h}(m,n) (-beta)^h,
//!   J_{k,h}(m,n) ~ sum_{r<p} ((-beta)^r / r!)
//!                  * Upsilon_{h,r}(k; w, d_w)|_{w = m beta} {1/(1+e^w)},
//!
//! with beta = beta_n = pi/sqrt(6(n - 1/24)). The e^{2 Lambda_n} scale is
//! handled in log space throughout.

use crate::coeffs::c_coeff;
use crate::error::{Error, Result};
use crate::logreal::LogReal;
use crate::numeric::{rat_to_f64, sech};
use crate::upsilon::build_upsilon;
use std::f64::consts::PI;

/// beta_l = pi / sqrt(6(l - 1/24)), defined for l >= 1.
pub fn beta_of(l: u64) -> f64 {
    debug_assert!(l >= 1);
    PI / (6.0 * (l as f64 - 1.0 / 24.0)).sqrt()
}

/// The scale parameters of one weight n.
#[derive(Debug, Clone, Copy)]
pub struct AsymContext {
    pub n: u64,
    pub beta: f64,
    pub lambda: f64,
}

/// beta_n and Lambda_n; their product is pi^2/6 by construction.
pub fn asym_context(n: u64) -> Result<AsymContext> {
    if n < 1 {
        return Err(Error::Domain("asym_context requires n >= 1".into()));
    }
    Ok(AsymContext {
        n,
        beta: beta_of(n),
        lambda: PI * ((n as f64 - 1.0 / 24.0) / 6.0).sqrt(),
    })
}

/// Truncation depths and working precision of the expansion machinery.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationOrder {
    /// depth in r (the J-series index)
    pub p: u32,
    /// depth in h (the outer sum index)
    pub h_max: u32,
    /// mantissa bits for cancellation-prone high-precision paths
    pub mantissa_bits: u32,
}

impl Default for TruncationOrder {
    fn default() -> Self {
        Self {
            p: 3,
            h_max: 5,
            mantissa_bits: 128,
        }
    }
}

impl TruncationOrder {
    pub fn validate(&self) -> Result<()> {
        if self.p < 1 || self.h_max < 1 {
            return Err(Error::Config(
                "truncation orders p and h_max must be >= 1".into(),
            ));
        }
        if self.mantissa_bits < 53 {
            return Err(Error::Config("mantissa_bits must be >= 53".into()));
        }
        Ok(())
    }
}

/// J_{k,h}(m,n) truncated at r < ord.p.
pub fn j_series(k: u32, h: u32, m: i64, n: u64, ord: &TruncationOrder) -> Result<f64> {
    ord.validate()?;
    let ctx = asym_context(n)?;
    let w = m as f64 * ctx.beta;
    let mut acc = 0.0;
    let mut pow = 1.0; // (-beta)^r / r!
    for r in 0..ord.p {
        if r > 0 {
            pow *= -ctx.beta / r as f64;
        }
        acc += pow * build_upsilon(k, h, r)?.apply(w)?;
    }
    Ok(acc)
}

/// Truncated expansion of N_k(m+j,n), log-scaled.
///
/// Requires m >= 0 and m+j >= 0 (negative m is handled upstream through
/// N_k(-m,n) = N_k(m,n)). Outside the regime m^2 beta^3 <= 1/2 the value
/// is still produced but a warning is logged.
pub fn krank_asym(k: u32, m: i64, n: u64, j: i64, ord: &TruncationOrder) -> Result<LogReal> {
    ord.validate()?;
    if m < 0 || m + j < 0 {
        return Err(Error::Domain(format!(
            "krank_asym requires m >= 0 and m+j >= 0, got m={m}, j={j}"
        )));
    }
    let ctx = asym_context(n)?;
    if (m as f64) * (m as f64) * ctx.beta.powi(3) > 0.5 {
        log::warn!(
            "krank_asym: m^2 beta^3 = {:.3} > 0.5 at (k={k}, m={m}, n={n}); \
             the expansion is outside its accuracy regime",
            (m as f64) * (m as f64) * ctx.beta.powi(3)
        );
    }
    let mut sum = 0.0;
    let mut beta_h = 1.0; // (-beta)^h
    for h in 1..=ord.h_max {
        beta_h *= -ctx.beta;
        let ch = rat_to_f64(&c_coeff(h, j));
        if ch == 0.0 {
            continue;
        }
        let mut h_fact = 1.0;
        for i in 2..=h {
            h_fact *= i as f64;
        }
        sum += ch / h_fact * j_series(k, h, m, n, ord)? * beta_h;
    }
    if sum == 0.0 {
        log::warn!("krank_asym: all expansion terms cancelled at (k={k}, m={m}, n={n}, j={j})");
        return Ok(LogReal::zero());
    }
    let ln_pref = (3f64.sqrt() * ctx.beta * ctx.beta / (2.0 * PI * PI)).ln() + 2.0 * ctx.lambda;
    Ok(LogReal::from_parts(
        if sum > 0.0 { 1 } else { -1 },
        ln_pref + sum.abs().ln(),
    ))
}

/// Right side of the sech^2 law: N_k(m,n)/p(n) ~ (pi/(4 sqrt(6n))) sech^2(pi m/(2 sqrt(6n))).
pub fn sech_ratio(m: i64, n: u64) -> f64 {
    let root = (6.0 * n as f64).sqrt();
    let s = sech(PI * m.unsigned_abs() as f64 / (2.0 * root));
    PI / (4.0 * root) * s * s
}

/// Which closed form of the log-concavity right side to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcVariant {
    /// (beta_n^2/2) sech^2(m beta_n / 2) + (3/pi^2) beta_{n-|m|}^3
    Combined,
    /// same with beta_n^3 in the second term (valid for small |m|)
    SmallM,
    /// (3/pi^2) beta_{n-|m|}^3 alone (valid once |m| beta_n is large)
    LargeM,
}

/// Closed-form right side for -Delta_m^2 log N_k(m,n).
pub fn lc_rhs(m: i64, n: u64, variant: LcVariant) -> Result<f64> {
    let am = m.unsigned_abs();
    if (n as i64) - (am as i64) < 1 {
        return Err(Error::Domain(format!(
            "lc_rhs needs n - |m| >= 1, got n={n}, m={m}"
        )));
    }
    let beta = beta_of(n);
    let shifted = beta_of(n - am);
    let s = sech(am as f64 * beta / 2.0);
    let first = beta * beta / 2.0 * s * s;
    Ok(match variant {
        LcVariant::Combined => first + 3.0 / (PI * PI) * shifted.powi(3),
        LcVariant::SmallM => first + 3.0 / (PI * PI) * beta.powi(3),
        LcVariant::LargeM => 3.0 / (PI * PI) * shifted.powi(3),
    })
}

/// Leading closed form of the normalized discriminant L_k(m,n):
/// [(1/32) sech^6(m beta/2) + (3 beta/(16 pi^2)) sech^4(m beta/2)] beta^2.
/// k enters only through lower-order corrections this form omits.
pub fn disc_rhs(k: u32, m: i64, n: u64) -> f64 {
    debug_assert!(k >= 1);
    let beta = beta_of(n);
    let s = sech(m.unsigned_abs() as f64 * beta / 2.0);
    (s.powi(6) / 32.0 + 3.0 * beta / (16.0 * PI * PI) * s.powi(4)) * beta * beta
}

/// Closed form of the monotonicity ratio:
/// (1 + e^{-pi|m|/sqrt(6n)})^{-2} tanh(pi(2m+1)/(4 sqrt(6n))).
pub fn mono_rhs(m: i64, n: u64) -> f64 {
    let root = (6.0 * n as f64).sqrt();
    let damp = 1.0 + (-PI * m.unsigned_abs() as f64 / root).exp();
    (PI * (2 * m + 1) as f64 / (4.0 * root)).tanh() / (damp * damp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn context_identity() {
        for n in [1u64, 2, 100, 2500, 10_000] {
            let c = asym_context(n).unwrap();
            assert_relative_eq!(c.beta * c.lambda, PI * PI / 6.0, max_relative = 1e-14);
        }
        assert!(asym_context(0).is_err());
        // closed form re-evaluated independently at n = 2500
        let c = asym_context(2500).unwrap();
        assert_relative_eq!(
            c.beta,
            PI / (6.0f64 * 2499.958333333333).sqrt(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn j_series_leading_term() {
        // p = 1 keeps only Upsilon_{h,0} = d_w^h
        let ord = TruncationOrder {
            p: 1,
            ..Default::default()
        };
        let v = j_series(2, 1, 0, 2500, &ord).unwrap();
        assert_relative_eq!(v, -0.25, max_relative = 1e-14);
        // pinned at defaults: independent exact-rational evaluation
        let ord = TruncationOrder::default();
        let v = j_series(2, 1, 0, 2500, &ord).unwrap();
        assert_relative_eq!(v, -0.24896747691169968, max_relative = 1e-12);
    }

    #[test]
    fn sech_ratio_properties() {
        assert_relative_eq!(
            sech_ratio(0, 10_000),
            PI / (4.0 * 60000f64.sqrt()),
            max_relative = 1e-15
        );
        assert_eq!(sech_ratio(50, 10_000), sech_ratio(-50, 10_000));
        // independent evaluation at (m, n) = (50, 10^4)
        let root = 60000f64.sqrt();
        let expect = PI / (4.0 * root) / (PI * 50.0 / (2.0 * root)).cosh().powi(2);
        assert_relative_eq!(sech_ratio(50, 10_000), expect, max_relative = 1e-13);
    }

    #[test]
    fn lc_rhs_variants() {
        let n = 2500u64;
        let beta = beta_of(n);
        assert_relative_eq!(
            lc_rhs(0, n, LcVariant::Combined).unwrap(),
            beta * beta / 2.0 + 3.0 * beta.powi(3) / (PI * PI),
            max_relative = 1e-14
        );
        assert_relative_eq!(
            lc_rhs(500, n, LcVariant::LargeM).unwrap(),
            3.0 * beta_of(2000).powi(3) / (PI * PI),
            max_relative = 1e-14
        );
        assert_eq!(
            lc_rhs(100, n, LcVariant::Combined).unwrap(),
            lc_rhs(-100, n, LcVariant::Combined).unwrap()
        );
        assert!(lc_rhs(2500, n, LcVariant::Combined).is_err());
    }

    #[test]
    fn disc_rhs_properties() {
        let n = 2500u64;
        let beta = beta_of(n);
        assert_relative_eq!(
            disc_rhs(2, 0, n),
            (1.0 / 32.0 + 3.0 * beta / (16.0 * PI * PI)) * beta * beta,
            max_relative = 1e-14
        );
        assert_eq!(disc_rhs(2, 77, n), disc_rhs(2, -77, n));
    }

    #[test]
    fn mono_rhs_properties() {
        let n = 2500u64;
        assert_relative_eq!(
            mono_rhs(0, n),
            0.25 * (PI / (4.0 * (6.0 * n as f64).sqrt())).tanh(),
            max_relative = 1e-14
        );
        // large m approaches tanh(...) -> 1
        assert!((mono_rhs(100_000, n) - 1.0).abs() < 1e-6);
        // reflected sign
        assert!(mono_rhs(5, n) > 0.0);
        assert!(mono_rhs(-6, n) < 0.0);
    }

    #[test]
    fn krank_asym_domain() {
        let ord = TruncationOrder::default();
        assert!(krank_asym(2, -1, 2500, 0, &ord).is_err());
        assert!(krank_asym(2, 0, 2500, -1, &ord).is_err());
        let v = krank_asym(2, 0, 2500, 0, &ord).unwrap();
        assert_eq!(v.sign(), 1);
    }
}
