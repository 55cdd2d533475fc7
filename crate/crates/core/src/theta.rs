//! False/partial theta sums against their logistic-kernel expansions.
//!
//! [`false_theta_compare`]:
//!   lhs = sum_{n>=1} (-1)^{n-1} n^l e^{-n^2 z - b n z}   (summed to convergence)
//!   rhs = (-1)^l sum_{h<p} ((-z)^h / h!) d_w^{2h+l}|_{w=bz} {1/(1+e^w)}
//!   scale = |z^p e^{-bz}|
//!
//! The general partial theta T_{a,b}(e^{-z}) = sum (-1)^{n-1} e^{-an^2 z - bnz}
//! reduces to this through z' = a z, b' = b/a.
//!
//! [`h_kmj_compare`]: the generating-series numerator
//!   H = sum_{n>=1} (-1)^{n-1} e^{-(k-1/2)n^2 z - (m+j) n z} (e^{nz/2} - e^{-nz/2})
//! against sum_{l<=L} P^{(j)}_{k;l}(z) d_w^l|_{w=mz} {1/(1+e^w)} with
//!   P^{(j)}_{k;l}(z) = sum_{h+2s=l, h>=1} (c_h(j)/h!) ((k-1/2)^s/s!) (-z)^{s+h},
//! scale = |z^{ceil((L+2)/2)} e^{-mz}|.

use crate::coeffs::c_coeff;
use crate::error::{Error, Result};
use crate::logistic::logistic_deriv_complex;
use crate::numeric::rat_to_f64;
use num_complex::Complex64;

const CONVERGENCE_EPS: f64 = 1e-30;
const MAX_TERMS: u64 = 2_000_000;

fn check_z(z: Complex64, op: &str) -> Result<()> {
    if !(z.re > 0.0 && z.re <= 0.1) {
        return Err(Error::Domain(format!(
            "{op} needs Re z in (0, 0.1], got {}",
            z.re
        )));
    }
    if z.im.abs() > z.re {
        return Err(Error::Domain(format!("{op} needs |Im z| <= Re z, got {z}")));
    }
    Ok(())
}

/// Two sides of the false theta expansion plus the tolerance scale.
#[derive(Debug, Clone, Copy)]
pub struct ThetaCompare {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub scale: f64,
}

pub fn false_theta_compare(l: u32, b: f64, z: Complex64, p: u32) -> Result<ThetaCompare> {
    check_z(z, "false_theta_compare")?;
    if !(b >= 0.0) {
        return Err(Error::Domain(format!("parameter b must be >= 0, got {b}")));
    }
    if p < 1 {
        return Err(Error::Domain("expansion depth p must be >= 1".into()));
    }

    let mut lhs = Complex64::new(0.0, 0.0);
    let mut peak = 0.0f64;
    let mut n = 1u64;
    loop {
        let nf = n as f64;
        let term = (nf.powi(l as i32))
            * (-z * (nf * nf + b * nf)).exp()
            * if n % 2 == 1 { 1.0 } else { -1.0 };
        lhs += term;
        peak = peak.max(term.norm());
        if (term.norm() < CONVERGENCE_EPS * peak.max(1e-300) && n > 4) || n > MAX_TERMS {
            break;
        }
        n += 1;
    }

    let w = b * z;
    let mut rhs = Complex64::new(0.0, 0.0);
    let mut zh = Complex64::new(1.0, 0.0); // (-z)^h / h!
    for h in 0..p {
        if h > 0 {
            zh *= -z / h as f64;
        }
        rhs += zh * logistic_deriv_complex(2 * h + l, w)?;
    }
    if l % 2 == 1 {
        rhs = -rhs;
    }

    let scale = z.norm().powi(p as i32) * (-b * z.re).exp();
    Ok(ThetaCompare { lhs, rhs, scale })
}

/// Exact series and truncated expansion of the generating-series numerator.
#[derive(Debug, Clone, Copy)]
pub struct HkmjCompare {
    pub exact: Complex64,
    pub expansion: Complex64,
    pub scale: f64,
}

pub fn h_kmj_compare(k: u32, m: i64, j: i64, z: Complex64, l_max: u32) -> Result<HkmjCompare> {
    check_z(z, "h_kmj_compare")?;
    if k < 1 {
        return Err(Error::Domain("k must be >= 1".into()));
    }
    if m < 0 || m + j < 0 {
        return Err(Error::Domain(format!(
            "h_kmj_compare needs m >= 0 and m+j >= 0, got m={m}, j={j}"
        )));
    }
    if l_max < 1 {
        return Err(Error::Domain("expansion depth L must be >= 1".into()));
    }

    let kk = k as f64 - 0.5;
    let mut exact = Complex64::new(0.0, 0.0);
    let mut peak = 0.0f64;
    let mut n = 1u64;
    loop {
        let nf = n as f64;
        let base = (-z * (kk * nf * nf + (m + j) as f64 * nf)).exp();
        let osc = (z * (nf / 2.0)).exp() - (-z * (nf / 2.0)).exp();
        let term = base * osc * if n % 2 == 1 { 1.0 } else { -1.0 };
        exact += term;
        peak = peak.max(term.norm());
        if (term.norm() < CONVERGENCE_EPS * peak.max(1e-300) && n > 4) || n > MAX_TERMS {
            break;
        }
        n += 1;
    }

    let w = m as f64 * z;
    let mut expansion = Complex64::new(0.0, 0.0);
    for l in 1..=l_max {
        let mut poly = Complex64::new(0.0, 0.0);
        let mut h = if l % 2 == 1 { 1 } else { 2 };
        while h <= l {
            let s = (l - h) / 2;
            let mut c = rat_to_f64(&c_coeff(h, j));
            for i in 2..=h {
                c /= i as f64;
            }
            let mut kf = kk.powi(s as i32);
            for i in 2..=s {
                kf /= i as f64;
            }
            poly += c * kf * (-z).powi((s + h) as i32);
            h += 2;
        }
        expansion += poly * logistic_deriv_complex(l, w)?;
    }

    let scale = z.norm().powi(((l_max + 2).div_ceil(2)) as i32) * (-(m as f64) * z.re).exp();
    Ok(HkmjCompare {
        exact,
        expansion,
        scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn false_theta_examples() {
        // (l=0, b=0, z=0.01): theta-like cancellation leaves ~1/2
        let r = false_theta_compare(0, 0.0, Complex64::new(0.01, 0.0), 4).unwrap();
        assert!((r.lhs - r.rhs).norm() <= 10.0 * r.scale);
        assert!((r.rhs.re - 0.5).abs() < 1e-6);

        let r = false_theta_compare(1, 100.0, Complex64::new(0.01, 0.005), 4).unwrap();
        assert!(
            (r.lhs - r.rhs).norm() <= 10.0 * r.scale,
            "gap {} scale {}",
            (r.lhs - r.rhs).norm(),
            r.scale
        );
    }

    #[test]
    fn false_theta_decay_in_b() {
        // every term carries e^{-bnz}; doubling b multiplies both sides by
        // roughly e^{-bz}, and the two sides track each other closely
        let z = Complex64::new(0.01, 0.0);
        for &b in &[50.0f64, 100.0, 200.0, 400.0] {
            let r1 = false_theta_compare(0, b, z, 4).unwrap();
            let r2 = false_theta_compare(0, 2.0 * b, z, 4).unwrap();
            let lhs_ratio = r2.lhs.norm() / r1.lhs.norm();
            let rhs_ratio = r2.rhs.norm() / r1.rhs.norm();
            assert!(
                (lhs_ratio / rhs_ratio - 1.0).abs() < 5e-4,
                "sides diverge at b={b}"
            );
        }
        // deep in the regime the pure e^{-bz} law holds to 5%
        let r1 = false_theta_compare(0, 800.0, z, 4).unwrap();
        let r2 = false_theta_compare(0, 1600.0, z, 4).unwrap();
        let law = (-800.0 * z.re).exp();
        assert!((r2.lhs.norm() / r1.lhs.norm() / law - 1.0).abs() < 0.05);
    }

    #[test]
    fn h_kmj_examples() {
        let r = h_kmj_compare(1, 0, 0, Complex64::new(0.01, 0.0), 4).unwrap();
        assert!(
            (r.exact - r.expansion).norm() <= 10.0 * r.scale,
            "gap {} scale {}",
            (r.exact - r.expansion).norm(),
            r.scale
        );
        let r = h_kmj_compare(3, 200, 1, Complex64::new(0.02, 0.0), 4).unwrap();
        assert!(
            (r.exact - r.expansion).norm() <= 10.0 * r.scale,
            "gap {} scale {}",
            (r.exact - r.expansion).norm(),
            r.scale
        );
    }

    #[test]
    fn domain_checks() {
        let z = Complex64::new(0.01, 0.0);
        assert!(false_theta_compare(0, -1.0, z, 4).is_err());
        assert!(false_theta_compare(0, 1.0, Complex64::new(0.2, 0.0), 4).is_err());
        assert!(false_theta_compare(0, 1.0, Complex64::new(0.01, 0.02), 4).is_err());
        assert!(h_kmj_compare(1, -1, 0, z, 4).is_err());
        assert!(h_kmj_compare(1, 1, -2, z, 4).is_err());
    }
}
