//! Exact-versus-asymptotic comparison tables.
//!
//! - [`delta2_log_exact`]: -Delta_m^2 log N_k(m,n) from exact counts,
//!   logs taken through the top bits of the integers.
//! - [`monotonicity_table`]: [N_k(m, n+|m|) - N_k(m+1, n+|m|)] normalized
//!   by pi^2 p(n)/(6n), against the tanh closed form.
//! - [`compare_lc_table`]: the data behind the log-concavity figure.

use crate::asym::{lc_rhs, mono_rhs, LcVariant};
use crate::error::{Error, Result};
use crate::krank::{krank_count, krank_row};
use crate::logreal::LogReal;
use crate::numeric::ln_bigint;
use crate::partition::PartitionTable;
use num_traits::{Signed, Zero};
use std::f64::consts::PI;

/// -[log N(m+1) - 2 log N(m) + log N(m-1)] on exact counts.
///
/// All three counts must be strictly positive.
pub fn delta2_log_exact(k: u32, m: i64, n: u64, table: &PartitionTable) -> Result<f64> {
    let a = krank_count(k, m - 1, n, table)?;
    let b = krank_count(k, m, n, table)?;
    let c = krank_count(k, m + 1, n, table)?;
    if !a.is_positive() || !b.is_positive() || !c.is_positive() {
        return Err(Error::Domain(format!(
            "delta2_log_exact needs positive counts at (k={k}, m={m}-1..+1, n={n})"
        )));
    }
    Ok(-(ln_bigint(&a) + ln_bigint(&c) - 2.0 * ln_bigint(&b)))
}

/// One row of the monotonicity comparison.
#[derive(Debug, Clone, Copy)]
pub struct MonoRow {
    pub m: i64,
    pub exact_ratio: f64,
    pub rhs: f64,
    pub relative_gap: f64,
}

/// Rows (m, exact, tanh form, gap) for m in [m_lo, m_hi]; the exact side
/// is [N_k(m, n+|m|) - N_k(m+1, n+|m|)] / (pi^2 p(n)/(6n)).
pub fn monotonicity_table(
    k: u32,
    n: u64,
    m_lo: i64,
    m_hi: i64,
    table: &PartitionTable,
) -> Result<Vec<MonoRow>> {
    let needed = n + m_lo.unsigned_abs().max(m_hi.unsigned_abs()) + 1;
    if needed > table.max_n() as u64 {
        return Err(Error::TableTooSmall {
            needed: needed as i64,
            max_n: table.max_n(),
        });
    }
    let ln_pn = ln_bigint(table.p(n as i64));
    let mut rows = Vec::with_capacity((m_hi - m_lo + 1) as usize);
    for m in m_lo..=m_hi {
        let shifted_n = n + m.unsigned_abs();
        let diff = krank_count(k, m, shifted_n, table)? - krank_count(k, m + 1, shifted_n, table)?;
        let exact_ratio = if diff.is_zero() {
            0.0
        } else {
            let lr = LogReal::from_bigint(&diff);
            lr.sign() as f64 * (lr.ln_abs() - ln_pn).exp() * 6.0 * n as f64 / (PI * PI)
        };
        let rhs = mono_rhs(m, n);
        let relative_gap = if rhs != 0.0 {
            (exact_ratio / rhs - 1.0).abs()
        } else {
            f64::INFINITY
        };
        rows.push(MonoRow {
            m,
            exact_ratio,
            rhs,
            relative_gap,
        });
    }
    Ok(rows)
}

/// One row of the log-concavity comparison; `ln_exact` is None where a
/// count in the triple is nonpositive (flagged, not fatal).
#[derive(Debug, Clone, Copy)]
pub struct LcRow {
    pub m: i64,
    pub ln_exact: Option<f64>,
    pub a_ln: f64,
    pub relative_gap: Option<f64>,
}

/// Rows (m, -Delta^2 log N, closed form, gap) for m in [m_lo, m_hi].
pub fn compare_lc_table(
    k: u32,
    n: u64,
    m_lo: i64,
    m_hi: i64,
    table: &PartitionTable,
) -> Result<Vec<LcRow>> {
    if n > table.max_n() as u64 {
        return Err(Error::TableTooSmall {
            needed: n as i64,
            max_n: table.max_n(),
        });
    }
    let row = krank_row(k, n, table)?;
    let mut rows = Vec::with_capacity((m_hi - m_lo + 1) as usize);
    for m in m_lo..=m_hi {
        let a = row.count(m - 1);
        let b = row.count(m);
        let c = row.count(m + 1);
        let ln_exact = if a.is_positive() && b.is_positive() && c.is_positive() {
            Some(-(ln_bigint(a) + ln_bigint(c) - 2.0 * ln_bigint(b)))
        } else {
            None
        };
        let a_ln = lc_rhs(m, n, LcVariant::Combined)?;
        let relative_gap = ln_exact.map(|v| (v / a_ln - 1.0).abs());
        rows.push(LcRow {
            m,
            ln_exact,
            a_ln,
            relative_gap,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use num_rational::BigRational;

    fn table(n: usize) -> PartitionTable {
        PartitionTable::new(n).unwrap()
    }

    #[test]
    fn delta2_matches_ratio_identity() {
        // equals -log(N(m+1) N(m-1) / N(m)^2)
        let t = table(400);
        for (k, m, n) in [(2u32, 0i64, 400u64), (1, 7, 300), (2, 25, 350)] {
            let direct = delta2_log_exact(k, m, n, &t).unwrap();
            let a = krank_count(k, m - 1, n, &t).unwrap();
            let b = krank_count(k, m, n, &t).unwrap();
            let c = krank_count(k, m + 1, n, &t).unwrap();
            let ratio = BigRational::new(a * c, &b * &b);
            let via_ratio = -crate::numeric::rat_to_f64(&ratio).ln();
            assert_relative_eq!(direct, via_ratio, epsilon = 1e-12, max_relative = 1e-9);
        }
    }

    #[test]
    fn delta2_domain_error_on_zero_count() {
        let t = table(4);
        // N_1(1, 4) = 0
        assert!(delta2_log_exact(1, 1, 4, &t).is_err());
    }

    #[test]
    fn monotonicity_reflection_flips_sign() {
        let t = table(460);
        let rows = monotonicity_table(2, 400, -7, 7, &t).unwrap();
        let at = |m: i64| rows.iter().find(|r| r.m == m).unwrap();
        for m in 0..=6i64 {
            assert!(at(m).exact_ratio > 0.0);
            assert!(at(-m - 1).exact_ratio < 0.0, "m={}", -m - 1);
        }
    }

    #[test]
    fn lc_table_flags_undefined_rows() {
        let t = table(100);
        // the k=1 row at n=4 vanishes at odd m
        let rows = compare_lc_table(1, 4, 0, 3, &t).unwrap();
        assert!(rows.iter().any(|r| r.ln_exact.is_none()));
    }
}
