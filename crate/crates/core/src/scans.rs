//! Exhaustive exact-integer scans over (k, m, n) windows, parallel over
//! n with deterministic merge.
//!
//! Windows:
//! - log-concavity: n >= k+71, |m| <= n-k-71, testing
//!     N_k(m,n)^2 >= N_k(m-1,n) N_k(m+1,n);
//! - unimodality: n >= n_u(k), checking the row weakly decreases over
//!     0 <= m <= n-k (equivalent to unimodality of the symmetric row);
//! - p-differences: a_l = p(l+1) - p(l), sign of a_l^2 - a_{l-1} a_{l+1};
//! - edge window: n/2 - 2k + 2 <= |m| <= n-k-71, where the row reduces
//!   exactly to p-differences and the discriminant is strictly positive.

use crate::discriminant::disc_from_row;
use crate::error::{Error, Result};
use crate::krank::{krank_count, krank_row};
use crate::partition::PartitionTable;
use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

/// One exact counterexample, with enough context to recheck by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub k: u32,
    pub m: i64,
    pub n: u64,
    pub witness: String,
}

/// Deterministic scan outcome. `elapsed` is informational and excluded
/// from [`ScanReport::summary`], which is byte-identical across runs and
/// worker counts for fixed inputs.
#[derive(Debug, Clone)]
pub struct ScanReport {
    pub statistic: String,
    pub k_range: (u32, u32),
    pub n_range: (u64, u64),
    pub m_rule: String,
    pub checked: u64,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl ScanReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Machine-readable content; deterministic for fixed inputs.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "statistic={} k={}..{} n={}..{} m_rule={} checked={} violations={}",
            self.statistic,
            self.k_range.0,
            self.k_range.1,
            self.n_range.0,
            self.n_range.1,
            self.m_rule,
            self.checked,
            self.violations.len()
        );
        for v in &self.violations {
            let _ = writeln!(s, "violation k={} m={} n={} {}", v.k, v.m, v.n, v.witness);
        }
        for note in &self.notes {
            let _ = writeln!(s, "note {note}");
        }
        s
    }
}

/// Unimodality threshold n_u(k) = (k+1) + 36*[k=2] + 6*[k=3]; the crank
/// family (k=1) is known unimodal from 44 on.
pub fn unimodality_threshold(k: u32) -> u64 {
    match k {
        1 => 44,
        2 => 39,
        3 => 10,
        _ => k as u64 + 1,
    }
}

fn check_bounds(n_hi: u64, table: &PartitionTable) -> Result<()> {
    if n_hi > table.max_n() as u64 {
        return Err(Error::TableTooSmall {
            needed: n_hi as i64,
            max_n: table.max_n(),
        });
    }
    Ok(())
}

/// Scan N_k(m,n)^2 - N_k(m-1,n) N_k(m+1,n) >= 0 over the stated window.
pub fn logconcavity_scan(
    k: u32,
    n_lo: u64,
    n_hi: u64,
    table: &PartitionTable,
) -> Result<ScanReport> {
    check_bounds(n_hi, table)?;
    let start = Instant::now();
    let n_lo = n_lo.max(k as u64 + 71);
    let per_n: Vec<(u64, Vec<Violation>)> = (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| {
            let row = krank_row(k, n, table).expect("bounds checked");
            let m_max = n as i64 - k as i64 - 71;
            let mut violations = Vec::new();
            let mut checked = 0u64;
            for m in 0..=m_max {
                checked += 1;
                let d = disc_from_row(&row, m);
                if d.is_negative() {
                    violations.push(Violation {
                        k,
                        m,
                        n,
                        witness: format!(
                            "N^2 - N(m-1)N(m+1) = {d} with N(m-1)={} N(m)={} N(m+1)={}",
                            row.count(m - 1),
                            row.count(m),
                            row.count(m + 1)
                        ),
                    });
                }
            }
            (checked, violations)
        })
        .collect();

    let mut report = ScanReport {
        statistic: "logconcave".into(),
        k_range: (k, k),
        n_range: (n_lo, n_hi),
        m_rule: "0 <= m <= n-k-71 (negative m by symmetry)".into(),
        checked: per_n.iter().map(|x| x.0).sum(),
        violations: per_n.into_iter().flat_map(|x| x.1).collect(),
        notes: Vec::new(),
        elapsed: Duration::ZERO,
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Verify the row is weakly decreasing over 0 <= m <= n-k for n >= n_u(k).
pub fn unimodality_scan(
    k: u32,
    n_lo: u64,
    n_hi: u64,
    table: &PartitionTable,
) -> Result<ScanReport> {
    check_bounds(n_hi, table)?;
    let start = Instant::now();
    let n_lo = n_lo.max(unimodality_threshold(k));
    let per_n: Vec<(u64, Vec<Violation>)> = (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| {
            let row = krank_row(k, n, table).expect("bounds checked");
            let m_max = n as i64 - k as i64;
            let mut violations = Vec::new();
            let mut checked = 0u64;
            for m in 0..m_max {
                checked += 1;
                if row.count(m) < row.count(m + 1) {
                    violations.push(Violation {
                        k,
                        m,
                        n,
                        witness: format!(
                            "row increases: N({m})={} < N({})={}",
                            row.count(m),
                            m + 1,
                            row.count(m + 1)
                        ),
                    });
                }
            }
            (checked, violations)
        })
        .collect();

    let mut report = ScanReport {
        statistic: "unimodal".into(),
        k_range: (k, k),
        n_range: (n_lo, n_hi),
        m_rule: "weakly decreasing over 0 <= m <= n-k".into(),
        checked: per_n.iter().map(|x| x.0).sum(),
        violations: per_n.into_iter().flat_map(|x| x.1).collect(),
        notes: Vec::new(),
        elapsed: Duration::ZERO,
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Sign scan of a_l^2 - a_{l-1} a_{l+1} for a_l = p(l+1) - p(l).
///
/// A violation entry records every l with a strictly negative value, the
/// orientation that exact computation certifies cannot happen for
/// l >= 71 (negative signs occur exactly at even l <= 70). The report
/// also notes the uniform sign over the scanned range when one exists
/// from 71 on.
pub fn pdiff_logconcave(l_lo: u64, l_hi: u64, table: &PartitionTable) -> Result<ScanReport> {
    if l_hi + 2 > table.max_n() as u64 {
        return Err(Error::TableTooSmall {
            needed: l_hi as i64 + 2,
            max_n: table.max_n(),
        });
    }
    if l_lo < 1 {
        return Err(Error::Domain("pdiff scan needs l >= 1".into()));
    }
    let start = Instant::now();
    let a = |l: i64| -> BigInt { table.p(l + 1) - table.p(l) };
    let mut violations = Vec::new();
    let mut checked = 0u64;
    let mut tail_signs = Vec::new();
    for l in l_lo..=l_hi {
        checked += 1;
        let li = l as i64;
        let al = a(li);
        let d = &al * &al - a(li - 1) * a(li + 1);
        let s = crate::numeric::sign_of(&d);
        if l >= 71 {
            tail_signs.push(s);
        }
        if s < 0 {
            violations.push(Violation {
                k: 0,
                m: 0,
                n: l,
                witness: format!("a({l})^2 - a({})a({}) = {d}", l - 1, l + 1),
            });
        }
    }
    let mut notes = vec![
        "statement checked: (p(l+1)-p(l))^2 - (p(l)-p(l-1))(p(l+2)-p(l+1)) > 0".into(),
        "orientation note: the strict inequality certified here for l >= 71 is \
         N^2 > N- N+; restatements of the same inequality with the opposite \
         sign convention appear in circulation and do not match the exact data"
            .into(),
    ];
    if !tail_signs.is_empty() && tail_signs.iter().all(|&s| s == 1) {
        notes.push(format!(
            "uniform sign +1 for all scanned l >= 71 ({} values)",
            tail_signs.len()
        ));
    }
    let mut report = ScanReport {
        statistic: "pdiff".into(),
        k_range: (0, 0),
        n_range: (l_lo, l_hi),
        m_rule: "a_l = p(l+1) - p(l)".into(),
        checked,
        violations,
        notes,
        elapsed: Duration::ZERO,
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Verify the strict positive discriminant and the p-difference identity
/// over the edge window n/2 - 2k + 2 <= |m| <= n-k-71 at one (k, n).
pub fn edge_logconcavity(k: u32, n: u64, table: &PartitionTable) -> Result<ScanReport> {
    if n < 142 + 2 * k as u64 {
        return Err(Error::Domain(format!(
            "edge window needs n >= 142 + 2k = {}, got {n}",
            142 + 2 * k
        )));
    }
    check_bounds(n, table)?;
    let start = Instant::now();
    let m_lo = ((n as f64) / 2.0 - 2.0 * k as f64 + 2.0).ceil() as i64;
    let m_hi = n as i64 - k as i64 - 71;
    let mut violations = Vec::new();
    let mut checked = 0u64;
    let mut notes = Vec::new();
    if m_lo > m_hi {
        notes.push("empty window".into());
    }
    for m in m_lo..=m_hi {
        checked += 1;
        let count = krank_count(k, m, n, table)?;
        // in-window identity N_k(m,n) = p(l+1) - p(l), l = n - |m| - k
        let l = n as i64 - m - k as i64;
        let ident = table.p(l + 1) - table.p(l);
        if count != ident {
            violations.push(Violation {
                k,
                m,
                n,
                witness: format!("identity fails: N={count}, p({})-p({})={ident}", l + 1, l),
            });
        }
        let b = &count;
        let a = krank_count(k, m - 1, n, table)?;
        let c = krank_count(k, m + 1, n, table)?;
        let d = b * b - a * c;
        if !d.is_positive() {
            violations.push(Violation {
                k,
                m,
                n,
                witness: format!("discriminant not strictly positive: {d}"),
            });
        }
    }
    let mut report = ScanReport {
        statistic: "edge".into(),
        k_range: (k, k),
        n_range: (n, n),
        m_rule: format!("{m_lo} <= m <= {m_hi} (negative m by symmetry)"),
        checked,
        violations,
        notes,
        elapsed: Duration::ZERO,
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn table(n: usize) -> Arc<PartitionTable> {
        Arc::new(PartitionTable::new(n).unwrap())
    }

    #[test]
    fn logconcavity_small_range_is_clean() {
        let t = table(200);
        let r = logconcavity_scan(2, 72, 200, &t).unwrap();
        assert!(r.is_clean(), "{}", r.summary());
        assert!(r.checked > 0);
    }

    #[test]
    fn unimodality_small_range_is_clean() {
        let t = table(150);
        for k in [2u32, 3, 5] {
            let r = unimodality_scan(k, 1, 150, &t).unwrap();
            assert!(r.is_clean(), "k={k}: {}", r.summary());
        }
    }

    #[test]
    fn pdiff_exceptions_and_tail() {
        let t = table(202);
        let r = pdiff_logconcave(1, 100, &t).unwrap();
        // negative exactly at even l in [2, 70]
        let expected: Vec<u64> = (2..=70).step_by(2).collect();
        let got: Vec<u64> = r.violations.iter().map(|v| v.n).collect();
        assert_eq!(got, expected);
        assert!(got.contains(&6));
        // a_6^2 - a_5 a_7 = 16 - 28 = -12
        let v6 = r.violations.iter().find(|v| v.n == 6).unwrap();
        assert!(v6.witness.contains("-12"), "{}", v6.witness);
        let r = pdiff_logconcave(71, 200, &t).unwrap();
        assert!(r.is_clean());
    }

    #[test]
    fn edge_window_clean_and_identity_holds() {
        let t = table(200);
        let r = edge_logconcavity(1, 200, &t).unwrap();
        assert!(r.is_clean(), "{}", r.summary());
        assert!(r.checked > 0);
        let t = table(148);
        let r = edge_logconcavity(3, 148, &t).unwrap();
        assert!(r.is_clean(), "{}", r.summary());
    }

    #[test]
    fn edge_requires_large_n() {
        let t = table(150);
        assert!(edge_logconcavity(3, 147, &t).is_err());
    }

    #[test]
    fn summary_is_deterministic_across_worker_counts() {
        let t = table(160);
        let base = logconcavity_scan(1, 72, 160, &t).unwrap().summary();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let single = pool.install(|| logconcavity_scan(1, 72, 160, &t).unwrap().summary());
        assert_eq!(base, single);
    }
}
