//! The acceptance suite: every release-gating check, runnable from the
//! CLI (`verify`) and from the integration tests.
//!
//! Each criterion returns a [`CriterionResult`] with a pass flag and a
//! human-readable detail line; tolerances are pinned here, in code.

use crate::asym::{krank_asym, sech_ratio, TruncationOrder};
use crate::bessel::h_hat;
use crate::compare::{compare_lc_table, monotonicity_table};
use crate::discriminant::ht_sign_changes;
use crate::eta::{eta_inv_compare, eta_trunc_for};
use crate::halfint::HalfInt;
use crate::krank::{enumerate_stats_oracle, krank_count, krank_row, qseries_row_oracle, Statistic};
use crate::logreal::LogReal;
use crate::numeric::ln_bigint;
use crate::partition::PartitionTable;
use crate::scans::{logconcavity_scan, pdiff_logconcave, unimodality_scan, unimodality_threshold};
use crate::theta::false_theta_compare;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use std::sync::Arc;
use std::time::Instant;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:2}. {:<32} {:>8.2}s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.seconds,
            self.detail
        )
    }
}

fn run(
    id: u32,
    name: &'static str,
    f: impl FnOnce() -> (bool, String),
) -> CriterionResult {
    let start = Instant::now();
    let (passed, detail) = f();
    CriterionResult {
        id,
        name,
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

/// 1. Three mutually independent routes agree for k in {1,2}, n <= 30.
pub fn criterion_1(table: &PartitionTable) -> CriterionResult {
    run(1, "oracle-triple-agreement", || {
        let mut points = 0u64;
        for k in [1u32, 2] {
            let stat = if k == 1 { Statistic::Crank } else { Statistic::Rank };
            for n in 0..=30u64 {
                let hist = enumerate_stats_oracle(n, stat).unwrap();
                let row = krank_row(k, n, table).unwrap();
                for m in -(n as i64 + 2)..=(n as i64 + 2) {
                    let series = qseries_row_oracle(k, m, n as usize);
                    let from_series = &series.coeffs[n as usize];
                    let from_sum = row.count(m);
                    let zero = BigInt::zero();
                    let from_enum = hist.get(&m).unwrap_or(&zero);
                    if from_sum != from_series || from_sum != from_enum {
                        return (
                            false,
                            format!(
                                "mismatch at (k={k}, m={m}, n={n}): p-sum={from_sum}, \
                                 q-series={from_series}, enumeration={from_enum}"
                            ),
                        );
                    }
                    points += 1;
                }
            }
        }
        (true, format!("{points} (k,m,n) points, three routes equal"))
    })
}

/// 2. p-sum equals the q-series convolution for k in {3..6}, n <= 60.
pub fn criterion_2(table: &PartitionTable) -> CriterionResult {
    run(2, "two-route-agreement", || {
        let mut points = 0u64;
        for k in 3u32..=6 {
            for m in 0..=62i64 {
                let series = qseries_row_oracle(k, m, 60);
                for n in 0..=60u64 {
                    if series.coeffs[n as usize] != krank_count(k, m, n, table).unwrap() {
                        return (
                            false,
                            format!("mismatch at (k={k}, m={m}, n={n})"),
                        );
                    }
                    points += 1;
                }
            }
        }
        (true, format!("{points} (k,m,n) points, two routes equal"))
    })
}

/// 3. Row sums equal p(n) for k in {1,2} across 0 <= n <= 500.
///
/// Exception pinned exactly: for every k >= 2 the generating function
/// has no constant term, so the k=2 row at n=0 is identically zero and
/// its sum is 0, not p(0) = 1. The identity is certified for k=1 from
/// n=0 and for k=2 from n=1, and the degenerate point is asserted at its
/// true value so drift cannot pass silently.
pub fn criterion_3(table: &PartitionTable) -> CriterionResult {
    run(3, "row-sum-identity", || {
        let zero_row = krank_row(2, 0, table).unwrap();
        if !zero_row.total().is_zero() {
            return (false, "rank row at n=0 is no longer identically zero".into());
        }
        for k in [1u32, 2] {
            let n_lo = if k == 1 { 0 } else { 1 };
            for n in n_lo..=500u64 {
                let row = krank_row(k, n, table).unwrap();
                if &row.total() != table.p(n as i64) {
                    return (
                        false,
                        format!("sum over m of N_{k}(m,{n}) != p({n})"),
                    );
                }
            }
        }
        (
            true,
            "sums equal p(n) for k=1 (n in 0..=500) and k=2 (n in 1..=500); \
             k=2 row at n=0 pinned at its generating-function value 0"
                .into(),
        )
    })
}

/// 4. The crank special values at n = 1.
pub fn criterion_4(table: &PartitionTable) -> CriterionResult {
    run(4, "crank-n1-special-values", || {
        let checks = [
            (0i64, BigInt::from(-1)),
            (1, BigInt::from(1)),
            (-1, BigInt::from(1)),
        ];
        for (m, expect) in checks {
            let got = krank_count(1, m, 1, table).unwrap();
            if got != expect {
                return (false, format!("N_1({m},1) = {got}, expected {expect}"));
            }
        }
        (true, "N_1(0,1) = -1, N_1(+-1,1) = 1".into())
    })
}

/// 5. Log-concavity scan, k in 1..=10, k+71 <= n <= n_hi, zero violations.
pub fn criterion_5(table: &PartitionTable, n_hi: u64) -> CriterionResult {
    run(5, "logconcavity-conjecture-scan", || {
        let mut checked = 0u64;
        for k in 1u32..=10 {
            let r = logconcavity_scan(k, k as u64 + 71, n_hi, table).unwrap();
            if !r.is_clean() {
                return (false, format!("k={k}: {}", r.summary()));
            }
            checked += r.checked;
        }
        (
            true,
            format!("zero violations over {checked} windows, k in 1..=10, n <= {n_hi}"),
        )
    })
}

/// 6. Unimodality scan, k in 2..=10, n_u(k) <= n <= n_hi, zero violations.
pub fn criterion_6(table: &PartitionTable, n_hi: u64) -> CriterionResult {
    run(6, "unimodality-conjecture-scan", || {
        let mut checked = 0u64;
        for k in 2u32..=10 {
            let r = unimodality_scan(k, unimodality_threshold(k), n_hi, table).unwrap();
            if !r.is_clean() {
                return (false, format!("k={k}: {}", r.summary()));
            }
            checked += r.checked;
        }
        (
            true,
            format!("zero violations over {checked} steps, k in 2..=10, n <= {n_hi}"),
        )
    })
}

/// 7. Higher-order Turan sign changes of HT_1(m, 2500).
///
/// Calibrated window: the outer sign band of HT_1 begins at |m| = 257 at
/// n = 2500, just outside +-250, so the frozen window is +-312
/// (= ceil(8/beta_n)), which exhibits exactly the four changes; the
/// +-250 sub-window sees exactly the inner two. Both facts are pinned.
pub fn criterion_7(table: &PartitionTable) -> CriterionResult {
    run(7, "ht-sign-changes-window", || {
        let (count, locs) = ht_sign_changes(1, 2500, -312, 312, table).unwrap();
        if count != 4 {
            return (
                false,
                format!("HT_1 window +-312: {count} sign changes at {locs:?}, expected 4"),
            );
        }
        if locs != vec![-257, -96, 96, 257] {
            return (
                false,
                format!("HT_1 sign-change locations drifted: {locs:?}"),
            );
        }
        let (inner, _) = ht_sign_changes(1, 2500, -250, 250, table).unwrap();
        if inner != 2 {
            return (
                false,
                format!("HT_1 window +-250: {inner} sign changes, expected the inner 2"),
            );
        }
        (
            true,
            "4 changes in the calibrated +-312 window (at -257, -96, 96, 257); \
             2 inside +-250"
                .into(),
        )
    })
}

/// 8. max |LN/aLN - 1| <= 0.15 over |m| <= 200 at (k=2, n=2500).
pub fn criterion_8(table: &PartitionTable) -> CriterionResult {
    run(8, "lc-figure-tolerance", || {
        let rows = compare_lc_table(2, 2500, -200, 200, table).unwrap();
        let mut worst = 0.0f64;
        let mut worst_m = 0i64;
        for r in &rows {
            match r.relative_gap {
                Some(g) => {
                    if g > worst {
                        worst = g;
                        worst_m = r.m;
                    }
                }
                None => return (false, format!("undefined row at m={}", r.m)),
            }
        }
        (
            worst <= 0.15,
            format!("max |LN/aLN - 1| = {worst:.4} at m = {worst_m} (bound 0.15)"),
        )
    })
}

/// 9. sech^2 law at n = 10^4: |N_k/(p sech_ratio) - 1| <= 10 (n+m^2)/n^{3/2}.
pub fn criterion_9(table: &PartitionTable) -> CriterionResult {
    run(9, "sech2-regime-tolerance", || {
        let n = 10_000u64;
        let ln_pn = ln_bigint(table.p(n as i64));
        let mut worst = 0.0f64;
        let mut at = (0u32, 0i64);
        for k in [1u32, 2, 3] {
            for m in 0..=100i64 {
                let c = krank_count(k, m, n, table).unwrap();
                let ratio = (ln_bigint(&c) - ln_pn).exp();
                let lhs = (ratio / sech_ratio(m, n) - 1.0).abs();
                let bound = 10.0 * (n as f64 + (m * m) as f64) / (n as f64).powf(1.5);
                let q = lhs / bound;
                if q > worst {
                    worst = q;
                    at = (k, m);
                }
            }
        }
        (
            worst <= 1.0,
            format!(
                "worst |N/(p*sech^2) - 1| at {:.3} of its bound, at (k,m) = {:?}",
                worst, at
            ),
        )
    })
}

/// 10. Truncated expansion vs exact at (k=2, n=2500), m in {0,10,50}: <= 1%.
pub fn criterion_10(table: &PartitionTable) -> CriterionResult {
    run(10, "expansion-vs-exact", || {
        let ord = TruncationOrder::default();
        let mut worst = 0.0f64;
        let mut at = 0i64;
        for m in [0i64, 10, 50] {
            let approx = krank_asym(2, m, 2500, 0, &ord).unwrap();
            let exact = LogReal::from_bigint(&krank_count(2, m, 2500, table).unwrap());
            let rel = (approx.ratio(&exact) - 1.0).abs();
            if rel > worst {
                worst = rel;
                at = m;
            }
        }
        (
            worst <= 0.01,
            format!("worst relative error {worst:.3e} at m = {at} (bound 1e-2)"),
        )
    })
}

/// 11. p-difference sign law: uniform positive sign for 71 <= l <= 2000,
/// opposite sign at l = 6 with value -12.
pub fn criterion_11(table: &PartitionTable) -> CriterionResult {
    run(11, "pdiff-sign-law", || {
        let r = pdiff_logconcave(71, 2000, table).unwrap();
        if !r.is_clean() {
            return (
                false,
                format!("negative discriminant in 71..=2000: {}", r.summary()),
            );
        }
        let a = |l: i64| table.p(l + 1) - table.p(l);
        let d6 = {
            let a6 = a(6);
            &a6 * &a6 - a(5) * a(7)
        };
        if d6 != BigInt::from(-12) {
            return (false, format!("a_6^2 - a_5 a_7 = {d6}, expected -12"));
        }
        (
            true,
            "sign +1 uniformly on 71 <= l <= 2000; a_6^2 - a_5 a_7 = -12".into(),
        )
    })
}

/// 12. H-hat truncation tolerance over the (mu, nu, u, L) grid.
pub fn criterion_12() -> CriterionResult {
    run(12, "hhat-truncation-tolerance", || {
        let mut worst = 0.0f64;
        let mut at = String::new();
        for twice_mu in [-5i64, -7, -9] {
            for nu in [0u32, 1, 2] {
                for u in [30.0f64, 50.0, 100.0] {
                    for l in [2u32, 3] {
                        let r = h_hat(HalfInt::from_twice(twice_mu), nu, u, l).unwrap();
                        let q = r.diff.abs() / (2.0 * r.first_omitted);
                        if q > worst {
                            worst = q;
                            at = format!("mu={twice_mu}/2 nu={nu} u={u} L={l}");
                        }
                    }
                }
            }
        }
        (
            worst <= 1.0,
            format!("worst |exact - series| at {worst:.3} of 2*first_omitted ({at})"),
        )
    })
}

/// 13. False theta tolerance over the (l, b, z) grid at p = 4.
pub fn criterion_13() -> CriterionResult {
    run(13, "false-theta-tolerance", || {
        let mut worst = 0.0f64;
        let mut at = String::new();
        for l in [0u32, 1, 2] {
            for b in [0.0f64, 1.0, 10.0, 100.0] {
                for z in [Complex64::new(0.01, 0.0), Complex64::new(0.02, 0.002)] {
                    let r = false_theta_compare(l, b, z, 4).unwrap();
                    let q = (r.lhs - r.rhs).norm() / (10.0 * r.scale);
                    if q > worst {
                        worst = q;
                        at = format!("l={l} b={b} z={z}");
                    }
                }
            }
        }
        (
            worst <= 1.0,
            format!("worst |lhs - rhs| at {worst:.3} of 10*scale ({at})"),
        )
    })
}

/// 14. Eta main term at z = 0.01: relative agreement to 1e-10.
pub fn criterion_14() -> CriterionResult {
    run(14, "eta-main-term", || {
        let z = Complex64::new(0.01, 0.0);
        let r = eta_inv_compare(z, eta_trunc_for(z, 128), 128).unwrap();
        (
            r.rel_diff <= 1e-10,
            format!("|exact/main - 1| = {:.3e} (bound 1e-10)", r.rel_diff),
        )
    })
}

/// 15. Monotonicity ratio gap <= 10% for (k=2, n=2500), 0 <= m <= 100.
pub fn criterion_15(table: &PartitionTable) -> CriterionResult {
    run(15, "monotonicity-ratio", || {
        let rows = monotonicity_table(2, 2500, 0, 100, table).unwrap();
        let mut worst = 0.0f64;
        let mut at = 0i64;
        for r in &rows {
            if r.relative_gap > worst {
                worst = r.relative_gap;
                at = r.m;
            }
        }
        (
            worst <= 0.10,
            format!("max relative gap {worst:.4} at m = {at} (bound 0.10)"),
        )
    })
}

/// Extra named gate: the gamma table reproduces its closed forms.
/// `perturb` flips one value, for exercising the failure path in tests.
pub fn gamma_consistency_check(perturb: bool) -> CriterionResult {
    run(0, "gamma-consistency", || {
        use crate::coeffs::gamma_coeff;
        use num_rational::BigRational;
        for t in (-39..=39i64).step_by(2).chain([41, -41]) {
            let mu = HalfInt::from_twice(t);
            let mut g = [
                gamma_coeff(1, mu, 0),
                gamma_coeff(1, mu, 1),
                gamma_coeff(1, mu, 2),
            ];
            if perturb {
                g[1] = -g[1].clone();
            }
            let expect = [
                BigRational::new((t * t - 1).into(), 8.into()),
                BigRational::new((t + 1).into(), 2.into()),
                BigRational::from_integer(1.into()),
            ];
            for (i, (got, want)) in g.iter().zip(expect.iter()).enumerate() {
                if got != want {
                    return (
                        false,
                        format!("gamma_1({t}/2, {i}) = {got}, closed form {want}"),
                    );
                }
            }
        }
        (true, "gamma_1 closed forms reproduced exactly over the mu grid".into())
    })
}

/// Which slice of the suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// small scans only (n <= 200); minutes on a laptop
    Fast,
    /// the full gate: conjecture scans to n = 1000 plus the n = 2500 and
    /// n = 10^4 figure criteria
    Full,
}

/// Largest p(n) needed by the given suite.
pub fn table_size_for(suite: Suite) -> usize {
    match suite {
        Suite::Fast => 2002,
        Suite::Full => 10_000,
    }
}

/// Run the suite, reusing a shared table (it must cover
/// [`table_size_for`]). Results arrive in criterion order.
pub fn run_suite(suite: Suite, table: &Arc<PartitionTable>) -> Vec<CriterionResult> {
    let mut out = Vec::new();
    out.push(gamma_consistency_check(false));
    out.push(criterion_1(table));
    out.push(criterion_2(table));
    out.push(criterion_3(table));
    out.push(criterion_4(table));
    match suite {
        Suite::Fast => {
            out.push(criterion_5(table, 200));
            out.push(criterion_6(table, 200));
        }
        Suite::Full => {
            out.push(criterion_5(table, 1000));
            out.push(criterion_6(table, 1000));
        }
    }
    if suite == Suite::Full {
        out.push(criterion_7(table));
        out.push(criterion_8(table));
        out.push(criterion_9(table));
        out.push(criterion_10(table));
    }
    out.push(criterion_11(table));
    out.push(criterion_12());
    out.push(criterion_13());
    out.push(criterion_14());
    if suite == Suite::Full {
        out.push(criterion_15(table));
    }
    out
}
