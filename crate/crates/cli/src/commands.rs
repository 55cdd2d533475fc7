//! Command implementations over the core library.

use crate::config::RunConfig;
use crate::svg::{self, Series};
use crate::table::{Cell, ColKind, Provenance, ResultTable};
use crate::{MArg, RangeArg};
use krank::acceptance::{self, Suite};
use krank::asym::{beta_of, krank_asym, TruncationOrder};
use krank::coeffs::{a_coeff, c_coeff, gamma_coeff};
use krank::compare::{compare_lc_table, monotonicity_table};
use krank::discriminant::{ht_exact, ht_sign_changes};
use krank::halfint::HalfInt;
use krank::krank::{krank_count, krank_row};
use krank::logreal::LogReal;
use krank::partition::PartitionTable;
use krank::scans::{
    edge_logconcavity, logconcavity_scan, pdiff_logconcave, unimodality_scan,
    unimodality_threshold, ScanReport,
};
use std::path::PathBuf;
use std::sync::Arc;

pub struct Ctx {
    pub cfg: RunConfig,
    pub write_files: bool,
    pub command_line: String,
}

impl Ctx {
    fn provenance(&self) -> Provenance {
        Provenance {
            command: self.command_line.clone(),
            config_hash: self.cfg.hash(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }

    fn table(&self, columns: Vec<(&str, ColKind)>) -> ResultTable {
        ResultTable::new(
            self.provenance(),
            columns
                .into_iter()
                .map(|(n, k)| (n.to_string(), k))
                .collect(),
        )
    }

    /// Print the table and, when an output directory is set, write the
    /// configured formats.
    fn emit(&self, stem: &str, t: &ResultTable, plot: Option<String>) -> Result<(), String> {
        print!("{}", t.render_text(24));
        if !self.write_files {
            return Ok(());
        }
        let dir = PathBuf::from(&self.cfg.out_dir);
        std::fs::create_dir_all(&dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
        for fmt in &self.cfg.formats {
            match fmt.as_str() {
                "csv" => {
                    let path = dir.join(format!("{stem}.csv"));
                    std::fs::write(&path, t.to_csv())
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    eprintln!("wrote {}", path.display());
                }
                "json" => {
                    let path = dir.join(format!("{stem}.json"));
                    let text = serde_json::to_string_pretty(&t.to_json()).expect("json");
                    std::fs::write(&path, text)
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    eprintln!("wrote {}", path.display());
                }
                "svg" => {
                    if let Some(doc) = &plot {
                        let path = dir.join(format!("{stem}.svg"));
                        std::fs::write(&path, doc)
                            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                        eprintln!("wrote {}", path.display());
                    }
                }
                _ => {}
            }
        }
        Ok(())
    }

    fn build_table(&self, needed: usize) -> Result<Arc<PartitionTable>, String> {
        let size = needed.max(1);
        if size > self.cfg.ptable {
            return Err(format!(
                "requested range needs p(0..{size}) but the configured table capacity \
                 is {} (raise --ptable)",
                self.cfg.ptable
            ));
        }
        PartitionTable::new(self.cfg.ptable)
            .map(Arc::new)
            .map_err(|e| e.to_string())
    }
}

fn float_cell(v: Option<f64>) -> Cell {
    Cell::Float(v.unwrap_or(f64::NAN))
}

pub fn cmd_krank(ctx: &Ctx, k: u32, m: Option<i64>, n: u64) -> Result<i32, String> {
    if k < 1 {
        return Err("k must be >= 1".into());
    }
    // a single row only needs p up to n; size the table directly
    let table = PartitionTable::new(n as usize).map_err(|e| e.to_string())?;
    match m {
        Some(m) => {
            let count = krank_count(k, m, n, &table).map_err(|e| e.to_string())?;
            let mut t = ctx.table(vec![
                ("k", ColKind::Int),
                ("m", ColKind::Int),
                ("n", ColKind::Int),
                ("count", ColKind::Exact),
            ]);
            t.push(vec![
                Cell::Int(k as i64),
                Cell::Int(m),
                Cell::Int(n as i64),
                Cell::Exact(count.to_string()),
            ]);
            ctx.emit(&format!("krank_k{k}_m{m}_n{n}"), &t, None)?;
        }
        None => {
            let row = krank_row(k, n, &table).map_err(|e| e.to_string())?;
            let mut t = ctx.table(vec![("m", ColKind::Int), ("count", ColKind::Exact)]);
            for (m, c) in row.iter_full() {
                t.push(vec![Cell::Int(m), Cell::Exact(c.to_string())]);
            }
            ctx.emit(&format!("krank_row_k{k}_n{n}"), &t, None)?;
        }
    }
    Ok(0)
}

fn scan_report_table(ctx: &Ctx, reports: &[ScanReport]) -> ResultTable {
    let mut t = ctx.table(vec![
        ("k", ColKind::Int),
        ("m", ColKind::Int),
        ("n", ColKind::Int),
        ("witness", ColKind::Exact),
    ]);
    for r in reports {
        for v in &r.violations {
            t.push(vec![
                Cell::Int(v.k as i64),
                Cell::Int(v.m),
                Cell::Int(v.n as i64),
                Cell::Exact(v.witness.clone()),
            ]);
        }
    }
    t
}

pub fn cmd_scan(
    ctx: &Ctx,
    statistic: &str,
    k: Option<RangeArg>,
    n: Option<RangeArg>,
    l: Option<RangeArg>,
) -> Result<i32, String> {
    let sc = &ctx.cfg.scan;
    let k_lo = k.and_then(|r| r.lo).unwrap_or(sc.k_lo as i64).max(1) as u32;
    let k_hi = k.and_then(|r| r.hi).unwrap_or(sc.k_hi as i64).max(1) as u32;
    if k_lo > k_hi {
        return Err("empty k range".into());
    }
    let n_hi = n.and_then(|r| r.hi).map(|v| v as u64).unwrap_or(sc.n_hi);
    let mut reports = Vec::new();
    match statistic {
        "logconcave" => {
            let table = ctx.build_table(n_hi as usize)?;
            for kk in k_lo..=k_hi {
                let n_lo = n
                    .and_then(|r| r.lo)
                    .map(|v| v as u64)
                    .unwrap_or(kk as u64 + 71);
                reports.push(
                    logconcavity_scan(kk, n_lo, n_hi, &table).map_err(|e| e.to_string())?,
                );
            }
        }
        "unimodal" => {
            let table = ctx.build_table(n_hi as usize)?;
            let k_lo = if k.is_none() { k_lo.max(2) } else { k_lo };
            for kk in k_lo..=k_hi {
                let n_lo = n
                    .and_then(|r| r.lo)
                    .map(|v| v as u64)
                    .unwrap_or_else(|| unimodality_threshold(kk));
                reports
                    .push(unimodality_scan(kk, n_lo, n_hi, &table).map_err(|e| e.to_string())?);
            }
        }
        "pdiff" => {
            let l_lo = l.and_then(|r| r.lo).map(|v| v as u64).unwrap_or(sc.l_lo);
            let l_hi = l.and_then(|r| r.hi).map(|v| v as u64).unwrap_or(sc.l_hi);
            let table = ctx.build_table(l_hi as usize + 2)?;
            reports.push(pdiff_logconcave(l_lo, l_hi, &table).map_err(|e| e.to_string())?);
        }
        "edge" => {
            let table = ctx.build_table(n_hi as usize)?;
            for kk in k_lo..=k_hi {
                let n_lo = n
                    .and_then(|r| r.lo)
                    .map(|v| v as u64)
                    .unwrap_or(n_hi);
                for nn in n_lo..=n_hi {
                    reports.push(edge_logconcavity(kk, nn, &table).map_err(|e| e.to_string())?);
                }
            }
        }
        other => return Err(format!("unknown scan statistic {other:?}")),
    }

    let mut violations = 0usize;
    for r in &reports {
        print!("{}", r.summary());
        eprintln!("elapsed: {:?}", r.elapsed);
        violations += r.violations.len();
    }
    let t = scan_report_table(ctx, &reports);
    ctx.emit(&format!("scan_{statistic}"), &t, None)?;
    Ok(if violations == 0 { 0 } else { 2 })
}

fn m_values(m: &Option<MArg>, default_lo: i64, default_hi: i64) -> Vec<i64> {
    match m {
        None => (default_lo..=default_hi).collect(),
        Some(MArg::List(v)) => v.clone(),
        Some(MArg::Range(r)) => {
            let lo = r.lo.unwrap_or(default_lo);
            let hi = r.hi.unwrap_or(default_hi);
            (lo..=hi).collect()
        }
    }
}

pub fn cmd_compare(
    ctx: &Ctx,
    target: &str,
    k: u32,
    n: u64,
    m: &Option<MArg>,
) -> Result<i32, String> {
    if k < 1 || n < 1 {
        return Err("compare needs k >= 1 and n >= 1".into());
    }
    match target {
        "lc" => {
            let ms = m_values(m, -200, 200);
            let (lo, hi) = (ms[0], *ms.last().unwrap());
            let table = ctx.build_table(n as usize)?;
            let rows = compare_lc_table(k, n, lo, hi, &table).map_err(|e| e.to_string())?;
            let mut t = ctx.table(vec![
                ("m", ColKind::Int),
                ("ln_exact", ColKind::Float),
                ("a_ln", ColKind::Float),
                ("relative_gap", ColKind::Float),
            ]);
            let mut exact_pts = Vec::new();
            let mut asym_pts = Vec::new();
            for r in &rows {
                t.push(vec![
                    Cell::Int(r.m),
                    float_cell(r.ln_exact),
                    Cell::Float(r.a_ln),
                    float_cell(r.relative_gap),
                ]);
                if let Some(v) = r.ln_exact {
                    exact_pts.push((r.m as f64, v));
                }
                asym_pts.push((r.m as f64, r.a_ln));
            }
            let doc = svg::render(
                &format!("-D2 log N_{k}(m,{n}): exact vs closed form"),
                &[
                    Series {
                        name: "exact",
                        color: "red",
                        points: exact_pts,
                    },
                    Series {
                        name: "closed form",
                        color: "blue",
                        points: asym_pts,
                    },
                ],
                &[],
            );
            ctx.emit(&format!("compare_lc_k{k}_n{n}"), &t, Some(doc))?;
        }
        "mono" => {
            let ms = m_values(m, 0, 100);
            let (lo, hi) = (ms[0], *ms.last().unwrap());
            let needed = n as usize + lo.unsigned_abs().max(hi.unsigned_abs()) as usize + 1;
            let table = ctx.build_table(needed)?;
            let rows = monotonicity_table(k, n, lo, hi, &table).map_err(|e| e.to_string())?;
            let mut t = ctx.table(vec![
                ("m", ColKind::Int),
                ("exact_ratio", ColKind::Float),
                ("tanh_form", ColKind::Float),
                ("relative_gap", ColKind::Float),
            ]);
            let mut exact_pts = Vec::new();
            let mut rhs_pts = Vec::new();
            for r in &rows {
                t.push(vec![
                    Cell::Int(r.m),
                    Cell::Float(r.exact_ratio),
                    Cell::Float(r.rhs),
                    Cell::Float(r.relative_gap),
                ]);
                exact_pts.push((r.m as f64, r.exact_ratio));
                rhs_pts.push((r.m as f64, r.rhs));
            }
            let doc = svg::render(
                &format!("monotonicity ratio, k={k}, n={n}"),
                &[
                    Series {
                        name: "exact",
                        color: "red",
                        points: exact_pts,
                    },
                    Series {
                        name: "tanh form",
                        color: "blue",
                        points: rhs_pts,
                    },
                ],
                &[],
            );
            ctx.emit(&format!("compare_mono_k{k}_n{n}"), &t, Some(doc))?;
        }
        "asym" => {
            let ms = m_values(m, 0, 50);
            let table = ctx.build_table(n as usize)?;
            let ord = TruncationOrder {
                p: ctx.cfg.truncation.p,
                h_max: ctx.cfg.truncation.h_max,
                mantissa_bits: ctx.cfg.truncation.mantissa_bits,
            };
            let mut t = ctx.table(vec![
                ("m", ColKind::Int),
                ("ln_exact", ColKind::Float),
                ("ln_expansion", ColKind::Float),
                ("rel_error", ColKind::Float),
            ]);
            for &mm in &ms {
                let exact = krank_count(k, mm, n, &table).map_err(|e| e.to_string())?;
                let approx =
                    krank_asym(k, mm.unsigned_abs() as i64, n, 0, &ord).map_err(|e| e.to_string())?;
                let le = LogReal::from_bigint(&exact);
                let (ln_e, rel) = if le.sign() > 0 && approx.sign() != 0 {
                    (Some(le.ln_abs()), Some((approx.ratio(&le) - 1.0).abs()))
                } else {
                    (None, None)
                };
                t.push(vec![
                    Cell::Int(mm),
                    float_cell(ln_e),
                    Cell::Float(approx.ln_abs()),
                    float_cell(rel),
                ]);
            }
            ctx.emit(&format!("compare_asym_k{k}_n{n}"), &t, None)?;
        }
        "ht" => {
            let default_w = (8.0 / beta_of(n)).ceil() as i64;
            let ms = m_values(m, -default_w, default_w);
            let (lo, hi) = (ms[0], *ms.last().unwrap());
            let table = ctx.build_table(n as usize)?;
            let (count, locations) =
                ht_sign_changes(k, n, lo, hi, &table).map_err(|e| e.to_string())?;
            let mut t = ctx.table(vec![
                ("m", ColKind::Int),
                ("sign", ColKind::Int),
                ("ht_value", ColKind::Float),
            ]);
            let mut pts = Vec::new();
            for &mm in &ms {
                let rec = ht_exact(k, mm, n, &table).map_err(|e| e.to_string())?;
                t.push(vec![
                    Cell::Int(mm),
                    Cell::Int(rec.sign as i64),
                    float_cell(rec.value),
                ]);
                if let Some(v) = rec.value {
                    pts.push((mm as f64, v));
                }
            }
            println!("sign changes in [{lo}, {hi}]: {count} at {locations:?}");
            let doc = svg::render(
                &format!("HT_{k}(m, {n}), sign changes marked"),
                &[Series {
                    name: "HT",
                    color: "red",
                    points: pts,
                }],
                &locations.iter().map(|&m| m as f64).collect::<Vec<_>>(),
            );
            ctx.emit(&format!("compare_ht_k{k}_n{n}"), &t, Some(doc))?;
        }
        other => return Err(format!("unknown compare target {other:?}")),
    }
    Ok(0)
}

pub fn cmd_verify(ctx: &Ctx, suite: &str) -> Result<i32, String> {
    let suite = match suite {
        "fast" => Suite::Fast,
        "full" => Suite::Full,
        other => return Err(format!("unknown suite {other:?} (use fast or full)")),
    };
    let table = Arc::new(
        PartitionTable::new(acceptance::table_size_for(suite)).map_err(|e| e.to_string())?,
    );
    let results = acceptance::run_suite(suite, &table);
    let mut t = ctx.table(vec![
        ("id", ColKind::Int),
        ("name", ColKind::Exact),
        ("passed", ColKind::Int),
        ("seconds", ColKind::Float),
        ("detail", ColKind::Exact),
    ]);
    let mut failed = Vec::new();
    for r in &results {
        println!("{}", r.line());
        t.push(vec![
            Cell::Int(r.id as i64),
            Cell::Exact(r.name.to_string()),
            Cell::Int(r.passed as i64),
            Cell::Float(r.seconds),
            Cell::Exact(r.detail.clone()),
        ]);
        if !r.passed {
            failed.push(r.name);
        }
    }
    if ctx.write_files {
        ctx.emit("verify", &t, None)?;
    }
    if failed.is_empty() {
        println!("verify: all {} checks passed", results.len());
        Ok(0)
    } else {
        println!("verify: FAILED criteria: {}", failed.join(", "));
        Ok(2)
    }
}

pub fn cmd_export(
    ctx: &Ctx,
    target: &str,
    k: Option<u32>,
    n: Option<u64>,
    which: Option<&str>,
) -> Result<i32, String> {
    match target {
        "ptable" => {
            let n = n.unwrap_or(ctx.cfg.ptable as u64);
            let table = ctx.build_table(n as usize)?;
            let mut t = ctx.table(vec![("n", ColKind::Int), ("p", ColKind::Exact)]);
            for i in 0..=n as i64 {
                t.push(vec![Cell::Int(i), Cell::Exact(table.p(i).to_string())]);
            }
            ctx.emit(&format!("ptable_{n}"), &t, None)?;
        }
        "row" => {
            let k = k.ok_or("export row needs --k")?;
            let n = n.ok_or("export row needs --n")?;
            let table = PartitionTable::new(n as usize).map_err(|e| e.to_string())?;
            let row = krank_row(k, n, &table).map_err(|e| e.to_string())?;
            let mut t = ctx.table(vec![("m", ColKind::Int), ("count", ColKind::Exact)]);
            for (m, c) in row.iter_full() {
                t.push(vec![Cell::Int(m), Cell::Exact(c.to_string())]);
            }
            ctx.emit(&format!("row_k{k}_n{n}"), &t, None)?;
        }
        "coeffs" => {
            let which = which.unwrap_or("gamma");
            let mut t = ctx.table(vec![
                ("family", ColKind::Exact),
                ("idx", ColKind::Int),
                ("twice_mu_or_j", ColKind::Int),
                ("nu", ColKind::Int),
                ("numerator", ColKind::Exact),
                ("denominator", ColKind::Exact),
            ]);
            match which {
                "a" => {
                    for j in 0..=6u32 {
                        for tm in (-9..=9i64).step_by(2) {
                            let v = a_coeff(j, HalfInt::from_twice(tm));
                            t.push(vec![
                                Cell::Exact("a".into()),
                                Cell::Int(j as i64),
                                Cell::Int(tm),
                                Cell::Int(0),
                                Cell::Exact(v.numer().to_string()),
                                Cell::Exact(v.denom().to_string()),
                            ]);
                        }
                    }
                }
                "gamma" => {
                    for l in 0..=4u32 {
                        for tm in (-9..=-1i64).step_by(2) {
                            for nu in 0..=4u32 {
                                let v = gamma_coeff(l, HalfInt::from_twice(tm), nu);
                                t.push(vec![
                                    Cell::Exact("gamma".into()),
                                    Cell::Int(l as i64),
                                    Cell::Int(tm),
                                    Cell::Int(nu as i64),
                                    Cell::Exact(v.numer().to_string()),
                                    Cell::Exact(v.denom().to_string()),
                                ]);
                            }
                        }
                    }
                }
                "c" => {
                    for l in 1..=6u32 {
                        for j in -2..=2i64 {
                            let v = c_coeff(l, j);
                            t.push(vec![
                                Cell::Exact("c".into()),
                                Cell::Int(l as i64),
                                Cell::Int(j),
                                Cell::Int(0),
                                Cell::Exact(v.numer().to_string()),
                                Cell::Exact(v.denom().to_string()),
                            ]);
                        }
                    }
                }
                other => return Err(format!("unknown coefficient family {other:?}")),
            }
            ctx.emit(&format!("coeffs_{which}"), &t, None)?;
        }
        other => return Err(format!("unknown export target {other:?}")),
    }
    Ok(0)
}
