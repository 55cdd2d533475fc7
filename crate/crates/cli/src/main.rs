//! Command line front end.
//!
//! Exit status contract: 0 = success / no violations, 1 = usage or
//! configuration error, 2 = a mathematical check failed (scan violations
//! or a failed verification criterion).

mod commands;
mod config;
mod svg;
mod table;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use config::RunConfig;
use std::path::PathBuf;
use std::str::FromStr;

/// Inclusive integer range argument: `a..b`, `..b`, `a..` or `a`.
#[derive(Debug, Clone, Copy)]
pub struct RangeArg {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl FromStr for RangeArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| -> Result<Option<i64>, String> {
            if t.is_empty() {
                Ok(None)
            } else {
                t.parse::<i64>()
                    .map(Some)
                    .map_err(|e| format!("bad range bound {t:?}: {e}"))
            }
        };
        match s.split_once("..") {
            Some((a, b)) => Ok(Self {
                lo: parse(a)?,
                hi: parse(b)?,
            }),
            None => {
                let v = parse(s)?;
                Ok(Self { lo: v, hi: v })
            }
        }
    }
}

/// `m` argument: a range or an explicit comma-separated list.
#[derive(Debug, Clone)]
pub enum MArg {
    Range(RangeArg),
    List(Vec<i64>),
}

impl FromStr for MArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.contains(',') {
            let vals = s
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|e| format!("bad m value {t:?}: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(MArg::List(vals))
        } else {
            Ok(MArg::Range(s.parse()?))
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "krank",
    version,
    about = "Exact and asymptotic Garvan k-rank partition statistics"
)]
struct Cli {
    /// TOML configuration file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// directory for emitted CSV/JSON/SVG files
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// file format for emitted tables
    #[arg(long, global = true, value_parser = ["csv", "json"])]
    format: Option<String>,
    /// also emit SVG plots where the command supports them
    #[arg(long, global = true)]
    svg: bool,
    /// worker threads, 0 = all cores (WORKERS env var overrides)
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// partition table capacity p(0..N)
    #[arg(long, global = true)]
    ptable: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact N_k(m,n): a single count with --m, the full row without
    Krank {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        #[arg(long)]
        n: u64,
    },
    /// Exhaustive exact scans; exits 2 when violations are found
    Scan {
        /// one of: logconcave, unimodal, pdiff, edge
        statistic: String,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<RangeArg>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<RangeArg>,
        /// p-difference index range (pdiff only)
        #[arg(long, allow_hyphen_values = true)]
        l: Option<RangeArg>,
    },
    /// Exact-versus-asymptotic comparison tables
    Compare {
        /// one of: lc, mono, asym, ht
        target: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<MArg>,
    },
    /// Run the acceptance suite; exits 2 on any failed criterion
    Verify {
        /// fast (small scans) or full (the complete gate)
        #[arg(long, default_value = "fast")]
        suite: String,
    },
    /// Write raw tables: ptable, row, coeffs
    Export {
        /// one of: ptable, row, coeffs
        target: String,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        n: Option<u64>,
        /// coefficient family for `coeffs`: a, gamma or c
        #[arg(long)]
        which: Option<String>,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            eprintln!("{e}");
            return 1;
        }
    };

    let mut cfg = match RunConfig::load(cli.config.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    if let Some(w) = cli.workers {
        cfg.workers = w;
    }
    if let Ok(w) = std::env::var("WORKERS") {
        match w.parse::<usize>() {
            Ok(w) => cfg.workers = w,
            Err(_) => {
                eprintln!("error: WORKERS must be an integer, got {w:?}");
                return 1;
            }
        }
    }
    if let Some(p) = cli.ptable {
        cfg.ptable = p;
    }
    if let Some(dir) = &cli.out {
        cfg.out_dir = dir.display().to_string();
    }
    if let Some(fmt) = &cli.format {
        cfg.formats = vec![fmt.clone()];
    }
    if cli.svg && !cfg.formats.iter().any(|f| f == "svg") {
        cfg.formats.push("svg".into());
    }
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return 1;
    }
    if cfg.workers != 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build_global()
        {
            eprintln!("error: cannot size worker pool: {e}");
            return 1;
        }
    }

    let ctx = commands::Ctx {
        cfg,
        // only write files when an output directory was requested
        write_files: cli.out.is_some(),
        command_line: argv.join(" "),
    };

    let outcome = match &cli.command {
        Command::Krank { k, m, n } => commands::cmd_krank(&ctx, *k, *m, *n),
        Command::Scan { statistic, k, n, l } => commands::cmd_scan(&ctx, statistic, *k, *n, *l),
        Command::Compare { target, k, n, m } => commands::cmd_compare(&ctx, target, *k, *n, m),
        Command::Verify { suite } => commands::cmd_verify(&ctx, suite),
        Command::Export { target, k, n, which } => {
            commands::cmd_export(&ctx, target, *k, *n, which.as_deref())
        }
    };

    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
