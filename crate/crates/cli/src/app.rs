//! Command line parsing and dispatch.
//!
//! Exit codes are a stable contract: 0 on success, 1 when a verification
//! sweep finds a failing identity, 2 for usage and configuration errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use metaplectic_core::crystal::{enumerate_patterns, string_members, GTPattern};
use metaplectic_core::operators::whittaker_value;

use crate::config::{OutputFormat, Statement, SweepConfig};
use crate::formats::{
    format_complex, gauss_json_line, gauss_text_line, vertex_json_line, vertex_record,
    vertex_text_line, GaussRow, GAUSS_HEADER, VERTEX_HEADER,
};
use crate::gauss::{gauss_gflat, gauss_hflat, GaussContext};
use crate::sweep::run_sweep;

#[derive(Parser)]
#[command(
    name = "metaplectic",
    version,
    about = "Exact metaplectic Demazure-Lusztig and crystal calculations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List crystal vertices with Gamma entries, decorations, weights, and
    /// coefficients.
    Crystal(CrystalArgs),
    /// Print the spherical Whittaker value at a dominant weight.
    Whittaker(WhittakerArgs),
    /// Run identity-check sweeps and report pass/fail per instance.
    Verify(VerifyArgs),
    /// Tabulate numeric Gauss sums over a prime field.
    Gauss(GaussArgs),
}

#[derive(Args)]
struct CrystalArgs {
    /// Top row as comma-separated integers, e.g. 3,1,0.
    #[arg(long, value_name = "LIST")]
    top_row: String,
    /// Gauss-sum degree of the coefficient ring.
    #[arg(long, value_name = "N")]
    n: u32,
    /// Restrict to the Demazure subset for this section length.
    #[arg(long, value_name = "LEN")]
    w_length: Option<usize>,
    /// Output format: text or json.
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct WhittakerArgs {
    /// Dominant weight as comma-separated integers, e.g. 2,1,0.
    #[arg(long, value_name = "LIST")]
    lambda: String,
    /// Gauss-sum degree of the coefficient ring.
    #[arg(long, value_name = "N")]
    n: u32,
    /// Output format: text or json.
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Statement family: main, tokuyama, classic, MN, F, longword,
    /// branching, or gauss.
    #[arg(long)]
    statement: Option<String>,
    /// Rank span, e.g. 2 or 1..3.
    #[arg(long, value_name = "SPAN")]
    r: Option<String>,
    /// Degree span, e.g. 2 or 1..3.
    #[arg(long, value_name = "SPAN")]
    n: Option<String>,
    /// Largest first entry of swept dominant weights.
    #[arg(long, value_name = "BOUND")]
    lambda_max: Option<i64>,
    /// Output format: text or json.
    #[arg(long)]
    format: Option<String>,
    /// Worker threads (0 = one per core).
    #[arg(long)]
    jobs: Option<usize>,
    /// Seed for numeric sample points.
    #[arg(long)]
    seed: Option<u64>,
    /// Configuration file with the same keys as the flags.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct GaussArgs {
    /// Odd prime with p = 1 mod 2n.
    #[arg(long)]
    p: u64,
    /// Gauss-sum degree.
    #[arg(long)]
    n: u32,
    /// Output format: text or json.
    #[arg(long, default_value = "text")]
    format: String,
}

/// Parse and dispatch; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let out = std::io::stdout();
    let mut out = out.lock();
    let result = match cli.command {
        Command::Crystal(args) => cmd_crystal(&args, &mut out),
        Command::Whittaker(args) => cmd_whittaker(&args, &mut out),
        Command::Verify(args) => cmd_verify(&args, &mut out),
        Command::Gauss(args) => cmd_gauss(&args, &mut out),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn parse_int_list(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<i64>()
                .map_err(|_| format!("cannot parse {piece:?} as an integer"))
        })
        .collect()
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    OutputFormat::parse(s).map_err(|e| e.to_string())
}

fn cmd_crystal(args: &CrystalArgs, out: &mut impl Write) -> Result<i32, String> {
    let top_row = parse_int_list(&args.top_row)?;
    let format = parse_format(&args.format)?;
    if args.n == 0 {
        return Err("the degree n must be at least 1".to_string());
    }
    let members: Vec<GTPattern> = match args.w_length {
        Some(l) => string_members(&top_row, l).map_err(|e| e.to_string())?,
        None => enumerate_patterns(&top_row).map_err(|e| e.to_string())?,
    };
    if format == OutputFormat::Text {
        writeln!(out, "{VERTEX_HEADER}").map_err(|e| e.to_string())?;
    }
    for p in &members {
        let rec = vertex_record(p, args.n);
        let line = match format {
            OutputFormat::Text => vertex_text_line(&rec),
            OutputFormat::Json => vertex_json_line(&rec),
        };
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }
    Ok(0)
}

fn cmd_whittaker(args: &WhittakerArgs, out: &mut impl Write) -> Result<i32, String> {
    let lambda = parse_int_list(&args.lambda)?;
    let format = parse_format(&args.format)?;
    if args.n == 0 {
        return Err("the degree n must be at least 1".to_string());
    }
    let value = whittaker_value(&lambda, args.n).map_err(|e| e.to_string())?;
    match format {
        OutputFormat::Text => writeln!(out, "{value}").map_err(|e| e.to_string())?,
        OutputFormat::Json => {
            let record = serde_json::json!({
                "lambda": lambda,
                "n": args.n,
                "value": value.to_string(),
            });
            writeln!(out, "{record}").map_err(|e| e.to_string())?;
        }
    }
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs, out: &mut impl Write) -> Result<i32, String> {
    let mut cfg = SweepConfig::default();
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        cfg.apply_file(&text).map_err(|e| e.to_string())?;
    }
    if let Some(s) = &args.statement {
        cfg.statement = Statement::parse(s).map_err(|e| e.to_string())?;
    }
    if let Some(s) = &args.r {
        cfg.set("r", s).map_err(|e| e.to_string())?;
    }
    if let Some(s) = &args.n {
        cfg.set("n", s).map_err(|e| e.to_string())?;
    }
    if let Some(bound) = args.lambda_max {
        cfg.lambda_max = bound;
    }
    if let Some(s) = &args.format {
        cfg.format = parse_format(s)?;
    }
    if let Some(jobs) = args.jobs {
        cfg.jobs = jobs;
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    cfg.validate().map_err(|e| e.to_string())?;
    let outcome = run_sweep(&cfg);
    for line in &outcome.lines {
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }
    Ok(if outcome.all_pass { 0 } else { 1 })
}

fn cmd_gauss(args: &GaussArgs, out: &mut impl Write) -> Result<i32, String> {
    let format = parse_format(&args.format)?;
    let ctx = GaussContext::new(args.p, args.n).map_err(|e| e.to_string())?;
    if format == OutputFormat::Text {
        writeln!(out, "{GAUSS_HEADER}").map_err(|e| e.to_string())?;
    }
    for a in 1..=i64::from(args.n) {
        let row = GaussRow {
            a,
            gflat: format_complex(gauss_gflat(a, &ctx), 12),
            hflat: format_complex(gauss_hflat(a, &ctx), 12),
        };
        let line = match format {
            OutputFormat::Text => gauss_text_line(&row),
            OutputFormat::Json => gauss_json_line(&row),
        };
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }
    Ok(0)
}
