//! Sweep execution: expand a configuration into a deterministic list of
//! check instances, run them (in parallel when asked), and render the
//! reports in parameter order.
//!
//! Instance order is by parameter tuple (rank, degree, weight, section
//! length, ...) regardless of completion order, so identical inputs give
//! byte-identical output.  The `METAPLECTIC_FAULT` environment variable
//! appends one deliberately mismatched comparison to the end of any sweep;
//! it exists so the failure path (exit code 1, nonzero difference in the
//! report) stays testable against a library whose real checks all pass.

use std::f64::consts::TAU;

use metaplectic_core::verify::{
    check_branching, check_classic_tokuyama, check_f, check_longword_formulas, check_main,
    check_mn, check_tokuyama, crystal_side, operator_side, CheckReport, MNKind,
};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::config::{OutputFormat, Statement, SweepConfig};
use crate::formats::{format_significant, report_json_line, report_text_line};
use crate::gauss::{gauss_gflat, gauss_hflat, specialize_poly, GaussContext};

/// Number of sample monomials per long-word instance.
pub const LONGWORD_SAMPLES: usize = 20;

/// The numeric grid: primes paired with the degrees they support.
pub const GAUSS_GRID: [(u32, u64); 3] = [(2, 5), (3, 7), (4, 17)];

/// Tolerance for every numeric Gauss check.
pub const GAUSS_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug)]
enum Job {
    Main { lam: Vec<i64>, w_length: usize, n: u32 },
    Tokuyama { lam: Vec<i64>, n: u32 },
    Classic { lam: Vec<i64> },
    Mn { kind: MNKind, r: usize, k: usize, lam: Vec<i64>, n: u32 },
    F { mu: Vec<i64>, a: i64, n: u32 },
    Longword { r: usize, n: u32 },
    Branching { lam: Vec<i64>, n: u32 },
    Gauss { n: u32, p: u64, seed: u64 },
    Fault,
}

/// Either a symbolic check report or a numeric one.
enum ReportLine {
    Check(CheckReport),
    Gauss { n: u32, p: u64, pass: bool, max_error: f64 },
}

impl ReportLine {
    fn pass(&self) -> bool {
        match self {
            ReportLine::Check(r) => r.pass,
            ReportLine::Gauss { pass, .. } => *pass,
        }
    }

    fn render(&self, format: OutputFormat) -> String {
        match (self, format) {
            (ReportLine::Check(r), OutputFormat::Text) => report_text_line(r),
            (ReportLine::Check(r), OutputFormat::Json) => report_json_line(r),
            (ReportLine::Gauss { n, p, pass, max_error }, OutputFormat::Text) => {
                format!(
                    "gauss n={n} p={p} max_error={} {}",
                    format_significant(*max_error, 3),
                    if *pass { "pass" } else { "FAIL" }
                )
            }
            (ReportLine::Gauss { n, p, pass, max_error }, OutputFormat::Json) => {
                serde_json::json!({
                    "statement": "gauss",
                    "n": n,
                    "p": p,
                    "pass": pass,
                    "max_error": format_significant(*max_error, 3),
                })
                .to_string()
            }
        }
    }
}

/// All dominant effective weights of the given length with first entry at
/// most `bound`, in ascending lexicographic order.
pub fn dominant_weights(len: usize, bound: i64) -> Vec<Vec<i64>> {
    fn extend(prefix: &mut Vec<i64>, len: usize, cap: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=cap {
            prefix.push(e);
            extend(prefix, len, e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), len, bound, &mut out);
    out.sort_unstable();
    out
}

fn build_jobs(cfg: &SweepConfig) -> Vec<Job> {
    let mut jobs = Vec::new();
    let ranks = cfg.r.0..=cfg.r.1;
    match cfg.statement {
        Statement::Main => {
            for r in ranks {
                let r = r as usize;
                for n in cfg.n.0..=cfg.n.1 {
                    for lam in dominant_weights(r + 1, cfg.lambda_max) {
                        for w_length in 0..=r * (r + 1) / 2 {
                            jobs.push(Job::Main { lam: lam.clone(), w_length, n });
                        }
                    }
                }
            }
        }
        Statement::Tokuyama => {
            for r in ranks {
                for n in cfg.n.0..=cfg.n.1 {
                    for lam in dominant_weights(r as usize + 1, cfg.lambda_max) {
                        jobs.push(Job::Tokuyama { lam, n });
                    }
                }
            }
        }
        Statement::Classic => {
            for r in ranks {
                for lam in dominant_weights(r as usize + 1, cfg.lambda_max) {
                    jobs.push(Job::Classic { lam });
                }
            }
        }
        Statement::MN => {
            for r in ranks {
                let r = r as usize;
                for n in cfg.n.0..=cfg.n.1 {
                    for lam in dominant_weights(r + 1, cfg.lambda_max) {
                        for k in 0..r {
                            for kind in [MNKind::M, MNKind::N] {
                                jobs.push(Job::Mn { kind, r, k, lam: lam.clone(), n });
                            }
                        }
                    }
                }
            }
        }
        Statement::F => {
            for r in ranks {
                for n in cfg.n.0..=cfg.n.1 {
                    for mu in dominant_weights(r as usize + 1, cfg.lambda_max) {
                        for a in 1..=i64::from(2 * n + 1) {
                            jobs.push(Job::F { mu: mu.clone(), a, n });
                        }
                    }
                }
            }
        }
        Statement::Longword => {
            for r in ranks {
                for n in cfg.n.0..=cfg.n.1 {
                    jobs.push(Job::Longword { r: r as usize, n });
                }
            }
        }
        Statement::Branching => {
            for r in ranks {
                for n in cfg.n.0..=cfg.n.1 {
                    for lam in dominant_weights(r as usize + 1, cfg.lambda_max) {
                        jobs.push(Job::Branching { lam, n });
                    }
                }
            }
        }
        Statement::Gauss => {
            for (n, p) in GAUSS_GRID {
                jobs.push(Job::Gauss { n, p, seed: cfg.seed });
            }
        }
    }
    if std::env::var_os("METAPLECTIC_FAULT").is_some() {
        jobs.push(Job::Fault);
    }
    jobs
}

fn run_job(job: &Job) -> ReportLine {
    match job {
        Job::Main { lam, w_length, n } => ReportLine::Check(check_main(lam, *w_length, *n)),
        Job::Tokuyama { lam, n } => ReportLine::Check(check_tokuyama(lam, *n)),
        Job::Classic { lam } => ReportLine::Check(check_classic_tokuyama(lam)),
        Job::Mn { kind, r, k, lam, n } => {
            ReportLine::Check(check_mn(*kind, *r, *k, lam, *n))
        }
        Job::F { mu, a, n } => ReportLine::Check(check_f(mu, *a, *n)),
        Job::Longword { r, n } => {
            ReportLine::Check(check_longword_formulas(*r, *n, LONGWORD_SAMPLES))
        }
        Job::Branching { lam, n } => ReportLine::Check(check_branching(lam, *n)),
        Job::Gauss { n, p, seed } => run_gauss_grid(*n, *p, *seed),
        Job::Fault => {
            // Compare deliberately mismatched section lengths so a genuine
            // nonzero difference flows through the normal report path.
            let lhs = operator_side(&[1, 0], 1, 1).expect("valid weight");
            let rhs = crystal_side(&[1, 0], 0, 1).expect("valid weight");
            let difference = &lhs - &rhs;
            ReportLine::Check(CheckReport {
                statement: "fault",
                r: 1,
                k: None,
                lam: vec![1, 0],
                n: 1,
                pass: difference.is_zero(),
                difference: Some(difference),
            })
        }
    }
}

/// Deterministic nonzero sample points on an annulus, spread by the seed.
pub fn sample_points(seed: u64, vars: usize) -> Vec<Complex64> {
    (0..vars as u64)
        .map(|j| {
            let t = seed
                .wrapping_mul(0x9E37_79B9)
                .wrapping_add(j.wrapping_mul(0x85EB_CA6B))
                .wrapping_add(1);
            let angle = TAU * ((t % 360) as f64) / 360.0;
            let radius = 0.8 + ((t / 360) % 11) as f64 / 20.0;
            Complex64::new(0.0, angle).exp() * radius
        })
        .collect()
}

/// Run every numeric check for one `(n, p)` cell: the product identity for
/// `gflat`, the case split for `hflat`, the magnitude of nontrivial sums,
/// and the specialization of one symbolic identity instance.
fn run_gauss_grid(n: u32, p: u64, seed: u64) -> ReportLine {
    let ctx = match GaussContext::new(p, n) {
        Ok(ctx) => ctx,
        Err(_) => {
            return ReportLine::Gauss { n, p, pass: false, max_error: f64::INFINITY };
        }
    };
    let mut max_error = 0f64;
    let q = ctx.q();
    for a in 1..i64::from(n) {
        let prod = gauss_gflat(a, &ctx) * gauss_gflat(i64::from(n) - a, &ctx);
        max_error = max_error.max((prod - Complex64::new(1.0 / q, 0.0)).norm());
        max_error = max_error.max((gauss_gflat(a, &ctx).norm() - q.powf(-0.5)).abs());
    }
    for a in 0..=i64::from(2 * n) {
        let expected = if a % i64::from(n) == 0 {
            Complex64::new(1.0 - 1.0 / q, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        };
        max_error = max_error.max((gauss_hflat(a, &ctx) - expected).norm());
    }
    // One symbolic identity instance, specialized through both pipelines.
    let lam = [1i64, 0];
    let xs = sample_points(seed, lam.len());
    let ops = operator_side(&lam, 1, n).expect("valid weight");
    let crys = crystal_side(&lam, 1, n).expect("valid weight");
    let ops_value = specialize_poly(&ops, &ctx, &xs).expect("valid samples");
    let crys_value = specialize_poly(&crys, &ctx, &xs).expect("valid samples");
    max_error = max_error.max((ops_value - crys_value).norm());

    ReportLine::Gauss { n, p, pass: max_error < GAUSS_TOLERANCE, max_error }
}

/// Rendered sweep results in parameter order plus the overall outcome.
pub struct SweepOutcome {
    pub lines: Vec<String>,
    pub all_pass: bool,
}

pub fn run_sweep(cfg: &SweepConfig) -> SweepOutcome {
    let jobs = build_jobs(cfg);
    let execute = || jobs.par_iter().map(run_job).collect::<Vec<_>>();
    let reports = if cfg.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .expect("worker pool")
            .install(execute)
    } else {
        execute()
    };
    SweepOutcome {
        all_pass: reports.iter().all(ReportLine::pass),
        lines: reports.iter().map(|r| r.render(cfg.format)).collect(),
    }
}
