//! Rendering: vertex tables, polynomial values, check reports, and the
//! numeric Gauss table, each in plain text or newline-delimited JSON.
//!
//! Both formats are deterministic for identical inputs.  Text rows are
//! tab-separated so golden files stay greppable; JSON output is one record
//! per line so sweeps stream.  Polynomials and ring scalars always use the
//! core canonical `Display` (ascending exponent order, `^` powers,
//! explicit `*`).

use metaplectic_core::coefficients::gt_coefficient;
use metaplectic_core::crystal::{decorations, gamma_of, weight_of, EntryFlag, GTPattern};
use metaplectic_core::verify::CheckReport;
use num_complex::Complex64;
use serde::Serialize;

/// One crystal vertex with everything the table shows.
#[derive(Serialize)]
pub struct VertexRecord {
    pub rows: Vec<Vec<i64>>,
    pub gamma: Vec<Vec<i64>>,
    /// One string per Gamma row: `.` plain, `o` circled, `b` boxed, `x`
    /// both.
    pub decorations: Vec<String>,
    pub weight: Vec<i64>,
    pub coefficient: String,
}

fn flag_char(flag: EntryFlag) -> char {
    match flag {
        EntryFlag::Undecorated => '.',
        EntryFlag::Circled => 'o',
        EntryFlag::Boxed => 'b',
        EntryFlag::CircledBoxed => 'x',
    }
}

pub fn vertex_record(p: &GTPattern, n: u32) -> VertexRecord {
    let deco = decorations(p);
    VertexRecord {
        rows: p.rows().to_vec(),
        gamma: gamma_of(p).rows().to_vec(),
        decorations: deco
            .rows()
            .iter()
            .map(|row| row.iter().map(|&f| flag_char(f)).collect())
            .collect(),
        weight: weight_of(p),
        coefficient: gt_coefficient(p, n).to_string(),
    }
}

fn join_rows(rows: &[Vec<i64>]) -> String {
    rows.iter()
        .map(|row| {
            row.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

fn weight_tuple(weight: &[i64]) -> String {
    let body = weight.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
    format!("({body})")
}

pub const VERTEX_HEADER: &str = "# pattern\tgamma\tdecorations\tweight\tcoefficient";

pub fn vertex_text_line(rec: &VertexRecord) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}",
        join_rows(&rec.rows),
        join_rows(&rec.gamma),
        rec.decorations.join(" / "),
        weight_tuple(&rec.weight),
        rec.coefficient
    )
}

pub fn vertex_json_line(rec: &VertexRecord) -> String {
    serde_json::to_string(rec).expect("vertex records serialize")
}

/// JSON shape of a check report; the difference polynomial is rendered to
/// its canonical string when present.
#[derive(Serialize)]
struct ReportRecord<'a> {
    statement: &'a str,
    r: usize,
    k: Option<i64>,
    lam: &'a [i64],
    n: u32,
    pass: bool,
    difference: Option<String>,
}

pub fn report_text_line(report: &CheckReport) -> String {
    match &report.difference {
        Some(d) => format!("{report} difference={d}"),
        None => report.to_string(),
    }
}

pub fn report_json_line(report: &CheckReport) -> String {
    let rec = ReportRecord {
        statement: report.statement,
        r: report.r,
        k: report.k,
        lam: &report.lam,
        n: report.n,
        pass: report.pass,
        difference: report.difference.as_ref().map(|d| d.to_string()),
    };
    serde_json::to_string(&rec).expect("report records serialize")
}

/// `x` with `sig` significant digits in plain decimal notation.
pub fn format_significant(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return format!("{:.*}", sig, 0.0);
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Complex values print the real part alone when the imaginary part is
/// numerically zero, otherwise `a+bi` / `a-bi`.
pub fn format_complex(z: Complex64, sig: usize) -> String {
    if z.im.abs() <= 1e-12 {
        format_significant(z.re, sig)
    } else {
        let im = format_significant(z.im.abs(), sig);
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{}{}{}i", format_significant(z.re, sig), sign, im)
    }
}

pub const GAUSS_HEADER: &str = "# a\tgflat\thflat";

#[derive(Serialize)]
pub struct GaussRow {
    pub a: i64,
    pub gflat: String,
    pub hflat: String,
}

pub fn gauss_text_line(row: &GaussRow) -> String {
    format!("{}\t{}\t{}", row.a, row.gflat, row.hflat)
}

pub fn gauss_json_line(row: &GaussRow) -> String {
    serde_json::to_string(row).expect("gauss rows serialize")
}
