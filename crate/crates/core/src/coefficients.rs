//! Gauss-sum coefficients of pattern vertices and of admissible rows.
//!
//! Two coefficient calculi live here.  On whole patterns, every Gamma entry
//! contributes a factor keyed by its decoration; the product is the degree-n
//! coefficient of the vertex.  On a single row with a dominant context
//! weight, the same factors are keyed by the position of each entry between
//! its bounds, and sums of such rows form the combinatorial side of the
//! operator identities in `verify`.  The `delta` difference function and the
//! two families `big_f` and `little_f` package the recursion that reduces a
//! row sum in rank `r` to rank `r-1` data; the point of both families is
//! that suitable Demazure words annihilate them.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::crystal::{decorations, gamma_of, EntryFlag, GTPattern};
use crate::laurent::LaurentPoly;
use crate::scalars::{g_flat, h_flat, ScalarPoly};

/// Errors for row construction from runtime input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoefficientError {
    /// Context length must exceed the row length by exactly one.
    LengthMismatch,
    /// The context weight must be non-increasing.
    NonDominantContext,
    /// Weight extraction is only defined on admissible rows.
    NotAdmissible,
}

impl fmt::Display for CoefficientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientError::LengthMismatch => {
                write!(f, "context must be one entry longer than the row")
            }
            CoefficientError::NonDominantContext => {
                write!(f, "context weight must be non-increasing")
            }
            CoefficientError::NotAdmissible => write!(f, "row is not admissible"),
        }
    }
}

impl core::error::Error for CoefficientError {}

// ---------------------------------------------------------------------------
// Pattern coefficients
// ---------------------------------------------------------------------------

/// The degree-n coefficient of a vertex: over the Gamma entries, a circled
/// entry contributes 1, a plain entry `h_flat`, a boxed entry `g_flat`, and
/// a circled boxed entry kills the product.
pub fn gt_coefficient(p: &GTPattern, n: u32) -> ScalarPoly {
    let g = gamma_of(p);
    let d = decorations(p);
    let r = p.rank();
    let mut acc = ScalarPoly::one(n);
    for i in 1..=r {
        for j in i..=r {
            let factor = match d.flag(i, j) {
                EntryFlag::Circled => continue,
                EntryFlag::Undecorated => h_flat(g.entry(i, j), n),
                EntryFlag::Boxed => g_flat(g.entry(i, j), n),
                EntryFlag::CircledBoxed => return ScalarPoly::zero(n),
            };
            acc = &acc * &factor;
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// Admissible rows
// ---------------------------------------------------------------------------

/// A candidate first row `(G_1, ..., G_s)` together with its context weight
/// `lam` of length `s+1`.  The trailing entry `G_{s+1} = 0` is implicit.
/// Entries are unrestricted so that non-admissible rows can be classified;
/// only the context is required to be dominant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissibleRow {
    gamma_row: Vec<i64>,
    context: Vec<i64>,
}

impl AdmissibleRow {
    pub fn new(gamma_row: Vec<i64>, context: Vec<i64>) -> Result<Self, CoefficientError> {
        if context.len() != gamma_row.len() + 1 {
            return Err(CoefficientError::LengthMismatch);
        }
        if context.windows(2).any(|w| w[0] < w[1]) {
            return Err(CoefficientError::NonDominantContext);
        }
        Ok(AdmissibleRow { gamma_row, context })
    }

    pub fn entries(&self) -> &[i64] {
        &self.gamma_row
    }

    pub fn context(&self) -> &[i64] {
        &self.context
    }

    /// Entry `G_j` for `1 <= j <= s+1`, the last being the implicit zero.
    fn entry(&self, j: usize) -> i64 {
        if j <= self.gamma_row.len() {
            self.gamma_row[j - 1]
        } else {
            0
        }
    }

    /// Admissibility bounds for position `j`: the entry must lie between
    /// the next entry and the next entry plus the context gap plus one.
    fn bounds(&self, j: usize) -> (i64, i64) {
        let lo = self.entry(j + 1);
        (lo, lo + self.context[j - 1] - self.context[j] + 1)
    }
}

/// Outcome of [`classify_row`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RowClass {
    /// Every entry lies within its bounds.
    pub admissible: bool,
    /// Admissible, and entries at positions past `k+1` vanish.
    pub k_admissible: bool,
    /// No interior position is pinned at its upper bound together with its
    /// left neighbour.
    pub strict: bool,
}

/// Classify a row against its context; `k = None` places no zero
/// constraint, so `k_admissible` coincides with `admissible`.
pub fn classify_row(row: &AdmissibleRow, k: Option<i64>) -> RowClass {
    let s = row.gamma_row.len();
    let admissible = (1..=s).all(|j| {
        let (lo, hi) = row.bounds(j);
        lo <= row.entry(j) && row.entry(j) <= hi
    });
    let k_admissible = admissible
        && match k {
            None => true,
            Some(k) => (1..=s).all(|j| (j as i64) <= k + 1 || row.entry(j) == 0),
        };
    let non_strict = (2..=s).any(|j| {
        let (_, hi) = row.bounds(j);
        row.entry(j - 1) == row.entry(j) && row.entry(j) == hi
    });
    RowClass {
        admissible,
        k_admissible,
        strict: !non_strict,
    }
}

/// The weight vector of an admissible row: component `i` (for `x_i`) is
/// `lam_{s+2-i} + G_{s+1-i} - G_{s+2-i}` with out-of-range entries zero, so
/// the zero row gives the reversed context.
pub fn row_weight(row: &AdmissibleRow) -> Result<Vec<i64>, CoefficientError> {
    if !classify_row(row, None).admissible {
        return Err(CoefficientError::NotAdmissible);
    }
    let s = row.gamma_row.len();
    let g = |j: usize| if (1..=s).contains(&j) { row.entry(j) } else { 0 };
    Ok((1..=s + 1)
        .map(|i| row.context[s + 1 - i] + g(s + 1 - i) - g(s + 2 - i))
        .collect())
}

/// The coefficient of a row: position at the lower bound contributes 1,
/// interior positions `h_flat`, the upper bound `g_flat`, and anything out
/// of bounds (or a collapsed interval) kills the product.
pub fn row_coefficient(row: &AdmissibleRow, n: u32) -> ScalarPoly {
    let s = row.gamma_row.len();
    let mut acc = ScalarPoly::one(n);
    for j in 1..=s {
        let (lo, hi) = row.bounds(j);
        let e = row.entry(j);
        if e == lo && e < hi {
            continue;
        } else if lo < e && e < hi {
            acc = &acc * &h_flat(e, n);
        } else if lo < e && e == hi {
            acc = &acc * &g_flat(e, n);
        } else {
            return ScalarPoly::zero(n);
        }
    }
    acc
}

/// Every context-admissible row, in ascending lexicographic order.  The
/// bounds chain from the right, with the last entry ranging over
/// `0 ..= lam_s - lam_{s+1} + 1`.
pub fn admissible_rows(context: &[i64]) -> Vec<Vec<i64>> {
    assert!(!context.is_empty(), "context weight cannot be empty");
    let s = context.len() - 1;
    let mut rows: Vec<Vec<i64>> = vec![Vec::new()];
    for j in (1..=s).rev() {
        let gap = context[j - 1] - context[j] + 1;
        let mut next = Vec::new();
        for suffix in &rows {
            let lo = suffix.first().copied().unwrap_or(0);
            for e in lo..=lo + gap {
                let mut row = Vec::with_capacity(suffix.len() + 1);
                row.push(e);
                row.extend_from_slice(suffix);
                next.push(row);
            }
        }
        rows = next;
    }
    rows.sort_unstable();
    rows
}

/// The row attached to a candidate second row `mu`: entry differences are
/// `G_j - G_{j+1} = mu_j - lam_{j+1} - (r - j)`.  It is admissible for
/// context `lam` exactly when `mu` interleaves the shifted weight
/// `lam + (r, r-1, ..., 0)`, which is how component sums are matched with
/// row sums.
pub fn component_row(lam: &[i64], mu: &[i64]) -> Result<AdmissibleRow, CoefficientError> {
    if lam.len() != mu.len() + 1 {
        return Err(CoefficientError::LengthMismatch);
    }
    let r = mu.len();
    let mut entries = vec![0i64; r];
    let mut tail = 0i64;
    for j in (1..=r).rev() {
        tail += mu[j - 1] - lam[j] - (r - j) as i64;
        entries[j - 1] = tail;
    }
    AdmissibleRow::new(entries, lam.to_vec())
}

// ---------------------------------------------------------------------------
// The delta function and the annihilated families
// ---------------------------------------------------------------------------

/// Difference function on pairs: `h_flat(a)` below the threshold,
/// `h_flat(a) - 1` at it, zero above.  At a divisible `a` this reads
/// `1 - v` / `-v` / `0`; at a non-divisible `a` it is `-1` at the threshold
/// and zero elsewhere.
pub fn delta(a: i64, b: i64, n: u32) -> ScalarPoly {
    match a.cmp(&b) {
        Ordering::Less => h_flat(a, n),
        Ordering::Equal => &h_flat(a, n) - &ScalarPoly::one(n),
        Ordering::Greater => ScalarPoly::zero(n),
    }
}

/// The rank-reduction obstruction for a dominant `mu` of length `m` and a
/// positive integer `a`: the sum over `mu`-admissible rows with nonzero
/// final entry of `delta(a, G_1) * row_coefficient * x^{row_weight}`, scaled
/// by `x_m^a`, in `m` variables.  For `m = 1` there is no final entry to be
/// nonzero and the polynomial is zero.  A Demazure word for the long element
/// on the `m` variables annihilates it.
pub fn big_f(mu: &[i64], a: i64, n: u32) -> LaurentPoly {
    let m = mu.len();
    let mut out = LaurentPoly::zero(m, n);
    if m < 2 {
        return out;
    }
    for entries in admissible_rows(mu) {
        if *entries.last().unwrap() == 0 {
            continue;
        }
        let first = entries[0];
        let row = AdmissibleRow::new(entries, mu.to_vec()).unwrap();
        let coeff = &delta(a, first, n) * &row_coefficient(&row, n);
        if coeff.is_zero() {
            continue;
        }
        let mut exps = row_weight(&row).unwrap();
        exps[m - 1] += a;
        out.add_term(&exps, &coeff);
    }
    out
}

/// Per-entry factor capped at `upper`: `h_flat` below, `g_flat` at the cap,
/// zero above.  This is the net coefficient after absorbing a `delta`
/// correction into the bound factor of a row entry.
fn capped_factor(c: i64, upper: i64, n: u32) -> ScalarPoly {
    match c.cmp(&upper) {
        Ordering::Less => h_flat(c, n),
        Ordering::Equal => g_flat(c, n),
        Ordering::Greater => ScalarPoly::zero(n),
    }
}

/// The two-variable kernel of the rank-reduction step, supported on
/// `x_{r-1}` and `x_r` out of `r` variables:
/// sum over `c` in `1 ..= gamma13 + lam2 - lam3 + 1` of
/// `delta(a, c) * capped_factor(c) * x_{r-1}^{lam3 + c - gamma13} *
/// x_r^{lam2 + a - c}`.  An empty range gives zero.  When `n` divides `a`
/// the single operator for the reflection swapping `x_{r-1}` and `x_r`
/// annihilates it.
pub fn little_f(a: i64, gamma13: i64, lam2: i64, lam3: i64, n: u32, r: usize) -> LaurentPoly {
    assert!(r >= 2, "need at least two variables");
    let upper = gamma13 + lam2 - lam3 + 1;
    let mut out = LaurentPoly::zero(r, n);
    for c in 1..=upper {
        let coeff = &delta(a, c, n) * &capped_factor(c, upper, n);
        if coeff.is_zero() {
            continue;
        }
        let mut exps = vec![0i64; r];
        exps[r - 2] = lam3 + c - gamma13;
        exps[r - 1] = lam2 + a - c;
        out.add_term(&exps, &coeff);
    }
    out
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
