//! Gelfand-Tsetlin patterns as crystal vertices.
//!
//! A pattern of rank `r` is a triangular array `a_{ij}` (`0 <= i <= j <= r`)
//! of non-negative integers whose rows interleave: `a_{i-1,j-1} >= a_{ij} >=
//! a_{i-1,j}`.  Patterns with a fixed top row parametrize the vertices of the
//! highest-weight crystal of that weight, and everything downstream (weights,
//! coefficients, Demazure subsets) is computed from the pattern alone; no
//! crystal edges or raising operators are ever materialized.
//!
//! The second coordinate system is the Gamma array `G_{ij} = sum_{k>=j}
//! (a_{ik} - a_{i-1,k})`.  Read bottom row first, each row left to right, its
//! entries are the string lengths `(b_1, b_2, ...)` of the vertex along the
//! favourite reduced word of the long element, which is what makes Demazure
//! subsets a plain zero-pattern condition on Gamma entries.  Entries carry
//! decorations (circled when the string move is forced short, boxed when it
//! is maximal) that drive the coefficient attached to the vertex.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors for pattern and Gamma-array construction from runtime input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrystalError {
    /// Row lengths do not form a triangle `r+1, r, ..., 1`.
    MalformedRows,
    /// Some entry is negative.
    NegativeEntry,
    /// Consecutive rows fail the interleaving inequalities.
    NotInterleaving,
    /// A top row was not non-increasing and non-negative.
    InvalidTopRow,
    /// No interleaving pattern reproduces the given Gamma array.
    InvalidGamma,
    /// A Demazure word length outside the supported range.
    WordLengthOutOfRange { len: usize, lo: usize, hi: usize },
}

impl fmt::Display for CrystalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrystalError::MalformedRows => write!(f, "rows do not form a triangular array"),
            CrystalError::NegativeEntry => write!(f, "pattern entries must be non-negative"),
            CrystalError::NotInterleaving => write!(f, "rows do not interleave"),
            CrystalError::InvalidTopRow => {
                write!(f, "top row must be non-increasing and non-negative")
            }
            CrystalError::InvalidGamma => {
                write!(f, "no interleaving pattern has this Gamma array")
            }
            CrystalError::WordLengthOutOfRange { len, lo, hi } => {
                write!(f, "word length {len} outside supported range {lo}..={hi}")
            }
        }
    }
}

impl core::error::Error for CrystalError {}

fn is_valid_top_row(row: &[i64]) -> bool {
    !row.is_empty() && row.windows(2).all(|w| w[0] >= w[1]) && *row.last().unwrap() >= 0
}

// ---------------------------------------------------------------------------
// Patterns
// ---------------------------------------------------------------------------

/// A Gelfand-Tsetlin pattern.  Row `i` has length `r+1-i`; entry `a_{ij}`
/// lives at `rows[i][j-i]` for `i <= j <= r`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GTPattern {
    rows: Vec<Vec<i64>>,
}

impl GTPattern {
    /// Build a pattern, checking the triangular shape, non-negativity and
    /// the interleaving inequalities.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, CrystalError> {
        if rows.is_empty() {
            return Err(CrystalError::MalformedRows);
        }
        let r = rows.len() - 1;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != r + 1 - i {
                return Err(CrystalError::MalformedRows);
            }
        }
        if rows.iter().any(|row| row.iter().any(|&a| a < 0)) {
            return Err(CrystalError::NegativeEntry);
        }
        let p = GTPattern { rows };
        for i in 1..=r {
            for j in i..=r {
                let above_left = p.entry(i - 1, j - 1);
                let above_right = p.entry(i - 1, j);
                let here = p.entry(i, j);
                if !(above_left >= here && here >= above_right) {
                    return Err(CrystalError::NotInterleaving);
                }
            }
        }
        Ok(p)
    }

    /// The rank `r` (the top row has `r+1` entries).
    pub fn rank(&self) -> usize {
        self.rows.len() - 1
    }

    /// All rows, top row first.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// The top row `a_{00}, ..., a_{0r}`.
    pub fn top_row(&self) -> &[i64] {
        &self.rows[0]
    }

    /// Entry `a_{ij}` for `0 <= i <= j <= r`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j - i]
    }

    /// Row sum `d_i`.
    pub fn row_sum(&self, i: usize) -> i64 {
        self.rows[i].iter().sum()
    }
}

impl fmt::Display for GTPattern {
    /// Rows separated by `/`, entries by spaces: `3 1 0 / 3 1 / 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            for (t, a) in row.iter().enumerate() {
                if t > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

/// The weight `(d_r, d_{r-1}-d_r, ..., d_0-d_1)` read off the row sums;
/// component `m` is the exponent of `x_{m+1}`.
pub fn weight_of(p: &GTPattern) -> Vec<i64> {
    let r = p.rank();
    let sums: Vec<i64> = (0..=r).map(|i| p.row_sum(i)).collect();
    let mut wt = Vec::with_capacity(r + 1);
    wt.push(sums[r]);
    for m in 1..=r {
        wt.push(sums[r - m] - sums[r - m + 1]);
    }
    wt
}

/// The pattern with the top row removed; its rank drops by one.  Its weight
/// and coefficient are the branching data of the vertex relative to the
/// component of its second row.
pub fn strip_top_row(p: &GTPattern) -> GTPattern {
    assert!(p.rank() >= 1, "cannot strip the only row of a pattern");
    GTPattern {
        rows: p.rows[1..].to_vec(),
    }
}

/// All patterns with the given top row, ordered lexicographically by the
/// concatenation of their rows.
pub fn enumerate_patterns(top_row: &[i64]) -> Result<Vec<GTPattern>, CrystalError> {
    if !is_valid_top_row(top_row) {
        return Err(CrystalError::InvalidTopRow);
    }
    let mut out = Vec::new();
    let mut rows = vec![top_row.to_vec()];
    extend_rows(&mut rows, &mut out);
    Ok(out)
}

/// Depth-first extension by one interleaving row at a time.  Each candidate
/// row is produced in ascending lexicographic order, so the final list is
/// lexicographic on concatenated rows.
fn extend_rows(rows: &mut Vec<Vec<i64>>, out: &mut Vec<GTPattern>) {
    let prev = rows.last().unwrap().clone();
    if prev.len() == 1 {
        out.push(GTPattern { rows: rows.clone() });
        return;
    }
    let len = prev.len() - 1;
    let mut row: Vec<i64> = (0..len).map(|t| prev[t + 1]).collect();
    loop {
        rows.push(row.clone());
        extend_rows(rows, out);
        rows.pop();
        // Odometer step within the per-entry bounds prev[t+1] ..= prev[t].
        let mut t = len;
        loop {
            if t == 0 {
                return;
            }
            t -= 1;
            if row[t] < prev[t] {
                row[t] += 1;
                for s in (t + 1)..len {
                    row[s] = prev[s + 1];
                }
                break;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Gamma arrays
// ---------------------------------------------------------------------------

/// The Gamma array of a pattern: entries `G_{ij}` for `1 <= i <= j <= r`,
/// stored with the source pattern's top row so the array determines the
/// pattern (and hence the decorations) on its own.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaArray {
    top_row: Vec<i64>,
    entries: Vec<Vec<i64>>,
}

impl GammaArray {
    /// Build an array, checking the triangular shape against the top row and
    /// that each row is non-negative and non-increasing.  Whether an
    /// interleaving pattern actually realizes the entries is only decided by
    /// [`pattern_of_gamma`].
    pub fn new(top_row: Vec<i64>, entries: Vec<Vec<i64>>) -> Result<Self, CrystalError> {
        if !is_valid_top_row(&top_row) {
            return Err(CrystalError::InvalidTopRow);
        }
        let r = top_row.len() - 1;
        if entries.len() != r {
            return Err(CrystalError::MalformedRows);
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != r - i {
                return Err(CrystalError::MalformedRows);
            }
            if row.iter().any(|&g| g < 0) {
                return Err(CrystalError::NegativeEntry);
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return Err(CrystalError::InvalidGamma);
            }
        }
        Ok(GammaArray { top_row, entries })
    }

    /// The rank `r` of the source pattern.
    pub fn rank(&self) -> usize {
        self.top_row.len() - 1
    }

    /// Top row of the source pattern.
    pub fn top_row(&self) -> &[i64] {
        &self.top_row
    }

    /// Rows of the array; row `i` (1-based) is `G_{ii}, ..., G_{ir}`.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Entry `G_{ij}` for `1 <= i <= j <= r+1`, with the padding column
    /// `G_{i,r+1} = 0` built in.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if j == self.rank() + 1 {
            0
        } else {
            self.entries[i - 1][j - i]
        }
    }

    /// The first row `G_{11}, ..., G_{1r}`.
    pub fn first_row(&self) -> &[i64] {
        &self.entries[0]
    }
}

impl fmt::Display for GammaArray {
    /// Same layout as patterns: `3 1 / 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            for (t, g) in row.iter().enumerate() {
                if t > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{g}")?;
            }
        }
        Ok(())
    }
}

/// The Gamma array `G_{ij} = sum_{k=j}^{r} (a_{ik} - a_{i-1,k})`.
pub fn gamma_of(p: &GTPattern) -> GammaArray {
    let r = p.rank();
    let mut entries = Vec::with_capacity(r);
    for i in 1..=r {
        let mut row = Vec::with_capacity(r + 1 - i);
        let mut tail = 0;
        // Accumulate from the right so each entry is one addition.
        let mut rev = Vec::with_capacity(r + 1 - i);
        for j in (i..=r).rev() {
            tail += p.entry(i, j) - p.entry(i - 1, j);
            rev.push(tail);
        }
        row.extend(rev.into_iter().rev());
        entries.push(row);
    }
    GammaArray {
        top_row: p.top_row().to_vec(),
        entries,
    }
}

/// Invert [`gamma_of`]: rebuild the unique pattern with the given top row
/// and Gamma array, failing with `InvalidGamma` when no interleaving pattern
/// exists.  The `top_row` argument must agree with the array's own context.
pub fn pattern_of_gamma(top_row: &[i64], g: &GammaArray) -> Result<GTPattern, CrystalError> {
    if g.top_row() != top_row {
        return Err(CrystalError::InvalidGamma);
    }
    let r = g.rank();
    let mut rows = vec![top_row.to_vec()];
    for i in 1..=r {
        // a_{ij} = a_{i-1,j} + G_{ij} - G_{i,j+1}, right to left.
        let mut row = vec![0; r + 1 - i];
        for j in i..=r {
            row[j - i] = rows[i - 1][j - (i - 1)] + g.entry(i, j) - g.entry(i, j + 1);
        }
        rows.push(row);
    }
    GTPattern::new(rows).map_err(|_| CrystalError::InvalidGamma)
}

// ---------------------------------------------------------------------------
// Decorations
// ---------------------------------------------------------------------------

/// Decoration of a single Gamma entry.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EntryFlag {
    Undecorated,
    Circled,
    Boxed,
    CircledBoxed,
}

impl fmt::Display for EntryFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EntryFlag::Undecorated => "plain",
            EntryFlag::Circled => "circled",
            EntryFlag::Boxed => "boxed",
            EntryFlag::CircledBoxed => "circled+boxed",
        };
        write!(f, "{s}")
    }
}

/// Per-entry decoration flags, in the same triangular layout as the Gamma
/// array rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decoration {
    flags: Vec<Vec<EntryFlag>>,
}

impl Decoration {
    /// Rows of flags; row `i` (1-based) covers entries `(i,i), ..., (i,r)`.
    pub fn rows(&self) -> &[Vec<EntryFlag>] {
        &self.flags
    }

    /// Flag for entry `(i, j)`, `1 <= i <= j <= r`.
    pub fn flag(&self, i: usize, j: usize) -> EntryFlag {
        self.flags[i - 1][j - i]
    }
}

/// Decorations read off the pattern: entry `(i,j)` is circled when
/// `a_{ij} = a_{i-1,j}` (the string step is forced short) and boxed when
/// `a_{ij} = a_{i-1,j-1}` (it is maximal).  Both at once happens exactly on
/// non-strict patterns and forces a zero coefficient.
pub fn decorations(p: &GTPattern) -> Decoration {
    let r = p.rank();
    let mut flags = Vec::with_capacity(r);
    for i in 1..=r {
        let mut row = Vec::with_capacity(r + 1 - i);
        for j in i..=r {
            let circled = p.entry(i, j) == p.entry(i - 1, j);
            let boxed = p.entry(i, j) == p.entry(i - 1, j - 1);
            row.push(match (circled, boxed) {
                (true, true) => EntryFlag::CircledBoxed,
                (true, false) => EntryFlag::Circled,
                (false, true) => EntryFlag::Boxed,
                (false, false) => EntryFlag::Undecorated,
            });
        }
        flags.push(row);
    }
    Decoration { flags }
}

// ---------------------------------------------------------------------------
// Branching and Demazure subsets
// ---------------------------------------------------------------------------

/// Second rows `mu` interleaving with the top row, each with the vertices
/// whose second row is `mu`.  Components are listed in descending
/// lexicographic order of `mu`; within a component patterns keep the
/// [`enumerate_patterns`] order.
pub fn mu_components(top_row: &[i64]) -> Result<Vec<(Vec<i64>, Vec<GTPattern>)>, CrystalError> {
    if !is_valid_top_row(top_row) || top_row.len() < 2 {
        return Err(CrystalError::InvalidTopRow);
    }
    let r = top_row.len() - 1;
    let mut mus = vec![Vec::with_capacity(r)];
    for t in 0..r {
        let mut next = Vec::new();
        for stem in &mus {
            // Descending lex: try the largest allowed entry first.
            for val in (top_row[t + 1]..=top_row[t]).rev() {
                let mut m = stem.clone();
                m.push(val);
                next.push(m);
            }
        }
        mus = next;
    }
    let patterns = enumerate_patterns(top_row)?;
    let mut out = Vec::with_capacity(mus.len());
    for mu in mus {
        let members: Vec<GTPattern> = patterns
            .iter()
            .filter(|p| p.rows()[1] == mu)
            .cloned()
            .collect();
        out.push((mu, members));
    }
    Ok(out)
}

/// The lowest vertex of the component with second row `mu`: every row below
/// the first repeats `mu`, so the Gamma array vanishes below its first row.
pub fn lowest_vertex(top_row: &[i64], mu: &[i64]) -> Result<GTPattern, CrystalError> {
    if !is_valid_top_row(top_row) || top_row.len() < 2 {
        return Err(CrystalError::InvalidTopRow);
    }
    let r = top_row.len() - 1;
    if mu.len() != r {
        return Err(CrystalError::MalformedRows);
    }
    for t in 0..r {
        if !(top_row[t] >= mu[t] && mu[t] >= top_row[t + 1]) {
            return Err(CrystalError::NotInterleaving);
        }
    }
    let mut rows = vec![top_row.to_vec()];
    for i in 1..=r {
        rows.push(mu[i - 1..].to_vec());
    }
    Ok(GTPattern { rows })
}

/// Position of `G_{ij}` in the string vector `(b_1, b_2, ...)`: the Gamma
/// rows are read bottom-up, left to right, so `G_{ij}` is entry number
/// `C(r+1-i, 2) + (j - i + 1)`.
fn string_position(r: usize, i: usize, j: usize) -> usize {
    let rows_below = r - i;
    rows_below * (rows_below + 1) / 2 + (j - i + 1)
}

/// Vertices of the full crystal whose string entries `b_m` vanish for
/// `m > w_length`, for any `0 <= w_length <= r(r+1)/2`.  This is the
/// definitional membership test for the Demazure subset attached to the
/// beginning section of that length; [`demazure_members`] restricts it to
/// the lengths where only first-row Gamma entries are constrained.
pub fn string_members(top_row: &[i64], w_length: usize) -> Result<Vec<GTPattern>, CrystalError> {
    if !is_valid_top_row(top_row) {
        return Err(CrystalError::InvalidTopRow);
    }
    let r = top_row.len() - 1;
    let hi = r * (r + 1) / 2;
    if w_length > hi {
        return Err(CrystalError::WordLengthOutOfRange { len: w_length, lo: 0, hi });
    }
    let members = enumerate_patterns(top_row)?
        .into_iter()
        .filter(|p| {
            let g = gamma_of(p);
            (1..=r).all(|i| {
                (i..=r).all(|j| string_position(r, i, j) <= w_length || g.entry(i, j) == 0)
            })
        })
        .collect();
    Ok(members)
}

/// Members of the Demazure subset for the beginning section of length
/// `w_length`, where `C(r,2) <= w_length <= C(r+1,2)`: exactly the vertices
/// whose first Gamma row ends in `C(r+1,2) - w_length` zeros.  Shorter
/// sections constrain lower Gamma rows as well; use [`string_members`] for
/// those (the two agree on this range).
pub fn demazure_members(top_row: &[i64], w_length: usize) -> Result<Vec<GTPattern>, CrystalError> {
    if !is_valid_top_row(top_row) {
        return Err(CrystalError::InvalidTopRow);
    }
    let r = top_row.len() - 1;
    let lo = r * (r - 1) / 2;
    let hi = r * (r + 1) / 2;
    if w_length < lo || w_length > hi {
        return Err(CrystalError::WordLengthOutOfRange { len: w_length, lo, hi });
    }
    string_members(top_row, w_length)
}

// ---------------------------------------------------------------------------
// Lusztig data
// ---------------------------------------------------------------------------

/// Root exponents of the vertex along the positive roots: the value at
/// position `(h,k)` (the Gamma layout) is `G_{h,k} - G_{h,k+1}` and counts
/// the root `e_i - e_j` with `i = r+1-k`, `j = r+2-h`.  All values are
/// non-negative, and they sum against their roots to `wt(v) - w0(top row)`.
pub fn lusztig_data_of(g: &GammaArray) -> Vec<Vec<i64>> {
    let r = g.rank();
    (1..=r)
        .map(|h| (h..=r).map(|k| g.entry(h, k) - g.entry(h, k + 1)).collect())
        .collect()
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use proptest::prelude::*;

    fn pat(rows: &[&[i64]]) -> GTPattern {
        GTPattern::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// Product formula for the number of interleaving completions of a top
    /// row: prod_{i<j} (T_i - T_j + j - i) / (j - i).  Independent of the
    /// enumeration logic.
    fn dimension_oracle(top: &[i64]) -> i64 {
        let m = top.len();
        let mut num = 1i64;
        let mut den = 1i64;
        for i in 0..m {
            for j in (i + 1)..m {
                num *= top[i] - top[j] + (j - i) as i64;
                den *= (j - i) as i64;
            }
        }
        num / den
    }

    #[test]
    fn enumeration_counts_and_order() {
        let two_zero = enumerate_patterns(&[2, 0]).unwrap();
        assert_eq!(two_zero.len(), 3);
        // Lexicographic on the concatenated rows: second row 0, 1, 2.
        let seconds: Vec<i64> = two_zero.iter().map(|p| p.rows()[1][0]).collect();
        assert_eq!(seconds, vec![0, 1, 2]);

        assert_eq!(enumerate_patterns(&[3, 1, 0]).unwrap().len(), 15);
        assert_eq!(dimension_oracle(&[3, 1, 0]), 15);
        assert_eq!(enumerate_patterns(&[1, 1]).unwrap().len(), 1);
        assert!(enumerate_patterns(&[0, 1]).is_err());
        assert!(enumerate_patterns(&[1, -1]).is_err());
    }

    #[test]
    fn enumeration_matches_dimension_oracle() {
        for top in [
            &[4, 0][..],
            &[3, 2, 0][..],
            &[4, 2, 1][..],
            &[2, 1, 1, 0][..],
            &[3, 2, 1, 0][..],
        ] {
            assert_eq!(
                enumerate_patterns(top).unwrap().len() as i64,
                dimension_oracle(top),
                "top row {top:?}"
            );
        }
    }

    #[test]
    fn pattern_validation() {
        assert!(GTPattern::new(vec![vec![2, 0], vec![1]]).is_ok());
        assert_eq!(
            GTPattern::new(vec![vec![2, 0]]).unwrap_err(),
            CrystalError::MalformedRows
        );
        assert_eq!(
            GTPattern::new(vec![vec![2, 0], vec![3]]).unwrap_err(),
            CrystalError::NotInterleaving
        );
        assert_eq!(
            GTPattern::new(vec![vec![2, -1], vec![0]]).unwrap_err(),
            CrystalError::NegativeEntry
        );
        assert_eq!(format!("{}", pat(&[&[3, 1, 0], &[3, 1], &[2]])), "3 1 0 / 3 1 / 2");
    }

    #[test]
    fn gamma_of_worked_examples() {
        let g = gamma_of(&pat(&[&[3, 1, 0], &[3, 1], &[2]]));
        assert_eq!(g.rows(), &[vec![3, 1], vec![1]]);

        // First-row entry (1,1) sums both column differences: (3-1) + (0-0).
        let g = gamma_of(&pat(&[&[3, 1, 0], &[3, 0], &[0]]));
        assert_eq!(g.rows(), &[vec![2, 0], vec![0]]);

        // The lowest pattern repeats the top row tail and has no differences.
        let lowest = pat(&[&[3, 1, 0], &[1, 0], &[0]]);
        assert!(gamma_of(&lowest).rows().iter().all(|row| row.iter().all(|&e| e == 0)));
    }

    #[test]
    fn gamma_round_trip_examples() {
        let top = [3i64, 1, 0];
        let g = GammaArray::new(top.to_vec(), vec![vec![3, 1], vec![1]]).unwrap();
        assert_eq!(
            pattern_of_gamma(&top, &g).unwrap(),
            pat(&[&[3, 1, 0], &[3, 1], &[2]])
        );
        let g = GammaArray::new(vec![2, 0], vec![vec![0]]).unwrap();
        assert_eq!(pattern_of_gamma(&[2, 0], &g).unwrap(), pat(&[&[2, 0], &[0]]));

        // Gamma entries too large for any interleaving completion.
        let g = GammaArray::new(top.to_vec(), vec![vec![5, 0], vec![0]]).unwrap();
        assert_eq!(pattern_of_gamma(&top, &g).unwrap_err(), CrystalError::InvalidGamma);
        // Context mismatch between the argument and the array.
        let g = GammaArray::new(vec![2, 0], vec![vec![1]]).unwrap();
        assert_eq!(pattern_of_gamma(&[3, 0], &g).unwrap_err(), CrystalError::InvalidGamma);
    }

    #[test]
    fn gamma_round_trip_exhaustive() {
        for top in [&[3, 1, 0][..], &[4, 4, 0][..], &[2, 1, 1, 0][..]] {
            for p in enumerate_patterns(top).unwrap() {
                let g = gamma_of(&p);
                assert_eq!(pattern_of_gamma(top, &g).unwrap(), p, "pattern {p}");
            }
        }
    }

    #[test]
    fn decoration_worked_examples() {
        // Entries (1,1) and (1,2) are maximal, entry (2,2) is interior.
        let d = decorations(&pat(&[&[3, 1, 0], &[3, 1], &[2]]));
        assert_eq!(d.flag(1, 1), EntryFlag::Boxed);
        assert_eq!(d.flag(1, 2), EntryFlag::Boxed);
        assert_eq!(d.flag(2, 2), EntryFlag::Undecorated);

        // Lowest vertex of a component: everything below row 1 is circled
        // and not boxed when mu is strongly dominant.
        let low = lowest_vertex(&[3, 1, 0], &[2, 1]).unwrap();
        let d = decorations(&low);
        assert_eq!(d.flag(2, 2), EntryFlag::Circled);

        // Repeated entries in consecutive rows pin an entry on both sides.
        let d = decorations(&pat(&[&[1, 1, 0], &[1, 1], &[1]]));
        assert_eq!(d.flag(1, 1), EntryFlag::CircledBoxed);
    }

    /// The same flags via Gamma-entry inequalities: with `U = G_{i,j+1} +
    /// a_{i-1,j-1} - a_{i-1,j}`, circled means `G_{ij} = G_{i,j+1}` and boxed
    /// means `G_{ij} = U`.  Checked against the pattern-entry rule.
    #[test]
    fn decoration_rules_agree_between_coordinates() {
        for top in [&[3, 1, 0][..], &[2, 2, 0][..], &[3, 2, 1, 0][..]] {
            for p in enumerate_patterns(top).unwrap() {
                let g = gamma_of(&p);
                let d = decorations(&p);
                let r = p.rank();
                for i in 1..=r {
                    for j in i..=r {
                        let upper = g.entry(i, j + 1) + p.entry(i - 1, j - 1) - p.entry(i - 1, j);
                        let circled = g.entry(i, j) == g.entry(i, j + 1);
                        let boxed = g.entry(i, j) == upper;
                        let expected = match (circled, boxed) {
                            (true, true) => EntryFlag::CircledBoxed,
                            (true, false) => EntryFlag::Circled,
                            (false, true) => EntryFlag::Boxed,
                            (false, false) => EntryFlag::Undecorated,
                        };
                        assert_eq!(d.flag(i, j), expected, "pattern {p} entry ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn weights_of_worked_examples() {
        assert_eq!(weight_of(&pat(&[&[3, 1, 0], &[3, 1], &[2]])), vec![2, 2, 0]);
        assert_eq!(weight_of(&pat(&[&[3, 1, 0], &[3, 0], &[0]])), vec![0, 3, 1]);
        assert_eq!(weight_of(&pat(&[&[3, 1, 0], &[3, 0], &[3]])), vec![3, 0, 1]);
    }

    #[test]
    fn components_of_the_adjoint_example() {
        let comps = mu_components(&[3, 1, 0]).unwrap();
        let mus: Vec<&[i64]> = comps.iter().map(|(m, _)| m.as_slice()).collect();
        assert_eq!(
            mus,
            vec![&[3, 1][..], &[3, 0][..], &[2, 1][..], &[2, 0][..], &[1, 1][..], &[1, 0][..]]
        );
        let sizes: Vec<usize> = comps.iter().map(|(_, v)| v.len()).collect();
        assert_eq!(sizes, vec![3, 4, 2, 3, 1, 2]);
        assert_eq!(sizes.iter().sum::<usize>(), 15);
        for (mu, members) in &comps {
            for p in members {
                assert_eq!(&p.rows()[1], mu);
            }
        }
    }

    #[test]
    fn lowest_vertices() {
        assert_eq!(
            lowest_vertex(&[3, 1, 0], &[3, 0]).unwrap(),
            pat(&[&[3, 1, 0], &[3, 0], &[0]])
        );
        assert_eq!(
            lowest_vertex(&[3, 1, 0], &[1, 0]).unwrap(),
            pat(&[&[3, 1, 0], &[1, 0], &[0]])
        );
        assert_eq!(
            lowest_vertex(&[3, 1, 0], &[0, 0]).unwrap_err(),
            CrystalError::NotInterleaving
        );
        // Zero Gamma rows below the first, by construction.
        let g = gamma_of(&lowest_vertex(&[4, 2, 1, 0], &[3, 2, 0]).unwrap());
        for i in 2..=3 {
            for j in i..=3 {
                assert_eq!(g.entry(i, j), 0);
            }
        }
    }

    #[test]
    fn demazure_members_of_the_adjoint_example() {
        // Length 2 = C(2,2) + 1 allows one free first-row entry; members are
        // the components with second row ending in 0.
        let members = demazure_members(&[3, 1, 0], 2).unwrap();
        assert_eq!(members.len(), 9);
        for p in &members {
            assert_eq!(p.rows()[1][1], 0);
        }
        let seconds: Vec<usize> = [3i64, 2, 1]
            .iter()
            .map(|&m1| members.iter().filter(|p| p.rows()[1][0] == m1).count())
            .collect();
        assert_eq!(seconds, vec![4, 3, 2]);

        // The full-length subset is the whole crystal.
        assert_eq!(demazure_members(&[3, 1, 0], 3).unwrap().len(), 15);

        assert!(matches!(
            demazure_members(&[3, 1, 0], 0),
            Err(CrystalError::WordLengthOutOfRange { .. })
        ));
        assert!(matches!(
            demazure_members(&[3, 1, 0], 4),
            Err(CrystalError::WordLengthOutOfRange { .. })
        ));
    }

    #[test]
    fn string_members_extends_demazure_members() {
        let top = [3i64, 1, 0];
        // On the shared range 1..=3 the two membership tests agree.
        for l in 1..=3usize {
            let via_string = string_members(&top, l).unwrap();
            let via_first_row = demazure_members(&top, l).unwrap();
            assert_eq!(via_string, via_first_row, "length {l}");
        }
        // Below C(r,2) the lower rows are constrained too: the length-0
        // subset is the single lowest vertex of the whole crystal.
        let bottom = string_members(&top, 0).unwrap();
        assert_eq!(bottom.len(), 1);
        assert!(gamma_of(&bottom[0]).rows().iter().all(|row| row.iter().all(|&e| e == 0)));
        // Length 1 frees only b_1 = G_{22}.
        let one = string_members(&top, 1).unwrap();
        assert_eq!(one.len(), 2);
    }

    #[test]
    fn demazure_membership_is_component_closed() {
        // Closure plus the second-row criterion: a component with second row
        // mu lies inside the length-(C(r,2)+k+1) subset exactly when
        // mu_j = top_{j+1} for j > k+1 (1-based).
        let top = [3i64, 1, 0];
        let comps = mu_components(&top).unwrap();
        let r = 2usize;
        for l in 2..=3usize {
            let members = demazure_members(&top, l).unwrap();
            let k = l as i64 - (r * (r - 1) / 2) as i64 - 1;
            for (mu, vertices) in &comps {
                let inside = vertices.iter().filter(|p| members.contains(p)).count();
                assert!(
                    inside == 0 || inside == vertices.len(),
                    "component {mu:?} split at length {l}"
                );
                let predicted = (1..=r).all(|j| {
                    (j as i64) <= k + 1 || mu[j - 1] == top[j]
                });
                assert_eq!(inside == vertices.len(), predicted, "component {mu:?} length {l}");
            }
        }
    }

    #[test]
    fn lusztig_data_worked_examples() {
        let g = GammaArray::new(vec![3, 1, 0], vec![vec![3, 1], vec![1]]).unwrap();
        assert_eq!(lusztig_data_of(&g), vec![vec![2, 1], vec![1]]);
        let zero = GammaArray::new(vec![3, 1, 0], vec![vec![0, 0], vec![0]]).unwrap();
        assert_eq!(lusztig_data_of(&zero), vec![vec![0, 0], vec![0]]);
    }

    #[test]
    fn lusztig_data_weight_consistency() {
        // Sum of m_{(h,k)} times the root e_{r+1-k} - e_{r+2-h} recovers
        // wt(v) minus the reversed top row, on every vertex.
        let top = [3i64, 1, 0];
        let r = 2usize;
        for p in enumerate_patterns(&top).unwrap() {
            let m = lusztig_data_of(&gamma_of(&p));
            let mut acc = vec![0i64; r + 1];
            for h in 1..=r {
                for k in h..=r {
                    let val = m[h - 1][k - h];
                    acc[(r + 1 - k) - 1] += val;
                    acc[(r + 2 - h) - 1] -= val;
                }
            }
            let wt = weight_of(&p);
            let expected: Vec<i64> = (0..=r).map(|t| wt[t] - top[r - t]).collect();
            assert_eq!(acc, expected, "pattern {p}");
        }
    }

    #[test]
    fn stripping_the_top_row() {
        let p = pat(&[&[3, 1, 0], &[3, 1], &[2]]);
        let q = strip_top_row(&p);
        assert_eq!(q, pat(&[&[3, 1], &[2]]));
        assert_eq!(weight_of(&q), vec![2, 2]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        /// Round trip through the Gamma coordinates for random top rows.
        #[test]
        fn gamma_round_trip(raw in proptest::collection::vec(0i64..=4, 2..=4)) {
            let mut top = raw;
            top.sort_unstable_by(|a, b| b.cmp(a));
            for p in enumerate_patterns(&top).unwrap() {
                let g = gamma_of(&p);
                prop_assert_eq!(pattern_of_gamma(&top, &g).unwrap(), p);
            }
        }

        /// String-vector weight rule: wt(v) - w0(top) = sum G_{ij} a_{r+1-j}
        /// over all entries, where a_m = e_m - e_{m+1} is a simple root.
        #[test]
        fn weight_from_string_vector(raw in proptest::collection::vec(0i64..=4, 2..=4)) {
            let mut top = raw;
            top.sort_unstable_by(|a, b| b.cmp(a));
            let r = top.len() - 1;
            for p in enumerate_patterns(&top).unwrap() {
                let g = gamma_of(&p);
                let mut acc = vec![0i64; r + 1];
                for i in 1..=r {
                    for j in i..=r {
                        let m = r + 1 - j;
                        acc[m - 1] += g.entry(i, j);
                        acc[m] -= g.entry(i, j);
                    }
                }
                let wt = weight_of(&p);
                let expected: Vec<i64> = (0..=r).map(|t| wt[t] - top[r - t]).collect();
                prop_assert_eq!(acc, expected);
            }
        }

        /// Branching exponents: the weight of a vertex restricts to the
        /// weight of its stripped pattern on the first r variables, and the
        /// last variable carries the row-sum difference.
        #[test]
        fn branching_exponent_identity(raw in proptest::collection::vec(0i64..=4, 2..=4)) {
            let mut top = raw;
            top.sort_unstable_by(|a, b| b.cmp(a));
            let r = top.len() - 1;
            for p in enumerate_patterns(&top).unwrap() {
                let wt = weight_of(&p);
                let inner = strip_top_row(&p);
                let wt_mu = weight_of(&inner);
                prop_assert_eq!(&wt[..r], &wt_mu[..]);
                prop_assert_eq!(wt[r], p.row_sum(0) - p.row_sum(1));
            }
        }
    }
}
