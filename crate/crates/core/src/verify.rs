//! End-to-end checkers for the operator and crystal identities.
//!
//! Every checker builds both sides of one identity as exact Laurent
//! polynomials (or rational elements) and reports whether the difference
//! vanishes, keeping the difference itself when it does not.  Nothing here
//! is randomized except `check_longword_formulas`, which draws its sample
//! monomials from a small deterministic generator so that repeated runs and
//! report streams are byte-identical.
//!
//! The central statement is the Demazure-section identity: for a dominant
//! effective weight `lam` and a beginning section `w` of the favourite long
//! word, the Bruhat sum of Demazure-Lusztig operators applied to
//! `x^{w0 lam}` equals the decorated sum over the Demazure subset of the
//! crystal with top row `lam + rho`, shifted by `x^{-w0 rho}`.  The other
//! checkers cover its full-length case, the classical specialization, the
//! annihilation form on admissible rows, the long-word operator formulas
//! and the component-by-component branching of the crystal side.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coefficients::{
    admissible_rows, big_f, classify_row, gt_coefficient, row_coefficient, row_weight,
    AdmissibleRow,
};
use crate::crystal::{
    enumerate_patterns, lowest_vertex, mu_components, string_members, weight_of, CrystalError,
};
use crate::laurent::{deformed_denominator, LaurentPoly, RationalElement};
use crate::operators::{
    apply_dem_word_rational, apply_dl_word, bruhat_dl_sum, chinta_offen_j,
};
use crate::scalars::ScalarPoly;
use crate::weyl::{
    all_permutations, beginning_section, evaluate_word, favourite_long_word, reduced_word,
    Word, WeylError,
};

/// Errors from the two side builders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    /// The weight must be non-increasing with non-negative entries.
    InvalidWeight,
    Crystal(CrystalError),
    Weyl(WeylError),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::InvalidWeight => {
                write!(f, "weight must be non-increasing with a non-negative last entry")
            }
            VerifyError::Crystal(e) => write!(f, "crystal error: {e}"),
            VerifyError::Weyl(e) => write!(f, "word error: {e}"),
        }
    }
}

impl core::error::Error for VerifyError {}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Outcome of one identity check.  `difference` holds the nonzero
/// polynomial witnessing a failure; for annihilation statements it is the
/// surviving numerator, for everything else the literal left minus right.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub statement: &'static str,
    pub r: usize,
    /// Statement-specific integer slot: the section length of the main
    /// identity, the extra section length `k` of the partial-sum identities,
    /// or the auxiliary integer of the obstruction family.  `None` when the
    /// statement has no such parameter.
    pub k: Option<i64>,
    pub lam: Vec<i64>,
    pub n: u32,
    pub pass: bool,
    pub difference: Option<LaurentPoly>,
}

impl CheckReport {
    fn from_difference(
        statement: &'static str,
        r: usize,
        k: Option<i64>,
        lam: &[i64],
        n: u32,
        difference: LaurentPoly,
    ) -> Self {
        let pass = difference.is_zero();
        CheckReport {
            statement,
            r,
            k,
            lam: lam.to_vec(),
            n,
            pass,
            difference: if pass { None } else { Some(difference) },
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} r={}", self.statement, self.r)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        write!(f, " lam={:?} n={}", self.lam, self.n)?;
        write!(f, " {}", if self.pass { "pass" } else { "FAIL" })
    }
}

fn is_dominant_effective(lam: &[i64]) -> bool {
    !lam.is_empty() && lam.windows(2).all(|w| w[0] >= w[1]) && *lam.last().unwrap() >= 0
}

/// `lam + rho` with the staircase `rho = (r, r-1, ..., 0)`.
fn shifted_top(lam: &[i64]) -> Vec<i64> {
    let r = lam.len() - 1;
    lam.iter()
        .enumerate()
        .map(|(t, &l)| l + (r - t) as i64)
        .collect()
}

fn reversed(v: &[i64]) -> Vec<i64> {
    v.iter().rev().copied().collect()
}

/// Pad a polynomial in fewer variables with trailing zero exponents.
fn embed(f: &LaurentPoly, vars: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero(vars, f.n());
    for (e, c) in f.terms() {
        let mut exps = e.to_vec();
        exps.resize(vars, 0);
        out.add_term(&exps, c);
    }
    out
}

/// Numerator of `a - b`; zero exactly when the two rationals agree.
fn cross_difference(a: &RationalElement, b: &RationalElement) -> LaurentPoly {
    a.sub(b).numerator().clone()
}

// ---------------------------------------------------------------------------
// The two sides of the Demazure-section identity
// ---------------------------------------------------------------------------

/// The crystal side: `x^{-w0 rho}` times the decorated sum over the
/// Demazure subset of length `w_length` in the crystal with top row
/// `lam + rho`.
pub fn crystal_side(lam: &[i64], w_length: usize, n: u32) -> Result<LaurentPoly, VerifyError> {
    if !is_dominant_effective(lam) {
        return Err(VerifyError::InvalidWeight);
    }
    let r = lam.len() - 1;
    let top = shifted_top(lam);
    let members = string_members(&top, w_length).map_err(VerifyError::Crystal)?;
    let mut acc = LaurentPoly::zero(r + 1, n);
    for p in &members {
        let coeff = gt_coefficient(p, n);
        if coeff.is_zero() {
            continue;
        }
        let mut exps = weight_of(p);
        for (t, e) in exps.iter_mut().enumerate() {
            *e -= t as i64;
        }
        acc.add_term(&exps, &coeff);
    }
    Ok(acc)
}

/// The operator side: the Bruhat-interval sum of Demazure-Lusztig operators
/// for the beginning section of length `w_length`, applied to `x^{w0 lam}`.
pub fn operator_side(lam: &[i64], w_length: usize, n: u32) -> Result<LaurentPoly, VerifyError> {
    if !is_dominant_effective(lam) {
        return Err(VerifyError::InvalidWeight);
    }
    let r = lam.len() - 1;
    let section = beginning_section(r as u32, w_length).map_err(VerifyError::Weyl)?;
    let w = evaluate_word(&section, r as u32);
    let mono = LaurentPoly::x_monomial(&reversed(lam), n);
    Ok(bruhat_dl_sum(&w, &mono))
}

/// Check the Demazure-section identity at one parameter point.  For short
/// sections (length at most `C(r,2)`) the instance is also equivalent to
/// one in rank `r-1`; both routes are computed and must agree, so a pass
/// certifies the direct equality and the rank-reduction factorization of
/// both sides.
pub fn check_main(lam: &[i64], w_length: usize, n: u32) -> CheckReport {
    let r = lam.len() - 1;
    let ops = operator_side(lam, w_length, n).expect("operator side");
    let crys = crystal_side(lam, w_length, n).expect("crystal side");
    let mut difference = &ops - &crys;

    if difference.is_zero() && r >= 1 && w_length <= r * (r - 1) / 2 {
        let tail = &lam[1..];
        let pairs = [
            (operator_side(tail, w_length, n).expect("reduced operator side"), &ops),
            (crystal_side(tail, w_length, n).expect("reduced crystal side"), &crys),
        ];
        for (inner, whole) in pairs {
            let mut shift = vec![0i64; r + 1];
            shift[r] = lam[0];
            let lifted = embed(&inner, r + 1).mul_monomial(&shift, &ScalarPoly::one(n));
            let gap = whole - &lifted;
            if !gap.is_zero() {
                difference = gap;
                break;
            }
        }
    }

    CheckReport::from_difference("main", r, Some(w_length as i64), lam, n, difference)
}

/// The full-length case of [`check_main`]: the section is the whole long
/// word, and the crystal side runs over the entire crystal.
pub fn check_tokuyama(lam: &[i64], n: u32) -> CheckReport {
    let r = lam.len() - 1;
    let mut report = check_main(lam, r * (r + 1) / 2, n);
    report.statement = "tokuyama";
    // The section length is forced by the rank here, so drop it from the
    // report.
    report.k = None;
    report
}

// ---------------------------------------------------------------------------
// Classical specialization
// ---------------------------------------------------------------------------

/// The Schur polynomial as the combinatorial pattern sum: all patterns with
/// top row `lam`, each contributing its weight monomial.
pub fn schur(lam: &[i64], r: usize) -> LaurentPoly {
    assert_eq!(lam.len(), r + 1, "weight length must match the rank");
    assert!(is_dominant_effective(lam), "top row must be a partition");
    let one = ScalarPoly::one(1);
    let mut acc = LaurentPoly::zero(r + 1, 1);
    for p in enumerate_patterns(lam).expect("partition top row") {
        acc.add_term(&weight_of(&p), &one);
    }
    acc
}

/// Deformed Weyl denominator `prod_{i<j} (x_j - v x_i)` on `r+1` variables
/// at degree one.
fn classical_deformation(r: usize) -> LaurentPoly {
    let minus_v = -&ScalarPoly::v_pow(1, 1);
    let one = ScalarPoly::one(1);
    let mut acc = LaurentPoly::one(r + 1, 1);
    for i in 0..=r {
        for j in (i + 1)..=r {
            let mut factor = LaurentPoly::zero(r + 1, 1);
            let mut e = vec![0i64; r + 1];
            e[j] = 1;
            factor.add_term(&e, &one);
            e[j] = 0;
            e[i] = 1;
            factor.add_term(&e, &minus_v);
            acc = acc.mul(&factor);
        }
    }
    acc
}

/// Degree-one deformed character identity: the Schur polynomial times the
/// deformed Weyl denominator equals the decorated pattern sum over the
/// shifted top row.
pub fn check_classic_tokuyama(lam: &[i64]) -> CheckReport {
    assert!(is_dominant_effective(lam));
    let r = lam.len() - 1;
    let lhs = schur(lam, r).mul(&classical_deformation(r));
    let mut rhs = LaurentPoly::zero(r + 1, 1);
    for p in enumerate_patterns(&shifted_top(lam)).expect("shifted top row") {
        let coeff = gt_coefficient(&p, 1);
        if !coeff.is_zero() {
            rhs.add_term(&weight_of(&p), &coeff);
        }
    }
    CheckReport::from_difference("classic", r, None, lam, 1, &lhs - &rhs)
}

// ---------------------------------------------------------------------------
// Partial sums and annihilation statements
// ---------------------------------------------------------------------------

/// Which of the two partial-sum identities to check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MNKind {
    /// The cumulative sum `1 + T_r + T_r T_{r-1} + ... + T_r .. T_{r-k}`.
    M,
    /// The single string `T_r .. T_{r-k}`, with the nonzero first-entry
    /// constraint on the row side.
    N,
}

/// Check one partial-sum identity: the operator string applied to
/// `x^{w0 lam}` agrees with the constrained admissible-row sum up to the
/// kernel of the long Demazure word on the first `r` variables.  `lam` must
/// be dominant but need not be effective; both sides are shifted by the
/// scalar weight that makes the last entry zero, which commutes with every
/// operator involved.
pub fn check_mn(kind: MNKind, r: usize, k: usize, lam: &[i64], n: u32) -> CheckReport {
    assert_eq!(lam.len(), r + 1, "weight length must match the rank");
    assert!(lam.windows(2).all(|w| w[0] >= w[1]), "weight must be dominant");
    assert!(k < r, "section parameter must satisfy k < r");
    let kappa: Vec<i64> = lam.iter().map(|&l| l - lam[r]).collect();

    let mono = LaurentPoly::x_monomial(&reversed(&kappa), n);
    let mut lhs = match kind {
        MNKind::M => mono.clone(),
        MNKind::N => LaurentPoly::zero(r + 1, n),
    };
    let strings: Vec<usize> = match kind {
        MNKind::M => (0..=k).collect(),
        MNKind::N => vec![k],
    };
    for j in strings {
        let letters: Vec<u32> = (0..=j).map(|t| (r - t) as u32).collect();
        let word = Word::new(letters, r as u32).expect("letters within rank");
        lhs = &lhs + &apply_dl_word(&word, &mono);
    }

    let mut rhs = LaurentPoly::zero(r + 1, n);
    for entries in admissible_rows(&kappa) {
        if kind == MNKind::N && entries[k] == 0 {
            continue;
        }
        let row = AdmissibleRow::new(entries, kappa.clone()).expect("row over kappa");
        if !classify_row(&row, Some(k as i64)).k_admissible {
            continue;
        }
        let coeff = row_coefficient(&row, n);
        if coeff.is_zero() {
            continue;
        }
        rhs.add_term(&row_weight(&row).expect("admissible row"), &coeff);
    }

    let difference = &lhs - &rhs;
    let annihilator = favourite_long_word(r as u32 - 1);
    let image = apply_dem_word_rational(
        &annihilator,
        &RationalElement::from_poly(difference.clone()),
    );
    let statement = match kind {
        MNKind::M => "M",
        MNKind::N => "N",
    };
    let witness = if image.numerator().is_zero() {
        LaurentPoly::zero(r + 1, n)
    } else {
        difference
    };
    CheckReport::from_difference(statement, r, Some(k as i64), lam, n, witness)
}

/// Check that the long Demazure word on all variables annihilates the
/// rank-reduction obstruction for `mu` and the integer `a` (reported in the
/// integer slot of the result).
pub fn check_f(mu: &[i64], a: i64, n: u32) -> CheckReport {
    let f = big_f(mu, a, n);
    let word = favourite_long_word(mu.len() as u32 - 1);
    let image = apply_dem_word_rational(&word, &RationalElement::from_poly(f));
    CheckReport::from_difference(
        "F",
        mu.len() - 1,
        Some(a),
        mu,
        n,
        image.numerator().clone(),
    )
}

// ---------------------------------------------------------------------------
// Long-word operator formulas
// ---------------------------------------------------------------------------

/// Tiny deterministic generator (the splitmix64 step) so sample monomials
/// are reproducible from `(r, n)` alone without a dependency.
struct SampleStream(u64);

impl SampleStream {
    fn new(r: usize, n: u32) -> Self {
        SampleStream((r as u64) << 32 ^ u64::from(n) ^ 0x9E37_79B9_7F4A_7C15)
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish exponent in `-2..=2`.
    fn exponent(&mut self) -> i64 {
        (self.next() % 5) as i64 - 2
    }
}

/// Check the three long-word formulas on deterministic random monomials:
/// the Weyl-group expression for the full Demazure word as rational
/// elements, the deformed-denominator product identity against the sum of
/// all Demazure-Lusztig operators as exact polynomials, and the
/// cross-multiplied form of the Weyl-group expression.
pub fn check_longword_formulas(r: usize, n: u32, sample_count: usize) -> CheckReport {
    let vars = r + 1;
    let mut stream = SampleStream::new(r, n);
    let long = favourite_long_word(r as u32);
    let perms = all_permutations(vars);
    let mut difference = LaurentPoly::zero(vars, n);

    'samples: for _ in 0..sample_count {
        let exps: Vec<i64> = (0..vars).map(|_| stream.exponent()).collect();
        let f = LaurentPoly::x_monomial(&exps, n);
        let f_rat = RationalElement::from_poly(f.clone());
        let dw0 = apply_dem_word_rational(&long, &f_rat);

        // Weyl-group expression for the long Demazure word.
        let formula = crate::operators::longword_demazure_formula(&f);
        let gap = cross_difference(&formula, &dw0);
        if !gap.is_zero() {
            difference = gap;
            break 'samples;
        }

        // Deformed product against the operator sum, as exact polynomials.
        let mut t_sum = LaurentPoly::zero(vars, n);
        for w in &perms {
            t_sum = &t_sum + &apply_dl_word(&reduced_word(w), &f);
        }
        let product = dw0.mul_poly(&deformed_denominator(r as u32, n, true));
        match product.to_poly() {
            Ok(p) => {
                let gap = &p - &t_sum;
                if !gap.is_zero() {
                    difference = gap;
                    break 'samples;
                }
            }
            Err(_) => {
                difference = cross_difference(&product, &RationalElement::from_poly(t_sum));
                break 'samples;
            }
        }

        // Cross-multiplied Weyl-group expression: the cocycle-weighted group
        // action sum equals the undeformed product.
        let mut action_sum = RationalElement::from_poly(LaurentPoly::zero(vars, n));
        for w in &perms {
            let wf = crate::action::act_word(&reduced_word(w), &f_rat);
            action_sum = action_sum.add(&wf.mul_poly(&chinta_offen_j(w, n)));
        }
        let undeformed = dw0.mul_poly(&deformed_denominator(r as u32, n, false));
        let gap = cross_difference(&action_sum, &undeformed);
        if !gap.is_zero() {
            difference = gap;
            break 'samples;
        }
    }

    CheckReport::from_difference("longword", r, Some(sample_count as i64), &[], n, difference)
}

// ---------------------------------------------------------------------------
// Branching
// ---------------------------------------------------------------------------

/// Check, for every section length, that the crystal side decomposes as a
/// sum over pinned second rows `mu`: the coefficient of the component's
/// lowest vertex times a power of the last variable times the full
/// rank-(r-1) crystal sum for top row `mu`.
pub fn check_branching(lam: &[i64], n: u32) -> CheckReport {
    assert!(is_dominant_effective(lam) && lam.len() >= 2);
    let r = lam.len() - 1;
    let top = shifted_top(lam);
    let d_top: i64 = top.iter().sum();
    let comps = mu_components(&top).expect("valid top row");
    let lo = r * (r - 1) / 2;
    let hi = r * (r + 1) / 2;

    for w_length in lo..=hi {
        let k = w_length as i64 - lo as i64 - 1;
        let lhs = crystal_side(lam, w_length, n).expect("crystal side");
        let mut rhs = LaurentPoly::zero(r + 1, n);
        for (mu, _) in &comps {
            let pinned = (1..=r).all(|j| (j as i64) <= k + 1 || mu[j - 1] == top[j]);
            if !pinned {
                continue;
            }
            let star = gt_coefficient(&lowest_vertex(&top, mu).expect("interleaving"), n);
            if star.is_zero() {
                continue;
            }
            let mut inner = LaurentPoly::zero(r, n);
            for q in enumerate_patterns(mu).expect("component top row") {
                let coeff = gt_coefficient(&q, n);
                if coeff.is_zero() {
                    continue;
                }
                let mut exps = weight_of(&q);
                for (t, e) in exps.iter_mut().enumerate() {
                    *e -= t as i64;
                }
                inner.add_term(&exps, &coeff);
            }
            let d_mu: i64 = mu.iter().sum();
            let mut shift = vec![0i64; r + 1];
            shift[r] = d_top - d_mu - r as i64;
            rhs = &rhs + &embed(&inner, r + 1).mul_monomial(&shift, &star);
        }
        let difference = &lhs - &rhs;
        if !difference.is_zero() {
            return CheckReport::from_difference("branching", r, Some(k), lam, n, difference);
        }
    }

    CheckReport::from_difference("branching", r, None, lam, n, LaurentPoly::zero(r + 1, n))
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
