//! Metaplectic Demazure and Demazure-Lusztig operators, their word
//! composites, Bruhat-interval sums, and the closed long-word expansions.
//!
//! With `X = x_i/x_{i+1}` and `sigma_i` the degree-`n` Weyl action,
//!
//! ```text
//! D_i(f) = (f - X^n sigma_i(f)) / (1 - X^n)
//! T_i(f) = (1 - v X^n) D_i(f) - f
//! ```
//!
//! `T_i` maps Laurent polynomials to Laurent polynomials: for `f = x^lam`
//! with `d = lam_{i+1} - lam_i`, the pre-division numerator
//! `f (1 - v X^n) - X^n (sigma numerator)` reduces mod `X^n - 1` to
//! `f (1-v)(1 - X^{d - r_n(d)})`, and `n | d - r_n(d)`, so the `(1 - X^n)`
//! division is exact; linearity extends this to every `f`.  `D_i` does *not*
//! preserve polynomials once `n > 1` (already `D_1(1) = 1/(1 - g1 x1/x2)` at
//! `n = 2`), so `D`-composites are carried as rational elements and reduced
//! only when a caller asks for a polynomial.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::action::{act_word, sigma_rational};
use crate::laurent::{exact_divide_binomial, BinomialFactor, LaurentPoly, RationalElement};
use crate::scalars::ScalarPoly;
use crate::weyl::{
    all_permutations, inversion_set_phi, lower_interval, positive_roots, reduced_word,
    Permutation, Word,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorError {
    /// A Demazure image failed to reduce to a Laurent polynomial.  Expected
    /// behaviour for many inputs once `n >= 2`, not an internal failure.
    NotPolynomial,
    /// A weight was not weakly decreasing where a dominant one is required.
    NonDominant { position: usize },
}

impl fmt::Display for OperatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorError::NotPolynomial => {
                write!(f, "Demazure image is not a Laurent polynomial")
            }
            OperatorError::NonDominant { position } => {
                write!(f, "weight increases at position {position}, so it is not dominant")
            }
        }
    }
}

impl core::error::Error for OperatorError {}

/// Exponent vector of `x^{n alpha_i} = (x_i/x_{i+1})^n`.
fn n_alpha(i: usize, vars: usize, n: u32) -> Vec<i64> {
    let mut e = vec![0i64; vars];
    e[i - 1] = i64::from(n);
    e[i] = -i64::from(n);
    e
}

/// Demazure operator on a rational element.
///
/// Total: the `(1 - x^{n alpha_i})` divisor joins the denominator multiset
/// and whatever then divides the numerator exactly is cancelled.  For
/// polynomial input at `n = 1` the result simplifies back to a polynomial;
/// for `n >= 2` it generally keeps a `(1 - v x^{n alpha_i})` factor, which
/// is why composites stay in this representation.
pub fn demazure_rational(i: usize, f: &RationalElement) -> RationalElement {
    let moved =
        sigma_rational(i, f).mul_monomial(&n_alpha(i, f.vars(), f.n()), &ScalarPoly::one(f.n()));
    let mut out = f.sub(&moved);
    out.push_denominator(BinomialFactor::new(i, i + 1, 0));
    out.simplify();
    out
}

/// Demazure operator reduced to a Laurent polynomial.
///
/// Errors with [`OperatorError::NotPolynomial`] when the image is genuinely
/// rational; at `n = 1` polynomial input always reduces.
pub fn demazure(i: usize, f: &LaurentPoly) -> Result<LaurentPoly, OperatorError> {
    demazure_rational(i, &RationalElement::from_poly(f.clone()))
        .to_poly()
        .map_err(|_| OperatorError::NotPolynomial)
}

/// Demazure-Lusztig operator `T_i(f) = (1 - v x^{n alpha_i}) D_i(f) - f`.
///
/// The deformation factor is never materialized as a denominator: it cancels
/// the action's `(1 - v x^{n alpha_i})` up front, and the one remaining
/// `(1 - x^{n alpha_i})` division is exact for every input (module notes),
/// so the result is always a Laurent polynomial.
pub fn demazure_lusztig(i: usize, f: &LaurentPoly) -> LaurentPoly {
    let vars = f.vars();
    let n = f.n();
    let sigma = sigma_rational(i, &RationalElement::from_poly(f.clone()));
    let mut big = f.mul(&BinomialFactor::new(i, i + 1, 1).expand(vars, n));
    big -= &sigma
        .numerator()
        .mul_monomial(&n_alpha(i, vars, n), &ScalarPoly::one(n));
    let quot = exact_divide_binomial(&big, &BinomialFactor::new(i, i + 1, 0))
        .expect("the Demazure-Lusztig numerator is divisible by (1 - x^{n alpha})");
    &quot - f
}

/// Which operator family a word composite threads through.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpKind {
    Demazure,
    DemazureLusztig,
}

/// Compose `D` along a word on a rational element, rightmost letter first
/// (the convention of [`act_word`] and `evaluate_word`).
pub fn apply_dem_word_rational(w: &Word, f: &RationalElement) -> RationalElement {
    let mut out = f.clone();
    for &l in w.letters().iter().rev() {
        out = demazure_rational(l as usize, &out);
    }
    out
}

/// Compose `T` along a word, rightmost letter first.
pub fn apply_dl_word(w: &Word, f: &LaurentPoly) -> LaurentPoly {
    let mut out = f.clone();
    for &l in w.letters().iter().rev() {
        out = demazure_lusztig(l as usize, &out);
    }
    out
}

/// Word composite of either operator family on a Laurent polynomial.
///
/// Demazure composites run on rational elements throughout and reduce once
/// at the end, so intermediate non-polynomial images are fine as long as the
/// final value is polynomial.
pub fn apply_op_word(
    w: &Word,
    f: &LaurentPoly,
    kind: OpKind,
) -> Result<LaurentPoly, OperatorError> {
    match kind {
        OpKind::DemazureLusztig => Ok(apply_dl_word(w, f)),
        OpKind::Demazure => apply_dem_word_rational(w, &RationalElement::from_poly(f.clone()))
            .to_poly()
            .map_err(|_| OperatorError::NotPolynomial),
    }
}

/// `sum over Bruhat-u <= w of T_u(f)`, one greedy reduced word per `u` (the
/// choice does not matter: `T` satisfies the braid relations).
pub fn bruhat_dl_sum(w: &Permutation, f: &LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(f.vars(), f.n());
    for u in lower_interval(w) {
        acc += &apply_dl_word(&reduced_word(&u), f);
    }
    acc
}

/// The signed monomial `j(w, x) = sgn(w) * prod_{alpha in Phi(w^-1)}
/// x^{n alpha}` weighting `w` in the closed long-word expansions.
pub fn chinta_offen_j(w: &Permutation, n: u32) -> LaurentPoly {
    let vars = w.size();
    let mut exps = vec![0i64; vars];
    for (i, j) in inversion_set_phi(&w.inverse()) {
        exps[i - 1] += i64::from(n);
        exps[j - 1] -= i64::from(n);
    }
    LaurentPoly::monomial(exps, ScalarPoly::from_int(n, w.sign()))
}

/// The long-word Demazure operator in closed form:
/// `(1/Delta) sum_w j(w, x) w(f)` with `Delta = prod_{alpha > 0}
/// (1 - x^{n alpha})`, as a rational element for comparison (via `rat_eq`)
/// with the word composite `D_{w0}`.
pub fn longword_demazure_formula(f: &LaurentPoly) -> RationalElement {
    let vars = f.vars();
    let n = f.n();
    let mut acc = RationalElement::from_poly(LaurentPoly::zero(vars, n));
    for w in all_permutations(vars) {
        let wf = act_word(&reduced_word(&w), &RationalElement::from_poly(f.clone()));
        acc = acc.add(&wf.mul_poly(&chinta_offen_j(&w, n)));
    }
    for (i, j) in positive_roots(vars) {
        acc.push_denominator(BinomialFactor::new(i, j, 0));
    }
    acc.simplify();
    acc
}

/// The normalized spherical Whittaker value at a dominant weight:
/// `(sum over all of W of T_w)(x^{w0 lam})`.
pub fn whittaker_value(lam: &[i64], n: u32) -> Result<LaurentPoly, OperatorError> {
    for k in 0..lam.len().saturating_sub(1) {
        if lam[k] < lam[k + 1] {
            return Err(OperatorError::NonDominant { position: k + 1 });
        }
    }
    let mut rev = lam.to_vec();
    rev.reverse();
    Ok(bruhat_dl_sum(
        &Permutation::longest(lam.len()),
        &LaurentPoly::x_monomial(&rev, n),
    ))
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
