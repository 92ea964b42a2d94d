//! The Chinta-Gunnells Weyl-group action on Laurent polynomials, specialized
//! to type A.
//!
//! The action depends on the metaplectic degree `n` and is *not* by ring
//! endomorphisms; it is linear over scalars and is defined on a monomial
//! `x^lam` by (writing `X = x_i/x_{i+1}` and `sigma_i.f` for the plain
//! variable swap)
//!
//! ```text
//! sigma_i(x^lam) = sigma_i.x^lam / (1 - v X^n)
//!     * [ X^{-r_n(lam_{i+1} - lam_i)} (1 - v)
//!         + gflat(1 + lam_{i+1} - lam_i) X^{1-n} (X^n - 1) ]
//! ```
//!
//! where `r_n` is the remainder mod `n` and `gflat(j) = v * g_j` absorbs one
//! power of `v` into the Gauss sum so that no `v^-1` appears.  The type-A
//! root data are hard-coded: `Q(alpha_i) = 1`, `B(alpha_i, lam) =
//! lam_i - lam_{i+1}`, `m(alpha) = n`, and the `n`-divisible-exponent
//! sublattice plays the role of the invariant ring.
//!
//! At `n = 1` the bracket collapses to `1 - v X` and the action degenerates
//! to the permutation action.

use alloc::vec;
use alloc::vec::Vec;

use crate::laurent::{BinomialFactor, LaurentPoly, RationalElement};
use crate::scalars::{h_flat, v_times_g, ScalarPoly};
use crate::weyl::{Permutation, Word};

/// `c * sigma_i(x^lam)` as a rational element whose only denominator factor
/// is `(1 - v x^{n alpha_i})`.
///
/// The scalar `c` rides along unchanged: the action is linear over the
/// coefficient ring.
pub fn sigma_monomial(i: usize, c: &ScalarPoly, lam: &[i64], n: u32) -> RationalElement {
    let vars = lam.len();
    assert!(
        i >= 1 && i < vars,
        "simple reflection index {i} out of range for {vars} variables"
    );
    let x_pow = |k: i64| -> Vec<i64> {
        // Exponent vector of X^k = (x_i / x_{i+1})^k.
        let mut e = vec![0i64; vars];
        e[i - 1] = k;
        e[i] = -k;
        e
    };
    let diff = lam[i] - lam[i - 1];
    let r = diff.rem_euclid(i64::from(n));

    // The bracket: (1-v) X^{-r} + gflat(1 + diff) (X - X^{1-n}).
    let mut bracket = LaurentPoly::monomial(x_pow(-r), h_flat(0, n));
    let g = v_times_g(1 + diff, n);
    bracket.add_term(&x_pow(1), &g);
    bracket.add_term(&x_pow(1 - i64::from(n)), &-&g);

    // sigma_i . x^lam, coefficient attached.
    let mut swapped = lam.to_vec();
    swapped.swap(i - 1, i);
    let permuted = LaurentPoly::monomial(swapped, c.clone());

    let mut out = RationalElement::from_poly(permuted.mul(&bracket));
    out.push_denominator(BinomialFactor::new(i, i + 1, 1));
    out
}

/// `sigma_i` applied to a rational element.
///
/// Denominator factors have all exponents divisible by `n`, so the action
/// moves them by the plain permutation (the exchange rule for invariant
/// multipliers); the numerator is acted on monomial by monomial and summed
/// over the shared new denominator `(1 - v x^{n alpha_i})`.
pub fn sigma_rational(i: usize, f: &RationalElement) -> RationalElement {
    let vars = f.vars();
    let n = f.n();
    assert!(
        i >= 1 && i < vars,
        "simple reflection index {i} out of range for {vars} variables"
    );
    let mut num = LaurentPoly::zero(vars, n);
    for (exps, c) in f.numerator().terms() {
        let part = sigma_monomial(i, c, exps, n);
        num += part.numerator();
    }
    let mut out = RationalElement::from_poly(num);
    out.push_denominator(BinomialFactor::new(i, i + 1, 1));
    let sigma = Permutation::simple(vars, i);
    for fac in f.denominator() {
        let (a, b) = fac.root();
        out.divide_by_root_factor(sigma.apply(a), sigma.apply(b), fac.c_power());
    }
    out
}

/// Act by a word, rightmost letter first, so that
/// `act_word((1,2), f) = sigma_1(sigma_2(f))` matches how
/// [`crate::weyl::evaluate_word`] multiplies the same word out.
pub fn act_word(w: &Word, f: &RationalElement) -> RationalElement {
    let mut out = f.clone();
    for &l in w.letters().iter().rev() {
        out = sigma_rational(l as usize, &out);
    }
    out
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
