//! Sparse Laurent polynomials in `x_1..x_{r+1}` over the Gauss-symbol
//! scalar ring, together with rational elements whose denominators are kept
//! as formal multisets of binomial factors `(1 - v^k * x^{n*alpha})`.
//!
//! Denominators are never expanded except when two rational elements are
//! compared (cross-multiplication) or when a rational element is reduced to
//! an honest polynomial by exact division.  The metaplectic Weyl action only
//! ever permutes denominator factors, so this representation avoids GCD
//! computation entirely.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::scalars::ScalarPoly;
use crate::weyl::Permutation;

/// Errors from rational-element reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LaurentError {
    /// Exact division failed: the element is not a polynomial.
    NotDivisible,
}

impl fmt::Display for LaurentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LaurentError::NotDivisible => {
                write!(f, "numerator is not divisible by the binomial factor")
            }
        }
    }
}

impl core::error::Error for LaurentError {}

// ---------------------------------------------------------------------------
// Laurent polynomials
// ---------------------------------------------------------------------------

/// A Laurent polynomial in `x_1..x_{vars}` with [`ScalarPoly`] coefficients.
///
/// Terms are keyed by exponent vectors of fixed length `vars`; no zero
/// coefficient is ever stored, so equality is structural.  `BTreeMap`
/// iteration gives ascending lexicographic order on exponent vectors, which
/// is also the canonical rendering order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    vars: usize,
    n: u32,
    terms: BTreeMap<Vec<i64>, ScalarPoly>,
}

impl LaurentPoly {
    /// The zero polynomial in `vars` variables at metaplectic degree `n`.
    pub fn zero(vars: usize, n: u32) -> Self {
        assert!(vars >= 1, "need at least one variable");
        LaurentPoly {
            vars,
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `1`.
    pub fn one(vars: usize, n: u32) -> Self {
        LaurentPoly::monomial(vec![0; vars], ScalarPoly::one(n))
    }

    /// A single term `coeff * x^exps`.
    pub fn monomial(exps: Vec<i64>, coeff: ScalarPoly) -> Self {
        let mut p = LaurentPoly::zero(exps.len(), coeff.n());
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    /// The plain monomial `x^exps` with coefficient `1`.
    pub fn x_monomial(exps: &[i64], n: u32) -> Self {
        LaurentPoly::monomial(exps.to_vec(), ScalarPoly::one(n))
    }

    /// Number of variables (`r + 1` for rank `r`).
    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Ambient rank `r`.
    pub fn rank(&self) -> usize {
        self.vars - 1
    }

    /// Metaplectic degree shared by all coefficients.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterate `(exponent vector, coefficient)` in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &ScalarPoly)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Coefficient of `x^exps` (zero when absent).
    pub fn coeff(&self, exps: &[i64]) -> ScalarPoly {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| ScalarPoly::zero(self.n))
    }

    /// Add `coeff * x^exps` in place.
    pub fn add_term(&mut self, exps: &[i64], coeff: &ScalarPoly) {
        assert_eq!(exps.len(), self.vars, "exponent vector length mismatch");
        assert_eq!(coeff.n(), self.n, "metaplectic degree mismatch");
        if coeff.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(exps.to_vec()) {
            Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiply by a scalar.
    pub fn mul_scalar(&self, c: &ScalarPoly) -> LaurentPoly {
        assert_eq!(c.n(), self.n, "metaplectic degree mismatch");
        let mut out = LaurentPoly::zero(self.vars, self.n);
        if c.is_zero() {
            return out;
        }
        for (e, s) in &self.terms {
            let prod = s.mul(c);
            if !prod.is_zero() {
                out.terms.insert(e.clone(), prod);
            }
        }
        out
    }

    /// Multiply by `coeff * x^shift` (a single term): shifts every exponent
    /// vector and scales every coefficient.
    pub fn mul_monomial(&self, shift: &[i64], coeff: &ScalarPoly) -> LaurentPoly {
        assert_eq!(shift.len(), self.vars, "exponent vector length mismatch");
        let mut out = LaurentPoly::zero(self.vars, self.n);
        if coeff.is_zero() {
            return out;
        }
        for (e, s) in &self.terms {
            let shifted: Vec<i64> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            let prod = s.mul(coeff);
            if !prod.is_zero() {
                out.terms.insert(shifted, prod);
            }
        }
        out
    }

    /// Ring product.
    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        assert_eq!(self.n, other.n, "metaplectic degree mismatch");
        let mut out = LaurentPoly::zero(self.vars, self.n);
        for (e1, s1) in &self.terms {
            for (e2, s2) in &other.terms {
                let exps: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let prod = s1.mul(s2);
                out.add_term(&exps, &prod);
            }
        }
        out
    }

    /// Integer power (exponent >= 0).
    pub fn pow(&self, mut e: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one(self.vars, self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The non-metaplectic Weyl action: permute variable indices, sending
    /// `x_i` to `x_{w(i)}`.
    pub fn permute_variables(&self, w: &Permutation) -> LaurentPoly {
        assert_eq!(w.size(), self.vars, "permutation size mismatch");
        let mut out = LaurentPoly::zero(self.vars, self.n);
        for (e, s) in &self.terms {
            let mut moved = vec![0i64; self.vars];
            for (idx, &exp) in e.iter().enumerate() {
                moved[w.apply(idx + 1) - 1] = exp;
            }
            out.terms.insert(moved, s.clone());
        }
        out
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        assert_eq!(self.n, rhs.n, "metaplectic degree mismatch");
        for (e, s) in &rhs.terms {
            self.add_term(e, s);
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        assert_eq!(self.n, rhs.n, "metaplectic degree mismatch");
        for (e, s) in &rhs.terms {
            self.add_term(e, &-s);
        }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.mul_scalar(&ScalarPoly::from_int(self.n, -1))
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form: `coeff*x1^a1*...*xk^ak` terms in ascending
    /// lexicographic order of exponent vectors, e.g.
    /// `x2 + (1 - v)*x1 - v*x1^2*x2^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, scalar) in &self.terms {
            // One-term scalars contribute their sign to the outer sum;
            // multi-term scalars are parenthesized.
            let (neg, coeff_body) = match scalar.single_term_signed_body() {
                Some((neg, body)) => (neg, body),
                None => {
                    let mut s = String::new();
                    use core::fmt::Write;
                    let _ = write!(s, "({scalar})");
                    (false, s)
                }
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut pieces: Vec<String> = Vec::new();
            if coeff_body != "1" {
                pieces.push(coeff_body);
            }
            for (idx, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                use core::fmt::Write;
                let mut s = String::new();
                if e == 1 {
                    let _ = write!(s, "x{}", idx + 1);
                } else {
                    let _ = write!(s, "x{}^{}", idx + 1, e);
                }
                pieces.push(s);
            }
            if pieces.is_empty() {
                write!(f, "1")?;
            } else {
                write!(f, "{}", pieces.join("*"))?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Binomial factors and the deformed denominator
// ---------------------------------------------------------------------------

/// The factor `(1 - v^c_power * (x_i/x_j)^n)` for a positive root
/// `alpha = e_i - e_j`, `i < j`.
///
/// Both of its monomials have every exponent divisible by `n`, so the factor
/// is fixed-line under the metaplectic action (it lives in the ring where
/// the action is plain permutation).  The degree `n` is supplied by the
/// polynomial it multiplies.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BinomialFactor {
    i: usize,
    j: usize,
    c_power: i64,
}

impl BinomialFactor {
    /// Factor for the positive root `e_i - e_j` with coefficient `v^c_power`.
    pub fn new(i: usize, j: usize, c_power: i64) -> Self {
        assert!(i >= 1 && i < j, "root must be positive: need 1 <= i < j");
        BinomialFactor { i, j, c_power }
    }

    pub fn root(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn c_power(&self) -> i64 {
        self.c_power
    }

    /// Expand to a two-term polynomial in `vars` variables at degree `n`.
    pub fn expand(&self, vars: usize, n: u32) -> LaurentPoly {
        assert!(self.j <= vars, "root index exceeds variable count");
        let mut p = LaurentPoly::one(vars, n);
        let mut exps = vec![0i64; vars];
        exps[self.i - 1] = i64::from(n);
        exps[self.j - 1] = -i64::from(n);
        p.add_term(
            &exps,
            &ScalarPoly::v_pow(n, self.c_power).mul_int(-1),
        );
        p
    }
}

/// The (deformed) Weyl denominator: the product over all positive roots of
/// `(1 - v * x^{n*alpha})`, or with `v` replaced by `1` when `deformed` is
/// false.  Returned fully expanded.
pub fn deformed_denominator(r: u32, n: u32, deformed: bool) -> LaurentPoly {
    let vars = (r + 1) as usize;
    let mut out = LaurentPoly::one(vars, n);
    for (i, j) in crate::weyl::positive_roots(vars) {
        let factor = BinomialFactor::new(i, j, if deformed { 1 } else { 0 });
        out = out.mul(&factor.expand(vars, n));
    }
    out
}

// ---------------------------------------------------------------------------
// Exact division
// ---------------------------------------------------------------------------

/// Divide `p` exactly by the two-term factor `d` (at `p`'s degree `n`).
///
/// Strategy: repeatedly cancel the remainder's monomial of highest
/// `x_i`-degree (`i` = lower index of `d`'s root) against the `x^{n*alpha}`
/// term of `d`.  Each emitted quotient term lowers that degree by `n`, and
/// for an exact quotient no term ever drops below the input's minimum
/// `x_i`-degree; as soon as the working monomial would, the division fails.
pub fn exact_divide_binomial(
    p: &LaurentPoly,
    d: &BinomialFactor,
) -> Result<LaurentPoly, LaurentError> {
    if p.is_zero() {
        return Ok(p.clone());
    }
    let n = i64::from(p.n());
    let (i, j) = d.root();
    let floor = p.terms.keys().map(|e| e[i - 1]).min().unwrap();
    let mut rem = p.clone();
    let mut quot = LaurentPoly::zero(p.vars, p.n);
    while !rem.is_zero() {
        // Highest x_i-degree; ties broken by taking the lexicographically
        // largest exponent vector, for determinism.
        let top = rem
            .terms
            .iter()
            .max_by(|(e1, _), (e2, _)| e1[i - 1].cmp(&e2[i - 1]).then(e1.cmp(e2)))
            .map(|(e, s)| (e.clone(), s.clone()))
            .unwrap();
        let (mu, s) = top;
        if mu[i - 1] < floor + n {
            // The matching quotient term would fall below every monomial an
            // exact quotient can contain.
            return Err(LaurentError::NotDivisible);
        }
        let mut t_exps = mu.clone();
        t_exps[i - 1] -= n;
        t_exps[j - 1] += n;
        // t * (-v^c x^{n alpha}) = s * x^mu, so t = -v^{-c} s x^{mu - n alpha}.
        let t_scalar = s.mul_v_pow(-d.c_power()).mul_int(-1);
        quot.add_term(&t_exps, &t_scalar);
        // rem -= t * d, i.e. remove the top monomial and add -t one layer
        // down.
        rem.add_term(&mu, &-&s);
        rem.add_term(&t_exps, &-&t_scalar);
    }
    Ok(quot)
}

// ---------------------------------------------------------------------------
// Rational elements
// ---------------------------------------------------------------------------

/// A Laurent polynomial divided by a multiset of binomial factors.
///
/// The denominator is formal: it is expanded only inside [`rat_eq`]
/// (cross-multiplication) and [`RationalElement::to_poly`] (exact division).
/// Equality of rational elements is *not* the derived structural equality;
/// use [`rat_eq`].
#[derive(Clone, Debug)]
pub struct RationalElement {
    num: LaurentPoly,
    den: Vec<BinomialFactor>,
}

impl RationalElement {
    /// A polynomial viewed as a rational element with empty denominator.
    pub fn from_poly(num: LaurentPoly) -> Self {
        RationalElement {
            num,
            den: Vec::new(),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &[BinomialFactor] {
        &self.den
    }

    pub fn vars(&self) -> usize {
        self.num.vars()
    }

    pub fn n(&self) -> u32 {
        self.num.n()
    }

    /// Append one denominator factor (kept sorted as a multiset).
    pub fn push_denominator(&mut self, f: BinomialFactor) {
        let pos = self.den.partition_point(|g| *g <= f);
        self.den.insert(pos, f);
    }

    /// Divide by `(1 - v^c_power * x^{n*(e_i - e_j)})` where the root may be
    /// negative (`i > j`).  A negative root is normalized through
    /// `(1 - c*x^{-n*g}) = -c * x^{-n*g} * (1 - c^{-1} * x^{n*g})`, which
    /// multiplies the numerator by `-c^{-1} * x^{n*g}` and leaves a
    /// positive-root factor.
    pub fn divide_by_root_factor(&mut self, i: usize, j: usize, c_power: i64) {
        assert!(i != j && i >= 1 && j >= 1, "need a root, got ({i},{j})");
        if i < j {
            self.push_denominator(BinomialFactor::new(i, j, c_power));
        } else {
            let n = self.num.n();
            let mut shift = vec![0i64; self.num.vars()];
            shift[j - 1] = i64::from(n);
            shift[i - 1] = -i64::from(n);
            let scale = ScalarPoly::v_pow(n, -c_power).mul_int(-1);
            self.num = self.num.mul_monomial(&shift, &scale);
            self.push_denominator(BinomialFactor::new(j, i, -c_power));
        }
    }

    /// Multiply by a polynomial (denominator unchanged).
    pub fn mul_poly(&self, p: &LaurentPoly) -> RationalElement {
        RationalElement {
            num: self.num.mul(p),
            den: self.den.clone(),
        }
    }

    /// Multiply by a scalar.
    pub fn mul_scalar(&self, c: &ScalarPoly) -> RationalElement {
        RationalElement {
            num: self.num.mul_scalar(c),
            den: self.den.clone(),
        }
    }

    /// Multiply by a single term `coeff * x^shift`.
    pub fn mul_monomial(&self, shift: &[i64], coeff: &ScalarPoly) -> RationalElement {
        RationalElement {
            num: self.num.mul_monomial(shift, coeff),
            den: self.den.clone(),
        }
    }

    /// Sum, over the least common multiple of the two denominator multisets.
    pub fn add(&self, other: &RationalElement) -> RationalElement {
        let union = multiset_union(&self.den, &other.den);
        let extra_self = multiset_diff(&union, &self.den);
        let extra_other = multiset_diff(&union, &other.den);
        let mut num = self.num.clone();
        for f in &extra_self {
            num = num.mul(&f.expand(self.num.vars(), self.num.n()));
        }
        let mut other_num = other.num.clone();
        for f in &extra_other {
            other_num = other_num.mul(&f.expand(self.num.vars(), self.num.n()));
        }
        num += &other_num;
        RationalElement { num, den: union }
    }

    /// Difference, over the least common multiple denominator.
    pub fn sub(&self, other: &RationalElement) -> RationalElement {
        self.add(&RationalElement {
            num: -&other.num,
            den: other.den.clone(),
        })
    }

    /// The non-metaplectic permutation action: permute the numerator's
    /// variables and every denominator root, normalizing roots that come out
    /// negative.
    pub fn permute(&self, w: &Permutation) -> RationalElement {
        let mut out = RationalElement::from_poly(self.num.permute_variables(w));
        for f in &self.den {
            let (i, j) = f.root();
            out.divide_by_root_factor(w.apply(i), w.apply(j), f.c_power());
        }
        out
    }

    /// The denominator multiset expanded into one polynomial.
    pub fn expand_denominator(&self) -> LaurentPoly {
        let mut out = LaurentPoly::one(self.num.vars(), self.num.n());
        for f in &self.den {
            out = out.mul(&f.expand(self.num.vars(), self.num.n()));
        }
        out
    }

    /// Reduce to an honest polynomial by dividing out every denominator
    /// factor, or fail with [`LaurentError::NotDivisible`].
    pub fn to_poly(&self) -> Result<LaurentPoly, LaurentError> {
        let mut p = self.num.clone();
        for f in &self.den {
            p = exact_divide_binomial(&p, f)?;
        }
        Ok(p)
    }

    /// Cancel every denominator factor that divides the numerator exactly.
    ///
    /// Opportunistic but lossless: a factor is only dropped when
    /// [`exact_divide_binomial`] certifies the quotient, and factors are
    /// retried until a pass makes no progress.  Keeps long operator
    /// composites from accreting factors that in fact cancel (in particular
    /// a zero numerator empties the denominator).
    pub fn simplify(&mut self) {
        loop {
            let mut progressed = false;
            let mut k = 0;
            while k < self.den.len() {
                match exact_divide_binomial(&self.num, &self.den[k]) {
                    Ok(q) => {
                        self.num = q;
                        self.den.remove(k);
                        progressed = true;
                    }
                    Err(LaurentError::NotDivisible) => k += 1,
                }
            }
            if !progressed {
                break;
            }
        }
    }
}

/// Equality by cross-multiplication, after cancelling the shared part of the
/// two denominator multisets (binomial factors have unit extreme
/// coefficients, so they are not zero divisors and cancellation is exact).
pub fn rat_eq(a: &RationalElement, b: &RationalElement) -> bool {
    assert_eq!(a.num.vars(), b.num.vars(), "variable count mismatch");
    assert_eq!(a.num.n(), b.num.n(), "metaplectic degree mismatch");
    let a_only = multiset_diff(&a.den, &b.den);
    let b_only = multiset_diff(&b.den, &a.den);
    let mut lhs = a.num.clone();
    for f in &b_only {
        lhs = lhs.mul(&f.expand(a.num.vars(), a.num.n()));
    }
    let mut rhs = b.num.clone();
    for f in &a_only {
        rhs = rhs.mul(&f.expand(a.num.vars(), a.num.n()));
    }
    lhs == rhs
}

/// Multiset union (maximum multiplicity per factor) of two sorted lists.
fn multiset_union(a: &[BinomialFactor], b: &[BinomialFactor]) -> Vec<BinomialFactor> {
    let mut counts: BTreeMap<BinomialFactor, usize> = BTreeMap::new();
    for f in a {
        *counts.entry(*f).or_insert(0) += 1;
    }
    let mut b_counts: BTreeMap<BinomialFactor, usize> = BTreeMap::new();
    for f in b {
        *b_counts.entry(*f).or_insert(0) += 1;
    }
    for (f, c) in b_counts {
        let e = counts.entry(f).or_insert(0);
        *e = (*e).max(c);
    }
    let mut out = Vec::new();
    for (f, c) in counts {
        for _ in 0..c {
            out.push(f);
        }
    }
    out
}

/// Multiset difference `a \ b` of two sorted lists.
fn multiset_diff(a: &[BinomialFactor], b: &[BinomialFactor]) -> Vec<BinomialFactor> {
    let mut b_counts: BTreeMap<BinomialFactor, usize> = BTreeMap::new();
    for f in b {
        *b_counts.entry(*f).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    for f in a {
        match b_counts.get_mut(f) {
            Some(c) if *c > 0 => *c -= 1,
            _ => out.push(*f),
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{all_permutations, evaluate_word, Word};
    use alloc::format;
    use proptest::prelude::*;

    fn x(vars: usize, n: u32, idx: usize) -> LaurentPoly {
        let mut e = vec![0i64; vars];
        e[idx - 1] = 1;
        LaurentPoly::x_monomial(&e, n)
    }

    #[test]
    fn monomial_products() {
        let p = x(2, 1, 1).mul(&x(2, 1, 2));
        assert_eq!(p, LaurentPoly::x_monomial(&[1, 1], 1));
        // (1 - v*x1/x2) * (-x2) = -x2 + v*x1
        let factor = BinomialFactor::new(1, 2, 1).expand(2, 1);
        let neg_x2 = -&x(2, 1, 2);
        let expect = {
            let mut p = -&x(2, 1, 2);
            p.add_term(&[1, 0], &ScalarPoly::v_pow(1, 1));
            p
        };
        assert_eq!(factor.mul(&neg_x2), expect);
    }

    #[test]
    fn denominator_expansion_counts() {
        // r=1: a single root.
        let d = deformed_denominator(1, 1, true);
        assert_eq!(d.term_count(), 2);
        let mut expect = LaurentPoly::one(2, 1);
        expect.add_term(&[1, -1], &ScalarPoly::v_pow(1, 1).mul_int(-1));
        assert_eq!(d, expect);
        // r=1, n=2, undeformed: 1 - x1^2/x2^2.
        let d = deformed_denominator(1, 2, false);
        let mut expect = LaurentPoly::one(2, 2);
        expect.add_term(&[2, -2], &ScalarPoly::from_int(2, -1));
        assert_eq!(d, expect);
        // r=2: three roots give 8 products, but x1/x2 * x2/x3 collides with
        // x1/x3, so 7 terms survive collection and that monomial carries
        // -v + v^2.
        let d = deformed_denominator(2, 1, true);
        assert_eq!(d.term_count(), 7);
        let mut collided = ScalarPoly::v_pow(1, 1).mul_int(-1);
        collided += &ScalarPoly::v_pow(1, 2);
        assert_eq!(d.coeff(&[1, 0, -1]), collided);
        // Direct expansion oracle.
        let oracle = BinomialFactor::new(1, 2, 1)
            .expand(3, 1)
            .mul(&BinomialFactor::new(2, 3, 1).expand(3, 1))
            .mul(&BinomialFactor::new(1, 3, 1).expand(3, 1));
        assert_eq!(d, oracle);
    }

    #[test]
    fn permute_variables_examples() {
        let s1 = Permutation::simple(2, 1);
        assert_eq!(x(2, 1, 1).permute_variables(&s1), x(2, 1, 2));
        let w0 = Permutation::longest(3);
        assert_eq!(
            LaurentPoly::x_monomial(&[3, 1, 0], 1).permute_variables(&w0),
            LaurentPoly::x_monomial(&[0, 1, 3], 1)
        );
        let sym = &x(2, 1, 1) + &x(2, 1, 2);
        assert_eq!(sym.permute_variables(&s1), sym);
    }

    #[test]
    fn exact_division_examples() {
        // (x1 - x2) / (1 - x1/x2) = -x2.
        let p = &x(2, 1, 1) - &x(2, 1, 2);
        let q = exact_divide_binomial(&p, &BinomialFactor::new(1, 2, 0)).unwrap();
        assert_eq!(q, -&x(2, 1, 2));
        // (x1^2 - x2^2) / (1 - x1^2 x2^-2) = -x2^2 at n=2.
        let p = &LaurentPoly::x_monomial(&[2, 0], 2) - &LaurentPoly::x_monomial(&[0, 2], 2);
        let q = exact_divide_binomial(&p, &BinomialFactor::new(1, 2, 0)).unwrap();
        assert_eq!(q, -&LaurentPoly::x_monomial(&[0, 2], 2));
        // A bare monomial is never divisible.
        assert_eq!(
            exact_divide_binomial(&x(2, 1, 1), &BinomialFactor::new(1, 2, 0)),
            Err(LaurentError::NotDivisible)
        );
    }

    #[test]
    fn rational_equality() {
        // x1/(1 - v x1/x2) == (x1 - v x1^2/x2) / (1 - v x1/x2)^2.
        let f = BinomialFactor::new(1, 2, 1);
        let mut a = RationalElement::from_poly(x(2, 1, 1));
        a.push_denominator(f);
        let mut b = RationalElement::from_poly(x(2, 1, 1).mul(&f.expand(2, 1)));
        b.push_denominator(f);
        b.push_denominator(f);
        assert!(rat_eq(&a, &b));
        let xa = RationalElement::from_poly(x(2, 1, 1));
        let xb = RationalElement::from_poly(x(2, 1, 2));
        assert!(!rat_eq(&xa, &xb));
    }

    #[test]
    fn rational_reduction() {
        let p = &x(2, 1, 1) - &x(2, 1, 2);
        let mut a = RationalElement::from_poly(p);
        a.push_denominator(BinomialFactor::new(1, 2, 0));
        assert_eq!(a.to_poly().unwrap(), -&x(2, 1, 2));
        let b = RationalElement::from_poly(x(2, 1, 1));
        assert_eq!(b.to_poly().unwrap(), x(2, 1, 1));
    }

    #[test]
    fn negative_root_normalization_round_trips() {
        // Dividing by (1 - v x^{-n gamma}) then comparing against the
        // explicit normalized form.
        let n = 2u32;
        let mut a = RationalElement::from_poly(LaurentPoly::one(2, n));
        a.divide_by_root_factor(2, 1, 1);
        // 1/(1 - v x2^2 x1^-2) = (-v^-1 x1^2 x2^-2) / (1 - v^-1 x1^2 x2^-2).
        let mut expect = RationalElement::from_poly(LaurentPoly::monomial(
            vec![2, -2],
            ScalarPoly::v_pow(n, -1).mul_int(-1),
        ));
        expect.push_denominator(BinomialFactor::new(1, 2, -1));
        assert!(rat_eq(&a, &expect));
        // Cross-check by multiplying back: a * (1 - v x2^2/x1^2) must be 1.
        let back = {
            let mut f = LaurentPoly::one(2, n);
            f.add_term(&[-2, 2], &ScalarPoly::v_pow(n, 1).mul_int(-1));
            a.mul_poly(&f)
        };
        assert!(rat_eq(&back, &RationalElement::from_poly(LaurentPoly::one(2, n))));
    }

    #[test]
    fn simplify_cancels_exactly_the_shared_factors() {
        let n = 2u32;
        let d0 = BinomialFactor::new(1, 2, 0);
        let d1 = BinomialFactor::new(1, 2, 1);
        // p * (1 - x^{2 alpha}) over {(1 - x^{2 alpha}), (1 - v x^{2 alpha})}
        // must drop to p over {(1 - v x^{2 alpha})}.
        let p = {
            let mut p = LaurentPoly::x_monomial(&[1, 0], n);
            p.add_term(&[0, 1], &ScalarPoly::from_int(n, 3));
            p
        };
        let mut a = RationalElement::from_poly(p.mul(&d0.expand(2, n)));
        a.push_denominator(d0);
        a.push_denominator(d1);
        a.simplify();
        assert_eq!(a.numerator(), &p);
        assert_eq!(a.denominator(), &[d1]);
        // A zero numerator sheds every factor.
        let mut z = RationalElement::from_poly(LaurentPoly::zero(2, n));
        z.push_denominator(d0);
        z.push_denominator(d1);
        z.simplify();
        assert!(z.numerator().is_zero());
        assert!(z.denominator().is_empty());
    }

    #[test]
    fn rendering_matches_expected_layout() {
        let n = 1u32;
        // x2 + (1 - v)*x1 - v*x1^2*x2^-1, ascending lex order of exponents.
        let mut p = x(2, n, 2);
        let mut one_minus_v = ScalarPoly::one(n);
        one_minus_v -= &ScalarPoly::v_pow(n, 1);
        p.add_term(&[1, 0], &one_minus_v);
        p.add_term(&[2, -1], &ScalarPoly::v_pow(n, 1).mul_int(-1));
        assert_eq!(format!("{p}"), "x2 + (1 - v)*x1 - v*x1^2*x2^-1");
        assert_eq!(format!("{}", LaurentPoly::zero(2, n)), "0");
        assert_eq!(format!("{}", LaurentPoly::one(2, n)), "1");
        let c = LaurentPoly::monomial(vec![0, 0], one_minus_v);
        assert_eq!(format!("{c}"), "(1 - v)");
    }

    // ---- property tests -------------------------------------------------

    fn arb_poly(vars: usize, n: u32) -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec(
            (
                proptest::collection::vec(-2i64..=2, vars),
                -2i64..=2,
                1i64..=3,
            ),
            0..4,
        )
        .prop_map(move |terms| {
            let mut p = LaurentPoly::zero(vars, n);
            for (exps, v_exp, c) in terms {
                p.add_term(&exps, &ScalarPoly::v_pow(n, v_exp).mul_int(c));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(a in arb_poly(3, 2), b in arb_poly(3, 2), c in arb_poly(3, 2)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&(&b + &c)), &a.mul(&b) + &a.mul(&c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn division_round_trip(
            q in arb_poly(3, 2),
            root_idx in 0usize..3,
            c_power in -1i64..=1,
        ) {
            let roots = [(1usize, 2usize), (1, 3), (2, 3)];
            let (i, j) = roots[root_idx];
            let d = BinomialFactor::new(i, j, c_power);
            let p = q.mul(&d.expand(3, 2));
            prop_assert_eq!(exact_divide_binomial(&p, &d), Ok(q));
        }

        #[test]
        fn permutation_is_group_action(a in arb_poly(3, 2), l1 in 1u32..=2, l2 in 1u32..=2) {
            let w1 = evaluate_word(&Word::new(alloc::vec![l1], 2).unwrap(), 2);
            let w2 = evaluate_word(&Word::new(alloc::vec![l2], 2).unwrap(), 2);
            let composed = w1.compose(&w2);
            prop_assert_eq!(
                a.permute_variables(&w2).permute_variables(&w1),
                a.permute_variables(&composed)
            );
        }

        #[test]
        fn rat_eq_is_consistent(a in arb_poly(2, 1), b in arb_poly(2, 1)) {
            // a/d == b/d iff a == b; and a/d == (a*e)/(d*e).
            let d = BinomialFactor::new(1, 2, 1);
            let e = BinomialFactor::new(1, 2, 0);
            let mut ra = RationalElement::from_poly(a.clone());
            ra.push_denominator(d);
            let mut rb = RationalElement::from_poly(b.clone());
            rb.push_denominator(d);
            prop_assert_eq!(rat_eq(&ra, &rb), a == b);
            let mut ra_scaled = RationalElement::from_poly(a.mul(&e.expand(2, 1)));
            ra_scaled.push_denominator(d);
            ra_scaled.push_denominator(e);
            prop_assert!(rat_eq(&ra, &ra_scaled));
        }

        #[test]
        fn rational_add_cross_checks(a in arb_poly(2, 1), b in arb_poly(2, 1)) {
            let d = BinomialFactor::new(1, 2, 1);
            let e = BinomialFactor::new(1, 2, 0);
            let mut ra = RationalElement::from_poly(a.clone());
            ra.push_denominator(d);
            let mut rb = RationalElement::from_poly(b.clone());
            rb.push_denominator(e);
            let sum = ra.add(&rb);
            // Against the textbook cross-multiplied form.
            let mut expect = RationalElement::from_poly(
                &a.mul(&e.expand(2, 1)) + &b.mul(&d.expand(2, 1)),
            );
            expect.push_denominator(d);
            expect.push_denominator(e);
            prop_assert!(rat_eq(&sum, &expect));
        }
    }

    #[test]
    fn permuting_rationals_respects_equality() {
        // (permute then expand) equals (expand then permute) for every w.
        let n = 2u32;
        let mut f = RationalElement::from_poly(LaurentPoly::x_monomial(&[1, 0, 2], n));
        f.push_denominator(BinomialFactor::new(1, 2, 1));
        f.push_denominator(BinomialFactor::new(2, 3, 1));
        for w in all_permutations(3) {
            let permuted = f.permute(&w);
            // Expand both as num/den products and compare cross-multiplied.
            let lhs = permuted.num.mul(
                &f.expand_denominator().permute_variables(&w),
            );
            let rhs = f
                .num
                .permute_variables(&w)
                .mul(&permuted.expand_denominator());
            assert_eq!(lhs, rhs, "w={w}");
        }
    }
}
