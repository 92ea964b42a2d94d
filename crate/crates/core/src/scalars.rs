//! The coefficient ring `Z[v, v^-1][g_1, ..., g_{n-1}] / (g_a g_{n-a} - v)`.
//!
//! Here `n` is the degree of the metaplectic cover and `v = q^-1` is the
//! deformation parameter.  The symbol `g_a` stands for the normalized Gauss
//! sum `g^flat(a)`; it depends only on `a mod n`, and for `n | a` it is not a
//! new symbol at all but the scalar `-v`.  The one relation the symbols
//! satisfy is `g_a * g_{n-a} = v`, which makes every product of symbols
//! reducible to a canonical monomial times a power of `v`.
//!
//! Alongside the symbols the ring knows the two scalar-valued Gauss-sum
//! functions that appear in coefficient formulas:
//!
//! - `h_flat(a) = 0` if `n` does not divide `a`, and `1 - v` if it does;
//! - `g_flat(a) = -v` if `n` divides `a`, and the symbol `g_{a mod n}`
//!   otherwise.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

/// Errors at the data boundary of the ring.
///
/// Degree mismatches between two polynomials in arithmetic are programmer
/// errors and panic instead; these variants cover values built from runtime
/// input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// An exponent vector for the symbols `g_1..g_{n-1}` had the wrong length.
    GammaCount { expected: usize, got: usize },
    /// A symbol index was outside `1..=n-1`.
    GammaIndex { index: u32, n: u32 },
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::GammaCount { expected, got } => write!(
                f,
                "expected {expected} Gauss-symbol exponents, got {got}"
            ),
            ScalarError::GammaIndex { index, n } => {
                write!(f, "Gauss symbol g{index} does not exist for degree {n}")
            }
        }
    }
}

impl core::error::Error for ScalarError {}

// ---------------------------------------------------------------------------
// Gauss monomials
// ---------------------------------------------------------------------------

/// A canonical monomial `g_1^{e_1} * ... * g_{n-1}^{e_{n-1}}` in the Gauss
/// symbols.
///
/// Canonical form: for each pair `(a, n-a)` with `a < n-a` at most one of
/// `e_a`, `e_{n-a}` is nonzero (a full pair collapses to `v`), and when `n`
/// is even `e_{n/2} <= 1` (since `g_{n/2}^2 = v`).  For `n = 1` only the
/// empty monomial exists.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GaussMonomial {
    exps: Vec<u32>,
}

impl GaussMonomial {
    /// The empty monomial `1` for a cover of degree `n`.
    pub fn empty(n: u32) -> Self {
        assert!(n >= 1, "metaplectic degree must be positive");
        GaussMonomial {
            exps: vec![0; (n - 1) as usize],
        }
    }

    /// Metaplectic degree this monomial belongs to.
    pub fn n(&self) -> u32 {
        self.exps.len() as u32 + 1
    }

    /// Exponents of `g_1..g_{n-1}`, in order.
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// True when this is the empty product.
    pub fn is_empty(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }
}

/// Reduce a raw exponent vector on `g_1..g_{n-1}` to canonical form.
///
/// Every occurrence of a full pair `g_a * g_{n-a}` (including `g_{n/2}^2`
/// when `n` is even) is replaced by `v`; the returned shift counts how many
/// powers of `v` were extracted, so that in the quotient ring
/// `input = v^shift * canonical`.
///
/// The rewriting system is confluent (each pair is independent), so the
/// result does not depend on reduction order; `tests::rewriting_is_confluent`
/// checks this against a brute-force search.
pub fn gamma_canonicalize(
    raw_exps: &[u32],
    n: u32,
) -> Result<(GaussMonomial, u32), ScalarError> {
    assert!(n >= 1, "metaplectic degree must be positive");
    if raw_exps.len() != (n - 1) as usize {
        return Err(ScalarError::GammaCount {
            expected: (n - 1) as usize,
            got: raw_exps.len(),
        });
    }
    let mut exps = raw_exps.to_vec();
    let mut shift = 0u32;
    for a in 1..=(n.saturating_sub(1)) / 2 {
        let b = n - a;
        if a == b {
            continue;
        }
        let k = exps[(a - 1) as usize].min(exps[(b - 1) as usize]);
        exps[(a - 1) as usize] -= k;
        exps[(b - 1) as usize] -= k;
        shift += k;
    }
    if n % 2 == 0 && n > 1 {
        let m = (n / 2 - 1) as usize;
        shift += exps[m] / 2;
        exps[m] %= 2;
    }
    Ok((GaussMonomial { exps }, shift))
}

// ---------------------------------------------------------------------------
// Scalar polynomials
// ---------------------------------------------------------------------------

/// Key of one term: `v`-exponent first, then the symbol exponents.
///
/// The derived `Ord` (v-degree, then lexicographic on the symbol vector) is
/// the order in which terms are rendered, so text output is canonical.
type TermKey = (i64, Vec<u32>);

/// An element of `Z[v, v^-1][g_1..g_{n-1}] / (g_a g_{n-a} - v)`.
///
/// Stored as a sparse sum of `coeff * g^e * v^k` with integer (arbitrary
/// precision) coefficients, every symbol monomial canonical, and no zero
/// coefficients.  Values are immutable in spirit: all arithmetic builds new
/// polynomials, so sharing across threads is safe.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScalarPoly {
    n: u32,
    terms: BTreeMap<TermKey, BigInt>,
}

impl ScalarPoly {
    /// The zero polynomial.
    pub fn zero(n: u32) -> Self {
        assert!(n >= 1, "metaplectic degree must be positive");
        ScalarPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `1`.
    pub fn one(n: u32) -> Self {
        ScalarPoly::from_int(n, 1)
    }

    /// A constant integer.
    pub fn from_int(n: u32, c: i64) -> Self {
        ScalarPoly::from_bigint(n, BigInt::from(c))
    }

    /// A constant integer, arbitrary precision.
    pub fn from_bigint(n: u32, c: BigInt) -> Self {
        let mut p = ScalarPoly::zero(n);
        if !c.is_zero() {
            p.terms.insert((0, vec![0; (n - 1) as usize]), c);
        }
        p
    }

    /// The monomial `v^k` (negative `k` allowed).
    pub fn v_pow(n: u32, k: i64) -> Self {
        let mut p = ScalarPoly::zero(n);
        p.terms
            .insert((k, vec![0; (n - 1) as usize]), BigInt::one());
        p
    }

    /// The single symbol `g_a`, `1 <= a <= n-1`.
    pub fn gamma(n: u32, a: u32) -> Result<Self, ScalarError> {
        if a == 0 || a >= n {
            return Err(ScalarError::GammaIndex { index: a, n });
        }
        let mut exps = vec![0u32; (n - 1) as usize];
        exps[(a - 1) as usize] = 1;
        // A single symbol is already canonical unless n is even and a = n/2
        // with exponent 1, which is canonical too.
        let mut p = ScalarPoly::zero(n);
        p.terms.insert((0, exps), BigInt::one());
        Ok(p)
    }

    /// Metaplectic degree.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// True when no terms are stored.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when this equals the constant `1`.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|((k, g), c)| *k == 0 && g.iter().all(|&e| e == 0) && c.is_one())
    }

    /// Iterate over terms as `(v_exp, symbol exponents, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &[u32], &BigInt)> {
        self.terms.iter().map(|((k, g), c)| (*k, g.as_slice(), c))
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn insert_term(&mut self, key: TermKey, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Add the term `coeff * g^raw_exps * v^v_exp`, canonicalizing the
    /// symbol monomial first.
    pub fn add_term(
        &mut self,
        v_exp: i64,
        raw_exps: &[u32],
        coeff: BigInt,
    ) -> Result<(), ScalarError> {
        let (mono, shift) = gamma_canonicalize(raw_exps, self.n)?;
        self.insert_term((v_exp + i64::from(shift), mono.exps), coeff);
        Ok(())
    }

    /// Ring product.  Every cross term is re-canonicalized, so the relation
    /// `g_a g_{n-a} = v` is applied eagerly.
    ///
    /// Panics when the two factors belong to different metaplectic degrees.
    pub fn mul(&self, other: &ScalarPoly) -> ScalarPoly {
        assert_eq!(
            self.n, other.n,
            "cannot multiply scalars of different metaplectic degrees"
        );
        let mut out = ScalarPoly::zero(self.n);
        for ((k1, g1), c1) in &self.terms {
            for ((k2, g2), c2) in &other.terms {
                let raw: Vec<u32> = g1.iter().zip(g2).map(|(a, b)| a + b).collect();
                let (mono, shift) =
                    gamma_canonicalize(&raw, self.n).expect("term vectors have matching length");
                out.insert_term((k1 + k2 + i64::from(shift), mono.exps), c1 * c2);
            }
        }
        out
    }

    /// `self * v^k`.
    pub fn mul_v_pow(&self, k: i64) -> ScalarPoly {
        let mut out = ScalarPoly::zero(self.n);
        for ((ve, g), c) in &self.terms {
            out.terms.insert((ve + k, g.clone()), c.clone());
        }
        out
    }

    /// `self * c` for an integer constant.
    pub fn mul_int(&self, c: i64) -> ScalarPoly {
        if c == 0 {
            return ScalarPoly::zero(self.n);
        }
        let c = BigInt::from(c);
        let mut out = ScalarPoly::zero(self.n);
        for (key, coeff) in &self.terms {
            out.terms.insert(key.clone(), coeff * &c);
        }
        out
    }

    /// Integer power (exponent >= 0).
    pub fn pow(&self, mut e: u32) -> ScalarPoly {
        let mut base = self.clone();
        let mut acc = ScalarPoly::one(self.n);
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

    /// For a one-term scalar, its sign and the unsigned rendering of the
    /// body (`"v"`, `"g1*v^2"`, `"1"`, ...); `None` when the scalar has zero
    /// or several terms.  Lets callers pull the sign of coefficients like
    /// `-v` out in front of a monomial.
    pub fn single_term_signed_body(&self) -> Option<(bool, String)> {
        if self.terms.len() != 1 {
            return None;
        }
        let ((v_exp, g), coeff) = self.terms.iter().next().unwrap();
        Some((coeff.is_negative(), term_body(coeff, *v_exp, g)))
    }

    /// Substitute numeric values for `v` and the symbols.
    ///
    /// `gamma_values[a-1]` is the value of `g_a`; the slice must have length
    /// `n-1`.  The result respects the quotient relation only if the supplied
    /// values do (the Gauss-sum evaluation in the CLI crate guarantees that).
    pub fn evaluate(
        &self,
        v_value: Complex64,
        gamma_values: &[Complex64],
    ) -> Result<Complex64, ScalarError> {
        if gamma_values.len() != (self.n - 1) as usize {
            return Err(ScalarError::GammaCount {
                expected: (self.n - 1) as usize,
                got: gamma_values.len(),
            });
        }
        let mut total = Complex64::new(0.0, 0.0);
        for ((v_exp, g), coeff) in &self.terms {
            let mut term = complex_int_pow(v_value, *v_exp);
            for (a, &e) in g.iter().enumerate() {
                for _ in 0..e {
                    term *= gamma_values[a];
                }
            }
            total += term * bigint_to_f64(coeff);
        }
        Ok(total)
    }
}

/// `base^exp` for integer `exp`, by repeated multiplication (negative
/// exponents invert first).
fn complex_int_pow(base: Complex64, exp: i64) -> Complex64 {
    let b = if exp < 0 {
        Complex64::new(1.0, 0.0) / base
    } else {
        base
    };
    let mut acc = Complex64::new(1.0, 0.0);
    for _ in 0..exp.unsigned_abs() {
        acc *= b;
    }
    acc
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    // Coefficients stay tiny in practice; the lossy fallback only matters
    // far outside the verified parameter range.
    let (sign, digits) = c.to_u64_digits();
    let mut mag = 0.0f64;
    for d in digits.iter().rev() {
        mag = mag * 1.8446744073709552e19 + *d as f64;
    }
    match sign {
        num_bigint::Sign::Minus => -mag,
        _ => mag,
    }
}

// ---------------------------------------------------------------------------
// Gauss-sum scalar functions
// ---------------------------------------------------------------------------

/// `h_flat(a)`: the degree-`n` Gauss-sum value attached to an undecorated
/// entry.  Zero unless `n | a`, in which case it is `1 - v`.
pub fn h_flat(a: i64, n: u32) -> ScalarPoly {
    if a.rem_euclid(i64::from(n)) == 0 {
        let mut p = ScalarPoly::one(n);
        p -= &ScalarPoly::v_pow(n, 1);
        p
    } else {
        ScalarPoly::zero(n)
    }
}

/// `g_flat(a)`: the degree-`n` Gauss-sum value attached to a boxed entry.
/// Equal to `-v` when `n | a` and to the symbol `g_{a mod n}` otherwise.
pub fn g_flat(a: i64, n: u32) -> ScalarPoly {
    let r = a.rem_euclid(i64::from(n)) as u32;
    if r == 0 {
        ScalarPoly::v_pow(n, 1).mul_int(-1)
    } else {
        ScalarPoly::gamma(n, r).expect("residue is in 1..=n-1")
    }
}

/// `v * g_j` where `g_j` is the unnormalized Gauss sum: this product equals
/// `g_flat(j)`, so no `v^-1` is ever introduced.  The action formula uses
/// this form.
pub fn v_times_g(j: i64, n: u32) -> ScalarPoly {
    g_flat(j, n)
}

// ---------------------------------------------------------------------------
// Operator sugar
// ---------------------------------------------------------------------------

impl Add<&ScalarPoly> for &ScalarPoly {
    type Output = ScalarPoly;
    fn add(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&ScalarPoly> for ScalarPoly {
    fn add_assign(&mut self, rhs: &ScalarPoly) {
        assert_eq!(
            self.n, rhs.n,
            "cannot add scalars of different metaplectic degrees"
        );
        for (key, coeff) in &rhs.terms {
            self.insert_term(key.clone(), coeff.clone());
        }
    }
}

impl Sub<&ScalarPoly> for &ScalarPoly {
    type Output = ScalarPoly;
    fn sub(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&ScalarPoly> for ScalarPoly {
    fn sub_assign(&mut self, rhs: &ScalarPoly) {
        assert_eq!(
            self.n, rhs.n,
            "cannot subtract scalars of different metaplectic degrees"
        );
        for (key, coeff) in &rhs.terms {
            self.insert_term(key.clone(), -coeff.clone());
        }
    }
}

impl Mul<&ScalarPoly> for &ScalarPoly {
    type Output = ScalarPoly;
    fn mul(self, rhs: &ScalarPoly) -> ScalarPoly {
        ScalarPoly::mul(self, rhs)
    }
}

impl Neg for &ScalarPoly {
    type Output = ScalarPoly;
    fn neg(self) -> ScalarPoly {
        self.mul_int(-1)
    }
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

impl fmt::Display for ScalarPoly {
    /// Canonical text form: terms in `(v-exponent, symbol vector)` order,
    /// e.g. `1 - v + g1*v^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((v_exp, g), coeff) in &self.terms {
            let neg = coeff.is_negative();
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
            write!(f, "{}", term_body(coeff, *v_exp, g))?;
        }
        Ok(())
    }
}

/// The unsigned body of one term, pieces joined by `*`.
fn term_body(coeff: &BigInt, v_exp: i64, g: &[u32]) -> String {
    use core::fmt::Write;
    let mut pieces: Vec<String> = Vec::new();
    let mag = coeff.abs();
    for (idx, &e) in g.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let mut s = String::new();
        if e == 1 {
            let _ = write!(s, "g{}", idx + 1);
        } else {
            let _ = write!(s, "g{}^{}", idx + 1, e);
        }
        pieces.push(s);
    }
    if v_exp != 0 {
        let mut s = String::new();
        if v_exp == 1 {
            let _ = write!(s, "v");
        } else {
            let _ = write!(s, "v^{v_exp}");
        }
        pieces.push(s);
    }
    if !mag.is_one() || pieces.is_empty() {
        let mut s = String::new();
        let _ = write!(s, "{mag}");
        pieces.insert(0, s);
    }
    pieces.join("*")
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
