//! Numeric Gauss sums over a prime field, and numeric specialization of
//! symbolic values.
//!
//! The core crate treats the symbols `g_a` as formal normalized Gauss sums
//! subject to `g_a * g_{n-a} = v`.  Over `F_p` with `p = 1 mod 2n` the
//! honest sums realize exactly those relations, so substituting
//! `v -> 1/p`, `g_a -> gflat(a)` and the variables by nonzero complex
//! numbers turns any exact symbolic identity into a floating-point one,
//! checkable within tolerance.  A context fixes one prime, one degree, and
//! one primitive root; every value is deterministic from those.

use std::f64::consts::TAU;
use std::fmt;

use metaplectic_core::laurent::LaurentPoly;
use num_complex::Complex64;

/// Everything that can go wrong building a context or specializing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GaussError {
    /// The modulus must be an odd prime.
    NotAnOddPrime(u64),
    /// The prime must satisfy `p = 1 mod 2n`.
    BadCongruence { p: u64, n: u32 },
    /// The polynomial's ring degree differs from the context degree.
    DegreeMismatch { poly: u32, context: u32 },
    /// Wrong number of sample values for the polynomial's variables.
    VariableCount { expected: usize, got: usize },
    /// Sample values must be nonzero (the variables are Laurent).
    ZeroSample,
}

impl fmt::Display for GaussError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaussError::NotAnOddPrime(p) => write!(f, "{p} is not an odd prime"),
            GaussError::BadCongruence { p, n } => {
                write!(f, "prime {p} is not 1 mod {} (n = {n})", 2 * n)
            }
            GaussError::DegreeMismatch { poly, context } => {
                write!(f, "polynomial has degree {poly} but the context has degree {context}")
            }
            GaussError::VariableCount { expected, got } => {
                write!(f, "expected {expected} sample values, got {got}")
            }
            GaussError::ZeroSample => write!(f, "sample values must be nonzero"),
        }
    }
}

impl std::error::Error for GaussError {}

/// A fixed prime `p = 1 mod 2n` together with the discrete-log table for
/// its smallest primitive root.  The additive character is
/// `psi(b) = exp(2 pi i b / p)` and the root of unity embedding sends the
/// primitive root to `exp(2 pi i / (p-1))`.
#[derive(Debug, Clone)]
pub struct GaussContext {
    p: u64,
    n: u32,
    root: u64,
    /// `log[m]` is the index of `m` with respect to `root`; entry 0 unused.
    log: Vec<u64>,
}

fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

impl GaussContext {
    pub fn new(p: u64, n: u32) -> Result<Self, GaussError> {
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(GaussError::NotAnOddPrime(p));
        }
        if n == 0 || (p - 1) % (2 * u64::from(n)) != 0 {
            return Err(GaussError::BadCongruence { p, n });
        }
        let factors = prime_factors(p - 1);
        let root = (2..p)
            .find(|&g| factors.iter().all(|&f| mod_pow(g, (p - 1) / f, p) != 1))
            .expect("every prime has a primitive root");
        let mut log = vec![0u64; p as usize];
        let mut acc = 1u64;
        for k in 0..p - 1 {
            log[acc as usize] = k;
            acc = acc * root % p;
        }
        Ok(GaussContext { p, n, root, log })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Residue field size; the degree-one choice `q = p`.
    pub fn q(&self) -> f64 {
        self.p as f64
    }

    pub fn primitive_root(&self) -> u64 {
        self.root
    }

    /// Discrete log of `m` modulo `p`, or `None` when `p | m`.
    fn index(&self, m: i64) -> Option<u64> {
        let reduced = m.rem_euclid(self.p as i64) as usize;
        if reduced == 0 {
            None
        } else {
            Some(self.log[reduced])
        }
    }
}

fn unit_circle(turns: f64) -> Complex64 {
    Complex64::new(0.0, TAU * turns).exp()
}

/// The degree-`n` power residue symbol of `m`: zero when `p | m`, otherwise
/// the `n`-th root of unity congruent to `m^{(p-1)/n}` mod `p`.
pub fn residue_symbol(m: i64, ctx: &GaussContext) -> Complex64 {
    match ctx.index(m) {
        None => Complex64::new(0.0, 0.0),
        Some(k) => unit_circle((k % u64::from(ctx.n)) as f64 / f64::from(ctx.n)),
    }
}

/// The symbol raised to the `a`-th power, reduced in the exponent first so
/// large `a` stay exact.
fn symbol_power(b: u64, a: i64, ctx: &GaussContext) -> Complex64 {
    match ctx.index(b as i64) {
        None => Complex64::new(0.0, 0.0),
        Some(k) => {
            let n = i128::from(ctx.n);
            let e = (i128::from(k) * i128::from(a)).rem_euclid(n);
            unit_circle(e as f64 / f64::from(ctx.n))
        }
    }
}

/// The normalized Gauss sum `gflat(a) = q^{-1} sum_b (b|p)^a psi(b)`.
/// Equals `-1/q` whenever `n | a`.
pub fn gauss_gflat(a: i64, ctx: &GaussContext) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    for b in 1..ctx.p {
        sum += symbol_power(b, a, ctx) * unit_circle(b as f64 / ctx.q());
    }
    sum / ctx.q()
}

/// The character sum `hflat(a) = q^{-1} sum_b (b|p)^a`, which collapses to
/// `1 - 1/q` when `n | a` and to `0` otherwise.  Both the sum and the case
/// split are computed and must agree to within 1e-9.
pub fn gauss_hflat(a: i64, ctx: &GaussContext) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    for b in 1..ctx.p {
        sum += symbol_power(b, a, ctx);
    }
    sum /= ctx.q();
    let predicted = if a.rem_euclid(i64::from(ctx.n)) == 0 {
        Complex64::new(1.0 - 1.0 / ctx.q(), 0.0)
    } else {
        Complex64::new(0.0, 0.0)
    };
    assert!(
        (sum - predicted).norm() < 1e-9,
        "character orthogonality failed for a={a} at p={}",
        ctx.p
    );
    sum
}

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

/// Substitute `v -> 1/q`, `g_a -> gflat(a)`, and `x_i -> x_values[i-1]`.
/// The quotient relation maps to `gflat(a) gflat(n-a) = 1/q`, which the
/// numeric sums satisfy, so the value is independent of the chosen
/// representative of each coefficient.
pub fn specialize_poly(
    f: &LaurentPoly,
    ctx: &GaussContext,
    x_values: &[Complex64],
) -> Result<Complex64, GaussError> {
    if f.n() != ctx.n {
        return Err(GaussError::DegreeMismatch { poly: f.n(), context: ctx.n });
    }
    if x_values.len() != f.vars() {
        return Err(GaussError::VariableCount { expected: f.vars(), got: x_values.len() });
    }
    if x_values.iter().any(|x| x.norm() == 0.0) {
        return Err(GaussError::ZeroSample);
    }
    let v_value = Complex64::new(1.0 / ctx.q(), 0.0);
    let gammas: Vec<Complex64> = (1..ctx.n).map(|a| gauss_gflat(i64::from(a), ctx)).collect();
    let mut total = Complex64::new(0.0, 0.0);
    for (exps, coeff) in f.terms() {
        let mut term = coeff
            .evaluate(v_value, &gammas)
            .expect("gamma slice sized to the ring degree");
        for (x, &e) in x_values.iter().zip(exps) {
            term *= complex_int_pow(*x, e);
        }
        total += term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use metaplectic_core::operators::whittaker_value;
    use metaplectic_core::scalars::{h_flat, ScalarPoly};
    use metaplectic_core::verify::crystal_side;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-9
    }

    #[test]
    fn context_validation() {
        assert!(GaussContext::new(5, 2).is_ok());
        assert!(GaussContext::new(17, 4).is_ok());
        assert_eq!(GaussContext::new(9, 2).unwrap_err(), GaussError::NotAnOddPrime(9));
        assert_eq!(GaussContext::new(2, 1).unwrap_err(), GaussError::NotAnOddPrime(2));
        assert_eq!(
            GaussContext::new(5, 3).unwrap_err(),
            GaussError::BadCongruence { p: 5, n: 3 }
        );
        // 2 generates F_5 (2, 4, 3, 1).
        assert_eq!(GaussContext::new(5, 2).unwrap().primitive_root(), 2);
    }

    #[test]
    fn residue_symbol_values() {
        let ctx = GaussContext::new(5, 2).unwrap();
        assert!(close(residue_symbol(1, &ctx), Complex64::new(1.0, 0.0)));
        assert!(close(residue_symbol(2, &ctx), Complex64::new(-1.0, 0.0)));
        assert!(close(residue_symbol(4, &ctx), Complex64::new(1.0, 0.0)));
        assert!(close(residue_symbol(5, &ctx), Complex64::new(0.0, 0.0)));
        assert!(close(residue_symbol(-1, &ctx), Complex64::new(1.0, 0.0)));
        // Degree three at p = 7: the symbol of a generator is a primitive
        // cube root of unity.
        let ctx = GaussContext::new(7, 3).unwrap();
        let z = residue_symbol(ctx.primitive_root() as i64, &ctx);
        assert!(close(z, unit_circle(1.0 / 3.0)));
    }

    #[test]
    fn gflat_known_values() {
        let ctx = GaussContext::new(5, 2).unwrap();
        // Divisible exponent: the sum of all nontrivial additive characters.
        assert!(close(gauss_gflat(2, &ctx), Complex64::new(-0.2, 0.0)));
        // The quadratic Gauss sum over F_5 is sqrt(5).
        assert!(close(gauss_gflat(1, &ctx), Complex64::new(5f64.sqrt() / 5.0, 0.0)));
    }

    #[test]
    fn gflat_product_identity() {
        for (p, n) in [(5u64, 2u32), (7, 3), (17, 4)] {
            let ctx = GaussContext::new(p, n).unwrap();
            for a in 1..i64::from(n) {
                let prod = gauss_gflat(a, &ctx) * gauss_gflat(i64::from(n) - a, &ctx);
                assert!(
                    close(prod, Complex64::new(1.0 / ctx.q(), 0.0)),
                    "p={p} n={n} a={a}"
                );
            }
        }
    }

    #[test]
    fn gflat_magnitude_for_nondivisible_exponents() {
        // Standard magnitude of a nontrivial Gauss sum; a sanity check on
        // the numerics rather than a symbolic relation.
        for (p, n) in [(5u64, 2u32), (7, 3), (17, 4)] {
            let ctx = GaussContext::new(p, n).unwrap();
            for a in 1..i64::from(n) {
                let mag = gauss_gflat(a, &ctx).norm();
                assert!((mag - ctx.q().powf(-0.5)).abs() < 1e-9, "p={p} n={n} a={a}");
            }
        }
    }

    #[test]
    fn hflat_case_split() {
        let ctx = GaussContext::new(5, 2).unwrap();
        assert!(close(gauss_hflat(3, &ctx), Complex64::new(0.0, 0.0)));
        assert!(close(gauss_hflat(4, &ctx), Complex64::new(0.8, 0.0)));
        let ctx = GaussContext::new(7, 3).unwrap();
        assert!(close(gauss_hflat(0, &ctx), Complex64::new(6.0 / 7.0, 0.0)));
    }

    #[test]
    fn specialization_of_scalars() {
        let ctx = GaussContext::new(5, 2).unwrap();
        let one_minus_v = LaurentPoly::monomial(vec![0, 0], h_flat(0, 2));
        let xs = [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)];
        assert!(close(
            specialize_poly(&one_minus_v, &ctx, &xs).unwrap(),
            Complex64::new(0.8, 0.0)
        ));
        assert_eq!(
            specialize_poly(&one_minus_v, &ctx, &xs[..1]).unwrap_err(),
            GaussError::VariableCount { expected: 2, got: 1 }
        );
        assert_eq!(
            specialize_poly(&one_minus_v, &ctx, &[xs[0], Complex64::new(0.0, 0.0)])
                .unwrap_err(),
            GaussError::ZeroSample
        );
        let wrong_degree = LaurentPoly::one(2, 3);
        assert_eq!(
            specialize_poly(&wrong_degree, &ctx, &xs).unwrap_err(),
            GaussError::DegreeMismatch { poly: 3, context: 2 }
        );
    }

    #[test]
    fn specialization_is_multiplicative_on_samples() {
        let ctx = GaussContext::new(5, 2).unwrap();
        let f = whittaker_value(&[1, 0], 2).unwrap();
        let mut g = LaurentPoly::one(2, 2);
        g.add_term(&[1, -2], &h_flat(0, 2));
        g.add_term(&[0, 1], &-&ScalarPoly::v_pow(2, 1));
        let xs = [Complex64::new(0.3, 0.7), Complex64::new(-1.1, 0.4)];
        let lhs = specialize_poly(&f.mul(&g), &ctx, &xs).unwrap();
        let rhs = specialize_poly(&f, &ctx, &xs).unwrap()
            * specialize_poly(&g, &ctx, &xs).unwrap();
        assert!((lhs - rhs).norm() / rhs.norm().max(1.0) < 1e-8);
    }

    #[test]
    fn specialization_commutes_with_the_crystal_sum() {
        // Whittaker value via operators, specialized at the end, against a
        // numeric accumulation that specializes each vertex coefficient as
        // it is summed.
        let ctx = GaussContext::new(5, 2).unwrap();
        let n = 2u32;
        let xs = [Complex64::new(0.4, 0.9), Complex64::new(1.3, -0.2)];
        let symbolic = whittaker_value(&[1, 0], n).unwrap();
        let via_poly = specialize_poly(&symbolic, &ctx, &xs).unwrap();

        let crystal = crystal_side(&[1, 0], 1, n).unwrap();
        let mut numeric = Complex64::new(0.0, 0.0);
        let v_value = Complex64::new(1.0 / ctx.q(), 0.0);
        let gammas: Vec<Complex64> =
            (1..n).map(|a| gauss_gflat(i64::from(a), &ctx)).collect();
        for (exps, coeff) in crystal.terms() {
            let mut term = coeff.evaluate(v_value, &gammas).unwrap();
            for (x, &e) in xs.iter().zip(exps) {
                term *= complex_int_pow(*x, e);
            }
            numeric += term;
        }
        assert!((via_poly - numeric).norm() < 1e-9);
    }
}
