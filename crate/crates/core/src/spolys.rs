//! The four-parameter family `S_n(a,b,c,d;x)`: eigenvalues, recurrence
//! coefficients, the explicit and recurrence constructions, and the
//! residual of the defining second-order difference equation
//!
//! ```text
//! A(x) Δ∇y + B(x) Δy + (λ_n C(x) + σ_n E) y = 0,
//! A(x) = (2x+1)(ax³+bx²+cx+d),  B(x) = -2x((a+2b)x² + c + 2d),
//! C(x) = 1/4 - x²,  E = a/2 + b + 2c + 4d,  λ_n = 2n(an - 2(a+b)).
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::{int, ratio, Rational};
use crate::field::Field;
use crate::polynomial::Polynomial;
use crate::symmetric_basis::symmetric_factorial;

/// Characteristic vector `(a, b, c, d)` of the difference equation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharVector {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl CharVector {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(int(a), int(b), int(c), int(d))
    }

    pub fn from_slice(v: &[Rational]) -> Result<Self> {
        match v {
            [a, b, c, d] => Ok(Self::new(a.clone(), b.clone(), c.clone(), d.clone())),
            _ => Err(Error::InvalidArgument(format!(
                "characteristic vector needs 4 entries, got {}",
                v.len()
            ))),
        }
    }

    /// `A(x) = (2x+1)(x-p)(x-q)(x-r)`: the first hypergeometric sequence.
    pub fn seq1(p: &Rational, q: &Rational, r: &Rational) -> Self {
        Self::new(
            Rational::one(),
            -(p + q + r),
            p * q + p * r + q * r,
            -(p * q * r),
        )
    }

    /// `A(x) = (2x+1)(x-p)(x-q)`: the second hypergeometric sequence.
    pub fn seq2(p: &Rational, q: &Rational) -> Self {
        Self::new(Rational::zero(), Rational::one(), -(p + q), p * q)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }
    pub fn b(&self) -> &Rational {
        &self.b
    }
    pub fn c(&self) -> &Rational {
        &self.c
    }
    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn as_array(&self) -> [Rational; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    /// Coefficients of `A(x) = a₄x⁴ + a₃x³ + a₂(x² - 1/4) + a₁(x + 1/2) + a₃/8 - a₄/16`.
    pub fn a4(&self) -> Rational {
        int(2) * &self.a
    }
    pub fn a3(&self) -> Rational {
        &self.a + int(2) * &self.b
    }
    pub fn a2(&self) -> Rational {
        &self.b + int(2) * &self.c
    }
    pub fn a1(&self) -> Rational {
        &self.c + int(2) * &self.d
    }

    pub fn require_family(&self) -> Result<()> {
        if self.a.is_zero() && self.b.is_zero() {
            Err(Error::DegenerateFamily)
        } else {
            Ok(())
        }
    }

    /// `ax³ + bx² + cx + d`.
    pub fn cubic(&self) -> Polynomial {
        Polynomial::new(vec![self.d.clone(), self.c.clone(), self.b.clone(), self.a.clone()])
    }

    pub fn a_poly(&self) -> Polynomial {
        &Polynomial::from_ints(&[1, 2]) * &self.cubic()
    }

    pub fn b_poly(&self) -> Polynomial {
        let inner = Polynomial::new(vec![self.a1(), Rational::zero(), self.a3()]);
        inner.mul_x().scale(&int(-2))
    }

    pub fn c_poly() -> Polynomial {
        Polynomial::new(vec![ratio(1, 4), Rational::zero(), int(-1)])
    }

    pub fn e_const(&self) -> Rational {
        &self.a / int(2) + &self.b + int(2) * &self.c + int(4) * &self.d
    }

    /// `A(-x) - A(x)`; equals [`CharVector::b_poly`].
    pub fn pearson_b(&self) -> Polynomial {
        let a = self.a_poly();
        &a.reflect() - &a
    }
}

impl fmt::Display for CharVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

impl Serialize for CharVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [&self.a, &self.b, &self.c, &self.d]
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

fn sign_pow(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn nonzero(den: Rational, what: impl FnOnce() -> String) -> Result<Rational> {
    if den.is_zero() {
        Err(Error::DegenerateParameter(what()))
    } else {
        Ok(den)
    }
}

/// Eigenvalue `λ_n = 2n(an - 2(a+b))`.
pub fn lambda_n(cv: &CharVector, n: usize) -> Result<Rational> {
    cv.require_family()?;
    Ok(lambda_unchecked(cv, n))
}

fn lambda_unchecked(cv: &CharVector, n: usize) -> Rational {
    let n = int(n as i64);
    int(2) * &n * (cv.a() * &n - int(2) * (cv.a() + cv.b()))
}

/// The `x^{n-2}` coefficient `δ_n` of the monic solution.
pub fn delta_coeff(cv: &CharVector, n: usize) -> Result<Rational> {
    if n < 2 {
        return Ok(Rational::zero());
    }
    let (a4, a3, a2, a1) = (cv.a4(), cv.a3(), cv.a2(), cv.a1());
    let s = sign_pow(n);
    let nr = int(n as i64);
    let num = int(12) * &a1 * (int(2) * &nr + &s - int(1))
        + int(3) * &a3 * (&s - int(1))
        + &nr
            * (int(-12) * &a2 * (&nr - int(1))
                + int(2) * &a3 * (int(2) * (&nr - int(3)) * &nr + int(7))
                - &a4 * (&nr - int(1)) * ((&nr - int(5)) * &nr + int(9)));
    let den = nonzero(int(24) * &a4 * (int(3) - int(2) * &nr) + int(48) * &a3, || {
        format!("δ_{n} denominator vanishes (b = a(n-2)) for {cv}")
    })?;
    Ok(num / den)
}

/// Recurrence coefficient `γ_n` as a single rational expression in `n`.
pub fn gamma_general(cv: &CharVector, n: usize) -> Result<Rational> {
    let (a, b, c, d) = (cv.a(), cv.b(), cv.c(), cv.d());
    let s = sign_pow(n);
    let nr = int(n as i64);
    let e = a + int(2) * b + int(4) * c + int(8) * d;
    let k4 = int(-2) * a * a;
    let k3 = int(4) * a * (int(3) * a + int(2) * b);
    let k2 = int(-8) * (int(3) * a * a + a * (int(4) * b + c) + b * b);
    let k1 = int(2) * (int(3) * a + int(2) * b) * (int(3) * a + int(4) * (b + c))
        - int(2) * a * &s * &e;
    let k0 = (&s - int(1)) * (int(3) * a + int(2) * b) * &e;
    let num = (((k4 * &nr + k3) * &nr + k2) * &nr + k1) * &nr + k0;
    let den = nonzero(
        int(32) * (b - a * (&nr - int(2))) * (b - a * (&nr - int(1))),
        || format!("γ_{n} denominator vanishes for {cv}"),
    )?;
    Ok(num / den)
}

/// `γ_n` through the separate closed forms for `n = 2m` and `n = 2m + 1`.
pub fn gamma_parity(cv: &CharVector, n: usize) -> Result<Rational> {
    let (a, b, c, d) = (cv.a(), cv.b(), cv.c(), cv.d());
    let m = int((n / 2) as i64);
    let one = Rational::one();
    let (num, den) = if n.is_multiple_of(2) {
        let m1 = &m - &one;
        let num = &m
            * (-(a * a) * &m1 * &m1 * &m1
                + a * (int(2) * b * &m1 * &m1 + c * (&one - &m) - d)
                + b * (b * (&one - &m) + c));
        let den = (b - int(2) * a * &m1) * (b - a * (int(2) * &m - &one));
        (num, den)
    } else {
        let num = (a * (&m - &one) - b) * (-(a * &m * &m * &m) + b * &m * &m - c * &m + d);
        let den = (int(2) * a * &m - (a + b)) * (int(2) * a * &m - b);
        (num, den)
    };
    let den = nonzero(den, || format!("γ_{n} denominator vanishes for {cv}"))?;
    Ok(num / den)
}

/// `[γ_1, …, γ_n]`.
pub fn gammas(cv: &CharVector, n: usize) -> Result<Vec<Rational>> {
    (1..=n).map(|k| gamma_general(cv, k)).collect()
}

/// Weights `w_j` of the explicit form `S_n = x^σ Σ_j w_j (σ-x)_j (σ+x)_j`:
///
/// `w_j = (-1)^j C(m,j) ∏_{i=j}^{m-1} (a t³ - b t² + c t - d) / (a(i + m - σ_{n+1}) - b)`,
/// with `m = ⌊n/2⌋`, `t = i + σ_n`.
pub fn explicit_weights<F: Field>(cv: &[F; 4], n: usize) -> Result<Vec<F>> {
    let [a, b, c, d] = cv;
    let m = n / 2;
    let sigma = n % 2;
    let sigma_next = 1 - sigma;
    let mut weights = vec![F::zero_elem(); m + 1];
    // products accumulate from the top index downwards
    let mut prod = F::one_elem();
    let mut binom = BigInt::one();
    for j in (0..=m).rev() {
        if j < m {
            let i = j as i64;
            let t = F::from_int(i + sigma as i64);
            let t2 = t.mul(&t);
            let num = a.mul(&t2.mul(&t)).sub(&b.mul(&t2)).add(&c.mul(&t)).sub(d);
            let den = a.mul(&F::from_int(i + m as i64 - sigma_next as i64)).sub(b);
            let ratio = num.checked_div(&den).ok_or_else(|| {
                Error::DegenerateParameter(format!(
                    "explicit form of S_{n}: denominator a({}) - b vanishes",
                    i + m as i64 - sigma_next as i64
                ))
            })?;
            prod = prod.mul(&ratio);
            // C(m, j) from C(m, j+1)
            binom = binom * (j + 1) / (m - j);
        }
        let mut w = prod.scale(&Rational::from_integer(binom.clone()));
        if j % 2 == 1 {
            w = w.neg();
        }
        weights[j] = w;
    }
    Ok(weights)
}

/// Monomial coefficients of `S_n` over any exact field.
pub fn s_explicit_over<F: Field>(cv: &[F; 4], n: usize) -> Result<Vec<F>> {
    let sigma = n % 2;
    let weights = explicit_weights(cv, n)?;
    let mut coeffs = vec![F::zero_elem(); n + 1];
    for (j, w) in weights.iter().enumerate() {
        if w.is_zero_elem() {
            continue;
        }
        let basis = symmetric_factorial(sigma, j);
        for (i, bc) in basis.coeffs().iter().enumerate() {
            if !bc.is_zero() {
                coeffs[i + sigma] = coeffs[i + sigma].add(&w.scale(bc));
            }
        }
    }
    Ok(coeffs)
}

/// `S_n(a,b,c,d;x)` from the closed-form explicit representation.
pub fn s_explicit(cv: &CharVector, n: usize) -> Result<Polynomial> {
    cv.require_family()?;
    Ok(Polynomial::new(s_explicit_over(&cv.as_array(), n)?))
}

/// `S_0, …, S_n` from `φ_{k+1} = xφ_k - γ_k φ_{k-1}`, `φ_0 = 1`, `φ_1 = x`.
pub fn s_recurrence_all(cv: &CharVector, n: usize) -> Result<Vec<Polynomial>> {
    cv.require_family()?;
    let mut polys = vec![Polynomial::one()];
    if n >= 1 {
        polys.push(Polynomial::x());
    }
    for k in 1..n {
        let g = gamma_general(cv, k)?;
        let next = &polys[k].mul_x() - &polys[k - 1].scale(&g);
        polys.push(next);
    }
    Ok(polys)
}

pub fn s_recurrence(cv: &CharVector, n: usize) -> Result<Polynomial> {
    Ok(s_recurrence_all(cv, n)?.pop().expect("at least S_0"))
}

/// `A Δ∇f + B Δf + (λ_n C + σ_n E) f`, expanded exactly. Zero iff `f`
/// solves the difference equation for degree `n`.
pub fn diffeq_residual(cv: &CharVector, n: usize, f: &Polynomial) -> Polynomial {
    let lambda = lambda_unchecked(cv, n);
    let mut zeroth = CharVector::c_poly().scale(&lambda);
    if n % 2 == 1 {
        zeroth = &zeroth + &Polynomial::constant(cv.e_const());
    }
    let lhs = &(&cv.a_poly() * &f.delta_nabla()) + &(&cv.b_poly() * &f.delta());
    &lhs + &(&zeroth * f)
}

/// Rational factorization pattern of `A(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum ACaseClass {
    /// `A = (2x+1) a (x-p)(x-q)(x-r)`, roots in descending order.
    Quartic3Roots {
        #[serde(with = "crate::exact_arith::serde_rational")]
        p: Rational,
        #[serde(with = "crate::exact_arith::serde_rational")]
        q: Rational,
        #[serde(with = "crate::exact_arith::serde_rational")]
        r: Rational,
    },
    /// `A = (2x+1) a (x-p)(x-q)²`.
    Quartic2Roots {
        #[serde(with = "crate::exact_arith::serde_rational")]
        p: Rational,
        #[serde(with = "crate::exact_arith::serde_rational")]
        q: Rational,
    },
    /// `a = 0`: `A = (2x+1) b (x-p)(x-q)`, roots in descending order.
    Cubic2Roots {
        #[serde(with = "crate::exact_arith::serde_rational")]
        p: Rational,
        #[serde(with = "crate::exact_arith::serde_rational")]
        q: Rational,
    },
    /// `a = 0`: `A = (2x+1) b (x-p)²`.
    Cubic1Root {
        #[serde(with = "crate::exact_arith::serde_rational")]
        p: Rational,
    },
    /// A real factor without real roots. Weights for these cases are not
    /// provided by this library.
    IrreducibleQuadraticFactor,
    /// Real roots exist but are not all rational; construct the family
    /// from explicit `(p, q, r)` or `(p, q)` instead.
    NotRationallyDecomposable,
}

/// Classifies `A(x)` by the rational roots of `ax³ + bx² + cx + d`
/// (or `bx² + cx + d` when `a = 0`).
pub fn decompose_a(cv: &CharVector) -> ACaseClass {
    if !cv.a().is_zero() {
        let cubic = cv.cubic();
        let Some(p) = rational_roots(&cubic).into_iter().next() else {
            return ACaseClass::NotRationallyDecomposable;
        };
        let quad = deflate(&cubic, &p);
        match quadratic_roots(&quad) {
            QuadRoots::Complex => ACaseClass::IrreducibleQuadraticFactor,
            QuadRoots::Irrational => ACaseClass::NotRationallyDecomposable,
            QuadRoots::Double(q) => ACaseClass::Quartic2Roots { p, q },
            QuadRoots::Distinct(q, r) => {
                let mut roots = [p, q, r];
                roots.sort_by(|x, y| y.cmp(x));
                let [p, q, r] = roots;
                if p == q && q == r {
                    ACaseClass::Quartic2Roots { p: p.clone(), q: p }
                } else if p == q {
                    ACaseClass::Quartic2Roots { p: r, q: p }
                } else if q == r {
                    ACaseClass::Quartic2Roots { p, q }
                } else {
                    ACaseClass::Quartic3Roots { p, q, r }
                }
            }
        }
    } else if !cv.b().is_zero() {
        let quad = Polynomial::new(vec![cv.d().clone(), cv.c().clone(), cv.b().clone()]);
        match quadratic_roots(&quad) {
            QuadRoots::Complex => ACaseClass::IrreducibleQuadraticFactor,
            QuadRoots::Irrational => ACaseClass::NotRationallyDecomposable,
            QuadRoots::Double(p) => ACaseClass::Cubic1Root { p },
            QuadRoots::Distinct(p, q) => ACaseClass::Cubic2Roots { p, q },
        }
    } else {
        ACaseClass::NotRationallyDecomposable
    }
}

enum QuadRoots {
    Complex,
    Irrational,
    Double(Rational),
    /// Descending order.
    Distinct(Rational, Rational),
}

/// Roots of `c0 + c1 x + c2 x²` with `c2 ≠ 0`.
fn quadratic_roots(quad: &Polynomial) -> QuadRoots {
    let (c0, c1, c2) = (quad.coeff(0), quad.coeff(1), quad.coeff(2));
    let disc = &c1 * &c1 - int(4) * &c2 * &c0;
    if disc.is_negative() {
        return QuadRoots::Complex;
    }
    let two_a = int(2) * &c2;
    if disc.is_zero() {
        return QuadRoots::Double(-c1 / two_a);
    }
    let Some(root) = rational_sqrt(&disc) else {
        return QuadRoots::Irrational;
    };
    let x1 = (-&c1 + &root) / &two_a;
    let x2 = (-&c1 - &root) / &two_a;
    if x1 > x2 {
        QuadRoots::Distinct(x1, x2)
    } else {
        QuadRoots::Distinct(x2, x1)
    }
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Synthetic division by `(x - root)`.
fn deflate(p: &Polynomial, root: &Rational) -> Polynomial {
    let deg = p.degree().unwrap_or(0);
    let mut out = vec![Rational::zero(); deg];
    let mut carry = Rational::zero();
    for i in (1..=deg).rev() {
        carry = &carry * root + p.coeff(i);
        out[i - 1] = carry.clone();
    }
    Polynomial::new(out)
}

/// Distinct rational roots by the rational root theorem, descending.
fn rational_roots(p: &Polynomial) -> Vec<Rational> {
    // clear denominators
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    // strip x = 0 factors
    let lowest = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if lowest > 0 {
        roots.push(Rational::zero());
    }
    let trimmed = &ints[lowest..];
    if trimmed.len() >= 2 {
        let lead = trimmed.last().expect("nonempty").abs();
        let constant = trimmed[0].abs();
        for num in divisors(&constant) {
            for den in divisors(&lead) {
                for sign in [1i64, -1] {
                    let cand = Rational::new(&num * sign, den.clone());
                    if p.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort_by(|x, y| y.cmp(x));
    roots
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if let Some(small) = n.to_u128() {
        let mut out = Vec::new();
        let mut k: u128 = 1;
        while k * k <= small {
            if small % k == 0 {
                out.push(BigInt::from(k));
                if k * k != small {
                    out.push(BigInt::from(small / k));
                }
            }
            k += 1;
        }
        return out;
    }
    let mut out = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= *n {
        if (n % &k).is_zero() {
            out.push(k.clone());
            let other = n / &k;
            if other != k {
                out.push(other);
            }
        }
        k += 1;
    }
    out
}
