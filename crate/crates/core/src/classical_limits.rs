//! Classical special cases reached through the hatted parameters
//! `(â, b̂, ĉ)` with `(a,b,c,d) = (-2â, â-2b̂, b̂-2ĉ, ĉ)`, and the limit
//! from the lattice family to a continuous symmetric family.

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::{int, is_integer, pochhammer, ratio, to_i64, Rational};
use crate::field::Field;
use crate::hyper::HyperSeries;
use crate::polynomial::Polynomial;
use crate::ratfunc::RatFunc;
use crate::spolys::{s_explicit, s_explicit_over, CharVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatParams {
    pub a_hat: Rational,
    pub b_hat: Rational,
    pub c_hat: Rational,
}

impl HatParams {
    pub fn new(a_hat: Rational, b_hat: Rational, c_hat: Rational) -> Self {
        Self { a_hat, b_hat, c_hat }
    }
}

/// Equation `(âx² + b̂x + ĉ)Δ∇y - 2b̂xΔy + n(â(1-n) + 2b̂)y = 0` as a
/// characteristic vector.
pub fn hat_to_char(h: &HatParams) -> CharVector {
    CharVector::new(
        int(-2) * &h.a_hat,
        &h.a_hat - int(2) * &h.b_hat,
        &h.b_hat - int(2) * &h.c_hat,
        h.c_hat.clone(),
    )
}

fn degenerate(e: Error) -> Error {
    match e {
        Error::Pole(msg) => Error::DegenerateParameter(msg),
        other => other,
    }
}

/// `2^{-n} (-2ĉ)_n ₂F₁(-n, -ĉ-x; -2ĉ; 2)`.
pub fn kravchuk_reference(n: usize, c_hat: &Rational, x: &Rational) -> Result<Rational> {
    let two_c = int(2) * c_hat;
    if !is_integer(&two_c) || two_c.is_negative() {
        return Err(Error::DegenerateParameter(format!("2ĉ = {two_c} is not in ℕ")));
    }
    if int(n as i64) > two_c {
        return Err(Error::DegenerateParameter(format!("n = {n} exceeds 2ĉ = {two_c}")));
    }
    let series = HyperSeries::new(vec![int(-(n as i64)), -c_hat - x], vec![-two_c.clone()], int(2));
    let scale = pochhammer(&-two_c, n as i64)? / int(2).pow(n as i32);
    Ok(scale * series.eval_terminating().map_err(degenerate)?)
}

/// Which hypergeometric representation applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HahnCase {
    /// `(â, b̂, ĉ) = (1, b̂, b̂²/4)`, support `{-b̂/2, …, b̂/2}`.
    Case2 { b_hat: Rational },
    /// `(â, b̂, ĉ) = (1, -δ₁-δ₂, δ₁δ₂)`; the representation uses
    /// `δ = δ₂` (Hahn–Eberlein) or `δ = δ₁` (Hahn).
    Case3 { delta1: Rational, delta2: Rational, use_delta1: bool },
}

impl HahnCase {
    /// Gram polynomials: Case 3 with `δ₁ + δ₂ = 1`, supported on
    /// `{δ₁, …, -δ₁}`.
    pub fn gram(delta1: Rational) -> Self {
        let delta2 = int(1) - &delta1;
        HahnCase::Case3 { delta1, delta2, use_delta1: true }
    }

    pub fn hat_params(&self) -> HatParams {
        match self {
            HahnCase::Case2 { b_hat } => HatParams::new(int(1), b_hat.clone(), b_hat * b_hat / int(4)),
            HahnCase::Case3 { delta1, delta2, .. } => {
                HatParams::new(int(1), -(delta1 + delta2), delta1 * delta2)
            }
        }
    }

    /// Lattice points `{-θ, -θ+1, …, θ}` of the weight.
    pub fn support(&self) -> Result<Vec<Rational>> {
        let lo = match self {
            HahnCase::Case2 { b_hat } => -b_hat / int(2),
            HahnCase::Case3 { delta1, delta2, use_delta1 } => {
                if *use_delta1 {
                    delta1.clone()
                } else {
                    delta2.clone()
                }
            }
        };
        let width = to_i64(&(int(-2) * &lo))
            .filter(|w| *w >= 0)
            .ok_or_else(|| Error::DegenerateParameter(format!("support endpoint {lo} is not in -ℕ/2")))?;
        Ok((0..=width).map(|k| &lo + int(k)).collect())
    }
}

/// Value of the Case 2 or Case 3 hypergeometric representation.
pub fn hahn_eberlein_reference(n: usize, case: &HahnCase, x: &Rational) -> Result<Rational> {
    let ni = n as i64;
    let (upper, lower, num, den) = match case {
        HahnCase::Case2 { b_hat } => {
            if !is_integer(b_hat) || b_hat.is_negative() {
                return Err(Error::DegenerateParameter(format!("b̂ = {b_hat} is not in ℕ")));
            }
            let top = int(ni - 1) - int(2) * b_hat;
            let mb = -b_hat.clone();
            let p = pochhammer(&mb, ni)?;
            let upper = vec![int(-ni), top.clone(), -x - b_hat / int(2)];
            (upper, vec![mb.clone(), mb], &p * &p, pochhammer(&top, ni)?)
        }
        HahnCase::Case3 { delta1, delta2, use_delta1 } => {
            let delta = if *use_delta1 { delta1 } else { delta2 };
            let s = delta1 + delta2;
            let top = int(ni - 1) + int(2) * &s;
            let two_d = int(2) * delta;
            let num = pochhammer(&s, ni)? * pochhammer(&two_d, ni)?;
            let upper = vec![int(-ni), top.clone(), delta - x];
            (upper, vec![s, two_d], num, pochhammer(&top, ni)?)
        }
    };
    if den.is_zero() {
        return Err(Error::DegenerateParameter(format!("prefactor of degree {n} has a zero denominator")));
    }
    let series = HyperSeries::new(upper, lower, Rational::one());
    Ok(num / den * series.eval_terminating().map_err(degenerate)?)
}

/// Parameters `(r*, s*, p*, q*)` of the continuous symmetric equation
/// `t²(p*t² + q*)Φ'' + t(r*t² + s*)Φ' - (n(r* + (n-1)p*)t² + σ_n s*)Φ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuousParams {
    pub r: Rational,
    pub s: Rational,
    pub p: Rational,
    pub q: Rational,
}

impl ContinuousParams {
    pub fn new(r: Rational, s: Rational, p: Rational, q: Rational) -> Self {
        Self { r, s, p, q }
    }

    pub fn from_slice(v: &[Rational]) -> Result<Self> {
        match v {
            [r, s, p, q] => Ok(Self::new(r.clone(), s.clone(), p.clone(), q.clone())),
            _ => Err(Error::InvalidArgument(format!("expected r*,s*,p*,q*; got {} values", v.len()))),
        }
    }
}

/// Monic continuous polynomial with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContinuousSymPoly {
    pub n: usize,
    pub coeffs: Polynomial,
}

/// Coefficients of the displayed sum, normalized to constant term 1:
/// `t^{n-2k}` has `C(m,k) ∏_{i=0}^{m-k-1} N_i/D_i` with
/// `N_i = (2i + (-1)^{n+1} + 2m)p* + r*`, `D_i = (2i + (-1)^{n+1} + 2)q* + s*`.
pub fn continuous_s_star_displayed(params: &ContinuousParams, n: usize) -> Result<Polynomial> {
    let m = n / 2;
    let sign = if n.is_multiple_of(2) { -1 } else { 1 };
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in 0..=m {
        let mut c: Rational = (0..k).fold(Rational::one(), |acc, i| acc * int((m - i) as i64) / int(i as i64 + 1));
        for i in 0..(m - k) as i64 {
            let num = int(2 * i + sign + 2 * m as i64) * &params.p + &params.r;
            let den = int(2 * i + sign + 2) * &params.q + &params.s;
            if den.is_zero() {
                return Err(Error::DegenerateParameter(format!("D_{i} = 0 for degree {n}")));
            }
            c = c * num / den;
        }
        coeffs[n - 2 * k] = c;
    }
    Ok(Polynomial::new(coeffs))
}

/// Monic `S_n*`.
pub fn continuous_s_star_poly(params: &ContinuousParams, n: usize) -> Result<ContinuousSymPoly> {
    let displayed = continuous_s_star_displayed(params, n)?;
    let lead = displayed.coeff(n);
    if lead.is_zero() {
        return Err(Error::DegenerateParameter(format!("degree {n} leading coefficient vanishes")));
    }
    Ok(ContinuousSymPoly { n, coeffs: displayed.scale(&lead.recip()) })
}

/// Monic `S_n*(t)` in floating point.
pub fn continuous_s_star(params: &ContinuousParams, n: usize, t: f64) -> Result<f64> {
    Ok(continuous_s_star_poly(params, n)?.coeffs.eval_f64(t))
}

/// Residual of the continuous differential equation, expanded exactly.
pub fn continuous_diffeq_residual(params: &ContinuousParams, n: usize, f: &Polynomial) -> Polynomial {
    let d1 = derivative(f);
    let d2 = derivative(&d1);
    let t2 = Polynomial::monomial(2);
    let lead = &t2 * &Polynomial::new(vec![params.q.clone(), Rational::zero(), params.p.clone()]);
    let first = Polynomial::new(vec![Rational::zero(), params.s.clone(), Rational::zero(), params.r.clone()]);
    let nr = int(n as i64);
    let sigma = int((n % 2) as i64);
    let zeroth = Polynomial::new(vec![
        -(sigma * &params.s),
        Rational::zero(),
        -(&nr * (&params.r + (&nr - int(1)) * &params.p)),
    ]);
    &(&(&lead * &d2) + &(&first * &d1)) + &(&zeroth * f)
}

fn derivative(f: &Polynomial) -> Polynomial {
    Polynomial::new(
        f.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * int(i as i64))
            .collect(),
    )
}

/// `(p*h/q*, -(p*+r*)h/(2q*), 1/h, -(q*+s*)/(2q*h))`.
pub fn mapped_char_vector(params: &ContinuousParams, h: &Rational) -> Result<CharVector> {
    if params.q.is_zero() || h.is_zero() {
        return Err(Error::DegenerateParameter("q* and h must be nonzero".into()));
    }
    let q = &params.q;
    Ok(CharVector::new(
        &params.p * h / q,
        -(&params.p + &params.r) * h / (int(2) * q),
        h.recip(),
        -(q + &params.s) / (int(2) * q * h),
    ))
}

/// Exact limit `h → 0` of the coefficients of `h^n S_n(cv(h); t/h)`,
/// computed over rational functions of `h`.
pub fn continuous_symbolic_limit(params: &ContinuousParams, n: usize) -> Result<Polynomial> {
    if params.q.is_zero() {
        return Err(Error::DegenerateParameter("q* must be nonzero".into()));
    }
    let h = RatFunc::symbol();
    let c = |r: &Rational| RatFunc::from_rational(r);
    let two_q = int(2) * &params.q;
    let inv_h = RatFunc::one_elem().checked_div(&h).expect("h is a nonzero symbol");
    let cv = [
        h.scale(&(&params.p / &params.q)),
        h.scale(&(-(&params.p + &params.r) / &two_q)),
        inv_h.clone(),
        inv_h.mul(&c(&(-(&params.q + &params.s) / &two_q))),
    ];
    let coeffs = s_explicit_over(&cv, n)?;
    let mut out = Vec::with_capacity(n + 1);
    let mut hp = RatFunc::one_elem();
    for j in (0..=n).rev() {
        // coefficient of t^j picks up h^{n-j}
        let scaled = coeffs[j].mul(&hp);
        let lim = scaled.limit_at_zero().ok_or_else(|| {
            Error::DegenerateParameter(format!("coefficient of t^{j} diverges as h → 0"))
        })?;
        out.push((j, lim));
        hp = hp.mul(&h);
    }
    out.sort_by_key(|(j, _)| *j);
    Ok(Polynomial::new(out.into_iter().map(|(_, v)| v).collect()))
}

/// `|h^n S_n(cv(h); t/h) - S_n*(t)|`, evaluated exactly and rounded once.
pub fn continuous_limit_residual(params: &ContinuousParams, n: usize, t: &Rational, h: &Rational) -> Result<f64> {
    if !h.is_positive() {
        return Err(Error::InvalidArgument(format!("h = {h} must be positive")));
    }
    let cv = mapped_char_vector(params, h)?;
    let s = s_explicit(&cv, n)?;
    let lattice = s.eval(&(t / h)) * h.pow(n as i32);
    let target = continuous_s_star_poly(params, n)?.coeffs.eval(t);
    Ok((lattice - target).abs().to_f64().unwrap_or(f64::INFINITY))
}

/// Gram matrix of the Kravchuk case against the binomial weight
/// `C(2ĉ, ĉ+x)` on `{-ĉ, …, ĉ}`.
pub fn kravchuk_gram(c_hat: &Rational, n_max: usize) -> Result<Vec<Vec<Rational>>> {
    let two_c = to_i64(&(int(2) * c_hat))
        .filter(|v| *v >= 0)
        .ok_or_else(|| Error::DegenerateParameter(format!("2ĉ = {} is not in ℕ", int(2) * c_hat)))?;
    let cv = hat_to_char(&HatParams::new(int(0), int(1), c_hat.clone()));
    let polys = (0..=n_max).map(|n| s_explicit(&cv, n)).collect::<Result<Vec<_>>>()?;
    let mut binom = Rational::one();
    let mut pts = Vec::new();
    for k in 0..=two_c {
        pts.push((-c_hat + int(k), binom.clone()));
        binom = binom * int(two_c - k) / int(k + 1);
    }
    Ok((0..=n_max)
        .map(|n| {
            (0..=n_max)
                .map(|m| pts.iter().map(|(x, w)| w * polys[n].eval(x) * polys[m].eval(x)).sum())
                .collect()
        })
        .collect())
}

/// Half of `2ĉ` as a rational, for building Kravchuk parameters from a size.
pub fn kravchuk_c_hat(two_c: u32) -> Rational {
    ratio(two_c as i64, 2)
}
