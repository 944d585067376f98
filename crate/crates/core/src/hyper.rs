//! Terminating generalized hypergeometric sums and the hypergeometric
//! representations of the two symmetric sequences.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{is_nonpositive_integer, to_i64, Rational};
use crate::field::Field;
use crate::polynomial::Polynomial;
use crate::symmetric_basis::symmetric_factorial;

/// `pFq(upper; lower; argument)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperSeries {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub argument: Rational,
}

impl HyperSeries {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, argument: Rational) -> Self {
        Self { upper, lower, argument }
    }

    /// Index of the last nonzero term: the smallest `-u` over upper
    /// parameters `u ∈ {0, -1, -2, …}`.
    pub fn termination_index(&self) -> Option<usize> {
        self.upper
            .iter()
            .filter(|u| is_nonpositive_integer(u))
            .filter_map(|u| to_i64(&-(*u).clone()))
            .map(|k| k as usize)
            .min()
    }

    /// Exact value of the finite sum.
    pub fn eval_terminating(&self) -> Result<Rational> {
        let top = self.termination_index().ok_or(Error::NonTerminating)?;
        for l in &self.lower {
            if is_nonpositive_integer(l) {
                let k = to_i64(&-l.clone()).unwrap_or(i64::MAX);
                if (k as u128) < top as u128 {
                    return Err(Error::Pole(format!(
                        "lower parameter {l} vanishes before the series terminates at k = {top}"
                    )));
                }
            }
        }
        let mut term = Rational::one();
        let mut sum = Rational::one();
        for k in 0..top {
            let kk = Rational::from_integer(k.into());
            let mut num = self.argument.clone();
            for u in &self.upper {
                num *= u + &kk;
            }
            let mut den = &kk + Rational::one();
            for l in &self.lower {
                den *= l + &kk;
            }
            term = term * num / den;
            if term.is_zero() {
                break;
            }
            sum += &term;
        }
        Ok(sum)
    }
}

fn poch<F: Field>(a: &F, n: usize) -> F {
    crate::field::pochhammer_in(a, n)
}

/// Binomial coefficient as a rational, `C(m, j)`.
fn binom(m: usize, j: usize) -> Rational {
    (0..j).fold(Rational::one(), |acc, i| {
        acc * Rational::from_integer((m - i).into()) / Rational::from_integer((i + 1).into())
    })
}

/// Coefficients of `x^σ Σ_j t_j (σ-x)_j (σ+x)_j`, lowest degree first.
fn assemble<F: Field>(sigma: usize, terms: &[F]) -> Vec<F> {
    let n = sigma + 2 * (terms.len() - 1);
    let mut coeffs = vec![F::zero_elem(); n + 1];
    for (j, t) in terms.iter().enumerate() {
        if t.is_zero_elem() {
            continue;
        }
        for (i, bc) in symmetric_factorial(sigma, j).coeffs().iter().enumerate() {
            if !bc.is_zero() {
                coeffs[i + sigma] = coeffs[i + sigma].add(&t.scale(bc));
            }
        }
    }
    coeffs
}

/// Terms of the `₄F₃` representation with the prefactor
/// `(p+σ)_m (q+σ)_m (r+σ)_m / (m+p+q+r-1+σ)_m` folded into each summand,
/// so that lower parameters `p+σ` etc. never cause removable poles:
///
/// `t_j = (-1)^j C(m,j) ∏_{u∈{p,q,r}} (u+σ+j)_{m-j} / (m+p+q+r-1+σ+j)_{m-j}`.
pub fn seq1_coeffs_over<F: Field>(p: &F, q: &F, r: &F, n: usize) -> Result<Vec<F>> {
    let (m, sigma) = (n / 2, n % 2);
    let sig = F::from_int(sigma as i64);
    let shift = F::from_int(m as i64 - 1 + sigma as i64);
    let s = p.add(q).add(r).add(&shift);
    let mut terms = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let jj = F::from_int(j as i64).add(&sig);
        let num = [p, q, r]
            .iter()
            .fold(F::one_elem(), |acc, u| acc.mul(&poch(&u.add(&jj), m - j)));
        let den = poch(&s.add(&F::from_int(j as i64)), m - j);
        let t = num.checked_div(&den).ok_or_else(|| {
            Error::DegenerateParameter(format!(
                "(m+p+q+r-1+σ)_m vanishes in the 4F3 form of S_{n}"
            ))
        })?;
        let b = binom(m, j);
        let t = t.scale(&if j % 2 == 0 { b } else { -b });
        terms.push(t);
    }
    Ok(assemble(sigma, &terms))
}

/// `(p+σ)_m (q+σ)_m x^σ ₃F₂(-m, σ-x, σ+x; p+σ, q+σ; 1)` with the
/// prefactor folded into the terms.
pub fn seq2_coeffs_over<F: Field>(p: &F, q: &F, n: usize) -> Vec<F> {
    let (m, sigma) = (n / 2, n % 2);
    let sig = F::from_int(sigma as i64);
    let terms: Vec<F> = (0..=m)
        .map(|j| {
            let jj = F::from_int(j as i64).add(&sig);
            let t = poch(&p.add(&jj), m - j).mul(&poch(&q.add(&jj), m - j));
            let b = binom(m, j);
            t.scale(&if j % 2 == 0 { b } else { -b })
        })
        .collect();
    assemble(sigma, &terms)
}

/// `S_n(1, -(p+q+r), pq+pr+qr, -pqr; x)` from its `₄F₃` representation.
pub fn seq1_poly(p: &Rational, q: &Rational, r: &Rational, n: usize) -> Result<Polynomial> {
    Ok(Polynomial::new(seq1_coeffs_over(p, q, r, n)?))
}

/// `S_n(0, 1, -p-q, pq; x)` from its `₃F₂` representation.
pub fn seq2_poly(p: &Rational, q: &Rational, n: usize) -> Result<Polynomial> {
    Ok(Polynomial::new(seq2_coeffs_over(p, q, n)))
}

/// Value of the first sequence at a point through the unfolded formula:
/// prefactor times a numerically summed `₄F₃`. Poles of the lower
/// parameters are reported rather than cancelled.
pub fn seq1_value(p: &Rational, q: &Rational, r: &Rational, n: usize, x: &Rational) -> Result<Rational> {
    let (m, sigma) = (n / 2, n % 2);
    let sig = Rational::from_integer(sigma.into());
    let mr = Rational::from_integer(m.into());
    let top = &mr + p + q + r - Rational::one() + &sig;
    let prefactor_den = poch(&top, m);
    if prefactor_den.is_zero() {
        return Err(Error::DegenerateParameter(format!("prefactor of S_{n} has a zero denominator")));
    }
    let prefactor = poch(&(p + &sig), m) * poch(&(q + &sig), m) * poch(&(r + &sig), m) / prefactor_den;
    let series = HyperSeries::new(
        vec![-mr, top, &sig - x, &sig + x],
        vec![p + &sig, q + &sig, r + &sig],
        Rational::one(),
    );
    let xs = if sigma == 1 { x.clone() } else { Rational::one() };
    Ok(prefactor * xs * series.eval_terminating()?)
}
