//! Inner products over the finite supports, orthogonality reports,
//! definiteness of the recurrence, and moments in the ϑ basis.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::{int, pochhammer, serde_rational, Rational};
use crate::polynomial::Polynomial;
use crate::spolys::{gamma_general, s_explicit, CharVector};
use crate::symmetric_basis::theta;
use crate::weights::{SequenceParams, WeightFamily, WeightSum, WeightTable};

fn check_degree(table: &WeightTable<Rational>, n: usize) -> Result<()> {
    if n as u64 > 2 * table.theta() {
        return Err(Error::InvalidArgument(format!(
            "degree {n} exceeds 2θ = {} on this support",
            2 * table.theta()
        )));
    }
    Ok(())
}

fn weighted_sum(table: &WeightTable<Rational>, f: impl Fn(&Rational) -> Rational) -> Rational {
    table.iter().map(|(x, w)| w * f(&int(x))).sum()
}

/// `Σ_{x=-θ}^{θ} ϱ(x) S_n(x) S_m(x)` with the relative weight.
pub fn inner_product(table: &WeightTable<Rational>, n: usize, m: usize) -> Result<Rational> {
    check_degree(table, n.max(m))?;
    let cv = table.family().char_vector();
    let sn = s_explicit(&cv, n)?;
    let sm = s_explicit(&cv, m)?;
    Ok(weighted_sum(table, |x| sn.eval(x) * sm.eval(x)))
}

/// `∏_{k=1}^{n} γ_k`.
pub fn gamma_product(cv: &CharVector, n: usize) -> Result<Rational> {
    (1..=n).try_fold(Rational::one(), |acc, k| Ok(acc * gamma_general(cv, k)?))
}

/// `∏_{k=1}^{n} γ_k · Σϱ`.
pub fn norm_closed(cv: &CharVector, n: usize, weight_sum: &WeightSum) -> Result<WeightSum> {
    let g = gamma_product(cv, n)?;
    Ok(match weight_sum {
        WeightSum::Relative(s) => WeightSum::Relative(g * s),
        WeightSum::Absolute(s) => WeightSum::Absolute(s.scale(&g)),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthoReport {
    pub family: String,
    pub params: Vec<String>,
    pub theta: u64,
    pub n_max: usize,
    #[serde(with = "serde_rational::vec")]
    pub gammas: Vec<Rational>,
    #[serde(with = "serde_rational::matrix")]
    pub gram: Vec<Vec<Rational>>,
    pub offdiag_zero: bool,
    pub norm_match: Vec<bool>,
}

impl OrthoReport {
    pub fn passed(&self) -> bool {
        self.offdiag_zero && self.norm_match.iter().all(|&b| b)
    }

    /// Gram matrix as CSV with a header row of column degrees.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n");
        for m in 0..=self.n_max {
            out.push_str(&format!(",{m}"));
        }
        out.push('\n');
        for (n, row) in self.gram.iter().enumerate() {
            out.push_str(&n.to_string());
            for v in row {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Full Gram matrix of `S_0..S_{n_max}` on the table's support, with
/// off-diagonal and norm checks. Rows are computed in parallel.
pub fn verify_orthogonality(table: &WeightTable<Rational>, n_max: usize) -> Result<OrthoReport> {
    check_degree(table, n_max)?;
    let fam = table.family();
    let cv = fam.char_vector();
    let polys: Vec<Polynomial> = (0..=n_max).map(|n| s_explicit(&cv, n)).collect::<Result<_>>()?;
    let gammas: Vec<Rational> = (1..=n_max).map(|k| gamma_general(&cv, k)).collect::<Result<_>>()?;
    // S_n(x) at every support point
    let values: Vec<Vec<Rational>> = polys
        .par_iter()
        .map(|p| table.iter().map(|(x, _)| p.eval(&int(x))).collect())
        .collect();
    let weights: Vec<Rational> = table.values().to_vec();
    let gram: Vec<Vec<Rational>> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            (0..=n_max)
                .map(|m| {
                    values[n]
                        .iter()
                        .zip(&values[m])
                        .zip(&weights)
                        .map(|((a, b), w)| a * b * w)
                        .sum()
                })
                .collect()
        })
        .collect();
    let offdiag_zero = (0..=n_max).all(|n| (0..=n_max).all(|m| n == m || gram[n][m].is_zero()));
    let mut norm_match = Vec::with_capacity(n_max + 1);
    let mut prod = Rational::one();
    for n in 0..=n_max {
        if n > 0 {
            prod *= &gammas[n - 1];
        }
        norm_match.push(gram[n][n] == &prod * &gram[0][0]);
    }
    log::debug!("verified {fam} on θ = {} through n = {n_max}", table.theta());
    Ok(OrthoReport {
        family: fam.id.name().to_string(),
        params: fam.params.values().iter().map(|v| v.to_string()).collect(),
        theta: table.theta(),
        n_max,
        gammas,
        gram,
        offdiag_zero,
        norm_match,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Definiteness {
    /// `γ_k > 0` for every `k` in range.
    PositiveDefinite,
    /// `γ_k ≠ 0` throughout, with some negative.
    QuasiDefinite,
    /// `γ_k = 0` first at `first_zero`.
    WeakOrthogonality { first_zero: usize },
}

/// Sign survey of `γ_1..γ_{n_max}`.
pub fn classify_definiteness(cv: &CharVector, n_max: usize) -> Result<Definiteness> {
    let mut all_positive = true;
    for k in 1..=n_max {
        let g = gamma_general(cv, k)?;
        if g.is_zero() {
            return Ok(Definiteness::WeakOrthogonality { first_zero: k });
        }
        all_positive &= g.is_positive();
    }
    Ok(if all_positive { Definiteness::PositiveDefinite } else { Definiteness::QuasiDefinite })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentResult {
    pub n: usize,
    #[serde(with = "serde_rational")]
    pub value: Rational,
    /// `ϑ_n` coefficients, lowest degree first.
    pub basis: Polynomial,
}

/// `Σ ϑ_n ϱ / Σ ϱ` over the table's support.
pub fn moment_direct(table: &WeightTable<Rational>, n: usize) -> Result<MomentResult> {
    check_degree(table, n)?;
    let total: Rational = table.values().iter().sum();
    if total.is_zero() {
        return Err(Error::DivZero);
    }
    let basis = theta(n);
    let value = weighted_sum(table, |x| basis.eval(x)) / total;
    Ok(MomentResult { n, value, basis })
}

/// Even moment `(ϱ)_{2m}`: `(-1)^m (p)_m (q)_m (r)_m / (p+q+r)_m` for the
/// first sequence and `(-1)^m (p)_m (q)_m` for the second.
pub fn moment_closed(params: &SequenceParams, m: usize) -> Result<Rational> {
    let mi = m as i64;
    let sign = if m.is_multiple_of(2) { int(1) } else { int(-1) };
    match params {
        SequenceParams::First { p, q, r } => {
            let den = pochhammer(&(p + q + r), mi)?;
            if den.is_zero() {
                return Err(Error::Pole(format!("(p+q+r)_{m} = 0")));
            }
            Ok(sign * pochhammer(p, mi)? * pochhammer(q, mi)? * pochhammer(r, mi)? / den)
        }
        SequenceParams::Second { p, q } => Ok(sign * pochhammer(p, mi)? * pochhammer(q, mi)?),
    }
}

/// Checks the two-term recurrence of the even moments against direct sums
/// for `m = 1..=m_max`.
pub fn moment_recurrence_check(table: &WeightTable<Rational>, m_max: usize) -> Result<bool> {
    let params = &table.family().params;
    let mut prev = moment_direct(table, 0)?.value;
    for m in 1..=m_max {
        let cur = moment_direct(table, 2 * m)?.value;
        let k = int(m as i64 - 1);
        let factor = match params {
            SequenceParams::First { p, q, r } => {
                let den = p + q + r + &k;
                if den.is_zero() {
                    return Err(Error::Pole(format!("p+q+r+{k} = 0")));
                }
                -((p + &k) * (q + &k) * (r + &k)) / den
            }
            SequenceParams::Second { p, q } => -((p + &k) * (q + &k)),
        };
        if cur != factor * &prev {
            return Ok(false);
        }
        prev = cur;
    }
    Ok(true)
}

/// `Σ_{x=-θ}^{θ} Δ F(x)` with `F = A W (φ_m φ_n(·-1) - φ_n φ_m(·-1))` and
/// `W = ϱ/(1/4 - x²)` extended by zero off the support.
pub fn boundary_telescoping(table: &WeightTable<Rational>, n: usize, m: usize) -> Result<Rational> {
    let fam: &WeightFamily = table.family();
    let cv = fam.char_vector();
    let a = cv.a_poly();
    let (pn, pm) = (s_explicit(&cv, n)?, s_explicit(&cv, m)?);
    let quarter = crate::exact_arith::ratio(1, 4);
    let f = |x: i64| -> Rational {
        let Some(rho) = table.get(x) else {
            return Rational::zero();
        };
        let xr = int(x);
        let w = rho / (&quarter - &xr * &xr);
        let xm = &xr - int(1);
        a.eval(&xr) * w * (pm.eval(&xr) * pn.eval(&xm) - pn.eval(&xr) * pm.eval(&xm))
    };
    let t = table.theta() as i64;
    Ok((-t..=t).map(|x| f(x + 1) - f(x)).sum())
}
