//! The symmetric factorial basis
//! `ϑ_n(x) = (-1)^{⌊n/2⌋} x^{σ_n} (σ_n - x)_{⌊n/2⌋} (σ_n + x)_{⌊n/2⌋}`
//! and the shift-difference operators acting on exact polynomials.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::{int, serde_rational, Rational};
use crate::polynomial::{Parity, Polynomial};

/// `(σ - x)_j (σ + x)_j = ∏_{k<j} ((σ + k)^2 - x^2)`.
pub fn symmetric_factorial(sigma: usize, j: usize) -> Polynomial {
    (0..j).fold(Polynomial::one(), |acc, k| {
        let s = int((sigma + k) as i64);
        &acc * &Polynomial::new(vec![&s * &s, Rational::zero(), -int(1)])
    })
}

/// Monic basis polynomial `ϑ_n`.
pub fn theta(n: usize) -> Polynomial {
    let sigma = n % 2;
    let half = n / 2;
    let mut p = symmetric_factorial(sigma, half);
    if half % 2 == 1 {
        p = -&p;
    }
    if sigma == 1 {
        p = p.mul_x();
    }
    p
}

pub fn delta(f: &Polynomial) -> Polynomial {
    f.delta()
}

pub fn nabla(f: &Polynomial) -> Polynomial {
    f.nabla()
}

pub fn delta_nabla(f: &Polynomial) -> Polynomial {
    f.delta_nabla()
}

/// Coefficients of a pure-parity polynomial over `ϑ_{2j+σ_n}`, j = 0..=⌊n/2⌋.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaExpansion {
    pub n: usize,
    #[serde(with = "serde_rational::vec")]
    pub c: Vec<Rational>,
}

impl ThetaExpansion {
    pub fn parity(&self) -> Parity {
        Parity::of(self.n)
    }
}

/// Expands `f` over the ϑ basis by back-substitution against the monic
/// triangular family.
pub fn to_theta(f: &Polynomial) -> Result<ThetaExpansion> {
    let parity = f.parity().ok_or(Error::Parity)?;
    let n = f.degree().unwrap_or(0);
    let sigma = parity.sigma();
    let mut rest = f.clone();
    let mut c = vec![Rational::zero(); n / 2 + 1];
    for j in (0..=n / 2).rev() {
        let k = 2 * j + sigma;
        let cj = rest.coeff(k);
        if !cj.is_zero() {
            rest = &rest - &theta(k).scale(&cj);
        }
        c[j] = cj;
    }
    debug_assert!(rest.is_zero());
    Ok(ThetaExpansion { n, c })
}

pub fn from_theta(e: &ThetaExpansion) -> Polynomial {
    let sigma = e.n % 2;
    e.c.iter().enumerate().fold(Polynomial::zero(), |acc, (j, cj)| {
        &acc + &theta(2 * j + sigma).scale(cj)
    })
}
