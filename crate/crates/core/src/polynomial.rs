//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact_arith::{int, parse_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// sigma_n: 0 for even, 1 for odd.
    pub fn sigma(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// Coefficients stored lowest degree first, with no trailing zeros.
/// The zero polynomial has no coefficients.
///
/// The orthogonal polynomials S_n and the basis polynomials are values of
/// this type with pure parity; differences such as `Δf` generally are not.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(1)
    }

    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Self { coeffs }
    }

    /// `x - root` style linear factor `c0 + c1 x`.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        Self::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Parity of the surviving powers. The zero polynomial counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let Some(deg) = self.degree() else {
            return Some(Parity::Even);
        };
        let p = Parity::of(deg);
        let mixed = self
            .coeffs
            .iter()
            .enumerate()
            .any(|(i, c)| Parity::of(i) != p && !c.is_zero());
        if mixed {
            None
        } else {
            Some(p)
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `f(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// `f(x + h)` by Horner's scheme in the shifted variable.
    pub fn shift(&self, h: &Rational) -> Self {
        let step = Self::linear(h.clone(), Rational::one());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &step) + &Self::constant(c.clone()))
    }

    /// Forward difference `f(x+1) - f(x)`.
    pub fn delta(&self) -> Self {
        &self.shift(&Rational::one()) - self
    }

    /// Backward difference `f(x) - f(x-1)`.
    pub fn nabla(&self) -> Self {
        self - &self.shift(&-Rational::one())
    }

    /// `f(x+1) - 2f(x) + f(x-1)`.
    pub fn delta_nabla(&self) -> Self {
        let up = self.shift(&Rational::one());
        let down = self.shift(&-Rational::one());
        &(&up + &down) - &self.scale(&int(2))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

/// JSON array of coefficient strings, lowest degree first. The zero
/// polynomial is written as `["0"]`.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.is_zero() {
            return vec!["0".to_string()].serialize(s);
        }
        crate::exact_arith::serde_rational::vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::ratio;

    #[test]
    fn trimming_and_degree() {
        let p = Polynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Polynomial::from_ints(&[0, 0]).degree(), None);
        assert!(Polynomial::from_ints(&[0]).is_zero());
    }

    #[test]
    fn differences_of_square() {
        let x2 = Polynomial::monomial(2);
        assert_eq!(x2.delta(), Polynomial::from_ints(&[1, 2]));
        assert_eq!(x2.nabla(), Polynomial::from_ints(&[-1, 2]));
        assert_eq!(x2.delta_nabla(), Polynomial::from_ints(&[2]));
    }

    #[test]
    fn shift_and_eval_agree() {
        let p = Polynomial::new(vec![ratio(1, 3), int(-2), int(0), ratio(5, 7)]);
        let h = ratio(-3, 2);
        let shifted = p.shift(&h);
        for x in [int(0), int(2), ratio(-7, 5)] {
            assert_eq!(shifted.eval(&x), p.eval(&(&x + &h)));
        }
    }

    #[test]
    fn parity_detection() {
        assert_eq!(Polynomial::from_ints(&[0, 1, 0, -1]).parity(), Some(Parity::Odd));
        assert_eq!(Polynomial::from_ints(&[3, 0, 1]).parity(), Some(Parity::Even));
        assert_eq!(Polynomial::from_ints(&[1, 1]).parity(), None);
        assert_eq!(Polynomial::zero().parity(), Some(Parity::Even));
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_ints(&[33, 0, 1]).to_string(), "x^2 + 33");
        assert_eq!(Polynomial::from_ints(&[0, -1, 0, 1]).to_string(), "x^3 - x");
        assert_eq!(Polynomial::new(vec![ratio(1, 2), int(-3)]).to_string(), "-3*x + 1/2");
    }

    #[test]
    fn json_is_lowest_degree_first() {
        let p = Polynomial::new(vec![int(33), int(0), int(1)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["33","0","1"]"#);
        let q: Polynomial = serde_json::from_str(r#"["-1/2","0","1"]"#).unwrap();
        assert_eq!(q.coeff(0), ratio(-1, 2));
    }
}
