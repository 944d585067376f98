//! Rational functions `N(t)/D(t)` in one auxiliary symbol over ℚ.
//!
//! Used to carry a free parameter (r, or the lattice step h) through the
//! closed forms and read off exact limits. Fractions are not reduced;
//! equality is tested by cross-multiplication.

use num_traits::{One, Zero};

use crate::exact_arith::Rational;
use crate::field::Field;
use crate::polynomial::Polynomial;

#[derive(Clone, Debug)]
pub struct RatFunc {
    num: Polynomial,
    den: Polynomial,
}

impl RatFunc {
    /// Panics if `den` is the zero polynomial.
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self { num, den }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self { num: p, den: Polynomial::one() }
    }

    /// The symbol itself.
    pub fn symbol() -> Self {
        Self::from_poly(Polynomial::x())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(t) / d)
        }
    }

    /// Limit as the symbol tends to infinity; `None` if it diverges.
    pub fn limit_at_infinity(&self) -> Option<Rational> {
        let Some(dn) = self.num.degree() else {
            return Some(Rational::zero());
        };
        let dd = self.den.degree().expect("nonzero denominator");
        match dn.cmp(&dd) {
            std::cmp::Ordering::Less => Some(Rational::zero()),
            std::cmp::Ordering::Equal => Some(self.num.leading() / self.den.leading()),
            std::cmp::Ordering::Greater => None,
        }
    }

    /// Limit as the symbol tends to zero; `None` if it diverges.
    pub fn limit_at_zero(&self) -> Option<Rational> {
        let Some(vn) = valuation(&self.num) else {
            return Some(Rational::zero());
        };
        let vd = valuation(&self.den).expect("nonzero denominator");
        match vn.cmp(&vd) {
            std::cmp::Ordering::Greater => Some(Rational::zero()),
            std::cmp::Ordering::Equal => Some(self.num.coeff(vn) / self.den.coeff(vd)),
            std::cmp::Ordering::Less => None,
        }
    }
}

/// Index of the lowest nonzero coefficient.
fn valuation(p: &Polynomial) -> Option<usize> {
    p.coeffs().iter().position(|c| !c.is_zero())
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Field for RatFunc {
    fn zero_elem() -> Self {
        Self::from_poly(Polynomial::zero())
    }
    fn one_elem() -> Self {
        Self::from_poly(Polynomial::one())
    }
    fn from_rational(r: &Rational) -> Self {
        Self::from_poly(Polynomial::constant(r.clone()))
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self { num: &self.num + &other.num, den: self.den.clone() };
        }
        Self {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return Self::zero_elem();
        }
        Self { num: &self.num * &other.num, den: &self.den * &other.den }
    }
    fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }
    fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.num.is_zero() {
            return None;
        }
        let mut num = &self.num * &other.den;
        let mut den = &self.den * &other.num;
        // keep the denominator's leading coefficient at one
        let lead = den.leading();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Some(Self { num, den })
    }
    fn is_zero_elem(&self) -> bool {
        self.num.is_zero()
    }
}
