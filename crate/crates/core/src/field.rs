//! Minimal exact-field interface so closed forms can be evaluated both over
//! the rationals and over rational functions of an auxiliary symbol.

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::exact_arith::{int, Rational};

pub trait Field: Clone + PartialEq + Debug {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` when `other` is zero.
    fn checked_div(&self, other: &Self) -> Option<Self>;
    fn is_zero_elem(&self) -> bool;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&int(n))
    }

    fn scale(&self, r: &Rational) -> Self {
        self.mul(&Self::from_rational(r))
    }
}

impl Field for Rational {
    fn zero_elem() -> Self {
        <Rational as Zero>::zero()
    }
    fn one_elem() -> Self {
        <Rational as One>::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn checked_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// `(a)_n` over any field, `n >= 0`.
pub fn pochhammer_in<F: Field>(a: &F, n: usize) -> F {
    let mut acc = F::one_elem();
    let mut term = a.clone();
    for _ in 0..n {
        acc = acc.mul(&term);
        term = term.add(&F::one_elem());
    }
    acc
}
