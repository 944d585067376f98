//! Exact scalars: big rationals, rational multiples of half-integer powers
//! of pi, Pochhammer symbols and the gamma function on the half-integer
//! lattice.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Membership in {0, -1, -2, ...}.
pub fn is_nonpositive_integer(x: &Rational) -> bool {
    is_integer(x) && !x.is_positive()
}

pub fn is_half_lattice(x: &Rational) -> bool {
    x.denom().is_one() || *x.denom() == BigInt::from(2)
}

/// Converts an integral rational to `i64`, if it is one and fits.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if is_integer(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"a/b"`, `"-7"`, `"0.25"` or `"1e-3"` into an exact rational.
/// Decimal input is read exactly, never through a float.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if s.contains('/') {
        let r = Rational::from_str(s).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
        return Ok(r);
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = s[pos + 1..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {s}")))?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = match digits.split_once('.') {
        Some((w, f)) => (w, f),
        None => (digits, ""),
    };
    if whole.is_empty() && frac.is_empty()
        || !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(Error::Parse(format!("not a number: {s}")));
    }
    let all_digits = format!("{whole}{frac}");
    let mut value = Rational::from_integer(
        BigInt::from_str(if all_digits.is_empty() { "0" } else { &all_digits })
            .map_err(|e| Error::Parse(format!("{s}: {e}")))?,
    );
    let scale = exponent - frac.len() as i64;
    let ten = BigInt::from(10);
    let power = Rational::from_integer(num_traits::pow(ten, scale.unsigned_abs() as usize));
    if scale >= 0 {
        value *= power;
    } else {
        value /= power;
    }
    Ok(if negative { -value } else { value })
}

/// Parses a comma separated list of rationals.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

/// Shifted factorial `(a)_n`. Negative `n` uses `(a)_{-n} = 1 / (a-n)_n`.
pub fn pochhammer(a: &Rational, n: i64) -> Result<Rational> {
    if n >= 0 {
        let mut acc = Rational::one();
        let mut term = a.clone();
        for _ in 0..n {
            if term.is_zero() {
                return Ok(Rational::zero());
            }
            acc *= &term;
            term += Rational::one();
        }
        Ok(acc)
    } else {
        let denom = pochhammer(&(a + int(n)), -n)?;
        if denom.is_zero() {
            return Err(Error::Pole(format!("({a})_{n}")));
        }
        Ok(denom.recip())
    }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Exact gamma function at integers and half-integers.
pub fn gamma_lattice(arg: &Rational) -> Result<PiValue> {
    if is_integer(arg) {
        if !arg.is_positive() {
            return Err(Error::Pole(format!("Gamma({arg})")));
        }
        let n = arg
            .numer()
            .to_u64()
            .ok_or_else(|| Error::UnsupportedArgument(format!("Gamma({arg}) too large")))?;
        return Ok(PiValue::rational(Rational::from_integer(factorial(n - 1))));
    }
    if !is_half_lattice(arg) {
        return Err(Error::UnsupportedArgument(format!("Gamma({arg}) off the half-integer lattice")));
    }
    // Gamma(1/2 + k) = (1/2)_k sqrt(pi)
    let half = ratio(1, 2);
    let shift = to_i64(&(arg - &half))
        .ok_or_else(|| Error::UnsupportedArgument(format!("Gamma({arg}) too large")))?;
    let coeff = pochhammer(&half, shift)?;
    Ok(PiValue::new(coeff, 1))
}

/// A rational times `pi^(m/2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiValue {
    coeff: Rational,
    pi_half_power: i64,
}

impl PiValue {
    pub fn new(coeff: Rational, pi_half_power: i64) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            Self { coeff, pi_half_power }
        }
    }

    pub fn rational(coeff: Rational) -> Self {
        Self::new(coeff, 0)
    }

    pub fn zero() -> Self {
        Self { coeff: Rational::zero(), pi_half_power: 0 }
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    /// `pi^k` for integer `k`.
    pub fn pi_pow(k: i64) -> Self {
        Self::new(Rational::one(), 2 * k)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_half_power(&self) -> i64 {
        self.pi_half_power
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Zero is a member of every grade, so it adds to anything.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_half_power != other.pi_half_power {
            return Err(Error::Grade { left: self.pi_half_power, right: other.pi_half_power });
        }
        Ok(Self::new(&self.coeff + &other.coeff, self.pi_half_power))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivZero);
        }
        Ok(Self::new(&self.coeff / &other.coeff, self.pi_half_power - other.pi_half_power))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.coeff * r, self.pi_half_power)
    }

    /// Sign of the value; pi is positive so only the coefficient matters.
    pub fn cmp_zero(&self) -> Ordering {
        self.coeff.cmp(&Rational::zero())
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.coeff) * std::f64::consts::PI.powf(self.pi_half_power as f64 / 2.0)
    }
}

impl Mul for &PiValue {
    type Output = PiValue;
    fn mul(self, rhs: &PiValue) -> PiValue {
        PiValue::new(&self.coeff * &rhs.coeff, self.pi_half_power + rhs.pi_half_power)
    }
}

impl Mul for PiValue {
    type Output = PiValue;
    fn mul(self, rhs: PiValue) -> PiValue {
        &self * &rhs
    }
}

impl Neg for PiValue {
    type Output = PiValue;
    fn neg(self) -> PiValue {
        PiValue::new(-self.coeff, self.pi_half_power)
    }
}

impl fmt::Display for PiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_half_power {
            0 => write!(f, "{}", self.coeff),
            2 => write!(f, "{}*pi", self.coeff),
            m if m.is_even() => write!(f, "{}*pi^{}", self.coeff, m / 2),
            m => write!(f, "{}*pi^({}/2)", self.coeff, m),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PiValueRepr {
    coeff: String,
    pi_half_power: i64,
}

impl Serialize for PiValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PiValueRepr { coeff: self.coeff.to_string(), pi_half_power: self.pi_half_power }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PiValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PiValueRepr::deserialize(deserializer)?;
        let coeff = parse_rational(&repr.coeff).map_err(serde::de::Error::custom)?;
        Ok(PiValue::new(coeff, repr.pi_half_power))
    }
}

/// Serde adapters writing rationals as `"numerator/denominator"` strings
/// (integers without the `/1`).
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&r.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<Rational>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter()
                .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                .collect()
        }
    }

    pub mod matrix {
        use super::*;

        pub fn serialize<S: Serializer>(
            m: &[Vec<Rational>],
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            let rows: Vec<Vec<String>> =
                m.iter().map(|row| row.iter().map(|r| r.to_string()).collect()).collect();
            rows.serialize(s)
        }
    }
}
