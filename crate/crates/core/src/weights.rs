//! Pearson equation, the symmetric weight families and their supports.
//!
//! Every family is a product of gamma factors in `x`, one per parameter
//! `u`, times a half-integer factor:
//!
//! * `D(u) = 1 / (Γ(1-u+x) Γ(1-u-x))`, which truncates the support when
//!   `u ∈ {0, -1, -2, …}`;
//! * `N(u) = Γ(u+x) Γ(u-x)`;
//! * `1 / (Γ(3/2+x) Γ(3/2-x))` or `Γ(-1/2+x) Γ(-1/2-x)`.
//!
//! Tables store the original weight `ϱ(x) = (1/4 - x²) W(x)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact_arith::{gamma_lattice, int, is_nonpositive_integer, ratio, PiValue, Rational};
use crate::spolys::CharVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeightFamilyId {
    W1,
    W2_1,
    W2_2,
    W2_3,
    W3_1,
    W3_2,
    W3_3,
    W4_1,
    W4_2,
    W4_3,
    W5_1,
    W5_2,
    W5_3,
    W6,
    W7,
    W8,
    W9,
    W10_1,
    W10_2,
    W11,
    W12,
    W13_1,
    W13_2,
    W14,
}

/// How a parameter enters the gamma product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// `1 / (Γ(1-u+x) Γ(1-u-x))`.
    D,
    /// `Γ(u+x) Γ(u-x)`.
    N,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfFactor {
    /// `1 / (Γ(3/2+x) Γ(3/2-x))`.
    ThreeHalves,
    /// `Γ(-1/2+x) Γ(-1/2-x)`.
    MinusHalf,
}

impl WeightFamilyId {
    pub const ALL: [WeightFamilyId; 24] = {
        use WeightFamilyId::*;
        [
            W1, W2_1, W2_2, W2_3, W3_1, W3_2, W3_3, W4_1, W4_2, W4_3, W5_1, W5_2, W5_3, W6, W7,
            W8, W9, W10_1, W10_2, W11, W12, W13_1, W13_2, W14,
        ]
    };

    /// 3 for the first sequence, 2 for the second.
    pub fn arity(self) -> usize {
        self.layout().0.len()
    }

    pub fn layout(self) -> (&'static [Role], HalfFactor) {
        use HalfFactor::*;
        use Role::*;
        use WeightFamilyId::*;
        match self {
            W1 => (&[D, D, D], ThreeHalves),
            W2_1 => (&[N, D, D], ThreeHalves),
            W2_2 => (&[D, N, D], ThreeHalves),
            W2_3 => (&[D, D, N], ThreeHalves),
            W3_1 => (&[N, N, D], ThreeHalves),
            W3_2 => (&[N, D, N], ThreeHalves),
            W3_3 => (&[D, N, N], ThreeHalves),
            W4_1 => (&[N, D, D], MinusHalf),
            W4_2 => (&[D, N, D], MinusHalf),
            W4_3 => (&[D, D, N], MinusHalf),
            W5_1 => (&[N, N, D], MinusHalf),
            W5_2 => (&[N, D, N], MinusHalf),
            W5_3 => (&[D, N, N], MinusHalf),
            W6 => (&[D, D, D], MinusHalf),
            W7 => (&[N, N, N], ThreeHalves),
            W8 => (&[N, N, N], MinusHalf),
            W9 => (&[D, D], ThreeHalves),
            W10_1 => (&[N, D], ThreeHalves),
            W10_2 => (&[D, N], ThreeHalves),
            W11 => (&[N, N], ThreeHalves),
            W12 => (&[D, D], MinusHalf),
            W13_1 => (&[N, D], MinusHalf),
            W13_2 => (&[D, N], MinusHalf),
            W14 => (&[N, N], MinusHalf),
        }
    }

    pub fn name(self) -> &'static str {
        use WeightFamilyId::*;
        match self {
            W1 => "W1",
            W2_1 => "W2_1",
            W2_2 => "W2_2",
            W2_3 => "W2_3",
            W3_1 => "W3_1",
            W3_2 => "W3_2",
            W3_3 => "W3_3",
            W4_1 => "W4_1",
            W4_2 => "W4_2",
            W4_3 => "W4_3",
            W5_1 => "W5_1",
            W5_2 => "W5_2",
            W5_3 => "W5_3",
            W6 => "W6",
            W7 => "W7",
            W8 => "W8",
            W9 => "W9",
            W10_1 => "W10_1",
            W10_2 => "W10_2",
            W11 => "W11",
            W12 => "W12",
            W13_1 => "W13_1",
            W13_2 => "W13_2",
            W14 => "W14",
        }
    }
}

impl fmt::Display for WeightFamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeightFamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().replace(['.', ','], "_").to_ascii_uppercase();
        Self::ALL
            .into_iter()
            .find(|id| id.name() == key)
            .ok_or_else(|| Error::Parse(format!("unknown weight family '{s}'")))
    }
}

impl Serialize for WeightFamilyId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Parameters of one of the two hypergeometric sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceParams {
    First { p: Rational, q: Rational, r: Rational },
    Second { p: Rational, q: Rational },
}

impl SequenceParams {
    pub fn from_slice(v: &[Rational]) -> Result<Self> {
        match v {
            [p, q, r] => Ok(Self::First { p: p.clone(), q: q.clone(), r: r.clone() }),
            [p, q] => Ok(Self::Second { p: p.clone(), q: q.clone() }),
            _ => Err(Error::InvalidArgument(format!(
                "expected 2 or 3 parameters, got {}",
                v.len()
            ))),
        }
    }

    pub fn values(&self) -> Vec<Rational> {
        match self {
            Self::First { p, q, r } => vec![p.clone(), q.clone(), r.clone()],
            Self::Second { p, q } => vec![p.clone(), q.clone()],
        }
    }

    pub fn char_vector(&self) -> CharVector {
        match self {
            Self::First { p, q, r } => CharVector::seq1(p, q, r),
            Self::Second { p, q } => CharVector::seq2(p, q),
        }
    }

    /// `M(x)` and `N(x)` of `Δ(M ϱ) = N ϱ`.
    fn semiclassical_pair(&self, x: &Rational) -> (Rational, Rational) {
        match self {
            Self::First { p, q, r } => (
                (x - p) * (x - q) * (x - r),
                int(2) * x * x * (p + q + r) + int(2) * p * q * r,
            ),
            Self::Second { p, q } => ((x - p) * (x - q), int(-2) * (p * q + x * x)),
        }
    }
}

const PARAM_NAMES: [&str; 3] = ["p", "q", "r"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFamily {
    pub id: WeightFamilyId,
    pub params: SequenceParams,
}

/// Value of a family at a point of the integer lattice, up to a constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Finite,
    Zero,
    Pole,
}

impl WeightFamily {
    pub fn new(id: WeightFamilyId, params: SequenceParams) -> Result<Self> {
        let n = params.values().len();
        if n != id.arity() {
            return Err(Error::InvalidArgument(format!(
                "{id} takes {} parameters, got {n}",
                id.arity()
            )));
        }
        Ok(Self { id, params })
    }

    pub fn char_vector(&self) -> CharVector {
        self.params.char_vector()
    }

    /// Whether the gamma product vanishes or has a pole at integer `x`.
    pub fn status(&self, x: i64) -> Status {
        let (roles, _) = self.id.layout();
        let x = int(x);
        let mut zero = false;
        for (role, u) in roles.iter().zip(self.params.values()) {
            match role {
                Role::N => {
                    if is_nonpositive_integer(&(&u + &x)) || is_nonpositive_integer(&(&u - &x)) {
                        return Status::Pole;
                    }
                }
                Role::D => {
                    let base = int(1) - &u;
                    if is_nonpositive_integer(&(&base + &x)) || is_nonpositive_integer(&(&base - &x)) {
                        zero = true;
                    }
                }
            }
        }
        if zero {
            Status::Zero
        } else {
            Status::Finite
        }
    }
}

impl fmt::Display for WeightFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params.values().iter().map(|v| v.to_string()).collect();
        write!(f, "{}({})", self.id, ps.join(","))
    }
}

/// `W(x+1)/W(x) = A(-x)/A(x+1)`.
pub fn pearson_ratio(cv: &CharVector, x: &Rational) -> Result<Rational> {
    let a = cv.a_poly();
    let den = a.eval(&(x + Rational::one()));
    if den.is_zero() {
        return Err(Error::Pole(format!("A(x+1) = 0 at x = {x}")));
    }
    Ok(a.eval(&-x.clone()) / den)
}

/// `ϱ(x+1)/ϱ(x) = -(ax³ - bx² + cx - d)… = -P(-x)/P(x+1)` with `P` the cubic factor of `A`.
pub fn rho_ratio(cv: &CharVector, x: &Rational) -> Result<Rational> {
    let cubic = cv.cubic();
    let den = cubic.eval(&(x + Rational::one()));
    if den.is_zero() {
        return Err(Error::Pole(format!("Pearson ratio has a pole at x = {x}")));
    }
    Ok(-cubic.eval(&-x.clone()) / den)
}

/// One row of the support tables for a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportSpec {
    /// Support is `{-θ, …, θ}`.
    pub theta: u64,
    /// e.g. `"W1: p ∈ ℤ⁻"`.
    pub source_row: String,
    /// The listed non-membership conditions of the row hold.
    pub restrictions_ok: bool,
    /// The family is finite and nonzero on the whole support and `A(-θ) = 0`.
    pub mechanical_ok: bool,
    pub violation: Option<String>,
    /// `θ = 0`: only the constant polynomial is determined.
    pub degenerate: bool,
}

impl SupportSpec {
    pub fn is_valid(&self) -> bool {
        self.restrictions_ok && self.mechanical_ok
    }
}

/// Every row the tables list for `fam`: one per parameter entering
/// through `1/(Γ(1-u+x)Γ(1-u-x))`, with its conditions evaluated.
/// Rows whose designated parameter is not in `{0, -1, …}` are omitted.
pub fn support_rows(fam: &WeightFamily) -> Vec<SupportSpec> {
    let (roles, _) = fam.id.layout();
    let vals = fam.params.values();
    let cv = fam.char_vector();
    let mut rows = Vec::new();
    for (i, u) in vals.iter().enumerate() {
        if roles[i] != Role::D || !is_nonpositive_integer(u) {
            continue;
        }
        let theta = crate::exact_arith::to_i64(&-u.clone()).expect("small integer") as u64;
        let name = PARAM_NAMES[i];
        let mut violations = Vec::new();
        for (j, v) in vals.iter().enumerate() {
            if j == i {
                continue;
            }
            let other = PARAM_NAMES[j];
            let (plus, minus, label) = match roles[j] {
                Role::D => {
                    let base = int(1) - v;
                    (&base + u, &base - u, format!("1-{other}±{name}"))
                }
                Role::N => (v + u, v - u, format!("{other}±{name}")),
            };
            if is_nonpositive_integer(&plus) || is_nonpositive_integer(&minus) {
                violations.push(format!("{label} ∈ ℤ⁻"));
            }
        }
        let restrictions_ok = violations.is_empty();

        let mut mechanical_ok = true;
        for x in 0..=theta as i64 {
            match fam.status(x) {
                Status::Finite => {}
                s => {
                    mechanical_ok = false;
                    violations.push(format!("weight is {s:?} at x = ±{x}").to_lowercase());
                    break;
                }
            }
        }
        if !cv.a_poly().eval(&int(-(theta as i64))).is_zero() {
            mechanical_ok = false;
            violations.push(format!("A(-{theta}) ≠ 0"));
        }
        rows.push(SupportSpec {
            theta,
            source_row: format!("{}: {name} ∈ ℤ⁻", fam.id),
            restrictions_ok,
            mechanical_ok,
            violation: if violations.is_empty() { None } else { Some(violations.join("; ")) },
            degenerate: theta == 0,
        });
    }
    rows
}

/// Valid orthogonality supports of `fam`.
pub fn discover_supports(fam: &WeightFamily) -> Vec<SupportSpec> {
    support_rows(fam).into_iter().filter(SupportSpec::is_valid).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightMode {
    Relative,
    Absolute,
}

impl FromStr for WeightMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "relative" => Ok(Self::Relative),
            "absolute" => Ok(Self::Absolute),
            _ => Err(Error::Parse(format!("unknown weight mode '{s}'"))),
        }
    }
}

/// Values that can appear in a weight table.
pub trait WeightValue: Clone {
    fn to_json(&self) -> Value;
}

impl WeightValue for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl WeightValue for PiValue {
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// `ϱ(x)` for `x = -θ..=θ`, immutable once built.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightTable<T> {
    family: WeightFamily,
    theta: u64,
    mode: WeightMode,
    values: Vec<T>,
}

impl<T: WeightValue> WeightTable<T> {
    pub fn family(&self) -> &WeightFamily {
        &self.family
    }

    pub fn theta(&self) -> u64 {
        self.theta
    }

    pub fn mode(&self) -> WeightMode {
        self.mode
    }

    /// `ϱ(x)`; `None` off the support.
    pub fn get(&self, x: i64) -> Option<&T> {
        let idx = x + self.theta as i64;
        if idx < 0 {
            return None;
        }
        self.values.get(idx as usize)
    }

    /// `(x, ϱ(x))` in increasing `x`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &T)> {
        let t = self.theta as i64;
        self.values.iter().enumerate().map(move |(i, v)| (i as i64 - t, v))
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Copy with `ϱ(x)` replaced; for exercising the checks.
    pub fn perturbed(&self, x: i64, value: T) -> Self {
        let mut out = self.clone();
        let idx = (x + self.theta as i64) as usize;
        out.values[idx] = value;
        out
    }

    pub fn to_json(&self) -> Value {
        let mut values = Map::new();
        for (x, v) in self.iter() {
            values.insert(x.to_string(), v.to_json());
        }
        json!({
            "family": self.family.id.name(),
            "params": self.family.params.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "theta": self.theta,
            "mode": self.mode,
            "values": values,
        })
    }
}

impl WeightTable<Rational> {
    /// `ϱ(x) = ϱ(-x)` for every tabulated `x`.
    pub fn is_even(&self) -> bool {
        (1..=self.theta as i64).all(|x| self.get(x) == self.get(-x))
    }
}

/// `ϱ` on `{-θ, …, θ}` normalized to `ϱ(0) = 1`, built outward from the
/// origin by the Pearson recurrence in both directions.
pub fn weight_relative(fam: &WeightFamily, theta: u64) -> Result<WeightTable<Rational>> {
    let cv = fam.char_vector();
    let t = theta as i64;
    for x in 0..=t {
        if fam.status(x) == Status::Pole {
            return Err(Error::Pole(format!("{fam} has a gamma pole at x = ±{x}")));
        }
    }
    let mut pos = vec![Rational::one()];
    for x in 0..t {
        let next = pos.last().expect("nonempty") * rho_ratio(&cv, &int(x))?;
        pos.push(next);
    }
    let mut neg = vec![Rational::one()];
    for x in (-t + 1..=0).rev() {
        let ratio = rho_ratio(&cv, &int(x - 1))?;
        if ratio.is_zero() {
            return Err(Error::Pole(format!("backward Pearson step divides by zero at x = {}", x - 1)));
        }
        let prev = neg.last().expect("nonempty") / ratio;
        neg.push(prev);
    }
    let mut values: Vec<Rational> = neg.into_iter().skip(1).rev().collect();
    values.extend(pos);
    Ok(WeightTable { family: fam.clone(), theta, mode: WeightMode::Relative, values })
}

fn gamma_pair(a: &Rational, b: &Rational) -> Result<PiValue> {
    Ok(gamma_lattice(a)? * gamma_lattice(b)?)
}

/// Exact `ϱ(x)` of the closed gamma-product form.
pub fn weight_absolute(fam: &WeightFamily, x: i64) -> Result<PiValue> {
    let (roles, half) = fam.id.layout();
    let xr = int(x);
    let mut value = PiValue::rational(ratio(1, 4) - &xr * &xr);
    value = value
        * match half {
            HalfFactor::ThreeHalves => gamma_pair(&(ratio(3, 2) + &xr), &(ratio(3, 2) - &xr))?.recip()?,
            HalfFactor::MinusHalf => gamma_pair(&(ratio(-1, 2) + &xr), &(ratio(-1, 2) - &xr))?,
        };
    let vals = fam.params.values();
    for (role, u) in roles.iter().zip(&vals) {
        if *role == Role::N {
            value = value * gamma_pair(&(u + &xr), &(u - &xr))?;
        }
    }
    for (role, u) in roles.iter().zip(&vals) {
        if *role == Role::D {
            let base = int(1) - u;
            let (a, b) = (&base + &xr, &base - &xr);
            if is_nonpositive_integer(&a) || is_nonpositive_integer(&b) {
                return Ok(PiValue::zero());
            }
            value = value * gamma_pair(&a, &b)?.recip()?;
        }
    }
    Ok(value)
}

pub fn weight_absolute_table(fam: &WeightFamily, theta: u64) -> Result<WeightTable<PiValue>> {
    let t = theta as i64;
    let values = (-t..=t).map(|x| weight_absolute(fam, x)).collect::<Result<Vec<_>>>()?;
    Ok(WeightTable { family: fam.clone(), theta, mode: WeightMode::Absolute, values })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightSum {
    Relative(Rational),
    Absolute(PiValue),
}

impl fmt::Display for WeightSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightSum::Relative(r) => write!(f, "{r}"),
            WeightSum::Absolute(v) => write!(f, "{v}"),
        }
    }
}

/// `Σ_{x=-θ}^{θ} ϱ(x)`, computed as `2 Σ_{x=0}^{θ} ϱ(x) - ϱ(0)`.
pub fn sum_weight(fam: &WeightFamily, theta: u64, mode: WeightMode) -> Result<WeightSum> {
    match mode {
        WeightMode::Relative => {
            let table = weight_relative(fam, theta)?;
            let half: Rational = (0..=theta as i64).map(|x| table.get(x).expect("in range").clone()).sum();
            Ok(WeightSum::Relative(int(2) * half - Rational::one()))
        }
        WeightMode::Absolute => {
            let mut half = PiValue::zero();
            for x in 0..=theta as i64 {
                half = half.checked_add(&weight_absolute(fam, x)?)?;
            }
            let at0 = weight_absolute(fam, 0)?;
            Ok(WeightSum::Absolute(half.scale(&int(2)).checked_sub(&at0)?))
        }
    }
}

/// Checks `Δ(M ϱ)(x) = N(x) ϱ(x)` for `x = -θ..=θ`, with `ϱ = 0` off the
/// support. `M₁ = (x-p)(x-q)(x-r)`, `N₁ = 2x²(p+q+r) + 2pqr`;
/// `M₂ = (x-p)(x-q)`, `N₂ = -2(pq + x²)`.
pub fn semiclassical_check(table: &WeightTable<Rational>) -> bool {
    let params = &table.family.params;
    let t = table.theta as i64;
    let rho = |x: i64| table.get(x).cloned().unwrap_or_else(Rational::zero);
    (-t..=t).all(|x| {
        let (m0, n0) = params.semiclassical_pair(&int(x));
        let (m1, _) = params.semiclassical_pair(&int(x + 1));
        &m1 * rho(x + 1) - &m0 * rho(x) == n0 * rho(x)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use WeightFamilyId::*;

    fn seq1(id: WeightFamilyId, p: i64, q: i64, r: i64) -> WeightFamily {
        WeightFamily::new(id, SequenceParams::First { p: int(p), q: int(q), r: int(r) }).unwrap()
    }

    fn seq2(id: WeightFamilyId, p: i64, q: i64) -> WeightFamily {
        WeightFamily::new(id, SequenceParams::Second { p: int(p), q: int(q) }).unwrap()
    }

    #[test]
    fn pearson_examples() {
        let cv = CharVector::from_ints(0, 1, -4, -140);
        assert_eq!(pearson_ratio(&cv, &int(0)).unwrap(), ratio(140, 429));
        // first sequence form at x = 8
        let cv = CharVector::from_ints(1, 30, 299, 990);
        let (p, q, r, x) = (int(-9), int(-10), int(-11), int(8));
        let one = int(1);
        let alt = -(ratio(1, 2) - &x) / (ratio(3, 2) + &x) * (&x + &p) * (&x + &q) * (&x + &r)
            / ((&x + &one - &p) * (&x + &one - &q) * (&x + &one - &r));
        assert_eq!(pearson_ratio(&cv, &x).unwrap(), alt);
        assert!(matches!(pearson_ratio(&cv, &ratio(-3, 2)), Err(Error::Pole(_))));
    }

    #[test]
    fn pearson_consistent_with_even_weight() {
        let cv = CharVector::new(ratio(2, 3), int(1), ratio(-5, 7), int(3));
        for x in [int(0), int(2), ratio(1, 3)] {
            let fwd = pearson_ratio(&cv, &x).unwrap();
            let back = pearson_ratio(&cv, &(-&x - int(1))).unwrap();
            assert_eq!(fwd * back, int(1));
        }
    }

    #[test]
    fn relative_tables() {
        let t = weight_relative(&seq1(W1, -9, -10, -11), 0).unwrap();
        assert_eq!(t.values(), &[int(1)]);
        let t = weight_relative(&seq2(W10_1, 14, -10), 10).unwrap();
        assert!(t.is_even());
        for (x, v) in t.iter() {
            let positive = *v > Rational::zero();
            assert_eq!(positive, x % 2 == 0, "x = {x}");
        }
    }

    #[test]
    fn relative_proportional_to_absolute() {
        for fam in [seq1(W1, -9, -10, -11), seq1(W6, -9, -10, -11), seq2(W13_1, 14, -10)] {
            let theta = discover_supports(&fam)[0].theta;
            let rel = weight_relative(&fam, theta).unwrap();
            let abs = weight_absolute_table(&fam, theta).unwrap();
            let c = abs.get(0).unwrap().clone();
            for (x, v) in rel.iter() {
                assert_eq!(c.scale(v), *abs.get(x).unwrap(), "{fam} x = {x}");
            }
        }
    }

    #[test]
    fn absolute_examples() {
        let v = weight_absolute(&seq2(W10_1, 14, -10), 0).unwrap();
        assert_eq!(v, PiValue::new(int(2944656), -2));
        let v = weight_absolute(&seq2(W13_1, 14, -10), 1).unwrap();
        assert_eq!(v, PiValue::new(int(-2882880), 2));
        let f = |n: i64| (1..=n).map(int).product::<Rational>();
        let expect = int(1) / (f(9) * f(9) * f(10) * f(10) * f(11) * f(11));
        assert_eq!(weight_absolute(&seq1(W1, -9, -10, -11), 0).unwrap(), PiValue::new(expect, -2));
        assert!(matches!(weight_absolute(&seq1(W7, -9, -10, -11), 0), Err(Error::Pole(_))));
        let off = WeightFamily::new(W1, SequenceParams::First { p: ratio(1, 3), q: int(1), r: int(1) });
        assert!(matches!(weight_absolute(&off.unwrap(), 0), Err(Error::UnsupportedArgument(_))));
    }

    #[test]
    fn support_examples() {
        let s = discover_supports(&seq1(W1, -9, -10, -11));
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].theta, 9);
        assert_eq!(s[0].source_row, "W1: p ∈ ℤ⁻");
        assert_eq!(support_rows(&seq1(W1, -9, -10, -11)).len(), 3);
        assert!(discover_supports(&seq1(W7, -9, -10, -11)).is_empty());
        assert!(discover_supports(&seq1(W8, -1, -2, -3)).is_empty());
        assert!(discover_supports(&seq2(W11, -1, -2)).is_empty());
        assert!(discover_supports(&seq2(W14, -1, -2)).is_empty());
        let s = discover_supports(&seq2(W10_1, 14, -10));
        assert_eq!(s.iter().map(|s| s.theta).collect::<Vec<_>>(), vec![10]);
        let params = SequenceParams::First { p: int(0), q: ratio(7, 2), r: ratio(11, 3) };
        let s = discover_supports(&WeightFamily::new(W1, params).unwrap());
        assert_eq!(s.len(), 1);
        assert!(s[0].degenerate);
    }

    #[test]
    fn listed_conditions_match_mechanical_check() {
        let grid = [-4, -3, -1, 0, 2, 5];
        for id in WeightFamilyId::ALL {
            for &p in &grid {
                for &q in &grid {
                    for &r in &grid {
                        let fam = if id.arity() == 3 { seq1(id, p, q, r) } else { seq2(id, p, q) };
                        for row in support_rows(&fam) {
                            assert_eq!(row.restrictions_ok, row.mechanical_ok, "{fam}: {row:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sums_match_published_constants() {
        let beta: Rational = "667/1998530094928466929986605067918114816000000000".parse().unwrap();
        let s = sum_weight(&seq1(W1, -9, -10, -11), 9, WeightMode::Absolute).unwrap();
        assert_eq!(s, WeightSum::Absolute(PiValue::new(beta.clone(), -2)));
        let s = sum_weight(&seq1(W6, -9, -10, -11), 9, WeightMode::Absolute).unwrap();
        assert_eq!(s, WeightSum::Absolute(PiValue::new(beta, 2)));
        let s = sum_weight(&seq2(W10_1, 14, -10), 10, WeightMode::Absolute).unwrap();
        assert_eq!(s, WeightSum::Absolute(PiValue::new(int(10296), -2)));
        let s = sum_weight(&seq2(W13_1, 14, -10), 10, WeightMode::Absolute).unwrap();
        assert_eq!(s, WeightSum::Absolute(PiValue::new(int(10296), 2)));
    }

    #[test]
    fn semiclassical() {
        let t = weight_relative(&seq1(W1, -9, -10, -11), 9).unwrap();
        assert!(semiclassical_check(&t));
        let t2 = weight_relative(&seq2(W10_1, 14, -10), 10).unwrap();
        assert!(semiclassical_check(&t2));
        let bad = t.perturbed(3, t.get(3).unwrap() + int(1));
        assert!(!semiclassical_check(&bad));
    }

    #[test]
    fn variant_identities() {
        let (p, q, r) = (ratio(5, 2), ratio(-7, 2), ratio(3, 2));
        let fam = |id, a: &Rational, b: &Rational, c: &Rational| {
            WeightFamily::new(id, SequenceParams::First { p: a.clone(), q: b.clone(), r: c.clone() }).unwrap()
        };
        let pairs = [
            (fam(W2_2, &p, &q, &r), fam(W2_1, &q, &p, &r)),
            (fam(W2_3, &p, &q, &r), fam(W2_1, &r, &q, &p)),
            (fam(W3_2, &p, &q, &r), fam(W3_1, &p, &r, &q)),
            (fam(W3_3, &p, &q, &r), fam(W3_1, &q, &r, &p)),
            (fam(W4_2, &p, &q, &r), fam(W4_1, &q, &p, &r)),
            (fam(W4_3, &p, &q, &r), fam(W4_1, &r, &q, &p)),
            (fam(W5_2, &p, &q, &r), fam(W5_1, &p, &r, &q)),
            (fam(W5_3, &p, &q, &r), fam(W5_1, &q, &r, &p)),
        ];
        for (a, b) in pairs {
            for x in -4..=4 {
                assert_eq!(weight_absolute(&a, x).unwrap(), weight_absolute(&b, x).unwrap());
            }
        }
    }

    #[test]
    fn reflection_bridges() {
        for x in -12..=12i64 {
            let xr = int(x);
            let quarter = PiValue::rational(ratio(1, 4) - &xr * &xr);
            let lhs = &quarter * &gamma_pair(&(ratio(-1, 2) + &xr), &(ratio(-1, 2) - &xr)).unwrap();
            let mid = gamma_pair(&(ratio(1, 2) + &xr), &(ratio(1, 2) - &xr)).unwrap();
            assert_eq!(lhs, mid);
            let lhs = &quarter * &gamma_pair(&(ratio(3, 2) + &xr), &(ratio(3, 2) - &xr)).unwrap().recip().unwrap();
            assert_eq!(lhs, mid.recip().unwrap());
        }
    }
}
