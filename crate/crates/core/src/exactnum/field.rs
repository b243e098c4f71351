use std::fmt;
use std::hash::Hash;

use serde_json::Value;

use super::{Polynomial, Rational, RationalFunction};
use crate::error::{Error, Result};

/// Which scalar field a matrix or representation lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    /// The rationals.
    Q,
    /// Rational functions in one variable `t` over ℚ.
    Qt,
}

impl FieldTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FieldTag::Q => "Q",
            FieldTag::Qt => "Qt",
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Exact scalar field used by the linear algebra layer.
///
/// Arithmetic is by reference and never rounds. `divide` and `inverse`
/// panic on zero; elimination code only divides by pivots.
pub trait Field: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const TAG: FieldTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn inverse(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn divide(&self, rhs: &Self) -> Self {
        self.times(&rhs.inverse())
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    /// JSON encoding: a string `"p/q"` over ℚ, `{"num": [...], "den": [...]}` over ℚ(t).
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl Field for Rational {
    const TAG: FieldTag = FieldTag::Q;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        self.recip().expect("inverse of zero")
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s.parse(),
            Value::Number(n) if n.is_i64() => Ok(Rational::from(n.as_i64().unwrap())),
            _ => Err(Error::Parse(format!("expected rational string, got {v}"))),
        }
    }
}

fn coeffs_to_json(p: &Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

fn coeffs_from_json(v: &Value) -> Result<Polynomial> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected coefficient list, got {v}")))?;
    let coeffs = items
        .iter()
        .map(Rational::from_json)
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

impl Field for RationalFunction {
    const TAG: FieldTag = FieldTag::Qt;

    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RationalFunction::is_one(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn inverse(&self) -> Self {
        self.recip().expect("inverse of zero")
    }
    fn from_rational(q: &Rational) -> Self {
        RationalFunction::from_rational(q.clone())
    }
    fn to_json(&self) -> Value {
        let mut m = serde_json::Map::new();
        m.insert("num".into(), coeffs_to_json(self.num()));
        m.insert("den".into(), coeffs_to_json(self.den()));
        Value::Object(m)
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Object(m) => {
                let num = coeffs_from_json(m.get("num").ok_or_else(|| {
                    Error::Parse("rational function without `num`".into())
                })?)?;
                let den = match m.get("den") {
                    Some(d) => coeffs_from_json(d)?,
                    None => Polynomial::one(),
                };
                RationalFunction::new(num, den)
            }
            // A bare rational is accepted as a constant.
            _ => Ok(RationalFunction::from_rational(Rational::from_json(v)?)),
        }
    }
}
