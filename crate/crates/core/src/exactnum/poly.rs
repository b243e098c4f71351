use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// A dense univariate polynomial over ℚ, coefficients in ascending degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Polynomial::from_i64s(&[0, 1])
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree];
        coeffs.push(c);
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rational::is_one)
    }

    /// Scales to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Polynomial::zero(),
            Some(lc) => {
                let inv = lc.recip().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * at) + c)
    }

    pub fn derivative(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.leading().unwrap().recip()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lc_inv;
            let shift = top - dd;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] = &rem[shift + i] - &(&c * d);
                }
            }
            quot[shift] = c;
            rem.pop();
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Exact division; fails if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Precondition(format!(
                "{divisor} does not divide {self}"
            )));
        }
        Ok(q)
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g` and `g` the monic gcd.
    pub fn ext_gcd(&self, other: &Polynomial) -> Result<(Polynomial, Polynomial, Polynomial)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Polynomial::one(), Polynomial::zero());
        let (mut t0, mut t1) = (Polynomial::zero(), Polynomial::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let lc = r0.leading().unwrap().recip()?;
        Ok((r0.scale(&lc), s0.scale(&lc), t0.scale(&lc)))
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Result<Polynomial> {
        if self.degree().unwrap_or(0) == 0 {
            return Ok(Polynomial::one());
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.exact_div(&g)?.monic())
    }

    /// Primitive integer polynomial with the same roots.
    fn to_primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &content).collect()
    }

    /// Monic irreducible factors over ℚ with multiplicities, sorted by
    /// degree and then coefficients.
    pub fn factor(&self) -> Vec<(Polynomial, usize)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let poly = algebraics::polynomial::Polynomial::from(self.to_primitive_integer());
        let mut out: Vec<(Polynomial, usize)> = poly
            .factor()
            .polynomial_factors
            .into_iter()
            .map(|f| {
                let coeffs = f
                    .polynomial
                    .into_coefficients()
                    .into_iter()
                    .map(Rational::from)
                    .collect();
                (Polynomial::new(coeffs).monic(), f.power)
            })
            .collect();
        out.sort_by(|a, b| a.0.sort_key().cmp(&b.0.sort_key()));
        out
    }

    pub fn is_irreducible(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            Some(1) => true,
            Some(_) => {
                let f = self.factor();
                f.len() == 1 && f[0].1 == 1
            }
        }
    }

    pub(crate) fn sort_key(&self) -> (usize, Vec<Rational>) {
        (
            self.coeffs.len(),
            self.coeffs.iter().rev().cloned().collect(),
        )
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul<&Polynomial> for &Polynomial {
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
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    /// Descending terms in the variable `x`, e.g. `x^2+3/2*x-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in(f, "x")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Polynomial {
    pub(crate) fn fmt_in(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => {}
                (_, false) => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "{var}")?,
                _ => write!(f, "{var}^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses sums of terms `c`, `c*x`, `c*x^k`, `x^k` in the variable `x` (or `t`).
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bad = || Error::Parse(format!("invalid polynomial `{s}`"));
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' && bytes[i - 1] != b'/' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut acc = Polynomial::zero();
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let var_pos = body.find(['x', 't']);
            let (coeff, degree) = match var_pos {
                None => (body.parse::<Rational>().map_err(|_| bad())?, 0usize),
                Some(p) => {
                    let c = match body[..p].strip_suffix('*') {
                        Some(c) => c.parse::<Rational>().map_err(|_| bad())?,
                        None if p == 0 => Rational::one(),
                        None => return Err(bad()),
                    };
                    let rest = &body[p + 1..];
                    let d = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<usize>()
                            .map_err(|_| bad())?
                    };
                    (c, d)
                }
            };
            let coeff = if sign < 0 { -coeff } else { coeff };
            acc = &acc + &Polynomial::monomial(coeff, degree);
        }
        Ok(acc)
    }
}
