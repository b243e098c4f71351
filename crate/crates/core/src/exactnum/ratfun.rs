use std::fmt;

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// An element of ℚ(t): `num/den` with `den` monic and coprime to `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let g = num.gcd(&den)?;
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lc = den.leading().unwrap().recip()?;
        Ok(RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        RationalFunction::from_polynomial(Polynomial::constant(c))
    }

    /// The transcendental `t`.
    pub fn t() -> Self {
        RationalFunction::from_polynomial(Polynomial::x())
    }

    pub fn zero() -> Self {
        RationalFunction::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        RationalFunction::from_polynomial(Polynomial::one())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Some(c) when this is a constant of ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), Some(0)) => Some(self.num.coeff(0)),
            _ => None,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }

    pub fn recip(&self) -> Result<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.recip()?))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            self.num.fmt_in(f, "t")
        } else {
            write!(f, "(")?;
            self.num.fmt_in(f, "t")?;
            write!(f, ")/(")?;
            self.den.fmt_in(f, "t")?;
            write!(f, ")")
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
