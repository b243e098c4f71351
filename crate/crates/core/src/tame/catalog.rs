use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{Field, Matrix, Polynomial, Rational};
use crate::rep::Rep;

/// A closed point of the projective line over ℚ: a monic irreducible
/// polynomial, or the point at infinity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum TubePoint {
    Finite(Polynomial),
    Infinity,
}

impl TubePoint {
    /// Normalizes to monic and rejects reducible input.
    pub fn finite(p: Polynomial) -> Result<Self> {
        if !p.is_irreducible() {
            return Err(Error::Precondition(format!("{p} is not irreducible over Q")));
        }
        Ok(TubePoint::Finite(p.monic()))
    }

    /// The point `x − c`.
    pub fn linear(c: i64) -> Self {
        TubePoint::Finite(Polynomial::from_i64s(&[-c, 1]))
    }

    pub fn degree(&self) -> usize {
        match self {
            TubePoint::Finite(p) => p.degree().expect("nonzero"),
            TubePoint::Infinity => 1,
        }
    }

    /// The polynomial whose powers define the regular modules here;
    /// at infinity this is `x` with the roles of the arrows swapped.
    fn local_polynomial(&self) -> Polynomial {
        match self {
            TubePoint::Finite(p) => p.clone(),
            TubePoint::Infinity => Polynomial::x(),
        }
    }
}

impl Ord for TubePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (TubePoint::Finite(a), TubePoint::Finite(b)) => a.sort_key().cmp(&b.sort_key()),
            (TubePoint::Finite(_), TubePoint::Infinity) => Ordering::Less,
            (TubePoint::Infinity, TubePoint::Finite(_)) => Ordering::Greater,
            (TubePoint::Infinity, TubePoint::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for TubePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TubePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TubePoint::Finite(p) => write!(f, "{p}"),
            TubePoint::Infinity => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for TubePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for TubePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" || s == "∞" {
            return Ok(TubePoint::Infinity);
        }
        TubePoint::finite(s.parse()?)
    }
}

/// Symbolic name of an indecomposable pure-injective Kronecker module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogLabel {
    Preprojective(usize),
    Regular(TubePoint, usize),
    Preinjective(usize),
    Pruefer(TubePoint),
    Adic(TubePoint),
    Generic,
}

impl CatalogLabel {
    pub fn is_finite_length(&self) -> bool {
        matches!(
            self,
            CatalogLabel::Preprojective(_) | CatalogLabel::Regular(..) | CatalogLabel::Preinjective(_)
        )
    }

    /// Builds the module for finite-length labels.
    pub fn build(&self) -> Result<Rep<Rational>> {
        match self {
            CatalogLabel::Preprojective(n) => Ok(kron_preprojective(*n)),
            CatalogLabel::Preinjective(n) => Ok(kron_preinjective(*n)),
            CatalogLabel::Regular(p, r) => kron_regular(p, *r),
            other => Err(Error::Precondition(format!(
                "{other} has infinite length; use a truncation"
            ))),
        }
    }
}

impl fmt::Display for CatalogLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogLabel::Preprojective(n) => write!(f, "P({n})"),
            CatalogLabel::Preinjective(n) => write!(f, "I({n})"),
            CatalogLabel::Regular(p, r) => write!(f, "R({p}; {r})"),
            CatalogLabel::Pruefer(p) => write!(f, "Pruefer({p})"),
            CatalogLabel::Adic(p) => write!(f, "Adic({p})"),
            CatalogLabel::Generic => f.write_str("Q"),
        }
    }
}

impl Serialize for CatalogLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Serialize for TubePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for CatalogLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(CatalogLabel::Generic);
        }
        let bad = || Error::Parse(format!("unrecognized catalog label `{s}`"));
        let open = s.find('(').ok_or_else(bad)?;
        if !s.ends_with(')') {
            return Err(bad());
        }
        let head = &s[..open];
        let body = &s[open + 1..s.len() - 1];
        let count = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        match head {
            "P" => Ok(CatalogLabel::Preprojective(count(body)?)),
            "I" => Ok(CatalogLabel::Preinjective(count(body)?)),
            "R" => {
                let (p, r) = body.split_once(';').ok_or_else(bad)?;
                let r = count(r)?;
                if r == 0 {
                    return Err(Error::Parse("regular length must be at least 1".into()));
                }
                Ok(CatalogLabel::Regular(p.parse()?, r))
            }
            "Pruefer" | "Prüfer" => Ok(CatalogLabel::Pruefer(body.parse()?)),
            "Adic" => Ok(CatalogLabel::Adic(body.parse()?)),
            _ => Err(bad()),
        }
    }
}

fn shift_blocks(n: usize, below: bool) -> Matrix<Rational> {
    // (n+1) × n: identity with a zero row below (or above)
    Matrix::from_fn(n + 1, n, |r, c| {
        let hit = if below { r == c } else { r == c + 1 };
        if hit {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Dimension `(n, n+1)`, `A = [I; 0]`, `B = [0; I]`.
pub fn kron_preprojective(n: usize) -> Rep<Rational> {
    Rep::kronecker(shift_blocks(n, true), shift_blocks(n, false)).expect("shapes agree")
}

/// Dimension `(n+1, n)`, `A = [I | 0]`, `B = [0 | I]`.
pub fn kron_preinjective(n: usize) -> Rep<Rational> {
    Rep::kronecker(shift_blocks(n, true).transpose(), shift_blocks(n, false).transpose())
        .expect("shapes agree")
}

/// The regular module of length `r` at `p`: on `ℚ[x]/(p^r)` at both vertices,
/// `A = I` and `B` multiplication by `x`. At infinity the two arrows are
/// exchanged, so `A` is a nilpotent Jordan block and `B = I`.
pub fn kron_regular(p: &TubePoint, r: usize) -> Result<Rep<Rational>> {
    if r == 0 {
        return Err(Error::Precondition("regular length must be at least 1".into()));
    }
    if let TubePoint::Finite(f) = p {
        if !f.is_irreducible() || !f.is_monic() {
            return Err(Error::Precondition(format!("{f} is not monic irreducible")));
        }
    }
    let power = p.local_polynomial().pow(r as u32);
    let mult = Matrix::companion(&power);
    let id = Matrix::identity(mult.rows());
    match p {
        TubePoint::Finite(_) => Rep::kronecker(id, mult),
        TubePoint::Infinity => Rep::kronecker(mult, id),
    }
}

/// Matrix of `q ↦ (mult · q) mod p^{to}` from `ℚ[x]/(p^{from})` in monomial bases.
pub(crate) fn local_map(p: &TubePoint, from: usize, to: usize, mult: &Polynomial) -> Matrix<Rational> {
    let f = p.local_polynomial();
    let d = f.degree().expect("nonzero");
    let modulus = f.pow(to as u32);
    Matrix::from_fn(to * d, from * d, |row, col| {
        let image = (mult * &Polynomial::monomial(Rational::one(), col))
            .rem(&modulus)
            .expect("nonzero modulus");
        image.coeff(row)
    })
}

/// Multiplication by the local polynomial `p`, an endomorphism-compatible
/// embedding of length `n` into length `n + 1`.
pub(crate) fn local_uniformizer(p: &TubePoint) -> Polynomial {
    p.local_polynomial()
}

pub fn is_kronecker<F: Field>(x: &Rep<F>) -> bool {
    x.quiver().is_kronecker()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{decompose, is_indecomposable};

    #[test]
    fn preprojective_and_preinjective_shapes() {
        let p0 = kron_preprojective(0);
        assert_eq!(p0.dims(), &[0, 1]);
        let p1 = kron_preprojective(1);
        assert_eq!(p1.dims(), &[1, 2]);
        assert!(is_indecomposable(&p1).unwrap());
        let i3 = kron_preinjective(3);
        assert_eq!(i3.dims(), &[4, 3]);
        assert_eq!(i3.quiver().defect(&i3.dim_vector()).unwrap(), 1);
    }

    #[test]
    fn regular_examples() {
        let r = kron_regular(&TubePoint::linear(0), 1).unwrap();
        assert_eq!(r.arrow(0), &Matrix::from_i64_rows(&[&[1]]));
        assert_eq!(r.arrow(1), &Matrix::from_i64_rows(&[&[0]]));

        let q = TubePoint::finite(Polynomial::from_i64s(&[1, 0, 1])).unwrap();
        let r = kron_regular(&q, 1).unwrap();
        assert_eq!(r.dims(), &[2, 2]);
        assert_eq!(r.arrow(1), &Matrix::companion(&Polynomial::from_i64s(&[1, 0, 1])));
        assert!(decompose(&r).unwrap().is_indecomposable());

        let inf = kron_regular(&TubePoint::Infinity, 2).unwrap();
        assert_eq!(inf.arrow(1), &Matrix::identity(2));
        let a = inf.arrow(0);
        assert!(!a.is_zero() && a.mul(a).is_zero());

        assert!(TubePoint::finite(Polynomial::from_i64s(&[-1, 0, 1])).is_err());
    }

    #[test]
    fn label_syntax_round_trips() {
        for s in ["P(2)", "I(0)", "R(x; 3)", "R(x^2+1; 1)", "R(inf; 2)", "Pruefer(x-1)", "Adic(inf)", "Q"] {
            let label: CatalogLabel = s.parse().unwrap();
            assert_eq!(label.to_string(), s);
        }
        assert!("R(x^2-1; 1)".parse::<CatalogLabel>().is_err());
        assert!("P(-1)".parse::<CatalogLabel>().is_err());
        assert!("Z(1)".parse::<CatalogLabel>().is_err());
    }

    #[test]
    fn local_maps_multiply_and_reduce() {
        let p = TubePoint::linear(0);
        let iota = local_map(&p, 2, 3, &local_uniformizer(&p));
        assert_eq!(iota, Matrix::from_i64_rows(&[&[0, 0], &[1, 0], &[0, 1]]));
        let phi = local_map(&p, 3, 2, &Polynomial::one());
        assert_eq!(phi, Matrix::from_i64_rows(&[&[1, 0, 0], &[0, 1, 0]]));
    }
}
