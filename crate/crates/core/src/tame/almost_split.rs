use crate::decomp::{end_algebra, is_indecomposable, iso_test};
use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Rational};
use crate::rep::{extension_middle_term, hom_basis, hom_dim, ExtCocycle, ExtSpace, Rep, ShortExact};

use super::tau::transpose_dual_tau;

/// `0 → τX → E → X → 0` for a brick `X`.
#[derive(Clone, Debug)]
pub struct ArSequence {
    pub tau: Rep<Rational>,
    pub cocycle: ExtCocycle<Rational>,
    pub sequence: ShortExact<Rational>,
}

impl ArSequence {
    pub fn middle(&self) -> &Rep<Rational> {
        self.sequence.middle()
    }

    /// The class is not a coboundary.
    pub fn is_non_split(&self) -> Result<bool> {
        let x = self.sequence.right();
        Ok(!ExtSpace::new(x, &self.tau)?.is_coboundary(&self.cocycle)?)
    }
}

/// `End(X)` is a division ring: local with trivial radical.
pub fn is_brick(x: &Rep<Rational>) -> Result<bool> {
    if !is_indecomposable(x)? {
        return Ok(false);
    }
    Ok(end_algebra(x)?.radical().is_empty())
}

pub fn ar_sequence(x: &Rep<Rational>) -> Result<ArSequence> {
    if !is_brick(x)? {
        return Err(Error::Precondition("ar_sequence needs a brick".into()));
    }
    let tau = transpose_dual_tau(x)?;
    if tau.is_zero() {
        return Err(Error::Precondition("ar_sequence needs a non-projective module".into()));
    }
    let cocycle = ExtSpace::new(x, &tau)?
        .basis()
        .into_iter()
        .next()
        .ok_or_else(|| Error::Precondition("Ext(X, τX) vanishes".into()))?;
    let sequence = extension_middle_term(x, &tau, &cocycle)?;
    Ok(ArSequence {
        tau,
        cocycle,
        sequence,
    })
}

/// Right almost split test against one indecomposable `Y`: the maps
/// `Y → X` factoring through `E → X` are exactly the non-retractions.
pub fn factors_through_middle(seq: &ArSequence, y: &Rep<Rational>) -> Result<bool> {
    let x = seq.sequence.right();
    let g = &seq.sequence.g;
    let images: Vec<Vec<Rational>> = hom_basis(y, seq.middle())?
        .iter()
        .map(|h| g.compose(h).map(|c| c.to_vector()))
        .collect::<Result<_>>()?;
    let len = images.first().map_or(0, Vec::len);
    let reached = Matrix::from_columns(&images, len).rank();
    let total = hom_dim(y, x)?;
    let expected = if iso_test(y, x)?.is_some() {
        total - end_algebra(x)?.semisimple_dim()
    } else {
        total
    };
    Ok(reached == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::decompose;
    use crate::tame::catalog::{kron_preinjective, kron_preprojective, kron_regular, TubePoint};

    #[test]
    fn regular_simple_at_x() {
        let x = kron_regular(&TubePoint::linear(0), 1).unwrap();
        let ar = ar_sequence(&x).unwrap();
        assert!(ar.is_non_split().unwrap());
        let r2 = kron_regular(&TubePoint::linear(0), 2).unwrap();
        assert!(iso_test(ar.middle(), &r2).unwrap().is_some());
        for y in [x.clone(), r2, kron_preprojective(2), kron_regular(&TubePoint::Infinity, 1).unwrap()] {
            assert!(factors_through_middle(&ar, &y).unwrap());
        }
    }

    #[test]
    fn simple_injective() {
        let x = kron_preinjective(0);
        let ar = ar_sequence(&x).unwrap();
        assert_eq!(ar.middle().dims(), &[4, 2]);
        let dec = decompose(ar.middle()).unwrap();
        assert_eq!(dec.summands.len(), 1);
        assert_eq!(dec.summands[0].multiplicity, 2);
        assert!(iso_test(&dec.summands[0].rep, &kron_preinjective(1)).unwrap().is_some());
        for y in [kron_preinjective(1), kron_preinjective(0), kron_preprojective(3)] {
            assert!(factors_through_middle(&ar, &y).unwrap());
        }
    }

    #[test]
    fn degree_two_point_is_a_brick() {
        let x = kron_regular(&"x^2+1".parse().unwrap(), 1).unwrap();
        assert!(is_brick(&x).unwrap());
        let ar = ar_sequence(&x).unwrap();
        assert!(ar.is_non_split().unwrap());
        assert_eq!(ar.middle().dims(), &[4, 4]);
        assert!(factors_through_middle(&ar, &x).unwrap());
    }

    #[test]
    fn rejections() {
        assert!(ar_sequence(&kron_preprojective(1)).is_err());
        assert!(ar_sequence(&kron_regular(&TubePoint::linear(0), 2).unwrap()).is_err());
    }
}
