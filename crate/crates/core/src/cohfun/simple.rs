use crate::error::Result;
use crate::exactnum::Rational;
use crate::rep::Rep;
use crate::tame::ar_sequence;

use super::CoherentFunctor;

/// The functor presented by the left almost split map `τX → E`.
///
/// It is the simple functor at `τX`: it vanishes on every indecomposable
/// not isomorphic to `τX`.
pub fn simple_functor_probe(x: &Rep<Rational>) -> Result<CoherentFunctor<Rational>> {
    let ar = ar_sequence(x)?;
    Ok(CoherentFunctor::new(ar.sequence.f))
}
