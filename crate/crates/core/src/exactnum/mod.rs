//! Exact scalars, polynomials and dense linear algebra.

mod field;
mod matrix;
mod poly;
mod ratfun;
mod rational;

pub use field::{Field, FieldTag};
pub use matrix::{Echelon, Matrix};
pub use poly::Polynomial;
pub use ratfun::RationalFunction;
pub use rational::Rational;
