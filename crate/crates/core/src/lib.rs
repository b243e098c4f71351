pub mod atlas;
pub mod check;
pub mod cohfun;
pub mod decomp;
pub mod error;
pub mod exactnum;
pub mod generic;
pub mod io;
pub mod quiver;
pub mod rep;
pub mod tame;

pub use check::{Check, CheckList};
pub use error::{Error, Result};
pub use exactnum::{Field, FieldTag, Matrix, Polynomial, Rational, RationalFunction};
pub use quiver::Quiver;
pub use rep::{Rep, RepMap, ShortExact};
