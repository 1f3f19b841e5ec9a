pub mod characters;
pub mod classes;
pub mod cyclotomic;
pub mod finite_field;
pub mod intpoly;
pub mod multipartition;
pub mod numtheory;
pub mod partitions;
pub mod scalar;
pub mod selfdual;
pub mod symfunc;
pub mod tori;
pub mod verify;

mod error;
mod serde_util;

pub use error::{Error, Result};

/// Exact rationals, the scalar used by every exact computation.
pub type Rational = num_rational::BigRational;
/// An exact element of a cyclotomic field over [`Rational`].
pub type Cyclotomic = cyclotomic::Cyclotomic<Rational>;
/// A symmetric function expression with exact coefficients.
pub type SymExpr = symfunc::SymExpr<Rational>;
/// An exact character table.
pub type CharTable = symfunc::table::CharTable<Rational>;
