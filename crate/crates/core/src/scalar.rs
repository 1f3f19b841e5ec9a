//! Coefficient scalars.
//!
//! Everything numeric in the crate is generic over [`Scalar`]: a field of
//! characteristic zero in which the integers embed. The exact instantiation
//! used throughout is [`crate::Rational`]; the fixed-width ratios are handy
//! for small tests and `f64`/`f32` give approximate shadows of the same
//! computations.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed};

pub trait Scalar:
    Num + Clone + Neg<Output = Self> + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Whether `==` on this type is exact equality of field elements.
    const EXACT: bool;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer must embed into the scalar field")
    }

    fn from_bigint(v: &BigInt) -> Self;

    /// Nearest `f64`, for display only.
    fn to_f64(&self) -> f64;

    /// `self^e` for a (possibly negative) integer exponent.
    fn powi(&self, e: i64) -> Self {
        let mut base = if e < 0 {
            Self::one() / self.clone()
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl Scalar for BigRational {
    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    const EXACT: bool = true;

    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
}

impl Scalar for Ratio<i64> {
    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    const EXACT: bool = true;

    fn from_bigint(v: &BigInt) -> Self {
        let v = i64::try_from(v).expect("integer does not fit in Ratio<i64>");
        Ratio::from_integer(v)
    }
}

impl Scalar for Ratio<i128> {
    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    const EXACT: bool = true;

    fn from_bigint(v: &BigInt) -> Self {
        let v = i128::try_from(v).expect("integer does not fit in Ratio<i128>");
        Ratio::from_integer(v)
    }
}

impl Scalar for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }

    const EXACT: bool = false;

    fn from_bigint(v: &BigInt) -> Self {
        num_traits::ToPrimitive::to_f64(v).unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    const EXACT: bool = false;

    fn from_bigint(v: &BigInt) -> Self {
        num_traits::ToPrimitive::to_f32(v).unwrap_or(f32::NAN)
    }
}

/// Exact rational scalars: the subset on which integrality can be decided.
pub trait ExactScalar: Scalar + Signed + Ord {
    fn to_bigint_exact(&self) -> Option<BigInt>;
}

impl ExactScalar for BigRational {
    fn to_bigint_exact(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }
}

impl ExactScalar for Ratio<i64> {
    fn to_bigint_exact(&self) -> Option<BigInt> {
        self.is_integer().then(|| BigInt::from(self.to_integer()))
    }
}

impl ExactScalar for Ratio<i128> {
    fn to_bigint_exact(&self) -> Option<BigInt> {
        self.is_integer().then(|| BigInt::from(self.to_integer()))
    }
}
