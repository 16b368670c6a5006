//! The scalar field abstraction.
//!
//! Everything in the crate is generic over [`Scalar`]. Exact verification
//! needs an exact field, so the CLI and the corpus use [`crate::Rational`];
//! `Ratio<i64>` and `f64` also satisfy the bound and work for small,
//! integer-valued examples.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

pub trait Scalar:
    Num + Neg<Output = Self> + FromPrimitive + PartialOrd + Clone + Debug + Display + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every scalar field contains the integers")
    }

    fn is_unit_sign(&self) -> bool {
        *self == Self::one() || *self == -Self::one()
    }

    /// `self^exp`, inverting for negative exponents.
    fn pow_signed(&self, exp: i64) -> Self {
        let mag = num_traits::pow(self.clone(), exp.unsigned_abs() as usize);
        if exp < 0 {
            Self::one() / mag
        } else {
            mag
        }
    }
}

impl<T> Scalar for T where
    T: Num + Neg<Output = T> + FromPrimitive + PartialOrd + Clone + Debug + Display + Send + Sync + 'static
{
}
