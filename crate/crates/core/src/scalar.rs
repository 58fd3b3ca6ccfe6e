//! Scalar abstraction. All numeric code in this crate is generic over [`Real`],
//! which is satisfied by `f32` and `f64`.

use num_traits::{Float, FromPrimitive, NumAssign};
use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

pub trait Real:
    Float + FromPrimitive + NumAssign + Sum + Debug + Display + LowerExp + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FromPrimitive + NumAssign + Sum + Debug + Display + LowerExp + Send + Sync + 'static
{
}

/// Shorthand conversion from an `f64` literal into the working scalar.
#[inline]
pub fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 constant not representable in scalar type")
}

/// Ring of coefficients a Lie-algebra element may carry. The group law and
/// bracket are implemented once over this trait, so the same code path
/// produces both numeric products (coefficients = scalars) and symbolic ones
/// (coefficients = polynomials in the coordinates).
pub trait Coeff<T: Real>: Clone + Send + Sync {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: T) -> Self;
    fn is_zero(&self) -> bool;
}

impl<T: Real> Coeff<T> for T {
    fn zero() -> Self {
        T::zero()
    }
    fn add(&self, other: &Self) -> Self {
        *self + *other
    }
    fn sub(&self, other: &Self) -> Self {
        *self - *other
    }
    fn mul(&self, other: &Self) -> Self {
        *self * *other
    }
    fn scale(&self, c: T) -> Self {
        *self * c
    }
    fn is_zero(&self) -> bool {
        *self == T::zero()
    }
}
