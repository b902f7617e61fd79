//! Scalar abstraction: all geometry is generic over a floating-point type.

use std::fmt::{Debug, Display};

use num_traits::float::FloatConst;
use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the whole crate is generic over (`f32` or `f64`).
pub trait Scalar: Float + FloatConst + FromPrimitive + Debug + Display + 'static {}

impl<T> Scalar for T where T: Float + FloatConst + FromPrimitive + Debug + Display + 'static {}

/// Convert an `f64` literal into the working scalar type.
///
/// Panics if the literal is not representable, which cannot happen for the
/// finite constants used in this crate.
#[inline]
pub fn lit<S: Scalar>(v: f64) -> S {
    S::from_f64(v).expect("finite literal")
}

/// Shorthand for `lit(2.0)`, the most common constant in the formulas.
#[inline]
pub(crate) fn two<S: Scalar>() -> S {
    lit(2.0)
}

#[inline]
pub(crate) fn half<S: Scalar>() -> S {
    lit(0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_roundtrip() {
        assert_eq!(lit::<f64>(0.25), 0.25);
        assert_eq!(lit::<f32>(0.25), 0.25f32);
        assert_eq!(two::<f64>() * half::<f64>(), 1.0);
    }
}
