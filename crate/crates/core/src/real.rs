use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Scalar type the whole crate is generic over: `f32` or `f64`.
///
/// Default tolerances are tuned for `f64`; `f32` users should supply their
/// own [`crate::Tolerances`].
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// Converts an `f64` constant into the working scalar type.
#[inline]
pub fn real<T: Real>(v: f64) -> T {
    T::from_f64(v).expect("f64 constant must convert into the scalar type")
}
