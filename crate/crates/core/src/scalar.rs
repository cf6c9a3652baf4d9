use std::fmt::{Debug, Display};

use num_traits::float::TotalOrder;
use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point type the solvers are generic over.
///
/// Blanket-implemented for every type with the required `num-traits`
/// capabilities, which in practice means `f32` and `f64`.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + TotalOrder + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal. Panics only if the conversion is
    /// unrepresentable, which cannot happen for `f32`/`f64`.
    #[inline]
    fn lit(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn of_index(i: usize) -> Self {
        <Self as FromPrimitive>::from_usize(i).expect("index representable in scalar type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where
    T: Float
        + FromPrimitive
        + ToPrimitive
        + TotalOrder
        + Debug
        + Display
        + Default
        + Send
        + Sync
        + 'static
{
}
