//! Floating-point scalar abstraction used by the statistical parts of the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// A real scalar: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Convergence tolerance for fixed-point iterations in this precision.
    fn fixed_point_tolerance() -> Self;

    #[inline]
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("f64 is representable in every Scalar")
    }

    #[inline]
    fn ratio(num: usize, den: usize) -> Self {
        if den == 0 {
            Self::zero()
        } else {
            Self::of(num as f64) / Self::of(den as f64)
        }
    }
}

impl Scalar for f64 {
    fn fixed_point_tolerance() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    fn fixed_point_tolerance() -> Self {
        // 1e-12 is below f32 resolution.
        64.0 * f32::EPSILON
    }
}
