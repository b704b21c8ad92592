//! Scalar abstraction shared by every module.
//!
//! All numerics are written against [`Real`], implemented for `f32` and `f64`.
//! Wire formats are always `f64`; conversions go through [`Real::lit`] and
//! [`Real::as_f64`].

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, NumAssign};

/// Floating point type usable as the real part of an amplitude.
pub trait Real:
    Float + FloatConst + NumAssign + Default + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal, rounding to the nearest representable value.
    fn lit(v: f64) -> Self;

    fn as_f64(self) -> f64;
}

impl Real for f64 {
    #[inline]
    fn lit(v: f64) -> Self {
        v
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self
    }
}

impl Real for f32 {
    #[inline]
    fn lit(v: f64) -> Self {
        v as f32
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self as f64
    }
}

#[inline]
pub(crate) fn is_finite_complex<T: Real>(z: &Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `2^(-m/2)`, the normalisation of an unnormalised m-qubit plus product.
pub(crate) fn inv_sqrt_pow2<T: Real>(m: usize) -> T {
    T::lit(2.0).powi(m as i32).sqrt().recip()
}
