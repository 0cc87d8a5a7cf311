//! The coefficient abstraction shared by every algebraic container in the crate.
//!
//! Polynomials, Laurent polynomials, matrices and rational functions are all
//! generic over [`Scalar`]. Exact work uses [`Rational`](crate::Rational) or
//! [`Quadratic`](crate::Quadratic); the numeric dessin renderer uses `f64`.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// A field element usable as a polynomial coefficient.
///
/// Division by zero is a logic error for the exact implementations (they
/// panic); callers test with [`Zero::is_zero`] first.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(n: i64) -> Self;

    /// Whether equality on this type is exact (as opposed to floating point).
    const EXACT: bool;
}

macro_rules! float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_i64(n: i64) -> Self {
                n as $t
            }

            const EXACT: bool = false;
        }
    )*};
}

float_scalar!(f32, f64);

#[cfg(test)]
mod tests {
    use super::*;

    fn horner<T: Scalar>(coeffs: &[T], x: &T) -> T {
        coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x + c)
    }

    #[test]
    fn generic_code_runs_on_floats() {
        let c = [f64::from_i64(1), 2.0, 3.0];
        assert_eq!(horner(&c, &2.0), 17.0);
        let c32 = [f32::from_i64(-1), 0.0, 1.0];
        assert_eq!(horner(&c32, &3.0), 8.0);
        assert!(!f64::EXACT);
    }
}
