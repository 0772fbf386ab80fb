//! Scalar abstraction for vertex weights.
//!
//! The independent set solvers only need an ordered additive structure with a
//! zero, so they are written against [`Weight`]. Unsigned integers, signed
//! integers and floats all qualify; the e.d. pipeline itself runs on `u128`.

use std::fmt::Debug;
use std::iter::Sum;

use num_traits::{NumCast, Zero};

/// A vertex weight: ordered, additive, cheaply copyable.
///
/// Subtraction is only ever performed as `a - b` with `a > b`, so unsigned
/// types are safe to use.
pub trait Weight:
    Copy
    + Debug
    + PartialOrd
    + Zero
    + NumCast
    + Sum
    + std::ops::Sub<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// `self - other` clamped at zero.
    #[inline]
    fn saturating_diff(self, other: Self) -> Self {
        if self > other {
            self - other
        } else {
            Self::zero()
        }
    }

    #[inline]
    fn is_positive(self) -> bool {
        self > Self::zero()
    }

    /// Larger of two weights, `self` on ties or incomparable values.
    #[inline]
    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Converts a count, panicking only if the count does not fit `Self`.
    fn from_count(count: usize) -> Self {
        <Self as NumCast>::from(count).expect("count does not fit in weight type")
    }
}

impl<T> Weight for T where
    T: Copy
        + Debug
        + PartialOrd
        + Zero
        + NumCast
        + Sum
        + std::ops::Sub<Output = T>
        + Send
        + Sync
        + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saturating_diff_unsigned() {
        assert_eq!(3u32.saturating_diff(5), 0);
        assert_eq!(5u32.saturating_diff(3), 2);
    }

    #[test]
    fn saturating_diff_float() {
        assert_eq!(1.5f64.saturating_diff(2.0), 0.0);
        assert!((2.5f32.saturating_diff(1.0) - 1.5).abs() < 1e-6);
    }

    #[test]
    fn from_count_roundtrip() {
        assert_eq!(u128::from_count(7), 7);
        assert_eq!(f64::from_count(3), 3.0);
    }
}
