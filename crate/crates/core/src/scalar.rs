//! Scalar traits shared by the character engine and the alphabet evaluator.
//!
//! Character values only need a signed ring, so [`CharacterCache`](crate::CharacterCache)
//! works over `i64`, `i128` or [`BigInt`]. Symmetric-function evaluation needs a field
//! and a way to embed integers; exact work uses [`BigRational`], while `f64`
//! is available for quick approximate evaluations.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed, ToPrimitive};
use std::fmt::Debug;
use std::ops::Neg;

/// Signed ring used for character values.
pub trait RingScalar: Clone + Signed + Debug {}

impl<T: Clone + Signed + Debug> RingScalar for T {}

/// Field used for evaluating symmetric functions on alphabets.
pub trait FieldScalar: Clone + PartialEq + Num + Neg<Output = Self> + Debug {
    /// Embeds an arbitrary-precision integer.
    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    /// Integer power by repeated squaring.
    fn pow_u32(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl FieldScalar for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        Ratio::from_integer(n.clone())
    }
}

impl FieldScalar for Ratio<i128> {
    fn from_bigint(n: &BigInt) -> Self {
        Ratio::from_integer(n.to_i128().expect("integer exceeds i128"))
    }
}

impl FieldScalar for f64 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }
}

impl FieldScalar for f32 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f32().unwrap_or(f32::NAN)
    }
}
