//! Integer scalars the exact kernel is generic over.
//!
//! Every exact type in this crate is parameterised by an integer type `T`.
//! [`num_bigint::BigInt`] is the default (see the aliases at the crate root);
//! the fixed-width primitives are supported for callers who know their
//! inputs stay small, in which case overflow is the caller's problem.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// A signed integer usable as the base of [`num_rational::Ratio`] and of the
/// surd types.
pub trait Int:
    Integer
    + Signed
    + Roots
    + Clone
    + Hash
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Number of significant bits of `|self|` (zero for zero).
    fn bit_length(&self) -> u64;
}

macro_rules! prim_int {
    ($($t:ty),*) => {$(
        impl Int for $t {
            fn bit_length(&self) -> u64 {
                u64::from(<$t>::BITS - self.unsigned_abs().leading_zeros())
            }
        }
    )*};
}

prim_int!(i32, i64, i128);

impl Int for BigInt {
    fn bit_length(&self) -> u64 {
        self.bits()
    }
}

/// Lifts a small literal into the scalar type.
pub fn int<T: Int>(v: i64) -> T {
    T::from_i64(v).expect("literal does not fit the scalar type")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_lengths_agree_across_scalars() {
        for v in [0i64, 1, 2, 3, 255, 256, -1024, 1 << 40] {
            let expected = 64 - v.unsigned_abs().leading_zeros() as u64;
            assert_eq!(v.bit_length(), expected);
            assert_eq!((v as i128).bit_length(), expected);
            assert_eq!(BigInt::from(v).bit_length(), expected);
        }
    }
}
