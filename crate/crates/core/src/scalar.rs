//! Count scalars.
//!
//! Every counting routine is generic over the integer type it accumulates
//! into. [`BigUint`] never overflows and is what the crate-level [`Count`]
//! alias points at; `u64` and `u128` are available for callers that know
//! their results fit and want to skip heap allocation. Machine-word scalars
//! report [`Error::Overflow`](crate::Error::Overflow) instead of wrapping.
//!
//! [`Count`]: crate::Count

use std::fmt::{Debug, Display};

use num_bigint::BigUint;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Zero};

/// Nonnegative exact integer usable as the codomain of a counting function.
pub trait CountScalar:
    Clone
    + Ord
    + Debug
    + Display
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
    + Send
    + Sync
    + 'static
{
    /// Lossless conversion from a machine word. Every implementor is at
    /// least 64 bits wide.
    fn from_u64(v: u64) -> Self;

    /// `2^e`, or `None` if it does not fit.
    fn checked_pow2(e: u64) -> Option<Self>;

    /// `base^e`, or `None` if it does not fit.
    fn checked_pow_u64(base: u64, e: u64) -> Option<Self> {
        let e = usize::try_from(e).ok()?;
        num_traits::checked_pow(Self::from_u64(base), e)
    }
}

impl CountScalar for u64 {
    fn from_u64(v: u64) -> Self {
        v
    }

    fn checked_pow2(e: u64) -> Option<Self> {
        (e < 64).then(|| 1u64 << e)
    }
}

impl CountScalar for u128 {
    fn from_u64(v: u64) -> Self {
        v as u128
    }

    fn checked_pow2(e: u64) -> Option<Self> {
        (e < 128).then(|| 1u128 << e)
    }
}

impl CountScalar for BigUint {
    fn from_u64(v: u64) -> Self {
        BigUint::from(v)
    }

    fn checked_pow2(e: u64) -> Option<Self> {
        Some(BigUint::one() << e)
    }

    fn checked_pow_u64(base: u64, e: u64) -> Option<Self> {
        let e = u32::try_from(e).ok()?;
        Some(BigUint::from(base).pow(e))
    }
}
