//! Exact counts of relatively prime subsets and gcd-constrained tuples.
//!
//! The ground set is a disjoint union of finite arithmetic progressions
//! ([`ProgressionUnion`]). Everything reduces to Möbius sums over the single
//! quantity `|X_d|`, the number of elements divisible by `d`:
//!
//! * `Φ_k(X, n) = Σ_{d|n} μ(d)·C(|X_d|, k)`
//! * `Φ(X, n)   = Σ_{d|n} μ(d)·(2^{|X_d|} − 1)`
//! * `f_k(X)    = Σ_{d ≤ max X} μ(d)·C(|X_d|, k)`
//! * `f(X)      = Σ_{d ≤ max X} μ(d)·(2^{|X_d|} − 1)`
//!
//! Counting functions are generic over a [`CountScalar`]; [`Count`] is the
//! arbitrary-precision default. The [`oracle`] module recomputes every count
//! by direct enumeration.
//!
//! ```
//! use relprime::{counting, parse_set_spec, Count};
//!
//! let x = parse_set_spec("1..2 + 5..6").unwrap();
//! let n: Count = counting::phi(&x, 6).unwrap();
//! assert_eq!(n, Count::from(12u32));
//! ```

pub mod counting;
mod error;
pub mod numtheory;
pub mod oracle;
pub mod scalar;
pub mod setmodel;
pub mod shonhiwa;

pub use error::{Error, Result};
pub use scalar::CountScalar;
pub use setmodel::{parse_set_spec, DivisibilityKernel, Progression, ProgressionUnion};

/// Arbitrary-precision count.
pub type Count = num_bigint::BigUint;

/// Count that fits a machine word; overflow is reported, never wrapped.
pub type SmallCount = u64;

/// Count that fits 128 bits.
pub type WideCount = u128;
