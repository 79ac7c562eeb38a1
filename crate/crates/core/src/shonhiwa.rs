//! Counts of k-tuples drawn from `[1, n]` under gcd constraints.
//!
//! | function | tuples                       | constraint             |
//! |----------|------------------------------|------------------------|
//! | `S`      | ordered                      | `gcd(a…, m) = 1`       |
//! | `G`      | ordered                      | `gcd(a…) = 1`          |
//! | `L`      | nondecreasing (multisets)    | `gcd(a…, m) = 1`       |
//! | `H`      | nondecreasing (multisets)    | `gcd(a…) = 1`          |
//! | `T`      | strictly increasing (subsets)| `gcd(a…, m) = 1`       |
//!
//! Each is `Σ μ(d)·g(⌊n/d⌋)` with `g(c)` equal to `c^k`, `C(c+k−1, k)` or
//! `C(c, k)`.

use std::fmt;

use crate::counting::{binomial, mobius_sum};
use crate::error::{domain, Error, Result};
use crate::numtheory::{divisors_with_mu, moebius_sieve};
use crate::scalar::CountScalar;

/// How the entries of a tuple are ordered relative to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TupleOrdering {
    Ordered,
    Nondecreasing,
    Strict,
}

impl fmt::Display for TupleOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TupleOrdering::Ordered => "ordered",
            TupleOrdering::Nondecreasing => "nondecreasing",
            TupleOrdering::Strict => "strict",
        })
    }
}

/// Range bound `n`, tuple length `k` and optional coprimality modulus `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TupleQuery {
    pub n: u64,
    pub k: u64,
    pub m: Option<u64>,
}

impl TupleQuery {
    pub fn new(n: u64, k: u64, m: Option<u64>) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(domain(format!("need n >= 1 and k >= 1, got n = {n}, k = {k}")));
        }
        if m == Some(0) {
            return Err(domain("modulus m must be at least 1"));
        }
        Ok(Self { n, k, m })
    }
}

fn check(n: u64, k: u64, m: u64) -> Result<()> {
    TupleQuery::new(n, k, Some(m)).map(|_| ())
}

fn over_divisors_of<C, F>(m: u64, g: F) -> Result<C>
where
    C: CountScalar,
    F: Fn(u64) -> Result<Option<C>> + Sync,
{
    let terms: Vec<_> = divisors_with_mu(m)?.squarefree().collect();
    mobius_sum(&terms, g)
}

fn over_range<C, F>(n: u64, g: F) -> Result<C>
where
    C: CountScalar,
    F: Fn(u64) -> Result<Option<C>> + Sync,
{
    let terms: Vec<_> = moebius_sieve(n)?.squarefree().collect();
    mobius_sum(&terms, g)
}

fn ordered_term<C: CountScalar>(c: u64, k: u64) -> Result<Option<C>> {
    if c == 0 {
        return Ok(None);
    }
    C::checked_pow_u64(c, k)
        .map(Some)
        .ok_or(Error::Overflow("tuple power"))
}

fn multiset_term<C: CountScalar>(c: u64, k: u64) -> Result<Option<C>> {
    if c == 0 {
        return Ok(None);
    }
    let top = c
        .checked_add(k - 1)
        .ok_or(Error::Overflow("multiset coefficient"))?;
    binomial(top, k).map(Some)
}

fn subset_term<C: CountScalar>(c: u64, k: u64) -> Result<Option<C>> {
    if c < k {
        return Ok(None);
    }
    binomial(c, k).map(Some)
}

/// Ordered k-tuples from `[1, n]` with `gcd(a₁, …, a_k, m) = 1`.
pub fn s_count<C: CountScalar>(n: u64, k: u64, m: u64) -> Result<C> {
    check(n, k, m)?;
    over_divisors_of(m, |d| ordered_term(n / d, k))
}

/// Ordered k-tuples from `[1, n]` with `gcd(a₁, …, a_k) = 1`.
pub fn g_count<C: CountScalar>(n: u64, k: u64) -> Result<C> {
    check(n, k, 1)?;
    over_range(n, |d| ordered_term(n / d, k))
}

/// Nondecreasing k-tuples from `[1, n]` with `gcd(a₁, …, a_k, m) = 1`.
pub fn l_count<C: CountScalar>(n: u64, k: u64, m: u64) -> Result<C> {
    check(n, k, m)?;
    over_divisors_of(m, |d| multiset_term(n / d, k))
}

/// Nondecreasing k-tuples from `[1, n]` with `gcd(a₁, …, a_k) = 1`.
pub fn h_count<C: CountScalar>(n: u64, k: u64) -> Result<C> {
    check(n, k, 1)?;
    over_range(n, |d| multiset_term(n / d, k))
}

/// k-subsets of `[1, n]` with `gcd(A ∪ {m}) = 1`. Zero when `k > n`.
pub fn t_count<C: CountScalar>(n: u64, k: u64, m: u64) -> Result<C> {
    check(n, k, m)?;
    over_divisors_of(m, |d| subset_term(n / d, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::phi_k;
    use crate::numtheory::radical;
    use crate::setmodel::ProgressionUnion;
    use num_bigint::BigUint;

    #[test]
    fn s_examples() {
        assert_eq!(s_count::<u64>(6, 1, 6).unwrap(), 2);
        assert_eq!(s_count::<u64>(3, 2, 30).unwrap(), 7);
        for n in 1..8u64 {
            for k in 1..4 {
                assert_eq!(s_count::<u64>(n, k, 1).unwrap(), n.pow(k as u32));
            }
        }
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_count::<u64>(3, 2).unwrap(), 7);
        assert_eq!(g_count::<u64>(4, 2).unwrap(), 11);
        for k in 1..6 {
            assert_eq!(g_count::<u64>(1, k).unwrap(), 1);
        }
    }

    #[test]
    fn l_examples() {
        assert_eq!(l_count::<u64>(2, 2, 2).unwrap(), 2);
        assert_eq!(l_count::<u64>(3, 2, 6).unwrap(), 4);
        for n in 1..10 {
            for m in 1..20 {
                assert_eq!(
                    l_count::<u64>(n, 1, m).unwrap(),
                    s_count::<u64>(n, 1, m).unwrap()
                );
            }
        }
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_count::<u64>(2, 2).unwrap(), 2);
        for k in 1..6 {
            assert_eq!(h_count::<u64>(1, k).unwrap(), 1);
        }
        // 10 multisets of size 3 from [1,3]; only (2,2,2) and (3,3,3) fail
        assert_eq!(h_count::<u64>(3, 3).unwrap(), 8);
    }

    #[test]
    fn t_examples() {
        assert_eq!(t_count::<u64>(4, 2, 6).unwrap(), 5);
        assert_eq!(t_count::<u64>(3, 5, 6).unwrap(), 0);
        for n in 1..12u64 {
            for k in 1..=n {
                assert_eq!(
                    t_count::<u64>(n, k, 1).unwrap(),
                    binomial::<u64>(n, k).unwrap()
                );
            }
        }
        let x = ProgressionUnion::interval(1, 4).unwrap();
        assert_eq!(t_count::<u64>(4, 2, 6).unwrap(), phi_k::<u64, _>(&x, 6, 2).unwrap());
    }

    #[test]
    fn domain_errors() {
        assert!(s_count::<u64>(0, 1, 1).is_err());
        assert!(g_count::<u64>(3, 0).is_err());
        assert!(l_count::<u64>(3, 2, 0).is_err());
        assert!(TupleQuery::new(3, 2, Some(0)).is_err());
    }

    #[test]
    fn sandwich_and_radical() {
        for n in 1..=15 {
            for k in 1..=4 {
                for m in 1..=40 {
                    let t: BigUint = t_count(n, k, m).unwrap();
                    let l: BigUint = l_count(n, k, m).unwrap();
                    let s: BigUint = s_count(n, k, m).unwrap();
                    assert!(t <= l && l <= s, "n={n} k={k} m={m}");
                    let r = radical(m).unwrap();
                    assert_eq!(s, s_count::<BigUint>(n, k, r).unwrap());
                }
            }
        }
    }
}
