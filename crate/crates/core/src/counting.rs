//! Relatively prime subset counts via Möbius sums over `|X_d|`.
//!
//! Every function here reduces to `Σ μ(d)·g(|X_d|)` for some `g`
//! (a binomial, a power of two, or a power of two minus one) with `d` ranging
//! over squarefree divisors of a modulus or over `1..=max X`. Positive and
//! negative terms are accumulated separately and subtracted once; a negative
//! total would be a bug and panics.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::numtheory::{divisors_with_mu, factorize, moebius_sieve, primes_up_to};
use crate::scalar::CountScalar;
use crate::setmodel::{DivisibilityKernel, ProgressionUnion};

/// Largest `max X` for which the f-family will sieve μ.
pub const MAX_SIEVE_LIMIT: u64 = 100_000_000;

// below this many terms the sum runs on the calling thread
const PARALLEL_THRESHOLD: usize = 512;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial<C: CountScalar>(n: u64, k: u64) -> Result<C> {
    if k > n {
        return Ok(C::zero());
    }
    let k = k.min(n - k);
    let mut acc = C::one();
    // after step i, acc = C(n - k + i, i), so every division is exact
    for i in 1..=k {
        acc = acc
            .checked_mul(&C::from_u64(n - k + i))
            .ok_or(Error::Overflow("binomial coefficient"))?;
        acc = acc
            .checked_div(&C::from_u64(i))
            .expect("division by a positive integer");
    }
    Ok(acc)
}

/// `2^e − 1`.
pub fn power_of_two_minus_one<C: CountScalar>(e: u64) -> Result<C> {
    let p = C::checked_pow2(e).ok_or(Error::Overflow("power of two"))?;
    Ok(p.checked_sub(&C::one()).expect("2^e >= 1"))
}

fn pow2<C: CountScalar>(e: u64) -> Result<C> {
    C::checked_pow2(e).ok_or(Error::Overflow("power of two"))
}

/// `Σ μ(d)·term(d)` over the given `(d, μ(d))` pairs.
pub(crate) fn mobius_sum<C, F>(terms: &[(u64, i8)], term: F) -> Result<C>
where
    C: CountScalar,
    F: Fn(u64) -> Result<Option<C>> + Sync,
{
    let split = |&(d, mu): &(u64, i8)| -> Result<(C, C)> {
        Ok(match term(d)? {
            None => (C::zero(), C::zero()),
            Some(v) if mu > 0 => (v, C::zero()),
            Some(v) if mu < 0 => (C::zero(), v),
            Some(_) => (C::zero(), C::zero()),
        })
    };
    let add = |(p1, n1): (C, C), (p2, n2): (C, C)| -> Result<(C, C)> {
        let overflow = Error::Overflow("Möbius sum");
        Ok((
            p1.checked_add(&p2).ok_or(overflow.clone())?,
            n1.checked_add(&n2).ok_or(overflow)?,
        ))
    };
    let (pos, neg) = if terms.len() < PARALLEL_THRESHOLD {
        terms
            .iter()
            .try_fold((C::zero(), C::zero()), |acc, t| add(acc, split(t)?))?
    } else {
        terms
            .par_iter()
            .map(split)
            .try_reduce(|| (C::zero(), C::zero()), add)?
    };
    Ok(pos
        .checked_sub(&neg)
        .unwrap_or_else(|| panic!("Möbius sum went negative: {pos} - {neg}")))
}

fn check_modulus(n: u64) -> Result<()> {
    if n == 0 {
        return Err(domain("modulus n must be at least 1"));
    }
    Ok(())
}

fn check_cardinality(k: u64) -> Result<()> {
    if k == 0 {
        return Err(domain("subset size k must be at least 1"));
    }
    Ok(())
}

fn squarefree_up_to_max<K: DivisibilityKernel + ?Sized>(x: &K) -> Result<Vec<(u64, i8)>> {
    let max = x.max_element();
    if max > MAX_SIEVE_LIMIT {
        return Err(Error::Resource(format!(
            "max element {max} exceeds the sieve limit {MAX_SIEVE_LIMIT}"
        )));
    }
    Ok(moebius_sieve(max.max(1))?.squarefree().collect())
}

/// Number of k-subsets `A ⊆ X` with `gcd(A ∪ {n}) = 1`.
pub fn phi_k<C, K>(x: &K, n: u64, k: u64) -> Result<C>
where
    C: CountScalar,
    K: DivisibilityKernel + ?Sized,
{
    check_modulus(n)?;
    check_cardinality(k)?;
    let terms: Vec<_> = divisors_with_mu(n)?.squarefree().collect();
    mobius_sum(&terms, |d| {
        let c = x.multiples(d);
        if c < k {
            return Ok(None);
        }
        binomial(c, k).map(Some)
    })
}

/// Number of nonempty `A ⊆ X` with `gcd(A ∪ {n}) = 1`.
///
/// For `n > 1` the `−1` terms of `Σ μ(d)(2^{|X_d|} − 1)` cancel, so the
/// sum is taken as `Σ μ(d)·2^{|X_d|}`.
pub fn phi<C, K>(x: &K, n: u64) -> Result<C>
where
    C: CountScalar,
    K: DivisibilityKernel + ?Sized,
{
    check_modulus(n)?;
    if n == 1 {
        return power_of_two_minus_one(x.cardinality());
    }
    let terms: Vec<_> = divisors_with_mu(n)?.squarefree().collect();
    mobius_sum(&terms, |d| pow2(x.multiples(d)).map(Some))
}

/// Number of relatively prime k-subsets of `X`.
pub fn f_k<C, K>(x: &K, k: u64) -> Result<C>
where
    C: CountScalar,
    K: DivisibilityKernel + ?Sized,
{
    check_cardinality(k)?;
    let terms = squarefree_up_to_max(x)?;
    mobius_sum(&terms, |d| {
        let c = x.multiples(d);
        if c < k {
            return Ok(None);
        }
        binomial(c, k).map(Some)
    })
}

/// Number of relatively prime nonempty subsets of `X`.
pub fn f<C, K>(x: &K) -> Result<C>
where
    C: CountScalar,
    K: DivisibilityKernel + ?Sized,
{
    let terms = squarefree_up_to_max(x)?;
    mobius_sum(&terms, |d| match x.multiples(d) {
        0 => Ok(None),
        c => power_of_two_minus_one(c).map(Some),
    })
}

/// `f([1, n])`.
pub fn nathanson_f<C: CountScalar>(n: u64) -> Result<C> {
    f(&ProgressionUnion::interval(1, n)?)
}

/// `Φ([1, n], n)`.
pub fn nathanson_phi<C: CountScalar>(n: u64) -> Result<C> {
    phi(&ProgressionUnion::interval(1, n)?, n)
}

/// A modulus known only through its distinct prime factors.
///
/// Möbius sums over divisors of `n` see nothing but `rad(n)`, so this is
/// enough to evaluate `Φ(X, n)` for moduli far beyond 64 bits, such as the
/// primorial standing in for `(max X)!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modulus {
    primes: Vec<u64>,
}

impl Modulus {
    pub fn from_u64(n: u64) -> Result<Self> {
        check_modulus(n)?;
        Ok(Self {
            primes: factorize(n).into_iter().map(|(p, _)| p).collect(),
        })
    }

    /// Product of all primes `<= x`.
    pub fn primorial(x: u64) -> Self {
        Self {
            primes: primes_up_to(x),
        }
    }

    /// Sorted distinct prime factors.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// `rad(n)` as a big integer.
    pub fn radical(&self) -> BigUint {
        self.primes.iter().map(|&p| BigUint::from(p)).product()
    }

    /// Squarefree divisors `d <= bound` with μ(d), unsorted.
    fn squarefree_divisors_up_to(&self, bound: u64) -> Vec<(u64, i8)> {
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 1u64, 1i8)];
        while let Some((start, d, mu)) = stack.pop() {
            out.push((d, mu));
            for (i, &p) in self.primes.iter().enumerate().skip(start) {
                match d.checked_mul(p) {
                    Some(next) if next <= bound => stack.push((i + 1, next, -mu)),
                    // primes are sorted, so every later product is larger too
                    _ => break,
                }
            }
        }
        out
    }
}

/// `Φ_k(X, n)` for an arbitrary-size modulus given by its primes.
///
/// Divisors above `max X` have `|X_d| = 0` and drop out, so only
/// `d <= max X` are visited.
pub fn phi_k_for_modulus<C, K>(x: &K, n: &Modulus, k: u64) -> Result<C>
where
    C: CountScalar,
    K: DivisibilityKernel + ?Sized,
{
    check_cardinality(k)?;
    let terms = n.squarefree_divisors_up_to(x.max_element());
    mobius_sum(&terms, |d| {
        let c = x.multiples(d);
        if c < k {
            return Ok(None);
        }
        binomial(c, k).map(Some)
    })
}

/// `Φ(X, n)` for an arbitrary-size modulus, via `Σ μ(d)(2^{|X_d|} − 1)`.
pub fn phi_for_modulus<C, K>(x: &K, n: &Modulus) -> Result<C>
where
    C: CountScalar,
    K: DivisibilityKernel + ?Sized,
{
    let terms = n.squarefree_divisors_up_to(x.max_element());
    mobius_sum(&terms, |d| match x.multiples(d) {
        0 => Ok(None),
        c => power_of_two_minus_one(c).map(Some),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::{primorial_up_to, radical};
    use crate::setmodel::parse_set_spec;
    use proptest::prelude::*;

    fn set(s: &str) -> ProgressionUnion {
        parse_set_spec(s).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn pascal_row(n: usize) -> Vec<BigUint> {
        let mut row = vec![big(1)];
        for _ in 0..n {
            let mut next = vec![big(1)];
            next.extend(row.windows(2).map(|w| &w[0] + &w[1]));
            next.push(big(1));
            row = next;
        }
        row
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial::<u64>(5, 2).unwrap(), 10);
        assert_eq!(binomial::<u64>(3, 7).unwrap(), 0);
        assert_eq!(binomial::<u64>(9, 0).unwrap(), 1);
        assert_eq!(binomial::<u64>(0, 0).unwrap(), 1);
        let c: BigUint = binomial(64, 32).unwrap();
        assert_eq!(c, pascal_row(64)[32]);
        assert_eq!(c.to_string().len(), 19);
    }

    #[test]
    fn binomial_matches_pascal() {
        for n in 0..=80u64 {
            let row = pascal_row(n as usize);
            for k in 0..=n + 2 {
                let expected = row.get(k as usize).cloned().unwrap_or_default();
                assert_eq!(binomial::<BigUint>(n, k).unwrap(), expected, "C({n},{k})");
            }
        }
    }

    #[test]
    fn binomial_overflow_is_reported() {
        assert_eq!(binomial::<u64>(100, 50), Err(Error::Overflow("binomial coefficient")));
        assert!(binomial::<u128>(100, 50).is_ok());
    }

    #[test]
    fn powers_of_two() {
        assert_eq!(power_of_two_minus_one::<u64>(0).unwrap(), 0);
        assert_eq!(power_of_two_minus_one::<u64>(10).unwrap(), 1023);
        let v: BigUint = power_of_two_minus_one(200).unwrap();
        let row = pascal_row(200);
        let sum: BigUint = row[1..].iter().sum();
        assert_eq!(v, sum);
        assert_eq!(v.to_string().len(), 61);
    }

    #[test]
    fn phi_k_examples() {
        assert_eq!(phi_k::<u64, _>(&set("1..6"), 6, 1).unwrap(), 2);
        assert_eq!(phi_k::<u64, _>(&set("1..6"), 1, 2).unwrap(), 15);
        assert_eq!(phi_k::<u64, _>(&set("1..4"), 6, 5).unwrap(), 0);
        assert!(phi_k::<u64, _>(&set("1..4"), 0, 1).is_err());
        assert!(phi_k::<u64, _>(&set("1..4"), 6, 0).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi::<u64, _>(&set("1..2 + 5..6"), 6).unwrap(), 12);
        assert_eq!(phi::<u64, _>(&set("3..9"), 1).unwrap(), 127);
        assert_eq!(phi::<u64, _>(&set("ap(2,2,3)"), 2).unwrap(), 0);
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_k::<u64, _>(&set("1..4"), 2).unwrap(), 5);
        assert_eq!(f_k::<u64, _>(&set("1..1"), 1).unwrap(), 1);
        for k in 1..=5 {
            assert_eq!(f_k::<u64, _>(&set("ap(2,2,4)"), k).unwrap(), 0);
        }
        assert_eq!(f::<u64, _>(&set("1..4")).unwrap(), 11);
        assert_eq!(f::<u64, _>(&set("1..1")).unwrap(), 1);
        assert_eq!(f::<u64, _>(&set("1..3")).unwrap(), 5);
    }

    #[test]
    fn nathanson_sequences() {
        let f_seq: Vec<u64> = (1..=5).map(|n| nathanson_f(n).unwrap()).collect();
        assert_eq!(f_seq, [1, 2, 5, 11, 26]);
        assert_eq!(nathanson_phi::<u64>(3).unwrap() % 3, 0);
        assert!(nathanson_f::<u64>(0).is_err());
    }

    #[test]
    fn scalars_agree_until_overflow() {
        let x = set("1..60");
        let small: u64 = f(&x).unwrap();
        let wide: u128 = f(&x).unwrap();
        let bigv: BigUint = f(&x).unwrap();
        assert_eq!(BigUint::from(small), bigv);
        assert_eq!(BigUint::from(wide), bigv);
        assert_eq!(f::<u64, _>(&set("1..70")), Err(Error::Overflow("power of two")));
    }

    #[test]
    fn modulus_forms_match_u64_forms() {
        let x = set("3..40 + ap(50,7,6)");
        for n in 1..=300u64 {
            let m = Modulus::from_u64(n).unwrap();
            assert_eq!(BigUint::from(radical(n).unwrap()), m.radical());
            assert_eq!(
                phi::<BigUint, _>(&x, n).unwrap(),
                phi_for_modulus::<BigUint, _>(&x, &m).unwrap(),
                "n = {n}"
            );
            for k in [1, 2, 5] {
                assert_eq!(
                    phi_k::<BigUint, _>(&x, n, k).unwrap(),
                    phi_k_for_modulus::<BigUint, _>(&x, &m, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn primorial_modulus() {
        for x in 1..=40 {
            assert_eq!(Modulus::primorial(x).radical(), primorial_up_to(x).unwrap());
        }
    }

    #[test]
    fn parallel_and_sequential_paths_agree() {
        // 2000 > PARALLEL_THRESHOLD squarefree d, so the rayon path runs
        let x = ProgressionUnion::interval(1, 2000).unwrap();
        let par: BigUint = f(&x).unwrap();
        let terms = squarefree_up_to_max(&x).unwrap();
        let mut pos = BigUint::default();
        let mut neg = BigUint::default();
        for (d, mu) in terms {
            let v: BigUint = power_of_two_minus_one(x.multiples(d)).unwrap();
            if mu > 0 {
                pos += v;
            } else {
                neg += v;
            }
        }
        assert_eq!(par, pos - neg);
    }

    proptest! {
        #[test]
        fn radical_invariance(lo in 1u64..60, len in 1u64..40, n in 1u64..5000) {
            let x = ProgressionUnion::interval(lo, lo + len - 1).unwrap();
            let r = radical(n).unwrap();
            prop_assert_eq!(phi::<BigUint, _>(&x, n).unwrap(), phi::<BigUint, _>(&x, r).unwrap());
        }

        #[test]
        fn cardinality_decomposition(a in 1u64..30, b in 1u64..8, m in 1u64..25, n in 1u64..200) {
            let x = ProgressionUnion::progression(a, b, m).unwrap();
            let total_f: BigUint = (1..=m).map(|k| f_k::<BigUint, _>(&x, k).unwrap()).sum();
            prop_assert_eq!(f::<BigUint, _>(&x).unwrap(), total_f);
            let total_phi: BigUint = (1..=m).map(|k| phi_k::<BigUint, _>(&x, n, k).unwrap()).sum();
            prop_assert_eq!(phi::<BigUint, _>(&x, n).unwrap(), total_phi);
        }

        #[test]
        fn trivial_modulus(a in 1u64..30, b in 1u64..8, m in 1u64..25, k in 1u64..30) {
            let x = ProgressionUnion::progression(a, b, m).unwrap();
            prop_assert_eq!(phi::<BigUint, _>(&x, 1).unwrap(), power_of_two_minus_one::<BigUint>(m).unwrap());
            prop_assert_eq!(phi_k::<BigUint, _>(&x, 1, k).unwrap(), binomial::<BigUint>(m, k).unwrap());
        }
    }
}
