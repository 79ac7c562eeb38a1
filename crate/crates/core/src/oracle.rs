//! Brute-force reference counts, computed straight from the definitions.
//!
//! Nothing here touches Möbius values, binomials or `|X_d|`. Subsets are
//! visited by a binary counter over the sorted element list and tuples by
//! nested enumeration; gcds are left folds that stop at 1.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::numtheory::gcd;
use crate::setmodel::{enumerate_elements, DivisibilityKernel, ProgressionUnion};
use crate::shonhiwa::{TupleOrdering, TupleQuery};
use crate::Count;

/// Limits checked before any enumeration starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest `|X|` whose `2^|X|` subsets may be visited.
    pub max_set_size: u64,
    /// Largest number of tuples that may be visited.
    pub max_tuple_space: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_set_size: 22,
            max_tuple_space: 10_000_000,
        }
    }
}

/// Nonempty subset counts bucketed by size: `coprime[k]` counts k-subsets
/// with gcd 1, `coprime_to_n[k]` those with `gcd(A ∪ {n}) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetTally {
    pub coprime: Vec<u64>,
    pub coprime_to_n: Vec<u64>,
}

impl SubsetTally {
    pub fn total_coprime(&self) -> u64 {
        self.coprime.iter().sum()
    }

    pub fn total_coprime_to_n(&self) -> u64 {
        self.coprime_to_n.iter().sum()
    }
}

fn fold_gcd(init: u64, items: impl Iterator<Item = u64>) -> u64 {
    let mut g = init;
    for x in items {
        g = gcd(g, x);
        if g == 1 {
            break;
        }
    }
    g
}

/// One pass over every nonempty subset of `X`, tallying both gcd conditions.
pub fn tally_subsets(x: &ProgressionUnion, n: u64, budget: &OracleBudget) -> Result<SubsetTally> {
    let size = x.cardinality();
    if size > budget.max_set_size || size >= 64 {
        return Err(Error::Resource(format!(
            "|X| = {size} exceeds the oracle's subset budget of {}",
            budget.max_set_size
        )));
    }
    let elems = enumerate_elements(x, size as usize)?;
    let mut coprime = vec![0u64; elems.len() + 1];
    let mut coprime_to_n = vec![0u64; elems.len() + 1];
    for mask in 1u64..(1u64 << elems.len()) {
        let members = || {
            elems
                .iter()
                .enumerate()
                .filter(move |(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
        };
        let k = mask.count_ones() as usize;
        // gcd(0, x) = x, so 0 is the neutral start
        let g = fold_gcd(0, members());
        if g == 1 {
            coprime[k] += 1;
            coprime_to_n[k] += 1;
        } else if gcd(g, n) == 1 {
            coprime_to_n[k] += 1;
        }
    }
    Ok(SubsetTally {
        coprime,
        coprime_to_n,
    })
}

fn at(v: &[u64], k: u64) -> Count {
    BigUint::from(v.get(k as usize).copied().unwrap_or(0))
}

pub fn brute_f(x: &ProgressionUnion, budget: &OracleBudget) -> Result<Count> {
    Ok(tally_subsets(x, 1, budget)?.total_coprime().into())
}

pub fn brute_f_k(x: &ProgressionUnion, k: u64, budget: &OracleBudget) -> Result<Count> {
    Ok(at(&tally_subsets(x, 1, budget)?.coprime, k))
}

pub fn brute_phi(x: &ProgressionUnion, n: u64, budget: &OracleBudget) -> Result<Count> {
    Ok(tally_subsets(x, n, budget)?.total_coprime_to_n().into())
}

pub fn brute_phi_k(x: &ProgressionUnion, n: u64, k: u64, budget: &OracleBudget) -> Result<Count> {
    Ok(at(&tally_subsets(x, n, budget)?.coprime_to_n, k))
}

fn tuple_space(q: &TupleQuery, ordering: TupleOrdering) -> u128 {
    let (n, k) = (u128::from(q.n), u128::from(q.k));
    match ordering {
        TupleOrdering::Ordered => (0..k).fold(1u128, |acc, _| acc.saturating_mul(n)),
        // C(n + k - 1, k) and C(n, k), saturating
        TupleOrdering::Nondecreasing => choose_saturating(n + k - 1, k),
        TupleOrdering::Strict => choose_saturating(n, k),
    }
}

fn choose_saturating(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let j = k.min(n - k);
    let mut acc = 1u128;
    for i in 1..=j {
        acc = match acc.checked_mul(n - j + i) {
            Some(v) => v / i,
            None => return u128::MAX,
        };
    }
    acc
}

/// Enumerates tuples `(a₁, …, a_k)` over `[1, n]` in the given ordering and
/// counts those with `gcd(a₁, …, a_k, m) = 1` (or `gcd(a₁, …, a_k) = 1`
/// without `m`).
pub fn brute_tuples(q: &TupleQuery, ordering: TupleOrdering, budget: &OracleBudget) -> Result<Count> {
    let space = tuple_space(q, ordering);
    if space > u128::from(budget.max_tuple_space) {
        return Err(Error::Resource(format!(
            "{space} {ordering} tuples exceed the oracle's tuple budget of {}",
            budget.max_tuple_space
        )));
    }
    let mut tuple = Vec::with_capacity(q.k as usize);
    let mut count = 0u64;
    extend(&mut tuple, q, ordering, &mut count);
    Ok(BigUint::from(count))
}

fn extend(tuple: &mut Vec<u64>, q: &TupleQuery, ordering: TupleOrdering, count: &mut u64) {
    if tuple.len() == q.k as usize {
        // gcd(0, x) = x, so an absent modulus starts the fold at 0
        if fold_gcd(q.m.unwrap_or(0), tuple.iter().copied()) == 1 {
            *count += 1;
        }
        return;
    }
    let lowest = match (ordering, tuple.last()) {
        (TupleOrdering::Ordered, _) | (_, None) => 1,
        (TupleOrdering::Nondecreasing, Some(&prev)) => prev,
        (TupleOrdering::Strict, Some(&prev)) => prev + 1,
    };
    for a in lowest..=q.n {
        tuple.push(a);
        extend(tuple, q, ordering, count);
        tuple.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setmodel::parse_set_spec;

    fn set(s: &str) -> ProgressionUnion {
        parse_set_spec(s).unwrap()
    }

    fn q(n: u64, k: u64, m: Option<u64>) -> TupleQuery {
        TupleQuery::new(n, k, m).unwrap()
    }

    #[test]
    fn subset_examples() {
        let b = OracleBudget::default();
        assert_eq!(brute_f(&set("1..3"), &b).unwrap(), 5u32.into());
        assert_eq!(brute_f(&set("6..6"), &b).unwrap(), 0u32.into());
        assert_eq!(brute_f_k(&set("1..2"), 2, &b).unwrap(), 1u32.into());
        assert_eq!(brute_f_k(&set("1..2"), 7, &b).unwrap(), 0u32.into());
        assert_eq!(brute_phi(&set("1..2 + 5..6"), 6, &b).unwrap(), 12u32.into());
        assert_eq!(brute_phi(&set("ap(3,5,7)"), 1, &b).unwrap(), 127u32.into());
        assert_eq!(brute_phi(&set("ap(2,2,2)"), 4, &b).unwrap(), 0u32.into());
        assert_eq!(brute_phi_k(&set("1..6"), 6, 1, &b).unwrap(), 2u32.into());
    }

    #[test]
    fn tuple_examples() {
        let b = OracleBudget::default();
        assert_eq!(brute_tuples(&q(3, 2, None), TupleOrdering::Ordered, &b).unwrap(), 7u32.into());
        assert_eq!(
            brute_tuples(&q(2, 2, None), TupleOrdering::Nondecreasing, &b).unwrap(),
            2u32.into()
        );
        assert_eq!(brute_tuples(&q(4, 2, Some(6)), TupleOrdering::Strict, &b).unwrap(), 5u32.into());
        assert_eq!(brute_tuples(&q(3, 5, Some(6)), TupleOrdering::Strict, &b).unwrap(), 0u32.into());
    }

    #[test]
    fn enumeration_visits_every_tuple() {
        // with m = 1 every tuple qualifies, so the count is the space size
        let b = OracleBudget::default();
        for n in 1..=6u64 {
            for k in 1..=4u64 {
                let ordered = brute_tuples(&q(n, k, Some(1)), TupleOrdering::Ordered, &b).unwrap();
                assert_eq!(ordered, BigUint::from(n.pow(k as u32)));
                let multi = brute_tuples(&q(n, k, Some(1)), TupleOrdering::Nondecreasing, &b).unwrap();
                assert_eq!(u128::from(u64::try_from(&multi).unwrap()), choose_saturating(u128::from(n + k - 1), u128::from(k)));
                let strict = brute_tuples(&q(n, k, Some(1)), TupleOrdering::Strict, &b).unwrap();
                assert_eq!(u128::from(u64::try_from(&strict).unwrap()), choose_saturating(u128::from(n), u128::from(k)));
            }
        }
    }

    #[test]
    fn budgets_are_enforced_up_front() {
        let tight = OracleBudget {
            max_set_size: 4,
            max_tuple_space: 100,
        };
        assert!(matches!(brute_f(&set("1..5"), &tight), Err(Error::Resource(_))));
        assert!(brute_f(&set("1..4"), &tight).is_ok());
        assert!(matches!(
            brute_tuples(&q(11, 2, None), TupleOrdering::Ordered, &tight),
            Err(Error::Resource(_))
        ));
        assert!(brute_tuples(&q(10, 2, None), TupleOrdering::Ordered, &tight).is_ok());
    }
}
