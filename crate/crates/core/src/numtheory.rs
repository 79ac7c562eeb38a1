//! Elementary number theory: Möbius values, divisors, modular inverses and
//! primorials.

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{domain, Result};

/// μ(d) for every `1 <= d <= limit`, produced by a linear sieve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusTable {
    // index 0 is unused and holds 0
    values: Vec<i8>,
}

impl MoebiusTable {
    pub fn limit(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    /// μ(d). Panics if `d` is zero or beyond the sieved limit.
    pub fn get(&self, d: u64) -> i8 {
        assert!(
            d >= 1 && d <= self.limit(),
            "d = {d} outside sieved range 1..={}",
            self.limit()
        );
        self.values[d as usize]
    }

    pub fn values(&self) -> &[i8] {
        &self.values[1..]
    }

    /// `(d, μ(d))` for the squarefree `d` in `1..=limit`.
    pub fn squarefree(&self) -> impl Iterator<Item = (u64, i8)> + '_ {
        self.values
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &mu)| mu != 0)
            .map(|(d, &mu)| (d as u64, mu))
    }
}

/// Sieves μ over `1..=limit`.
pub fn moebius_sieve(limit: u64) -> Result<MoebiusTable> {
    if limit == 0 {
        return Err(domain("Möbius sieve limit must be at least 1"));
    }
    let n = usize::try_from(limit).map_err(|_| domain("sieve limit exceeds address space"))?;
    let mut values = vec![0i8; n + 1];
    let mut composite = vec![false; n + 1];
    let mut primes: Vec<usize> = Vec::new();
    values[1] = 1;
    for i in 2..=n {
        if !composite[i] {
            primes.push(i);
            values[i] = -1;
        }
        for &p in &primes {
            let Some(ip) = i.checked_mul(p).filter(|&ip| ip <= n) else {
                break;
            };
            composite[ip] = true;
            if i % p == 0 {
                values[ip] = 0;
                break;
            }
            values[ip] = -values[i];
        }
    }
    Ok(MoebiusTable { values })
}

/// Prime factorization by trial division, as `(p, e)` pairs in increasing `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// μ(n) from the factorization of `n`.
pub fn moebius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(domain("μ(0) is undefined"));
    }
    let factors = factorize(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if factors.len().is_multiple_of(2) { 1 } else { -1 })
}

/// Product of the distinct primes dividing `n`.
pub fn radical(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(domain("radical of 0 is undefined"));
    }
    Ok(factorize(n).iter().map(|&(p, _)| p).product())
}

/// Every divisor of a modulus paired with its Möbius value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorList {
    modulus: u64,
    entries: Vec<(u64, i8)>,
}

impl DivisorList {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Sorted `(d, μ(d))` pairs.
    pub fn entries(&self) -> &[(u64, i8)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries with μ(d) ≠ 0.
    pub fn squarefree(&self) -> impl Iterator<Item = (u64, i8)> + '_ {
        self.entries.iter().copied().filter(|&(_, mu)| mu != 0)
    }
}

pub fn divisors_with_mu(n: u64) -> Result<DivisorList> {
    if n == 0 {
        return Err(domain("divisors of 0 are not enumerable"));
    }
    // (divisor, number of distinct primes, squarefree)
    let mut acc: Vec<(u64, u32, bool)> = vec![(1, 0, true)];
    for (p, e) in factorize(n) {
        let mut next = Vec::with_capacity(acc.len() * (e as usize + 1));
        for &(d, omega, sqfree) in &acc {
            let mut pe = 1u64;
            for j in 0..=e {
                next.push((d * pe, omega + u32::from(j > 0), sqfree && j <= 1));
                pe *= p;
            }
        }
        acc = next;
    }
    let mut entries: Vec<(u64, i8)> = acc
        .into_iter()
        .map(|(d, omega, sqfree)| {
            let mu = match (sqfree, omega % 2) {
                (false, _) => 0,
                (true, 0) => 1,
                (true, _) => -1,
            };
            (d, mu)
        })
        .collect();
    entries.sort_unstable();
    Ok(DivisorList { modulus: n, entries })
}

/// Extended Euclid on signed integers: returns `(g, x, y)` with `a·x + b·y = g`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// The inverse of `b` modulo `d`, in `0..d`. Modulo 1 the answer is 0.
pub fn mod_inverse(b: i128, d: u64) -> Result<u64> {
    if d == 0 {
        return Err(domain("modulus must be positive"));
    }
    if d == 1 {
        return Ok(0);
    }
    let (g, x, _) = ext_gcd(b, i128::from(d));
    if g != 1 {
        return Err(domain(format!("{b} has no inverse modulo {d} (gcd {g})")));
    }
    Ok(x.rem_euclid(i128::from(d)) as u64)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// All primes `<= x`.
pub fn primes_up_to(x: u64) -> Vec<u64> {
    if x < 2 {
        return Vec::new();
    }
    let n = x as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(p, &is_prime)| is_prime.then_some(p as u64))
        .collect()
}

/// Product of all primes `<= x`; the squarefree kernel of `x!`.
pub fn primorial_up_to(x: u64) -> Result<BigUint> {
    if x == 0 {
        return Err(domain("primorial argument must be at least 1"));
    }
    Ok(primes_up_to(x).into_iter().map(BigUint::from).product())
}
