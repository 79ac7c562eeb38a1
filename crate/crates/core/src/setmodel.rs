//! Ground sets built from finite arithmetic progressions, and the kernel
//! `|X_d| = #{x ∈ X : d | x}` that every Möbius sum in this crate consumes.
//!
//! The textual form accepted by [`parse_set_spec`] is
//!
//! ```text
//! union := part ('+' part)*
//! part  := INT '..' INT            (closed interval)
//!        | 'ap' '(' INT ',' INT ',' INT ')'   (first, step, length)
//! ```
//!
//! with unsigned decimal integers and insignificant whitespace, e.g.
//! `1..4 + ap(7,3,5)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::numtheory::{gcd, mod_inverse};

/// Default element cap for [`enumerate_elements`].
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// Anything that can report how many of its elements a given `d` divides.
pub trait DivisibilityKernel: Sync {
    /// Number of elements.
    fn cardinality(&self) -> u64;

    /// Largest element.
    fn max_element(&self) -> u64;

    /// `|X_d|` for `d >= 1`.
    fn multiples(&self, d: u64) -> u64;
}

/// `{first, first + step, ..., first + (length - 1)·step}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Progression {
    first: u64,
    step: u64,
    length: u64,
}

impl Progression {
    pub fn new(first: u64, step: u64, length: u64) -> Result<Self> {
        if first == 0 || step == 0 || length == 0 {
            return Err(domain(format!(
                "progression ap({first},{step},{length}) needs first, step and length >= 1"
            )));
        }
        (length - 1)
            .checked_mul(step)
            .and_then(|span| span.checked_add(first))
            .ok_or_else(|| domain(format!("ap({first},{step},{length}) exceeds u64")))?;
        Ok(Self { first, step, length })
    }

    /// The closed interval `[lo, hi]` as a step-1 progression.
    pub fn interval(lo: u64, hi: u64) -> Result<Self> {
        if lo > hi {
            return Err(domain(format!("empty interval {lo}..{hi}")));
        }
        Self::new(lo, 1, hi - lo + 1)
    }

    pub fn first(&self) -> u64 {
        self.first
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    pub fn length(&self) -> u64 {
        self.length
    }

    pub fn last(&self) -> u64 {
        self.first + (self.length - 1) * self.step
    }

    pub fn is_interval(&self) -> bool {
        self.step == 1
    }

    pub fn contains(&self, x: u64) -> bool {
        x >= self.first && x <= self.last() && (x - self.first).is_multiple_of(self.step)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> {
        let (first, step) = (self.first, self.step);
        (0..self.length).map(move |i| first + i * step)
    }

    /// Smallest common element of two progressions, if any.
    pub fn first_common_element(&self, other: &Progression) -> Option<u64> {
        let lo = self.first.max(other.first);
        let hi = self.last().min(other.last());
        if lo > hi {
            return None;
        }
        let (a1, b1) = (i128::from(self.first), i128::from(self.step));
        let (a2, b2) = (i128::from(other.first), i128::from(other.step));
        let g = i128::from(gcd(self.step, other.step));
        let diff = a2 - a1;
        if diff.rem_euclid(g) != 0 {
            return None;
        }
        // x = a1 + b1·t with (b1/g)·t ≡ diff/g (mod b2/g)
        let modulus = b2 / g;
        let inv = i128::from(mod_inverse(b1 / g % modulus, modulus as u64).ok()?);
        let t0 = (diff / g).rem_euclid(modulus) * inv % modulus;
        let x0 = a1 + b1 * t0;
        let period = b1 * modulus;
        let lo = i128::from(lo);
        let x = if x0 >= lo {
            x0
        } else {
            x0 + (lo - x0 + period - 1) / period * period
        };
        (x <= i128::from(hi)).then_some(x as u64)
    }
}

impl DivisibilityKernel for Progression {
    fn cardinality(&self) -> u64 {
        self.length
    }

    fn max_element(&self) -> u64 {
        self.last()
    }

    fn multiples(&self, d: u64) -> u64 {
        debug_assert!(d >= 1);
        let k = gcd(d, self.step);
        if !self.first.is_multiple_of(k) {
            return 0;
        }
        let window = d / k;
        if window == 1 {
            return self.length;
        }
        // index x solves (step/k)·x ≡ -(first/k) (mod d/k)
        let inv = mod_inverse(i128::from((self.step / k) % window), window)
            .expect("step/k is invertible modulo d/k");
        let neg_a = (window - (self.first / k) % window) % window;
        let x0 = (u128::from(neg_a) * u128::from(inv) % u128::from(window)) as u64;
        if x0 > self.length - 1 {
            0
        } else {
            (self.length - 1 - x0) / window + 1
        }
    }
}

impl fmt::Display for Progression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_interval() {
            write!(f, "{}..{}", self.first, self.last())
        } else {
            write!(f, "ap({},{},{})", self.first, self.step, self.length)
        }
    }
}

/// Count of elements of `p` divisible by `d`.
pub fn count_ap_multiples(p: &Progression, d: u64) -> Result<u64> {
    if d == 0 {
        return Err(domain("divisor must be positive"));
    }
    Ok(p.multiples(d))
}

/// `⌊hi/d⌋ − ⌊(lo−1)/d⌋`.
pub fn count_interval_multiples(lo: u64, hi: u64, d: u64) -> Result<u64> {
    if d == 0 {
        return Err(domain("divisor must be positive"));
    }
    if lo == 0 || lo > hi {
        return Err(domain(format!("invalid interval {lo}..{hi}")));
    }
    Ok(hi / d - (lo - 1) / d)
}

/// A nonempty union of pairwise disjoint progressions, sorted by first element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProgressionUnion {
    parts: Vec<Progression>,
}

impl ProgressionUnion {
    pub fn parts(&self) -> &[Progression] {
        &self.parts
    }

    pub fn interval(lo: u64, hi: u64) -> Result<Self> {
        validate_union(vec![Progression::interval(lo, hi)?])
    }

    pub fn progression(first: u64, step: u64, length: u64) -> Result<Self> {
        validate_union(vec![Progression::new(first, step, length)?])
    }
}

impl DivisibilityKernel for ProgressionUnion {
    fn cardinality(&self) -> u64 {
        self.parts.iter().map(|p| p.length).sum()
    }

    fn max_element(&self) -> u64 {
        self.parts.iter().map(Progression::last).max().unwrap_or(0)
    }

    fn multiples(&self, d: u64) -> u64 {
        self.parts.iter().map(|p| p.multiples(d)).sum()
    }
}

impl fmt::Display for ProgressionUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for ProgressionUnion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_set_spec(s)
    }
}

/// Sum of per-part multiple counts.
pub fn union_multiples(x: &ProgressionUnion, d: u64) -> Result<u64> {
    if d == 0 {
        return Err(domain("divisor must be positive"));
    }
    Ok(x.multiples(d))
}

/// Checks pairwise disjointness and sorts the parts.
///
/// On overlap, [`Error::Overlap`] names the offending parts by their
/// 1-based position in `parts` together with their smallest shared element.
pub fn validate_union(parts: Vec<Progression>) -> Result<ProgressionUnion> {
    if parts.is_empty() {
        return Err(domain("a set needs at least one part"));
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if let Some(witness) = parts[i].first_common_element(&parts[j]) {
                return Err(Error::Overlap {
                    first: i + 1,
                    second: j + 1,
                    witness,
                });
            }
        }
    }
    let mut parts = parts;
    parts.sort_by_key(|p| (p.first, p.step));
    Ok(ProgressionUnion { parts })
}

/// Sorted elements of `x`, refusing sets larger than `cap`.
pub fn enumerate_elements(x: &ProgressionUnion, cap: usize) -> Result<Vec<u64>> {
    let size = x.cardinality();
    if size > cap as u64 {
        return Err(Error::Resource(format!(
            "set has {size} elements, enumeration cap is {cap}"
        )));
    }
    let mut out: Vec<u64> = x.parts.iter().flat_map(Progression::iter).collect();
    out.sort_unstable();
    Ok(out)
}

/// Parses the textual set grammar and validates the resulting union.
pub fn parse_set_spec(input: &str) -> Result<ProgressionUnion> {
    let mut parser = Parser { src: input.as_bytes(), pos: 0 };
    let mut parts = vec![parser.part()?];
    loop {
        parser.skip_ws();
        if parser.at_end() {
            break;
        }
        parser.expect(b'+')?;
        parts.push(parser.part()?);
    }
    validate_union(parts)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => Err(self.error(format!("expected '{}', found '{}'", c as char, got as char))),
            None => Err(self.error(format!("expected '{}', found end of input", c as char))),
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| Error::Parse {
            offset: start,
            message: format!("integer {digits} does not fit in 64 bits"),
        })
    }

    fn part(&mut self) -> Result<Progression> {
        match self.peek() {
            Some(b'a') => {
                if !self.src[self.pos..].starts_with(b"ap") {
                    return Err(self.error("expected 'ap('"));
                }
                self.pos += 2;
                self.expect(b'(')?;
                let a = self.number()?;
                self.expect(b',')?;
                let b = self.number()?;
                self.expect(b',')?;
                let m = self.number()?;
                self.expect(b')')?;
                Progression::new(a, b, m)
            }
            Some(c) if c.is_ascii_digit() => {
                let lo = self.number()?;
                self.skip_ws();
                if !self.src[self.pos..].starts_with(b"..") {
                    return Err(self.error("expected '..'"));
                }
                self.pos += 2;
                let hi = self.number()?;
                Progression::interval(lo, hi)
            }
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
            None => Err(self.error("expected a set part, found end of input")),
        }
    }
}
