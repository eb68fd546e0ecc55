//! Vertices of the binary Hamming graph and Krawtchouk polynomials.
//!
//! A vertex of length `m` lives in the low `m` bits of a `u32`; coordinate
//! `i` (1-indexed) is bit `i - 1`. The text form writes coordinate 1 first.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Longest supported vertex.
pub const MAX_LENGTH: usize = 24;

#[inline]
pub(crate) fn mask(length: usize) -> u32 {
    if length >= 32 {
        u32::MAX
    } else {
        (1u32 << length) - 1
    }
}

/// A vertex of the binary Hamming graph of some length `m <= 24`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    // order of fields matters for the derived Ord: length first, then bits
    len: u8,
    bits: u32,
}

impl Vertex {
    pub fn new(length: usize, bits: u32) -> Result<Self> {
        check_length(length)?;
        if bits & !mask(length) != 0 {
            return Err(Error::BitsOutOfRange { length, bits });
        }
        Ok(Vertex {
            len: length as u8,
            bits,
        })
    }

    /// Caller guarantees `length <= 24` and that `bits` fits.
    #[inline]
    pub(crate) fn from_raw(length: usize, bits: u32) -> Self {
        debug_assert!(length <= MAX_LENGTH && bits & !mask(length) == 0);
        Vertex {
            len: length as u8,
            bits,
        }
    }

    pub fn zero(length: usize) -> Result<Self> {
        Vertex::new(length, 0)
    }

    pub fn ones(length: usize) -> Result<Self> {
        check_length(length)?;
        Ok(Vertex::from_raw(length, mask(length)))
    }

    /// Builds a vertex from a 1-indexed support set.
    pub fn from_support(length: usize, support: &[usize]) -> Result<Self> {
        check_length(length)?;
        let mut bits = 0u32;
        for &i in support {
            if i == 0 || i > length {
                return Err(Error::CoordinateOutOfRange { coord: i, length });
            }
            bits |= 1 << (i - 1);
        }
        Ok(Vertex::from_raw(length, bits))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Value of coordinate `i` (1-indexed).
    pub fn coord(self, i: usize) -> bool {
        i >= 1 && i <= self.len() && self.bits >> (i - 1) & 1 == 1
    }

    /// Support as sorted 1-indexed coordinates.
    pub fn support(self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.coord(i)).collect()
    }

    #[inline]
    pub fn weight(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn complement(self) -> Vertex {
        Vertex::from_raw(self.len(), !self.bits & mask(self.len()))
    }

    /// Coordinatewise sum mod 2.
    pub fn add(self, other: Vertex) -> Result<Vertex> {
        same_length(self, other)?;
        Ok(Vertex::from_raw(self.len(), self.bits ^ other.bits))
    }

    pub fn distance(self, other: Vertex) -> Result<usize> {
        same_length(self, other)?;
        Ok((self.bits ^ other.bits).count_ones() as usize)
    }

    /// `self` is covered by `beta` when every nonzero coordinate of `self`
    /// is also nonzero in `beta`.
    pub fn covered_by(self, beta: Vertex) -> Result<bool> {
        same_length(self, beta)?;
        Ok(self.bits & !beta.bits == 0)
    }
}

pub fn weight(v: Vertex) -> usize {
    v.weight()
}

pub fn distance(u: Vertex, v: Vertex) -> Result<usize> {
    u.distance(v)
}

pub fn covers(nu: Vertex, beta: Vertex) -> Result<bool> {
    nu.covered_by(beta)
}

fn check_length(length: usize) -> Result<()> {
    if length == 0 || length > MAX_LENGTH {
        Err(Error::UnsupportedLength(length))
    } else {
        Ok(())
    }
}

fn same_length(u: Vertex, v: Vertex) -> Result<()> {
    if u.len != v.len {
        Err(Error::LengthMismatch {
            expected: u.len(),
            found: v.len(),
        })
    } else {
        Ok(())
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            f.write_str(if self.coord(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex({self})")
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        check_length(s.len()).map_err(|_| Error::Parse(format!("bad vertex length {}", s.len())))?;
        let mut bits = 0u32;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(Error::Parse(format!("invalid character {ch:?} in vertex"))),
            }
        }
        Ok(Vertex::from_raw(s.len(), bits))
    }
}

/// Sort key placing words in lexicographic order of their text form.
#[inline]
pub(crate) fn lex_key(w: u32) -> u32 {
    w.reverse_bits()
}

/// Next larger word with the same popcount (Gosper's hack).
#[inline]
pub(crate) fn next_same_weight(x: u32) -> u32 {
    let c = x & x.wrapping_neg();
    let r = x.wrapping_add(c);
    (((r ^ x) >> 2) / c) | r
}

/// All words of length `m` and weight `k`, in increasing numeric order.
pub(crate) fn weight_class(m: usize, k: usize) -> impl Iterator<Item = u32> {
    let first: Option<u32> = if k > m {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(mask(k))
    };
    let limit = mask(m);
    let mut cur = first;
    std::iter::from_fn(move || {
        let x = cur?;
        cur = if x == 0 || x == limit {
            None
        } else {
            let n = next_same_weight(x);
            (n <= limit).then_some(n)
        };
        Some(x)
    })
}

/// Vertices at distance exactly `k` from `center`.
///
/// Output is in lexicographic order of the text form.
pub fn sphere(center: Vertex, k: usize) -> Result<impl Iterator<Item = Vertex>> {
    let m = center.len();
    if k > m {
        return Err(Error::RadiusOutOfRange { radius: k, length: m });
    }
    let mut out: Vec<u32> = weight_class(m, k).map(|v| v ^ center.bits).collect();
    out.sort_unstable_by_key(|&w| lex_key(w));
    Ok(out.into_iter().map(move |b| Vertex::from_raw(m, b)))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `K_k(x) = sum_j (-1)^j C(x, j) C(m - x, k - j)`, evaluated exactly.
pub fn krawtchouk(m: usize, k: usize, x: usize) -> Result<BigInt> {
    if k > m || x > m {
        return Err(Error::KrawtchoukArgs { m, k, x });
    }
    let mut sum = BigInt::zero();
    for j in 0..=k {
        let term = binomial(x, j) * binomial(m - x, k - j);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// Memoized `(m+1) x (m+1)` table of Krawtchouk values, row `k`, column `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrawtchoukTable {
    m: usize,
    values: Vec<Vec<BigInt>>,
}

impl KrawtchoukTable {
    pub fn new(m: usize) -> Self {
        let values = (0..=m)
            .map(|k| {
                (0..=m)
                    .map(|x| krawtchouk(m, k, x).expect("arguments in range"))
                    .collect()
            })
            .collect();
        KrawtchoukTable { m, values }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, k: usize, x: usize) -> &BigInt {
        &self.values[k][x]
    }

    pub fn row(&self, k: usize) -> &[BigInt] {
        &self.values[k]
    }
}
