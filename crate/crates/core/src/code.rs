//! Immutable binary codes and the operations that derive new codes from old
//! ones (projection, puncturing, translation).

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamming::{lex_key, mask, Vertex, MAX_LENGTH};

/// A deduplicated set of equal-length vertices, sorted lexicographically by
/// their text form (coordinate 1 most significant).
#[derive(Clone)]
pub struct Code {
    length: usize,
    words: Vec<u32>,
    min_distance: Option<usize>,
    member: Vec<u64>,
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.length == other.length && self.words == other.words
    }
}

impl Eq for Code {}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Code")
            .field("length", &self.length)
            .field("size", &self.words.len())
            .field("min_distance", &self.min_distance)
            .finish()
    }
}

impl Code {
    pub fn new(length: usize, words: impl IntoIterator<Item = Vertex>) -> Result<Code> {
        let mut raw = Vec::new();
        for w in words {
            if w.len() != length {
                return Err(Error::LengthMismatch {
                    expected: length,
                    found: w.len(),
                });
            }
            raw.push(w.bits());
        }
        Code::from_bits(length, raw)
    }

    /// Builds a code from raw bit words, checking that each fits in `length` bits.
    pub fn from_bits(length: usize, words: impl IntoIterator<Item = u32>) -> Result<Code> {
        if length == 0 || length > MAX_LENGTH {
            return Err(Error::UnsupportedLength(length));
        }
        let mut words: Vec<u32> = words.into_iter().collect();
        if let Some(&bad) = words.iter().find(|&&w| w & !mask(length) != 0) {
            return Err(Error::BitsOutOfRange { length, bits: bad });
        }
        words.sort_unstable_by_key(|&w| lex_key(w));
        words.dedup();
        let min_distance = exhaustive_min_distance(&words);
        Ok(Code::assemble(length, words, min_distance))
    }

    /// `words` must already be sorted, deduplicated and in range.
    fn assemble(length: usize, words: Vec<u32>, min_distance: Option<usize>) -> Code {
        let mut member = vec![0u64; ((1usize << length) + 63) / 64];
        for &w in &words {
            member[(w >> 6) as usize] |= 1 << (w & 63);
        }
        Code {
            length,
            words,
            min_distance,
            member,
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Number of codewords.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Minimum distance; `None` when the code has fewer than two words.
    pub fn min_distance(&self) -> Option<usize> {
        self.min_distance
    }

    pub fn bits(&self) -> &[u32] {
        &self.words
    }

    pub fn words(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words.iter().map(move |&w| Vertex::from_raw(self.length, w))
    }

    pub fn word(&self, index: usize) -> Vertex {
        Vertex::from_raw(self.length, self.words[index])
    }

    #[inline]
    pub fn contains_bits(&self, w: u32) -> bool {
        w <= mask(self.length) && self.member[(w >> 6) as usize] >> (w & 63) & 1 == 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.len() == self.length && self.contains_bits(v.bits())
    }

    pub fn has_zero(&self) -> bool {
        self.contains_bits(0)
    }

    /// Number of codewords of each weight `0..=m`.
    pub fn weight_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.length + 1];
        for &w in &self.words {
            hist[w.count_ones() as usize] += 1;
        }
        hist
    }

    /// The codewords of weight exactly `k`.
    pub fn of_weight(&self, k: usize) -> Code {
        let words: Vec<u32> = self
            .words
            .iter()
            .copied()
            .filter(|w| w.count_ones() as usize == k)
            .collect();
        let d = exhaustive_min_distance(&words);
        Code::assemble(self.length, words, d)
    }

    /// True when every sum of two codewords is a codeword and 0 is present.
    pub fn is_linear(&self) -> bool {
        self.has_zero()
            && self.words.iter().enumerate().all(|(i, &a)| {
                self.words[i + 1..]
                    .iter()
                    .all(|&b| self.contains_bits(a ^ b))
            })
    }

    pub fn is_even(&self) -> bool {
        self.words.iter().all(|w| w.count_ones() % 2 == 0)
    }

    pub fn is_antipodal(&self) -> bool {
        let full = mask(self.length);
        self.words.iter().all(|&w| self.contains_bits(w ^ full))
    }

    pub fn predicates(&self) -> CodePredicates {
        CodePredicates {
            is_linear: self.is_linear(),
            is_even: self.is_even(),
            is_antipodal: self.is_antipodal(),
            min_distance: self.min_distance,
            weight_histogram: self.weight_histogram(),
        }
    }

    /// Translate by a raw word; minimum distance carries over unchanged.
    pub(crate) fn translate_bits(&self, beta: u32) -> Code {
        let mut words: Vec<u32> = self.words.iter().map(|&w| w ^ beta).collect();
        words.sort_unstable_by_key(|&w| lex_key(w));
        Code::assemble(self.length, words, self.min_distance)
    }

    /// Replace the word at `index` by `replacement`. Used for mutation tests.
    pub fn with_word_replaced(&self, index: usize, replacement: Vertex) -> Result<Code> {
        let mut words = self.words.clone();
        words[index] = replacement.bits();
        Code::from_bits(self.length, words)
    }

    /// Text form: `m=<length>` then one 0/1 string per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("m={}\n", self.length);
        for w in self.words() {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Code> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty());
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::Parse("missing \"m=<length>\" header".into()))?;
        let length: usize = header
            .strip_prefix("m=")
            .and_then(|n| n.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
        if length == 0 || length > MAX_LENGTH {
            return Err(Error::Parse(format!("unsupported length {length}")));
        }
        let mut words = Vec::new();
        for (lineno, line) in lines {
            if line.len() != length {
                return Err(Error::Parse(format!(
                    "line {}: expected {} symbols, found {}",
                    lineno + 1,
                    length,
                    line.len()
                )));
            }
            let v: Vertex = line
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
            words.push(v);
        }
        Code::new(length, words)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Code> {
        Code::parse_text(&fs::read_to_string(path)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_text())?;
        Ok(())
    }
}

fn exhaustive_min_distance(words: &[u32]) -> Option<usize> {
    let mut best: Option<u32> = None;
    for (i, &a) in words.iter().enumerate() {
        for &b in &words[i + 1..] {
            let d = (a ^ b).count_ones();
            if best.map_or(true, |m| d < m) {
                best = Some(d);
            }
        }
    }
    best.map(|d| d as usize)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodePredicates {
    pub is_linear: bool,
    pub is_even: bool,
    pub is_antipodal: bool,
    pub min_distance: Option<usize>,
    pub weight_histogram: Vec<usize>,
}

pub fn code_predicates(c: &Code) -> CodePredicates {
    c.predicates()
}

/// An ordered coordinate subset `J` of `{1..m}` defining the map `pi_J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionSpec {
    source_length: usize,
    coords: Vec<usize>,
}

impl ProjectionSpec {
    pub fn new(source_length: usize, coords: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut coords: Vec<usize> = coords.into_iter().collect();
        coords.sort_unstable();
        coords.dedup();
        if coords.is_empty() {
            return Err(Error::InvalidProjection("empty coordinate set".into()));
        }
        if let Some(&c) = coords.iter().find(|&&c| c == 0 || c > source_length) {
            return Err(Error::CoordinateOutOfRange {
                coord: c,
                length: source_length,
            });
        }
        Ok(ProjectionSpec {
            source_length,
            coords,
        })
    }

    /// All coordinates except `p`.
    pub fn without(source_length: usize, p: usize) -> Result<Self> {
        if p == 0 || p > source_length {
            return Err(Error::CoordinateOutOfRange {
                coord: p,
                length: source_length,
            });
        }
        ProjectionSpec::new(source_length, (1..=source_length).filter(|&i| i != p))
    }

    pub fn source_length(&self) -> usize {
        self.source_length
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn target_length(&self) -> usize {
        self.coords.len()
    }

    pub fn contains(&self, coord: usize) -> bool {
        self.coords.binary_search(&coord).is_ok()
    }

    #[inline]
    pub(crate) fn apply_bits(&self, w: u32) -> u32 {
        self.coords
            .iter()
            .enumerate()
            .fold(0, |acc, (pos, &c)| acc | ((w >> (c - 1)) & 1) << pos)
    }

    pub fn apply(&self, v: Vertex) -> Result<Vertex> {
        if v.len() != self.source_length {
            return Err(Error::LengthMismatch {
                expected: self.source_length,
                found: v.len(),
            });
        }
        Ok(Vertex::from_raw(self.target_length(), self.apply_bits(v.bits())))
    }
}

pub fn project(c: &Code, spec: &ProjectionSpec) -> Result<Code> {
    if c.length() != spec.source_length {
        return Err(Error::LengthMismatch {
            expected: spec.source_length,
            found: c.length(),
        });
    }
    Code::from_bits(
        spec.target_length(),
        c.bits().iter().map(|&w| spec.apply_bits(w)),
    )
}

/// Delete coordinate `p` (1-indexed) from every codeword.
pub fn puncture(c: &Code, p: usize) -> Result<Code> {
    if c.length() < 2 {
        return Err(Error::UnsupportedLength(0));
    }
    project(c, &ProjectionSpec::without(c.length(), p)?)
}

pub fn translate(c: &Code, beta: Vertex) -> Result<Code> {
    if beta.len() != c.length() {
        return Err(Error::LengthMismatch {
            expected: c.length(),
            found: beta.len(),
        });
    }
    Ok(c.translate_bits(beta.bits()))
}
