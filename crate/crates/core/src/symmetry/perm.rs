use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0..n-1}` acting on the right: `p.then(q)` applies `p`
/// first. Coordinates are 0-indexed internally and 1-indexed in text.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n as u8).collect(),
        }
    }

    /// From 0-indexed images.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        if n > 32 {
            return Err(Error::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|i| i as u8).collect(),
        })
    }

    /// From 1-indexed images `sigma(1), ..., sigma(n)`.
    pub fn from_one_based(images: &[usize]) -> Result<Perm> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("image 0 in 1-indexed list".into()));
        }
        Perm::from_images(images.iter().map(|i| i - 1).collect())
    }

    /// The transposition of two 0-indexed points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut p = Perm::identity(n);
        p.images.swap(a, b);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images().map(|i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm { images: inv }
    }

    /// Move bit `j` of `word` to bit `self(j)`.
    #[inline]
    pub fn permute_bits(&self, word: u32) -> u32 {
        let mut out = 0;
        let mut w = word;
        while w != 0 {
            let j = w.trailing_zeros();
            out |= 1 << self.images[j as usize];
            w &= w - 1;
        }
        out
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i != x as usize)
            .map(|(i, _)| i)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.one_based())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Byte-sliced lookup tables applying a fixed permutation to bit words.
#[derive(Clone)]
pub(crate) struct BitPermuter {
    tables: Vec<[u32; 256]>,
}

impl BitPermuter {
    pub(crate) fn new(p: &Perm) -> Self {
        let chunks = (p.degree() + 7) / 8;
        let tables = (0..chunks)
            .map(|c| {
                let mut t = [0u32; 256];
                for (b, slot) in t.iter_mut().enumerate() {
                    *slot = p.permute_bits(((b as u32) << (8 * c)) & mask_of(p.degree()));
                }
                t
            })
            .collect();
        BitPermuter { tables }
    }

    #[inline]
    pub(crate) fn apply(&self, w: u32) -> u32 {
        self.tables
            .iter()
            .enumerate()
            .fold(0, |acc, (c, t)| acc | t[((w >> (8 * c)) & 0xff) as usize])
    }
}

fn mask_of(n: usize) -> u32 {
    crate::hamming::mask(n)
}
