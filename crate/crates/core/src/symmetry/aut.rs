use std::fmt;
use std::str::FromStr;

use crate::code::{Code, ProjectionSpec};
use crate::error::{Error, Result};
use crate::hamming::Vertex;

use super::perm::{BitPermuter, Perm};

/// An element `g_beta sigma` of `Aut(Gamma_m)`: translate by `beta`, then move
/// coordinate `j` to position `sigma(j)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AutElement {
    m: usize,
    beta: u32,
    sigma: Perm,
}

impl AutElement {
    pub fn new(beta: Vertex, sigma: Perm) -> Result<Self> {
        if beta.len() != sigma.degree() {
            return Err(Error::LengthMismatch {
                expected: beta.len(),
                found: sigma.degree(),
            });
        }
        Ok(AutElement {
            m: beta.len(),
            beta: beta.bits(),
            sigma,
        })
    }

    pub(crate) fn from_parts(m: usize, beta: u32, sigma: Perm) -> Self {
        debug_assert_eq!(sigma.degree(), m);
        AutElement { m, beta, sigma }
    }

    pub fn identity(m: usize) -> Self {
        AutElement::from_parts(m, 0, Perm::identity(m))
    }

    pub fn translation(beta: Vertex) -> Self {
        AutElement::from_parts(beta.len(), beta.bits(), Perm::identity(beta.len()))
    }

    pub fn permutation(sigma: Perm) -> Self {
        AutElement::from_parts(sigma.degree(), 0, sigma)
    }

    pub fn length(&self) -> usize {
        self.m
    }

    pub fn beta(&self) -> Vertex {
        Vertex::from_raw(self.m, self.beta)
    }

    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    #[inline]
    pub(crate) fn act_bits(&self, w: u32) -> u32 {
        self.sigma.permute_bits(w ^ self.beta)
    }

    pub fn act(&self, v: Vertex) -> Result<Vertex> {
        if v.len() != self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                found: v.len(),
            });
        }
        Ok(Vertex::from_raw(self.m, self.act_bits(v.bits())))
    }

    /// `self` followed by `other`:
    /// `(b1, s1)(b2, s2) = (b1 + s1^-1(b2), s1 s2)`.
    pub fn then(&self, other: &AutElement) -> AutElement {
        let pulled_back = self.sigma.inverse().permute_bits(other.beta);
        AutElement::from_parts(self.m, self.beta ^ pulled_back, self.sigma.then(&other.sigma))
    }

    pub fn inverse(&self) -> AutElement {
        AutElement::from_parts(
            self.m,
            self.sigma.permute_bits(self.beta),
            self.sigma.inverse(),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.beta == 0 && self.sigma.is_identity()
    }

    /// True when the element maps `c` onto itself.
    pub fn stabilizes(&self, c: &Code) -> bool {
        c.length() == self.m && c.bits().iter().all(|&w| c.contains_bits(self.act_bits(w)))
    }

    /// True when the element maps `c` onto `target`.
    pub fn maps(&self, c: &Code, target: &Code) -> bool {
        c.length() == self.m
            && c.len() == target.len()
            && c.bits().iter().all(|&w| target.contains_bits(self.act_bits(w)))
    }

    pub fn apply_to_code(&self, c: &Code) -> Result<Code> {
        if c.length() != self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                found: c.length(),
            });
        }
        Code::from_bits(self.m, c.bits().iter().map(|&w| self.act_bits(w)))
    }

    pub(crate) fn fast(&self) -> FastAut {
        FastAut {
            beta: self.beta,
            table: BitPermuter::new(&self.sigma),
        }
    }
}

/// Table-driven action for bulk vertex scans.
#[derive(Clone)]
pub(crate) struct FastAut {
    beta: u32,
    table: BitPermuter,
}

impl FastAut {
    #[inline]
    pub(crate) fn apply(&self, w: u32) -> u32 {
        self.table.apply(w ^ self.beta)
    }
}

/// `mu`: the coordinate permutation of an automorphism.
pub fn permutation_part(x: &AutElement) -> Perm {
    x.sigma.clone()
}

pub fn act(x: &AutElement, v: Vertex) -> Result<Vertex> {
    x.act(v)
}

/// The induced action on `pi_J`-images of an element whose permutation
/// stabilizes `J` setwise.
pub fn project_automorphism(x: &AutElement, spec: &ProjectionSpec) -> Result<AutElement> {
    if spec.source_length() != x.m {
        return Err(Error::LengthMismatch {
            expected: x.m,
            found: spec.source_length(),
        });
    }
    let coords = spec.coords();
    let mut images = Vec::with_capacity(coords.len());
    for &c in coords {
        let target = x.sigma.apply(c - 1) + 1;
        let pos = coords
            .binary_search(&target)
            .map_err(|_| Error::MovesProjection)?;
        images.push(pos);
    }
    let sigma = Perm::from_images(images)?;
    Ok(AutElement::from_parts(
        spec.target_length(),
        spec.apply_bits(x.beta),
        sigma,
    ))
}

impl fmt::Debug for AutElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AutElement({self})")
    }
}

/// `beta=<0/1 string> sigma=<images of 1..m>`
impl fmt::Display for AutElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "beta={} sigma={}", self.beta(), self.sigma)
    }
}

impl FromStr for AutElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s
            .strip_prefix("beta=")
            .ok_or_else(|| Error::Parse(format!("expected beta=..., got {s:?}")))?;
        let (beta, sigma) = rest
            .split_once(" sigma=")
            .ok_or_else(|| Error::Parse("missing sigma=".into()))?;
        let beta: Vertex = beta.parse()?;
        let images: Vec<usize> = sigma
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad image {t:?}"))))
            .collect::<Result<_>>()?;
        AutElement::new(beta, Perm::from_one_based(&images)?)
    }
}

/// One element per line.
pub fn write_elements(elements: &[AutElement]) -> String {
    elements.iter().map(|e| format!("{e}\n")).collect()
}

pub fn parse_elements(text: &str) -> Result<Vec<AutElement>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(str::parse)
        .collect()
}
