//! The extended Golay code, its coset decomposition with respect to the first
//! eight coordinates, and the Nordstrom-Robinson code obtained from it.

use crate::code::{project, puncture, Code, ProjectionSpec};
use crate::error::{Error, Result};
use crate::hamming::{lex_key, Vertex};

/// Right half of the generator `[I | B]`: a border row of ones around the
/// cyclic shifts of the quadratic-residue pattern mod 11.
const QR_PATTERN: [u8; 11] = [1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0];

/// Generator rows of a [24,12,8] code before the octad is moved to the front.
pub fn golay_generator_rows() -> [u32; 12] {
    let mut rows = [0u32; 12];
    for (i, row) in rows.iter_mut().enumerate() {
        *row |= 1 << i;
        let right: Vec<u8> = if i == 0 {
            std::iter::once(0).chain([1; 11]).collect()
        } else {
            let r = i - 1;
            std::iter::once(1)
                .chain((0..11).map(|j| QR_PATTERN[(j + 11 - r) % 11]))
                .collect()
        };
        for (j, &b) in right.iter().enumerate() {
            *row |= (b as u32) << (12 + j);
        }
    }
    rows
}

/// All 2^k linear combinations of `rows`.
pub fn span(rows: &[u32]) -> Vec<u32> {
    let mut words = vec![0u32];
    for &r in rows {
        let extra: Vec<u32> = words.iter().map(|&w| w ^ r).collect();
        words.extend(extra);
    }
    words
}

/// The extended binary Golay code with `(1^8, 0^16)` as a codeword.
///
/// The span of the fixed generator is permuted so that the lexicographically
/// least octad occupies coordinates 1..8, keeping the relative order of the
/// moved coordinates and of the rest.
pub fn golay24() -> Code {
    let raw = span(&golay_generator_rows());
    let octad = raw
        .iter()
        .copied()
        .filter(|w| w.count_ones() == 8)
        .min_by_key(|&w| lex_key(w))
        .expect("generator span has weight-8 words");
    // new position of each old coordinate (0-indexed)
    let mut target = [0usize; 24];
    let (inside, outside): (Vec<usize>, Vec<usize>) = (0..24).partition(|&c| octad >> c & 1 == 1);
    for (pos, &c) in inside.iter().chain(outside.iter()).enumerate() {
        target[c] = pos;
    }
    let moved = raw.iter().map(|&w| {
        (0..24)
            .filter(|&c| w >> c & 1 == 1)
            .fold(0u32, |acc, c| acc | 1 << target[c])
    });
    Code::from_bits(24, moved).expect("24-bit words")
}

pub const JSTAR_MASK: u32 = 0xff;

/// Goethals' decomposition of the Golay code by intersection with `J* = {1..8}`.
#[derive(Debug, Clone)]
pub struct CosetDecomposition {
    pub golay: Code,
    /// Codewords with support disjoint from `J*`.
    pub d: Code,
    /// `reps[i - 1]` is the chosen codeword meeting `J*` in `{i, 8}`.
    pub reps: Vec<Vertex>,
    /// `u_0..u_7` in `F_2^8`: zero, then the vertices supported on `{i, 8}`.
    pub u_vectors: Vec<Vertex>,
    pub jstar: Vec<usize>,
    pub j: Vec<usize>,
}

fn pair_pattern(i: usize) -> u32 {
    (1 << (i - 1)) | (1 << 7)
}

pub fn coset_decomposition(g: &Code) -> Result<CosetDecomposition> {
    if g.length() != 24 || g.len() != 4096 || g.min_distance() != Some(8) {
        return Err(Error::NotGolay(format!(
            "length {}, {} words, minimum distance {:?}",
            g.length(),
            g.len(),
            g.min_distance()
        )));
    }
    if !g.has_zero() || !g.contains_bits(JSTAR_MASK) {
        return Err(Error::NotGolay("missing 0 or (1^8, 0^16)".into()));
    }
    let d = Code::from_bits(
        24,
        g.bits().iter().copied().filter(|w| w & JSTAR_MASK == 0),
    )?;
    let mut reps = Vec::with_capacity(7);
    for i in 1..=7 {
        // bits() is in lexicographic order, so the first hit is the least
        let rep = g
            .bits()
            .iter()
            .copied()
            .find(|w| w & JSTAR_MASK == pair_pattern(i))
            .ok_or(Error::MissingCosetRepresentative { i })?;
        reps.push(Vertex::from_raw(24, rep));
    }
    let u_vectors = std::iter::once(Vertex::from_raw(8, 0))
        .chain((1..=7).map(|i| Vertex::from_raw(8, pair_pattern(i))))
        .collect();
    Ok(CosetDecomposition {
        golay: g.clone(),
        d,
        reps,
        u_vectors,
        jstar: (1..=8).collect(),
        j: (9..=24).collect(),
    })
}

impl CosetDecomposition {
    /// `D^i = reps[i] + D` for `i = 1..7`, `D^0 = D`.
    pub fn coset(&self, i: usize) -> Code {
        if i == 0 {
            self.d.clone()
        } else {
            crate::code::translate(&self.d, self.reps[i - 1]).expect("length 24")
        }
    }

    /// All Golay codewords meeting `J*` exactly in `{i, 8}` (or nowhere, for 0).
    pub fn coset_by_support(&self, i: usize) -> Code {
        let pattern = if i == 0 { 0 } else { pair_pattern(i) };
        Code::from_bits(
            24,
            self.golay
                .bits()
                .iter()
                .copied()
                .filter(|w| w & JSTAR_MASK == pattern),
        )
        .expect("24-bit words")
    }

    /// `B`, the union of the eight cosets.
    pub fn union_b(&self) -> Code {
        Code::from_bits(24, (0..8).flat_map(|i| self.coset(i).bits().to_vec())).expect("24-bit")
    }

    pub fn projection_j(&self) -> ProjectionSpec {
        ProjectionSpec::new(24, self.j.iter().copied()).expect("valid coordinates")
    }

    pub fn nordstrom_robinson(&self) -> Code {
        project(&self.union_b(), &self.projection_j()).expect("length 24")
    }

    pub fn reed_muller(&self) -> Code {
        project(&self.d, &self.projection_j()).expect("length 24")
    }

    /// `pi_J(reps[i])`, with index 0 the zero vector.
    pub fn projected_rep(&self, i: usize) -> Vertex {
        if i == 0 {
            Vertex::from_raw(16, 0)
        } else {
            self.projection_j().apply(self.reps[i - 1]).expect("length 24")
        }
    }

    /// Same construction with a different choice of coset representatives.
    pub fn with_reps(&self, reps: Vec<Vertex>) -> Result<CosetDecomposition> {
        if reps.len() != 7 {
            return Err(Error::NotGolay(format!("{} representatives", reps.len())));
        }
        for (k, r) in reps.iter().enumerate() {
            if !self.golay.contains(*r) || r.bits() & JSTAR_MASK != pair_pattern(k + 1) {
                return Err(Error::MissingCosetRepresentative { i: k + 1 });
            }
        }
        Ok(CosetDecomposition {
            reps,
            ..self.clone()
        })
    }
}

/// The (16, 256, 6) Nordstrom-Robinson code.
pub fn nordstrom_robinson() -> Code {
    standard_decomposition().nordstrom_robinson()
}

/// The [16, 5, 8] Reed-Muller code R(1,4) inside the Nordstrom-Robinson code.
pub fn reed_muller_subcode() -> Code {
    standard_decomposition().reed_muller()
}

/// The punctured Nordstrom-Robinson code with respect to coordinate `p`.
pub fn punctured_nordstrom_robinson(p: usize) -> Result<Code> {
    puncture(&nordstrom_robinson(), p)
}

pub fn standard_decomposition() -> CosetDecomposition {
    coset_decomposition(&golay24()).expect("golay24 satisfies its own postconditions")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::translate;

    #[test]
    fn golay_parameters() {
        let g = golay24();
        assert_eq!(g.len(), 4096);
        assert_eq!(g.min_distance(), Some(8));
        assert!(g.has_zero());
        assert!(g.contains_bits(JSTAR_MASK));
        let h = g.weight_histogram();
        // oracle: raw span of the generator before any permutation
        let mut raw = vec![0usize; 25];
        for w in span(&golay_generator_rows()) {
            raw[w.count_ones() as usize] += 1;
        }
        assert_eq!(h, raw);
        assert_eq!((h[8], h[12], h[16]), (759, 2576, 759));
        assert!(g.is_linear());
    }

    #[test]
    fn construction_is_deterministic() {
        assert_eq!(golay24().bits(), golay24().bits());
        assert_eq!(nordstrom_robinson().bits(), nordstrom_robinson().bits());
    }

    #[test]
    fn decomposition_invariants() {
        let dec = standard_decomposition();
        assert_eq!(dec.d.len(), 32);
        assert!(dec.d.has_zero());
        assert!(dec.d.bits().iter().all(|w| w & JSTAR_MASK == 0));
        for i in 1..=7 {
            assert_eq!(dec.reps[i - 1].bits() & JSTAR_MASK, pair_pattern(i));
            assert_eq!(dec.coset(i), dec.coset_by_support(i), "coset {i}");
            assert_eq!(dec.coset(i).len(), 32);
        }
        assert_eq!(dec.union_b().len(), 256);
        assert_eq!(dec.u_vectors.len(), 8);
        assert_eq!(dec.u_vectors[3].support(), vec![3, 8]);
        // projection is injective on D
        assert_eq!(dec.reed_muller().len(), 32);
    }

    #[test]
    fn nordstrom_robinson_parameters() {
        let nr = nordstrom_robinson();
        assert_eq!(nr.length(), 16);
        assert_eq!(nr.len(), 256);
        assert_eq!(nr.min_distance(), Some(6));
        assert!(nr.is_even());
        assert!(nr.has_zero());
        assert_eq!(nr.weight_histogram()[6], 112);
        assert!(!nr.is_linear());
        assert!(nr.is_antipodal());
    }

    #[test]
    fn reed_muller_parameters() {
        let r = reed_muller_subcode();
        let nr = nordstrom_robinson();
        assert_eq!((r.len(), r.min_distance()), (32, Some(8)));
        assert!(r.is_linear());
        assert!(r.words().all(|w| nr.contains(w)));
    }

    #[test]
    fn nr_is_union_of_reed_muller_cosets() {
        let dec = standard_decomposition();
        let r = dec.reed_muller();
        let union: Vec<u32> = (0..8)
            .flat_map(|i| translate(&r, dec.projected_rep(i)).unwrap().bits().to_vec())
            .collect();
        assert_eq!(Code::from_bits(16, union).unwrap(), dec.nordstrom_robinson());
    }

    #[test]
    fn other_representatives_give_same_code() {
        let dec = standard_decomposition();
        let greatest: Vec<Vertex> = (1..=7)
            .map(|i| dec.coset_by_support(i).words().last().unwrap())
            .collect();
        assert_ne!(greatest, dec.reps);
        let alt = dec.with_reps(greatest).unwrap();
        assert_eq!(alt.nordstrom_robinson(), dec.nordstrom_robinson());
        assert!(dec.with_reps(vec![dec.reps[1]; 7]).is_err());
    }

    #[test]
    fn punctured_parameters() {
        let pn = punctured_nordstrom_robinson(1).unwrap();
        assert_eq!((pn.length(), pn.len(), pn.min_distance()), (15, 256, Some(5)));
        assert_eq!(pn.weight_histogram()[5], 42);
        assert!(punctured_nordstrom_robinson(17).is_err());
    }

    #[test]
    fn rejects_non_golay_input() {
        let nr = nordstrom_robinson();
        assert!(matches!(coset_decomposition(&nr), Err(Error::NotGolay(_))));
    }

    #[test]
    fn golay_pairwise_distance_exhaustive() {
        let g = golay24();
        let w = g.bits();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                assert!((w[i] ^ w[j]).count_ones() >= 8);
            }
        }
    }
}
