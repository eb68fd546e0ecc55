//! Distance partitions and the complete-regularity test.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::error::{Error, Result};
use crate::hamming::Vertex;
use crate::symmetry::kernel::{coset_reps, kernel_basis};

/// `d(gamma, C)` for every vertex, one byte each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistancePartition {
    pub m: usize,
    pub dist_to_code: Vec<u8>,
    pub rho: usize,
    pub cell_sizes: Vec<u64>,
}

impl DistancePartition {
    pub fn cell_of(&self, v: Vertex) -> usize {
        self.dist_to_code[v.bits() as usize] as usize
    }

    pub fn cell(&self, i: usize) -> impl Iterator<Item = Vertex> + '_ {
        let m = self.m;
        self.dist_to_code
            .iter()
            .enumerate()
            .filter(move |(_, &d)| d as usize == i)
            .map(move |(v, _)| Vertex::from_raw(m, v as u32))
    }
}

/// Multi-source breadth-first search from the codewords over single-bit flips.
pub fn distance_partition(c: &Code) -> Result<DistancePartition> {
    if c.is_empty() {
        return Err(Error::EmptyCode);
    }
    let m = c.length();
    let n = 1usize << m;
    let mut dist = vec![u8::MAX; n];
    let mut queue: VecDeque<u32> = VecDeque::with_capacity(n);
    for &w in c.bits() {
        dist[w as usize] = 0;
        queue.push_back(w);
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[v as usize] + 1;
        for i in 0..m {
            let u = (v ^ (1 << i)) as usize;
            if dist[u] == u8::MAX {
                dist[u] = d;
                queue.push_back(u as u32);
            }
        }
    }
    let rho = *dist.iter().max().expect("nonempty") as usize;
    let mut cell_sizes = vec![0u64; rho + 1];
    for &d in &dist {
        cell_sizes[d as usize] += 1;
    }
    Ok(DistancePartition {
        m,
        dist_to_code: dist,
        rho,
        cell_sizes,
    })
}

/// Entry `(i, k)` is `|Gamma_k(gamma) ∩ C|` for any `gamma` at distance `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionTable {
    pub m: usize,
    pub rho: usize,
    pub rows: Vec<Vec<u64>>,
    pub cell_sizes: Vec<u64>,
}

impl IntersectionTable {
    pub fn row_sums(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }
}

/// Two vertices in the same cell whose profiles differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityWitness {
    pub cell: usize,
    pub first: String,
    pub second: String,
    pub first_profile: Vec<u64>,
    pub second_profile: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regularity {
    Regular(IntersectionTable),
    NotRegular(RegularityWitness),
}

impl Regularity {
    pub fn table(&self) -> Option<&IntersectionTable> {
        match self {
            Regularity::Regular(t) => Some(t),
            Regularity::NotRegular(_) => None,
        }
    }

    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular(_))
    }
}

fn profile(c: &Code, gamma: u32) -> Vec<u64> {
    let mut p = vec![0u64; c.length() + 1];
    for &w in c.bits() {
        p[(gamma ^ w).count_ones() as usize] += 1;
    }
    p
}

/// Checks that the profile `(|Gamma_k(gamma) ∩ C|)_k` is constant on every
/// cell of the distance partition.
///
/// Profiles and distances are invariant under the translations fixing `C`,
/// so one vertex per coset of that translation group is scanned; every other
/// vertex repeats the profile of its coset representative.
pub fn completely_regular_check(c: &Code) -> Result<Regularity> {
    if c.is_empty() {
        return Err(Error::EmptyCode);
    }
    let m = c.length();
    let basis = kernel_basis(c);
    let reps = coset_reps(&basis, m);
    let mut rows: Vec<Option<(u32, Vec<u64>)>> = Vec::new();
    let mut counts: Vec<u64> = Vec::new();
    // chunked so an irregular code stops at its first witness
    for chunk in reps.chunks(1 << 14) {
        let profiles: Vec<Vec<u64>> = chunk.par_iter().map(|&g| profile(c, g)).collect();
        for (&g, p) in chunk.iter().zip(&profiles) {
            let d = p.iter().position(|&x| x > 0).expect("code is nonempty");
            if rows.len() <= d {
                rows.resize(d + 1, None);
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
            match &rows[d] {
                None => rows[d] = Some((g, p.clone())),
                Some((first, fp)) if fp != p => {
                    return Ok(Regularity::NotRegular(RegularityWitness {
                        cell: d,
                        first: Vertex::from_raw(m, *first).to_string(),
                        second: Vertex::from_raw(m, g).to_string(),
                        first_profile: fp.clone(),
                        second_profile: p.clone(),
                    }))
                }
                Some(_) => {}
            }
        }
    }
    let rho = rows.len() - 1;
    let coset_size = 1u64 << basis.len();
    Ok(Regularity::Regular(IntersectionTable {
        m,
        rho,
        rows: rows
            .into_iter()
            .map(|r| r.expect("distances to a code form a contiguous range").1)
            .collect(),
        cell_sizes: counts.iter().map(|&n| n * coset_size).collect(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{golay24, nordstrom_robinson, punctured_nordstrom_robinson, reed_muller_subcode};
    use crate::hamming::sphere;

    /// Straight from the definition: profile via sphere enumeration and
    /// distance via the smallest nonempty sphere, for every vertex.
    fn definitional_check(c: &Code) -> Option<Vec<Vec<u64>>> {
        let m = c.length();
        let mut table: Vec<Option<Vec<u64>>> = vec![None; m + 1];
        for g in 0..1u32 << m {
            let gamma = Vertex::new(m, g).unwrap();
            let prof: Vec<u64> = (0..=m)
                .map(|k| sphere(gamma, k).unwrap().filter(|v| c.contains(*v)).count() as u64)
                .collect();
            let d = prof.iter().position(|&x| x > 0).unwrap();
            match &table[d] {
                None => table[d] = Some(prof),
                Some(p) if *p != prof => return None,
                _ => {}
            }
        }
        let rho = table.iter().rposition(Option::is_some).unwrap();
        Some(table.into_iter().take(rho + 1).map(Option::unwrap).collect())
    }

    fn small_codes() -> Vec<Code> {
        let texts = [
            "m=3\n000\n",
            "m=3\n000\n110\n",
            "m=3\n000\n111\n",
            "m=4\n0000\n1111\n0011\n",
            "m=5\n00000\n11100\n00111\n",
            "m=6\n000000\n111111\n",
            "m=7\n0000000\n1101000\n0110100\n0011010\n0001101\n1000110\n0100011\n1010001\n1111111\n0010111\n1001011\n1100101\n1110010\n0111001\n1011100\n0101110\n",
            "m=8\n00000000\n11110000\n00001111\n11111111\n",
            "m=9\n000000000\n111000000\n000111000\n000000111\n",
            "m=10\n0000000000\n1111100000\n0000011111\n1111111111\n",
            "m=10\n0000000000\n1110000000\n1001100000\n0101010000\n",
        ];
        texts.iter().map(|t| Code::parse_text(t).unwrap()).collect()
    }

    #[test]
    fn agrees_with_definition() {
        for c in small_codes() {
            let fast = completely_regular_check(&c).unwrap();
            let slow = definitional_check(&c);
            match (&fast, &slow) {
                (Regularity::Regular(t), Some(rows)) => {
                    assert_eq!(&t.rows, rows, "{c:?}");
                    let p = distance_partition(&c).unwrap();
                    assert_eq!(t.cell_sizes, p.cell_sizes);
                }
                (Regularity::NotRegular(_), None) => {}
                _ => panic!("disagreement on {c:?}: {fast:?} vs {slow:?}"),
            }
        }
    }

    #[test]
    fn single_word_code() {
        let c = Code::parse_text("m=3\n000\n").unwrap();
        let t = completely_regular_check(&c).unwrap();
        let t = t.table().unwrap();
        for i in 0..=3 {
            for k in 0..=3 {
                assert_eq!(t.rows[i][k], (i == k) as u64);
            }
        }
    }

    #[test]
    fn witness_for_irregular_code() {
        let c = Code::parse_text("m=3\n000\n110\n").unwrap();
        match completely_regular_check(&c).unwrap() {
            Regularity::NotRegular(w) => {
                assert_eq!(w.cell, 1);
                let mut pair = [w.first.clone(), w.second.clone()];
                pair.sort();
                assert_eq!(pair, ["001".to_string(), "100".to_string()]);
                assert_ne!(w.first_profile, w.second_profile);
            }
            r => panic!("expected witness, got {r:?}"),
        }
    }

    #[test]
    fn nr_partition() {
        let p = distance_partition(&nordstrom_robinson()).unwrap();
        assert_eq!(p.rho, 4);
        // radius-2 balls around codewords are disjoint
        assert_eq!(&p.cell_sizes[..3], &[256, 256 * 16, 256 * 120]);
        assert_eq!(p.cell_sizes.iter().sum::<u64>(), 1 << 16);
        assert_eq!(p.cell(0).count(), 256);
    }

    #[test]
    fn pn_partition() {
        let p = distance_partition(&punctured_nordstrom_robinson(1).unwrap()).unwrap();
        assert_eq!(p.rho, 3);
    }

    #[test]
    fn reed_muller_splits_at_distance_four() {
        // cosets of R(1,4) of minimum weight 4 come in two kinds
        match completely_regular_check(&reed_muller_subcode()).unwrap() {
            Regularity::NotRegular(w) => {
                assert_eq!(w.cell, 4);
                let mut profiles = [w.first_profile[4], w.second_profile[4]];
                profiles.sort();
                assert_eq!(profiles, [2, 4]);
            }
            r => panic!("{r:?}"),
        }
    }

    #[test]
    fn constructed_codes_are_completely_regular() {
        for c in [
            nordstrom_robinson(),
            punctured_nordstrom_robinson(1).unwrap(),
            golay24(),
        ] {
            let r = completely_regular_check(&c).unwrap();
            let t = r.table().unwrap_or_else(|| panic!("{c:?} not regular"));
            assert!(t.row_sums().iter().all(|&s| s == c.len() as u64));
            assert_eq!(t.cell_sizes.iter().sum::<u64>(), 1 << c.length());
        }
    }
}
