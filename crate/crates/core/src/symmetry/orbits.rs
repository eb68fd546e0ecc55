//! Orbits of generated groups on the whole vertex space, and the complete
//! transitivity test built on them.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::error::{Error, Result};
use crate::hamming::Vertex;
use crate::spectrum::distance_partition;

use super::aut::AutElement;

/// Orbit ids are numbered by each orbit's smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    pub m: usize,
    pub orbit_id: Vec<u32>,
    pub sizes: Vec<u64>,
}

impl OrbitPartition {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn orbit_of(&self, v: Vertex) -> u32 {
        self.orbit_id[v.bits() as usize]
    }
}

pub fn vertex_orbits(gens: &[AutElement], m: usize) -> Result<OrbitPartition> {
    if m > 24 {
        return Err(Error::UnsupportedLength(m));
    }
    if let Some(g) = gens.iter().find(|g| g.length() != m) {
        return Err(Error::LengthMismatch {
            expected: m,
            found: g.length(),
        });
    }
    let fast: Vec<_> = gens.iter().map(AutElement::fast).collect();
    let n = 1usize << m;
    let mut orbit_id = vec![u32::MAX; n];
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if orbit_id[start] != u32::MAX {
            continue;
        }
        let id = sizes.len() as u32;
        orbit_id[start] = id;
        queue.push_back(start as u32);
        let mut size = 0u64;
        while let Some(v) = queue.pop_front() {
            size += 1;
            for g in &fast {
                let u = g.apply(v) as usize;
                if orbit_id[u] == u32::MAX {
                    orbit_id[u] = id;
                    queue.push_back(u as u32);
                }
            }
        }
        sizes.push(size);
    }
    Ok(OrbitPartition { m, orbit_id, sizes })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellMatch {
    pub cell: usize,
    pub cell_size: u64,
    pub orbit_size: u64,
}

/// Two vertices of one cell lying in different orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitivityWitness {
    pub cell: usize,
    pub first: String,
    pub second: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitivityCertificate {
    pub transitive: bool,
    pub orbit_count: usize,
    /// Per cell, the size of the orbit of its smallest vertex.
    pub cells: Vec<CellMatch>,
    pub witness: Option<TransitivityWitness>,
}

pub fn verify_complete_transitivity(c: &Code, gens: &[AutElement]) -> Result<TransitivityCertificate> {
    if let Some(index) = gens.iter().position(|g| !g.stabilizes(c)) {
        return Err(Error::NotStabilizing { index });
    }
    let m = c.length();
    let partition = distance_partition(c)?;
    let orbits = vertex_orbits(gens, m)?;
    let mut first: Vec<Option<usize>> = vec![None; partition.rho + 1];
    let mut split: Vec<Option<TransitivityWitness>> = vec![None; partition.rho + 1];
    for (v, &d) in partition.dist_to_code.iter().enumerate() {
        let d = d as usize;
        match first[d] {
            None => first[d] = Some(v),
            Some(u) if split[d].is_none() && orbits.orbit_id[u] != orbits.orbit_id[v] => {
                split[d] = Some(TransitivityWitness {
                    cell: d,
                    first: Vertex::from_raw(m, u as u32).to_string(),
                    second: Vertex::from_raw(m, v as u32).to_string(),
                });
            }
            Some(_) => {}
        }
    }
    let witness = split.into_iter().flatten().next();
    let cells: Vec<CellMatch> = first
        .iter()
        .enumerate()
        .map(|(i, v)| CellMatch {
            cell: i,
            cell_size: partition.cell_sizes[i],
            orbit_size: orbits.sizes[orbits.orbit_id[v.expect("cells are nonempty")] as usize],
        })
        .collect();
    // a stabilizing group never mixes cells, so orbits inside a cell of equal
    // size fill it
    debug_assert!(witness.is_some() || cells.iter().all(|x| x.cell_size == x.orbit_size));
    Ok(TransitivityCertificate {
        transitive: witness.is_none(),
        orbit_count: orbits.count(),
        cells,
        witness,
    })
}
