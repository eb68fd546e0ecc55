//! Permutation groups given by generators, with a Schreier–Sims stabilizer
//! chain built on first use.

use std::collections::VecDeque;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamming::weight_class;

use super::perm::Perm;

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// `trans[p]` maps `base` to `p`.
    trans: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, n: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            trans: Vec::new(),
            orbit: Vec::new(),
        };
        level.rebuild(n);
        level
    }

    fn rebuild(&mut self, n: usize) {
        self.trans = vec![None; n];
        self.trans[self.base] = Some(Perm::identity(n));
        self.orbit = vec![self.base];
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for s in &self.gens {
                let q = s.apply(p);
                if self.trans[q].is_none() {
                    self.trans[q] = Some(self.trans[p].as_ref().expect("in orbit").then(s));
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }
}

/// Base points with their basic orbits.
#[derive(Debug, Clone)]
pub struct StabChain {
    levels: Vec<Level>,
}

impl StabChain {
    fn build(n: usize, gens: &[Perm]) -> Self {
        let mut levels: Vec<Level> = Vec::new();
        for g in gens.iter().filter(|g| !g.is_identity()) {
            if levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = g.smallest_moved_point().expect("not the identity");
                levels.push(Level::new(b, n));
            }
        }
        for l in 0..levels.len() {
            let fixing: Vec<Perm> = gens
                .iter()
                .filter(|g| !g.is_identity() && levels[..l].iter().all(|x| g.apply(x.base) == x.base))
                .cloned()
                .collect();
            levels[l].gens = fixing;
            levels[l].rebuild(n);
        }

        let mut chain = StabChain { levels };
        let mut i = chain.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let orbit = chain.levels[lvl].orbit.clone();
            let level_gens = chain.levels[lvl].gens.clone();
            for &beta in &orbit {
                for s in &level_gens {
                    let u_beta = chain.levels[lvl].trans[beta].as_ref().expect("in orbit");
                    let image = s.apply(beta);
                    let u_image = chain.levels[lvl].trans[image].as_ref().expect("in orbit");
                    let schreier = u_beta.then(s).then(&u_image.inverse());
                    let (h, j) = chain.strip(schreier, lvl + 1);
                    let depth = chain.levels.len();
                    if j < depth || !h.is_identity() {
                        if j == depth {
                            let b = h.smallest_moved_point().expect("not the identity");
                            chain.levels.push(Level::new(b, n));
                        }
                        for l in lvl + 1..=j {
                            chain.levels[l].gens.push(h.clone());
                            chain.levels[l].rebuild(n);
                        }
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
        chain
    }

    /// Sift `g` through the levels from `start`; returns the residue and the
    /// level at which sifting stopped (`levels.len()` when it went through).
    fn strip(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply(level.base);
            match &level.trans[beta] {
                None => return (g, l),
                Some(u) => g = g.then(&u.inverse()),
            }
        }
        (g, self.levels.len())
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn basic_orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }
}

/// A permutation group on `{0..degree-1}`.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: self.chain.clone(),
        }
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::LengthMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let chain = self.chain();
        let (h, j) = chain.strip(p.clone(), 0);
        j == chain.levels.len() && h.is_identity()
    }

    /// Orbits on points, each sorted, listed by smallest member.
    pub fn point_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                for g in &self.generators {
                    let q = g.apply(orbit[i]);
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }
}

pub fn group_order(g: &PermGroup) -> u128 {
    g.order()
}

/// Orbit count and sizes of a permutation group on weight-`k` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereOrbits {
    pub k: usize,
    pub count: usize,
    /// Sizes in order of each orbit's numerically smallest member.
    pub sizes: Vec<u64>,
}

pub fn orbits_on_sphere(g: &PermGroup, m: usize, k: usize) -> Result<SphereOrbits> {
    if g.degree() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            found: g.degree(),
        });
    }
    if k > m {
        return Err(Error::RadiusOutOfRange { radius: k, length: m });
    }
    let words: Vec<u32> = weight_class(m, k).collect();
    let mut seen = vec![false; words.len()];
    let index = |w: u32| words.binary_search(&w).expect("permutations keep weight");
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..words.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(words[start]);
        let mut size = 0u64;
        while let Some(w) = queue.pop_front() {
            size += 1;
            for p in g.generators() {
                let i = index(p.permute_bits(w));
                if !seen[i] {
                    seen[i] = true;
                    queue.push_back(words[i]);
                }
            }
        }
        sizes.push(size);
    }
    Ok(SphereOrbits {
        k,
        count: sizes.len(),
        sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(images: &[usize]) -> Perm {
        Perm::from_one_based(images).unwrap()
    }

    /// All elements by closure, for small groups.
    fn closure(n: usize, gens: &[Perm]) -> HashSet<Perm> {
        let mut set = HashSet::new();
        set.insert(Perm::identity(n));
        let mut frontier = vec![Perm::identity(n)];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = x.then(g);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    #[test]
    fn small_orders() {
        assert_eq!(PermGroup::new(2, vec![p(&[2, 1])]).unwrap().order(), 2);
        assert_eq!(PermGroup::trivial(5).order(), 1);
        let s5 = PermGroup::new(5, vec![p(&[2, 3, 4, 5, 1]), p(&[2, 1, 3, 4, 5])]).unwrap();
        assert_eq!(s5.order(), 120);
        let a5 = PermGroup::new(5, vec![p(&[2, 3, 4, 5, 1]), p(&[2, 3, 1, 4, 5])]).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(!a5.contains(&p(&[2, 1, 3, 4, 5])));
        assert!(a5.contains(&p(&[3, 1, 2, 4, 5])));
        let s16 = PermGroup::new(
            16,
            vec![
                Perm::from_images((1..16).chain(0..1).collect()).unwrap(),
                Perm::transposition(16, 0, 1),
            ],
        )
        .unwrap();
        assert_eq!(s16.order(), (1..=16u128).product());
        let mut base = s16.chain().base();
        assert_eq!(base[0], 0);
        base.sort();
        assert_eq!(base, (0..15).collect::<Vec<_>>());
    }

    #[test]
    fn orders_match_closure() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in 2..=7 {
            for _ in 0..20 {
                let gens: Vec<Perm> = (0..2)
                    .map(|_| {
                        let mut v: Vec<usize> = (0..n).collect();
                        // keep some groups small by fixing a prefix
                        let k = n - (n / 3);
                        v[..k].shuffle(&mut rng);
                        Perm::from_images(v).unwrap()
                    })
                    .collect();
                let g = PermGroup::new(n, gens.clone()).unwrap();
                let all = closure(n, &gens);
                assert_eq!(g.order(), all.len() as u128);
                assert!(all.iter().all(|x| g.contains(x)));
                let sizes = g.chain().transversal_sizes();
                assert_eq!(sizes.iter().map(|&s| s as u128).product::<u128>(), g.order());
                for (l, &b) in g.chain().base().iter().enumerate() {
                    let orbit = g.chain().basic_orbit(l);
                    assert!(orbit.contains(&b));
                }
            }
        }
    }

    #[test]
    fn sphere_orbits_of_symmetric_group() {
        let gens = vec![
            Perm::from_images((1..6).chain(0..1).collect()).unwrap(),
            Perm::transposition(6, 0, 1),
        ];
        let g = PermGroup::new(6, gens).unwrap();
        for k in 0..=6 {
            let o = orbits_on_sphere(&g, 6, k).unwrap();
            assert_eq!(o.count, 1);
        }
        let cyclic = PermGroup::new(4, vec![p(&[2, 3, 4, 1])]).unwrap();
        // {1,2},{2,3},{3,4},{4,1} and {1,3},{2,4}
        assert_eq!(orbits_on_sphere(&cyclic, 4, 2).unwrap().sizes, vec![4, 2]);
        assert!(orbits_on_sphere(&cyclic, 5, 2).is_err());
    }
}
