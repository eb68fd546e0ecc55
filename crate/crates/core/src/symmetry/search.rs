//! Backtrack search for coordinate permutations between codes.
//!
//! Coordinates are assigned in increasing order and images are tried in
//! increasing order. A partial map survives when colors agree and the sorted
//! multiset of `(weight, prefix)` keys of the target, read through the map,
//! equals that of the source.

use std::collections::BTreeMap;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::hamming::mask;

use super::aut::AutElement;
use super::group::PermGroup;
use super::kernel::{coset_rep, kernel_basis};
use super::perm::Perm;

pub const DEFAULT_BUDGET: u64 = 100_000_000;
pub const BUDGET_ENV: &str = "NR_SEARCH_BUDGET";

/// Node limit for one top-level search call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl SearchBudget {
    pub fn new(max_nodes: u64) -> Self {
        SearchBudget { max_nodes }
    }

    /// `NR_SEARCH_BUDGET` if set, else the default.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .map(SearchBudget::new)
                .map_err(|_| Error::Parse(format!("{BUDGET_ENV}={s:?} is not a node count"))),
            Err(_) => Ok(SearchBudget::default()),
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(DEFAULT_BUDGET)
    }
}

struct Counter {
    used: u64,
    max: u64,
}

impl Counter {
    fn new(b: SearchBudget) -> Self {
        Counter { used: 0, max: b.max_nodes }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.max {
            Err(Error::BudgetExceeded(self.max))
        } else {
            Ok(())
        }
    }
}

/// `N_w(i, j)` for each weight class `w` present.
struct PairCounts {
    m: usize,
    weights: Vec<u32>,
    counts: Vec<Vec<u32>>,
}

impl PairCounts {
    fn new(c: &Code) -> Self {
        let m = c.length();
        let mut by_weight: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &w in c.bits() {
            let table = by_weight
                .entry(w.count_ones())
                .or_insert_with(|| vec![0; m * m]);
            let support: Vec<usize> = (0..m).filter(|&i| w >> i & 1 == 1).collect();
            for &i in &support {
                for &j in &support {
                    table[i * m + j] += 1;
                }
            }
        }
        let (weights, counts) = by_weight.into_iter().unzip();
        PairCounts { m, weights, counts }
    }

    fn signature(&self, i: usize, colors: &[u32]) -> Vec<(u32, u32, u32)> {
        let mut sig = Vec::new();
        for (w, table) in self.weights.iter().zip(&self.counts) {
            for j in 0..self.m {
                let n = table[i * self.m + j];
                if n > 0 {
                    let cj = if i == j { u32::MAX } else { colors[j] };
                    sig.push((*w, cj, n));
                }
            }
        }
        sig.sort_unstable();
        sig
    }
}

/// Refine several codes' colorings together so labels are comparable.
fn refine_jointly(stats: &[PairCounts], mut colors: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let distinct = |cs: &[Vec<u32>]| {
        let mut all: Vec<u32> = cs.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    };
    let mut classes = distinct(&colors);
    loop {
        let keys: Vec<Vec<(u32, Vec<(u32, u32, u32)>)>> = stats
            .iter()
            .zip(&colors)
            .map(|(s, cs)| (0..s.m).map(|i| (cs[i], s.signature(i, cs))).collect())
            .collect();
        let mut dict: BTreeMap<&(u32, Vec<(u32, u32, u32)>), u32> = BTreeMap::new();
        for k in keys.iter().flatten() {
            dict.insert(k, 0);
        }
        for (label, v) in dict.values_mut().enumerate() {
            *v = label as u32;
        }
        let next: Vec<Vec<u32>> = keys
            .iter()
            .map(|ks| ks.iter().map(|k| dict[k]).collect())
            .collect();
        let n = distinct(&next);
        colors = next;
        if n == classes {
            return colors;
        }
        classes = n;
    }
}

fn cells_of(colors: &[u32]) -> Vec<Vec<usize>> {
    let mut cells: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, &c) in colors.iter().enumerate() {
        cells.entry(c).or_default().push(i + 1);
    }
    cells.into_values().collect()
}

/// Cells of 1-indexed coordinates, ordered by their invariant label.
pub fn coordinate_invariant_partition(c: &Code) -> Vec<Vec<usize>> {
    let stats = PairCounts::new(c);
    let colors = refine_jointly(std::slice::from_ref(&stats), vec![vec![0; c.length()]]);
    cells_of(&colors[0])
}

/// Refine a given ordered partition of `{1..m}` by the same invariant.
pub fn refine_partition(c: &Code, partition: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let m = c.length();
    let mut colors = vec![u32::MAX; m];
    for (label, cell) in partition.iter().enumerate() {
        for &i in cell {
            if i == 0 || i > m || colors[i - 1] != u32::MAX {
                return Err(Error::InvalidPermutation(format!("bad partition {partition:?}")));
            }
            colors[i - 1] = label as u32;
        }
    }
    if colors.contains(&u32::MAX) {
        return Err(Error::InvalidPermutation(format!("partition misses points: {partition:?}")));
    }
    let stats = PairCounts::new(c);
    let refined = refine_jointly(std::slice::from_ref(&stats), vec![colors]);
    Ok(cells_of(&refined[0]))
}

/// One source/target pair prepared for backtracking.
struct Matcher<'a> {
    m: usize,
    target: &'a Code,
    src_colors: Vec<u32>,
    dst_colors: Vec<u32>,
    /// Sorted source keys for each depth.
    src_keys: Vec<Vec<u64>>,
}

#[inline]
fn key(weight: u32, prefix: u32) -> u64 {
    (weight as u64) << 32 | prefix as u64
}

impl<'a> Matcher<'a> {
    /// `None` when the invariants already rule out any map.
    fn new(source: &'a Code, target: &'a Code) -> Option<Self> {
        let m = source.length();
        if target.length() != m
            || source.len() != target.len()
            || source.weight_histogram() != target.weight_histogram()
        {
            return None;
        }
        let stats = [PairCounts::new(source), PairCounts::new(target)];
        let mut colors = refine_jointly(&stats, vec![vec![0; m]; 2]).into_iter();
        let (src_colors, dst_colors) = (colors.next()?, colors.next()?);
        let mut a = src_colors.clone();
        let mut b = dst_colors.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
        let src_keys = (0..=m)
            .map(|d| {
                let mut ks: Vec<u64> = source
                    .bits()
                    .iter()
                    .map(|&w| key(w.count_ones(), w & mask(d)))
                    .collect();
                ks.sort_unstable();
                ks
            })
            .collect();
        Some(Matcher {
            m,
            target,
            src_colors,
            dst_colors,
            src_keys,
        })
    }

    fn initial_keys(&self) -> Vec<u64> {
        self.target
            .bits()
            .iter()
            .map(|&w| key(w.count_ones(), 0))
            .collect()
    }

    /// Extend `keys` (at depth `d`) by sending coordinate `d` to `gamma`;
    /// true when the multiset still matches.
    fn extend(&self, keys: &[u64], d: usize, gamma: usize, out: &mut Vec<u64>, scratch: &mut Vec<u64>) -> bool {
        out.clear();
        out.extend(
            keys.iter()
                .zip(self.target.bits())
                .map(|(&k, &w)| k | (((w >> gamma) & 1) as u64) << d),
        );
        scratch.clear();
        scratch.extend_from_slice(out);
        scratch.sort_unstable();
        *scratch == self.src_keys[d + 1]
    }

    /// Depth-first completion of `images[..d]`.
    fn complete(
        &self,
        d: usize,
        images: &mut Vec<usize>,
        used: u32,
        keys: &[u64],
        counter: &mut Counter,
    ) -> Result<Option<Perm>> {
        if d == self.m {
            let p = Perm::from_images(images.clone())?;
            return Ok(Some(p));
        }
        let mut next = Vec::with_capacity(keys.len());
        let mut scratch = Vec::with_capacity(keys.len());
        for gamma in 0..self.m {
            if used >> gamma & 1 == 1 || self.dst_colors[gamma] != self.src_colors[d] {
                continue;
            }
            counter.tick()?;
            if !self.extend(keys, d, gamma, &mut next, &mut scratch) {
                continue;
            }
            images.push(gamma);
            if let Some(p) = self.complete(d + 1, images, used | 1 << gamma, &next, counter)? {
                return Ok(Some(p));
            }
            images.pop();
        }
        Ok(None)
    }

    /// A map extending the fixed `prefix` images, if any.
    fn find_with_prefix(&self, prefix: &[usize], counter: &mut Counter) -> Result<Option<Perm>> {
        let mut keys = self.initial_keys();
        let mut next = Vec::with_capacity(keys.len());
        let mut scratch = Vec::with_capacity(keys.len());
        let mut used = 0u32;
        for (d, &gamma) in prefix.iter().enumerate() {
            if used >> gamma & 1 == 1 || self.dst_colors[gamma] != self.src_colors[d] {
                return Ok(None);
            }
            counter.tick()?;
            if !self.extend(&keys, d, gamma, &mut next, &mut scratch) {
                return Ok(None);
            }
            std::mem::swap(&mut keys, &mut next);
            used |= 1 << gamma;
        }
        let mut images = prefix.to_vec();
        self.complete(prefix.len(), &mut images, used, &keys, counter)
    }
}

fn point_orbit(gens: &[Perm], start: usize, n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = g.apply(p);
            if !seen[q] {
                seen[q] = true;
                stack.push(q);
            }
        }
    }
    seen
}

/// Perm(C) with its generators and the orbit sizes found level by level.
#[derive(Debug, Clone)]
pub struct PermAutomorphisms {
    pub group: PermGroup,
    /// Orbit of coordinate `i` under the pointwise stabilizer of `0..i`.
    pub level_orbits: Vec<usize>,
    pub nodes: u64,
}

impl PermAutomorphisms {
    pub fn order(&self) -> u128 {
        self.level_orbits.iter().map(|&s| s as u128).product()
    }
}

pub fn enumerate_perm_automorphisms(c: &Code) -> Result<PermGroup> {
    Ok(search_perm_automorphisms(c, SearchBudget::from_env()?)?.group)
}

pub fn enumerate_perm_automorphisms_with_budget(c: &Code, budget: SearchBudget) -> Result<PermGroup> {
    Ok(search_perm_automorphisms(c, budget)?.group)
}

/// Builds generators from the deepest stabilizer up: at level `i`, each
/// candidate image of coordinate `i` outside the current orbit is tried with
/// `0..i` fixed.
pub fn search_perm_automorphisms(c: &Code, budget: SearchBudget) -> Result<PermAutomorphisms> {
    let m = c.length();
    let matcher = Matcher::new(c, c).expect("a code matches itself");
    let mut counter = Counter::new(budget);
    let mut gens: Vec<Perm> = Vec::new();
    let mut level_orbits = vec![1; m];
    let mut prefix: Vec<usize> = Vec::with_capacity(m);
    for level in (0..m).rev() {
        prefix.clear();
        prefix.extend(0..level);
        let mut orbit = point_orbit(&gens, level, m);
        for gamma in level + 1..m {
            if orbit[gamma] || matcher.src_colors[gamma] != matcher.src_colors[level] {
                continue;
            }
            prefix.push(gamma);
            if let Some(p) = matcher.find_with_prefix(&prefix, &mut counter)? {
                if !AutElement::permutation(p.clone()).stabilizes(c) {
                    return Err(Error::NotStabilizing { index: gens.len() });
                }
                gens.push(p);
                orbit = point_orbit(&gens, level, m);
            }
            prefix.pop();
        }
        level_orbits[level] = orbit.iter().filter(|&&x| x).count();
    }
    let found = PermAutomorphisms {
        group: PermGroup::new(m, gens)?,
        level_orbits,
        nodes: counter.used,
    };
    assert_eq!(found.order(), found.group.order(), "search and stabilizer chain disagree");
    Ok(found)
}

/// A coordinate permutation carrying `c` onto `c2`, if one exists.
pub fn find_permutation_equivalence(c: &Code, c2: &Code, budget: SearchBudget) -> Result<Option<Perm>> {
    check_lengths(c, c2)?;
    let mut counter = Counter::new(budget);
    permutation_equivalence(c, c2, &mut counter)
}

fn permutation_equivalence(c: &Code, c2: &Code, counter: &mut Counter) -> Result<Option<Perm>> {
    let Some(matcher) = Matcher::new(c, c2) else {
        return Ok(None);
    };
    let found = matcher.find_with_prefix(&[], counter)?;
    if let Some(p) = &found {
        assert!(AutElement::permutation(p.clone()).maps(c, c2));
    }
    Ok(found)
}

fn check_lengths(c: &Code, c2: &Code) -> Result<()> {
    if c.length() != c2.length() {
        return Err(Error::LengthMismatch {
            expected: c.length(),
            found: c2.length(),
        });
    }
    Ok(())
}

pub fn find_equivalence(c: &Code, c2: &Code) -> Result<Option<AutElement>> {
    find_equivalence_with_budget(c, c2, SearchBudget::from_env()?)
}

/// Fixes the first word `c0` of `c` and tries every `c2` word as its image.
pub fn find_equivalence_with_budget(c: &Code, c2: &Code, budget: SearchBudget) -> Result<Option<AutElement>> {
    check_lengths(c, c2)?;
    if c.len() != c2.len() || c.is_empty() {
        return Ok(None);
    }
    let m = c.length();
    let mut counter = Counter::new(budget);
    let c0 = c.bits()[0];
    let a = c.translate_bits(c0);
    for &w in c2.bits() {
        let b = c2.translate_bits(w);
        if let Some(sigma) = permutation_equivalence(&a, &b, &mut counter)? {
            let x = AutElement::from_parts(m, c0, Perm::identity(m))
                .then(&AutElement::permutation(sigma))
                .then(&AutElement::from_parts(m, w, Perm::identity(m)));
            assert!(x.maps(c, c2));
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// How each assembled generator was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    Permutation,
    KernelTranslation,
    CosetMove,
}

#[derive(Debug, Clone)]
pub struct AssembledGenerators {
    pub elements: Vec<AutElement>,
    pub kinds: Vec<GeneratorKind>,
    pub perm_group: PermGroup,
    pub kernel_dim: usize,
    /// Coset representatives of the kernel in `C` for which no automorphism
    /// moving 0 there was found.
    pub unreached: Vec<u32>,
}

pub fn assemble_aut_generators(c: &Code) -> Result<Vec<AutElement>> {
    Ok(assemble_with_budget(c, SearchBudget::from_env()?)?.elements)
}

pub fn assemble_with_budget(c: &Code, budget: SearchBudget) -> Result<AssembledGenerators> {
    if !c.has_zero() {
        return Err(Error::Parse("the code must contain the zero word".into()));
    }
    let m = c.length();
    let perm = search_perm_automorphisms(c, budget)?;
    let mut elements = Vec::new();
    let mut kinds = Vec::new();
    for p in perm.group.generators() {
        elements.push(AutElement::permutation(p.clone()));
        kinds.push(GeneratorKind::Permutation);
    }
    let basis = kernel_basis(c);
    for &b in &basis {
        elements.push(AutElement::from_parts(m, b, Perm::identity(m)));
        kinds.push(GeneratorKind::KernelTranslation);
    }
    let mut reps: Vec<u32> = c.bits().iter().map(|&w| coset_rep(&basis, w)).collect();
    let mut seen = std::collections::HashSet::new();
    reps.retain(|r| *r != 0 && seen.insert(*r));
    let mut counter = Counter::new(budget);
    let mut unreached = Vec::new();
    for r in reps {
        let shifted = c.translate_bits(r);
        match permutation_equivalence(c, &shifted, &mut counter)? {
            Some(sigma) => {
                // permute onto C + r, then translate by r
                let x = AutElement::permutation(sigma).then(&AutElement::from_parts(m, r, Perm::identity(m)));
                elements.push(x);
                kinds.push(GeneratorKind::CosetMove);
            }
            None => unreached.push(r),
        }
    }
    if let Some(index) = elements.iter().position(|x| !x.stabilizes(c)) {
        return Err(Error::NotStabilizing { index });
    }
    Ok(AssembledGenerators {
        elements,
        kinds,
        perm_group: perm.group,
        kernel_dim: basis.len(),
        unreached,
    })
}
