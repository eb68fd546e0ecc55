//! Translations fixing a code setwise.

use crate::code::Code;

/// Basis of `{beta : C + beta = C}` in reduced echelon form: each vector's
/// highest set bit is its pivot and no other basis vector has that bit.
pub(crate) fn kernel_basis(c: &Code) -> Vec<u32> {
    let Some(&anchor) = c.bits().first() else {
        return Vec::new();
    };
    let mut basis: Vec<u32> = Vec::new();
    // any kernel element maps `anchor` into C, so beta = anchor + w for some w
    for &w in c.bits() {
        let beta = reduce(&basis, anchor ^ w);
        if beta == 0 {
            continue;
        }
        if c.bits().iter().all(|&x| c.contains_bits(x ^ beta)) {
            insert(&mut basis, beta);
        }
    }
    basis
}

fn reduce(basis: &[u32], mut v: u32) -> u32 {
    for &b in basis {
        let pivot = 31 - b.leading_zeros();
        if v >> pivot & 1 == 1 {
            v ^= b;
        }
    }
    v
}

/// Insert a reduced nonzero vector, keeping the basis reduced.
fn insert(basis: &mut Vec<u32>, v: u32) {
    let pivot = 31 - v.leading_zeros();
    for b in basis.iter_mut() {
        if *b >> pivot & 1 == 1 {
            *b ^= v;
        }
    }
    basis.push(v);
    basis.sort_unstable_by(|a, b| b.cmp(a));
}

/// Reduce `v` to the canonical representative of its coset modulo the span.
pub(crate) fn coset_rep(basis: &[u32], v: u32) -> u32 {
    reduce(basis, v)
}

/// Canonical representatives (zero at every pivot) of all cosets of the span
/// in `F_2^m`, in increasing order.
pub(crate) fn coset_reps(basis: &[u32], m: usize) -> Vec<u32> {
    let pivots: u32 = basis.iter().fold(0, |acc, b| acc | 1 << (31 - b.leading_zeros()));
    let free: Vec<u32> = (0..m as u32).filter(|&i| pivots >> i & 1 == 0).collect();
    (0..1u32 << free.len())
        .map(|x| {
            free.iter()
                .enumerate()
                .fold(0, |acc, (k, &pos)| acc | ((x >> k) & 1) << pos)
        })
        .collect()
}

pub(crate) fn span_of(basis: &[u32]) -> Vec<u32> {
    crate::construct::span(basis)
}

/// `{beta : translate(C, beta) = C}`. When `0` is in `C` this is a linear
/// subcode of `C`.
pub fn translation_kernel(c: &Code) -> Code {
    Code::from_bits(c.length(), span_of(&kernel_basis(c))).expect("kernel words fit the code length")
}
