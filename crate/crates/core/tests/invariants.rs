use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use nr_workbench::construct::{coset_decomposition, golay24, nordstrom_robinson};
use nr_workbench::report::{manifest_ids, verify, Status, Subjects, Target};
use nr_workbench::spectrum::{
    completely_regular_check, design_arithmetic, distance_distribution, distance_partition, Regularity,
};
use nr_workbench::symmetry::{
    assemble_aut_generators, find_equivalence, project_automorphism, vertex_orbits, AutElement, Perm, PermGroup,
};
use nr_workbench::{puncture, Code, KrawtchoukTable, ProjectionSpec, Vertex};

fn vertex(m: usize) -> impl Strategy<Value = Vertex> {
    (0u32..1 << m).prop_map(move |b| Vertex::new(m, b).unwrap())
}

fn perm(m: usize) -> impl Strategy<Value = Perm> {
    Just((0..m).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Perm::from_images(images).unwrap())
}

fn element(m: usize) -> impl Strategy<Value = AutElement> {
    (vertex(m), perm(m)).prop_map(|(b, s)| AutElement::new(b, s).unwrap())
}

fn code(max_m: usize) -> impl Strategy<Value = Code> {
    (2..=max_m).prop_flat_map(|m| {
        proptest::collection::vec(0u32..1 << m, 1..12).prop_map(move |w| Code::from_bits(m, w).unwrap())
    })
}

proptest! {
    #[test]
    fn vertex_complement(v in (1usize..=24).prop_flat_map(vertex)) {
        prop_assert_eq!(v.bits() >> v.len(), 0);
        prop_assert_eq!(v.complement().complement(), v);
        prop_assert_eq!(v.weight() + v.complement().weight(), v.len());
    }

    #[test]
    fn krawtchouk_symmetry(m in 1usize..=24) {
        let t = KrawtchoukTable::new(m);
        for x in 0..=m {
            prop_assert_eq!(t.get(0, x), &BigInt::one());
        }
        for k in 0..=m {
            prop_assert_eq!(t.get(k, 0), &nr_workbench::hamming::binomial(m, k));
            for x in 0..=m {
                let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                prop_assert_eq!(t.get(k, m - x), &(sign * t.get(k, x)));
            }
        }
    }

    #[test]
    fn code_invariants(c in code(10)) {
        let words: BTreeSet<u32> = c.bits().iter().copied().collect();
        prop_assert_eq!(words.len(), c.len());
        let pairwise = c.bits().iter().enumerate()
            .flat_map(|(i, &u)| c.bits()[i + 1..].iter().map(move |&v| (u ^ v).count_ones() as usize))
            .min();
        prop_assert_eq!(c.min_distance(), pairwise);
        for w in 0..1u32 << c.length() {
            prop_assert_eq!(c.contains_bits(w), words.contains(&w));
        }
    }

    #[test]
    fn distribution_invariants(c in code(10)) {
        let d = distance_distribution(&c).unwrap();
        prop_assert_eq!(&d.a[0], &BigRational::one());
        prop_assert!(d.a.iter().all(|x| *x >= BigRational::zero()));
        prop_assert_eq!(d.total(), BigRational::from_integer(BigInt::from(c.len())));
        if let Some(delta) = c.min_distance() {
            prop_assert!(d.a[1..delta].iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn partition_invariants(c in code(10)) {
        let p = distance_partition(&c).unwrap();
        prop_assert_eq!(p.cell_sizes.iter().sum::<u64>(), 1u64 << c.length());
        prop_assert_eq!(p.rho, *p.dist_to_code.iter().max().unwrap() as usize);
        let zero: Vec<u32> = (0..1u32 << c.length()).filter(|&v| p.dist_to_code[v as usize] == 0).collect();
        let mut words = c.bits().to_vec();
        words.sort_unstable();
        prop_assert_eq!(zero, words);
        if let Regularity::Regular(t) = completely_regular_check(&c).unwrap() {
            prop_assert!(t.row_sums().iter().all(|&s| s == c.len() as u64));
        }
    }

    #[test]
    fn design_parameters(t in 1usize..=4, extra in 0usize..6, span in 1usize..8, lambda in 1u64..20) {
        let k = t + extra;
        let m = k + span;
        let p = design_arithmetic(t, m, k, lambda).unwrap();
        prop_assert_eq!(&p.lambdas[t], &BigRational::from_integer(BigInt::from(lambda)));
        prop_assert_eq!(&p.b, &p.lambdas[0]);
    }

    #[test]
    fn group_law(x in element(12), y in element(12), z in element(12), v in vertex(12)) {
        prop_assert_eq!(x.then(&y).then(&z), x.then(&y.then(&z)));
        prop_assert!(x.then(&x.inverse()).is_identity());
        prop_assert!(x.inverse().then(&x).is_identity());
        prop_assert_eq!(x.then(&AutElement::identity(12)), x.clone());
        prop_assert_eq!(x.then(&y).act(v).unwrap(), y.act(x.act(v).unwrap()).unwrap());
    }

    #[test]
    fn chain_order_is_product(gens in proptest::collection::vec(perm(7), 1..4)) {
        let g = PermGroup::new(7, gens.clone()).unwrap();
        let product: u128 = g.chain().transversal_sizes().iter().map(|&s| s as u128).product();
        prop_assert_eq!(g.order(), product);
        // closure oracle
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier = vec![Perm::identity(7)];
        seen.insert(Perm::identity(7).images().collect());
        while let Some(p) = frontier.pop() {
            for s in &gens {
                let q = p.then(s);
                if seen.insert(q.images().collect()) {
                    frontier.push(q);
                }
            }
        }
        prop_assert_eq!(seen.len() as u128, g.order());
        for s in &gens {
            prop_assert!(g.contains(s));
        }
    }

    #[test]
    fn orbit_ids_are_invariant(gens in proptest::collection::vec(element(8), 0..3)) {
        let o = vertex_orbits(&gens, 8).unwrap();
        prop_assert_eq!(o.sizes.iter().sum::<u64>(), 256);
        for g in &gens {
            for v in 0..256u32 {
                let u = Vertex::new(8, v).unwrap();
                prop_assert_eq!(o.orbit_of(u), o.orbit_of(g.act(u).unwrap()));
            }
        }
    }
}

#[test]
fn coset_decomposition_invariants() {
    let d = coset_decomposition(&golay24()).unwrap();
    assert!(d.d.bits().iter().all(|w| w & 0xff == 0));
    for (i, rep) in d.reps.iter().enumerate() {
        assert_eq!(rep.bits() & 0xff, 1 << i | 1 << 7);
    }
    let mut all = BTreeSet::new();
    for i in 0..8 {
        let coset = d.coset(i);
        assert_eq!(coset.len(), d.d.len());
        all.extend(coset.bits().iter().copied());
    }
    assert_eq!(all.len(), 8 * d.d.len());
}

#[test]
fn projected_automorphisms_stabilize_the_punctured_code() {
    let nr = nordstrom_robinson();
    let pn = puncture(&nr, 16).unwrap();
    let spec = ProjectionSpec::without(16, 16).unwrap();
    let mut projected = 0;
    for g in assemble_aut_generators(&nr).unwrap() {
        if g.sigma().apply(15) == 15 {
            let h = project_automorphism(&g, &spec).unwrap();
            assert!(h.stabilizes(&pn));
            projected += 1;
        }
    }
    assert!(projected > 0);
}

#[test]
fn every_puncture_is_equivalent() {
    let nr = nordstrom_robinson();
    let first = puncture(&nr, 1).unwrap();
    for p in 2..=16 {
        let other = puncture(&nr, p).unwrap();
        let x = find_equivalence(&first, &other).unwrap().unwrap();
        assert_eq!(x.apply_to_code(&first).unwrap(), other);
    }
}

#[test]
fn report_statuses_follow_values() {
    let r = verify(Target::All, &Subjects::standard(), Default::default());
    let ids: Vec<&str> = r.claims.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, manifest_ids());
    for c in &r.claims {
        match (&c.expected, c.status) {
            (Some(e), Status::Pass) => assert_eq!(e, &c.computed, "{}", c.id),
            (Some(e), Status::Fail) => assert_ne!(e, &c.computed, "{}", c.id),
            (_, Status::ExternalFact) => {}
            (None, s) => assert_eq!(s, Status::Pass, "{}", c.id),
        }
    }
}
