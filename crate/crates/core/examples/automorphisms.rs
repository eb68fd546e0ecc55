//! Perm(C), the translation kernel and generators of Aut(C).
//!
//!     cargo run --example automorphisms

use nr_workbench::construct::nordstrom_robinson;
use nr_workbench::symmetry::{
    assemble_with_budget, coordinate_invariant_partition, orbits_on_sphere, search_perm_automorphisms,
    translation_kernel, GeneratorKind, SearchBudget,
};

fn main() -> nr_workbench::Result<()> {
    let nr = nordstrom_robinson();
    let budget = SearchBudget::from_env()?;
    println!("invariant coordinate cells: {:?}", coordinate_invariant_partition(&nr));
    let perm = search_perm_automorphisms(&nr, budget)?;
    println!("|Perm(NR)| = {} ({} search nodes)", perm.order(), perm.nodes);
    println!("base {:?}, transversals {:?}", perm.group.chain().base(), perm.group.chain().transversal_sizes());
    for k in 1..=4 {
        let o = orbits_on_sphere(&perm.group, 16, k)?;
        println!("  weight {k}: {} orbits {:?}", o.count, o.sizes);
    }
    println!("|K(NR)| = {}", translation_kernel(&nr).len());
    let a = assemble_with_budget(&nr, budget)?;
    let moves = a.kinds.iter().filter(|k| **k == GeneratorKind::CosetMove).count();
    println!("{} generators, {moves} moving 0 to another kernel coset", a.elements.len());
    let mu = nr_workbench::symmetry::PermGroup::new(16, a.elements.iter().map(|x| x.sigma().clone()).collect())?;
    println!("|mu(Aut(NR))| = {}", mu.order());
    println!("|Aut(NR)| = {}", nr.len() as u128 * perm.order());
    for x in a.elements.iter().filter(|x| !x.beta().is_empty()).take(3) {
        println!("  {x}");
    }
    Ok(())
}
