//! Automorphisms of the Hamming graph and of codes.

mod aut;
mod group;
pub(crate) mod kernel;
mod orbits;
mod perm;
mod search;

pub use aut::{act, parse_elements, permutation_part, project_automorphism, write_elements, AutElement};
pub use group::{group_order, orbits_on_sphere, PermGroup, SphereOrbits, StabChain};
pub use kernel::translation_kernel;
pub use orbits::{
    vertex_orbits, verify_complete_transitivity, CellMatch, OrbitPartition, TransitivityCertificate,
    TransitivityWitness,
};
pub use perm::Perm;
pub use search::{
    assemble_aut_generators, assemble_with_budget, coordinate_invariant_partition,
    enumerate_perm_automorphisms, enumerate_perm_automorphisms_with_budget, find_equivalence,
    find_equivalence_with_budget, find_permutation_equivalence, refine_partition,
    search_perm_automorphisms, AssembledGenerators, GeneratorKind, PermAutomorphisms, SearchBudget,
    BUDGET_ENV, DEFAULT_BUDGET,
};
