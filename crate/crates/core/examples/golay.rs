//! Build the extended Golay code from its generator and print basic facts.
//!
//!     cargo run --example golay

use nr_workbench::construct::{coset_decomposition, golay24, golay_generator_rows};
use nr_workbench::Vertex;

fn main() {
    println!("generator [I | B]:");
    for row in golay_generator_rows() {
        println!("  {}", Vertex::new(24, row).expect("24-bit row"));
    }
    let g = golay24();
    let hist = g.weight_histogram();
    println!("|G| = {}, d = {:?}", g.len(), g.min_distance());
    for (w, n) in hist.iter().enumerate().filter(|(_, &n)| n > 0) {
        println!("  weight {w:>2}: {n}");
    }
    println!("contains 1^8 0^16: {}", g.contains_bits(0xff));

    let d = coset_decomposition(&g).expect("golay24 is a Golay code");
    println!("|D| = {} words off coordinates 1..8", d.d.len());
    for (i, rep) in d.reps.iter().enumerate() {
        println!("  rep {}: {}", i + 1, rep);
    }
}
