//! Orbits of Aut(C) on the whole space against the distance partition.
//!
//!     cargo run --example complete_transitivity

use nr_workbench::construct::{nordstrom_robinson, punctured_nordstrom_robinson};
use nr_workbench::symmetry::{assemble_aut_generators, verify_complete_transitivity};

fn main() -> nr_workbench::Result<()> {
    for (name, c) in [("NR", nordstrom_robinson()), ("PN", punctured_nordstrom_robinson(1)?)] {
        let gens = assemble_aut_generators(&c)?;
        let cert = verify_complete_transitivity(&c, &gens)?;
        println!("{name}: {} orbits, completely transitive: {}", cert.orbit_count, cert.transitive);
        for cell in &cert.cells {
            println!("  cell {}: {} vertices, orbit {}", cell.cell, cell.cell_size, cell.orbit_size);
        }
        if let Some(w) = cert.witness {
            println!("  split cell {}: {} vs {}", w.cell, w.first, w.second);
        }
    }
    Ok(())
}
