//! Intersection tables for the completely regular codes, and a witness for
//! a code that is not.
//!
//!     cargo run --example complete_regularity

use nr_workbench::construct::{golay24, nordstrom_robinson, punctured_nordstrom_robinson, reed_muller_subcode};
use nr_workbench::spectrum::{completely_regular_check, Regularity};

fn main() -> nr_workbench::Result<()> {
    let codes = [
        ("NR", nordstrom_robinson()),
        ("PN", punctured_nordstrom_robinson(1)?),
        ("Golay", golay24()),
        ("R(1,4)", reed_muller_subcode()),
    ];
    for (name, c) in &codes {
        match completely_regular_check(c)? {
            Regularity::Regular(t) => {
                println!("{name}: completely regular, rho = {}", t.rho);
                for (i, row) in t.rows.iter().enumerate() {
                    println!("  cell {i} ({:>6}): {:?}", t.cell_sizes[i], row);
                }
            }
            Regularity::NotRegular(w) => {
                println!("{name}: not completely regular");
                println!("  cell {}: {} has {:?}", w.cell, w.first, w.first_profile);
                println!("  cell {}: {} has {:?}", w.cell, w.second, w.second_profile);
            }
        }
    }
    Ok(())
}
