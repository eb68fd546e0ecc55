//! Distance distribution, MacWilliams transform and distance partition.
//!
//!     cargo run --example spectrum [-- <code file>]

use nr_workbench::construct::nordstrom_robinson;
use nr_workbench::spectrum::{distance_distribution, distance_partition, format_rational, macwilliams_transform};
use nr_workbench::Code;

fn main() -> nr_workbench::Result<()> {
    let c = match std::env::args().nth(1) {
        Some(path) => Code::read(path)?,
        None => nordstrom_robinson(),
    };
    let dist = distance_distribution(&c)?;
    let dual = macwilliams_transform(&dist);
    println!(" i      a_i     a'_i");
    for (i, (a, b)) in dist.a.iter().zip(&dual).enumerate() {
        println!("{i:>2} {:>8} {:>8}", format_rational(a), format_rational(b));
    }
    let p = distance_partition(&c)?;
    println!("covering radius {}", p.rho);
    println!("cell sizes {:?}", p.cell_sizes);
    Ok(())
}
