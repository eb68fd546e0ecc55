//! Every puncture of NR is equivalent to the puncture at coordinate 1.
//!
//!     cargo run --example puncturing_equivalence

use nr_workbench::construct::nordstrom_robinson;
use nr_workbench::symmetry::find_equivalence;
use nr_workbench::puncture;

fn main() -> nr_workbench::Result<()> {
    let nr = nordstrom_robinson();
    let first = puncture(&nr, 1)?;
    for p in 2..=16 {
        let other = puncture(&nr, p)?;
        match find_equivalence(&other, &first)? {
            Some(x) => {
                assert_eq!(x.apply_to_code(&other)?, first);
                println!("p = {p:>2}: {x}");
            }
            None => println!("p = {p:>2}: no equivalence"),
        }
    }
    Ok(())
}
