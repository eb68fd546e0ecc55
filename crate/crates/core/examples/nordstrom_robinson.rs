//! Construct NR and its punctured form, optionally writing them to disk.
//!
//!     cargo run --example nordstrom_robinson [-- <dir>]

use nr_workbench::construct::{nordstrom_robinson, punctured_nordstrom_robinson, standard_decomposition};

fn main() -> nr_workbench::Result<()> {
    let nr = nordstrom_robinson();
    let pn = punctured_nordstrom_robinson(1)?;
    for (name, c) in [("NR", &nr), ("PN", &pn)] {
        let h = c.weight_histogram();
        let weights: Vec<String> = h
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(w, n)| format!("{w}:{n}"))
            .collect();
        println!("{name}: ({}, {}, {:?})  weights {}", c.length(), c.len(), c.min_distance(), weights.join(" "));
    }
    let d = standard_decomposition();
    println!("kernel R(1,4) has {} words", d.reed_muller().len());
    println!("first NR words:");
    for w in nr.words().take(6) {
        println!("  {w}");
    }
    if let Some(dir) = std::env::args().nth(1) {
        let dir = std::path::Path::new(&dir);
        nr.write(dir.join("nr.txt"))?;
        pn.write(dir.join("pn.txt"))?;
        println!("wrote nr.txt and pn.txt to {}", dir.display());
    }
    Ok(())
}
