//! Solve distance distribution templates with unknown entries.
//!
//!     cargo run --example feasibility [-- <m> <template>]

use nr_workbench::report::{feasible, NR_TEMPLATE, PN_TEMPLATE};

fn main() -> nr_workbench::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cases: Vec<(usize, String)> = match args.as_slice() {
        [m, t] => vec![(m.parse().map_err(|_| nr_workbench::Error::Parse(m.clone()))?, t.clone())],
        _ => vec![(16, NR_TEMPLATE.to_string()), (15, PN_TEMPLATE.to_string())],
    };
    for (m, template) in cases {
        let r = feasible(m, &template, true)?;
        println!("m = {m}, template {template}");
        for row in r.rows.iter().filter(|row| !row.coefficients.iter().all(|c| c == "0")) {
            println!("  k = {:>2}: {} >= 0", row.k, row.form);
        }
        println!("  unknowns {:?}, solutions {:?}", r.unknowns, r.solutions);
    }
    Ok(())
}
