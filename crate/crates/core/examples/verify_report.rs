//! Run the claim manifest and print the report, optionally as JSON.
//!
//!     cargo run --example verify_report [-- nr|pn|all [--json]]

use nr_workbench::report::{verify, Subjects, Target};
use nr_workbench::symmetry::SearchBudget;

fn main() -> nr_workbench::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let target: Target = args.first().map(String::as_str).unwrap_or("all").parse()?;
    let r = verify(target, &Subjects::standard(), SearchBudget::from_env()?);
    if args.iter().any(|a| a == "--json") {
        print!("{}", r.to_json());
    } else {
        for c in &r.claims {
            println!("{:<34} {:<13} {}", c.id, c.status.to_string(), c.computed);
        }
        print!("{}", r.human_summary());
    }
    Ok(())
}
