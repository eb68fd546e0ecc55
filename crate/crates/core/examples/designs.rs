//! Designs held by constant-weight words, and the lambda arithmetic.
//!
//!     cargo run --example designs

use nr_workbench::construct::{nordstrom_robinson, punctured_nordstrom_robinson};
use nr_workbench::spectrum::{design_arithmetic, design_check, eliminate_lambdas, format_rational};

fn main() -> nr_workbench::Result<()> {
    let nr = nordstrom_robinson();
    let pn = punctured_nordstrom_robinson(1)?;
    for (name, c, w, t) in [("NR", &nr, 6, 3), ("NR", &nr, 8, 3), ("PN", &pn, 5, 2)] {
        let words = c.of_weight(w);
        println!("{name} weight {w}: {} words, t = {t}: {:?}", words.len(), design_check(&words, t)?);
    }
    let p = design_arithmetic(3, 16, 6, 4)?;
    let lambdas: Vec<String> = p.lambdas.iter().map(format_rational).collect();
    println!("3-(16,6,4): lambda_i = {lambdas:?}, b = {}", format_rational(&p.b));
    for (t, m, k) in [(3, 16, 6), (2, 15, 5)] {
        let e = eliminate_lambdas(t, m, k, k)?;
        println!("{t}-({m},{k},lambda): lambda <= {}, admissible {:?}", e.bound, e.admissible);
        for (lambda, i) in e.rejected.iter().take(4) {
            println!("  lambda = {lambda} fails integrality at i = {i}");
        }
    }
    Ok(())
}
