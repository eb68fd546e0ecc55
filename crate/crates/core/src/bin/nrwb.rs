use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use nr_workbench::report::{self, Subjects, Target};
use nr_workbench::symmetry::{SearchBudget, BUDGET_ENV, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(name = "nrwb", version, about = "Nordstrom-Robinson verification workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a code file: golay24, reed_muller, nr, pn, pn@<p>
    Construct {
        name: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print the spectrum and regularity of a code file as JSON
    Analyze { path: PathBuf },
    /// Run the claim manifest for nr, pn or all
    Verify {
        target: String,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Solve a distance distribution template, e.g. "6=112,7=?,8=?,10=112"
    Feasible {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        t: String,
        #[arg(long)]
        antipodal: bool,
    },
}

fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match cli.command {
        Command::Construct { name, output } => match report::cmd_construct(&name, &output) {
            Ok(c) => {
                eprintln!("wrote {} words of length {} to {}", c.len(), c.length(), output.display());
                ExitCode::SUCCESS
            }
            Err(e) => input_error(e),
        },
        Command::Analyze { path } => match report::cmd_analyze(&path) {
            Ok(json) => {
                print!("{json}");
                ExitCode::SUCCESS
            }
            Err(e) => input_error(e),
        },
        Command::Feasible { m, t, antipodal } => match report::cmd_feasible(m, &t, antipodal) {
            Ok(json) => {
                print!("{json}");
                ExitCode::SUCCESS
            }
            Err(e) => input_error(e),
        },
        Command::Verify { target, json, budget } => {
            let target: Target = match target.parse() {
                Ok(t) => t,
                Err(e) => return input_error(e),
            };
            let r = report::verify(target, &Subjects::standard(), SearchBudget::new(budget));
            match json {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, r.to_json()) {
                        return input_error(e);
                    }
                    print!("{}", r.human_summary());
                }
                None => {
                    print!("{}", r.to_json());
                    eprint!("{}", r.human_summary());
                }
            }
            if r.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
