use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use morse_index_cli::{
    calibrate_dir, exit_code, run_scenario, run_suite, CliError, RunOptions, Scenario, SuiteOptions,
};

#[derive(Parser)]
#[command(name = "morse-index", version, about = "Run eigenvalue-count scenarios and acceptance suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Overrides every scenario's seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output directory.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    /// Worker threads for suites.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario file.
    Run { scenario: PathBuf },
    /// Run every `*.json` scenario in a directory and write `acceptance.json`.
    Suite { dir: PathBuf },
    /// Fit the bound constants `A`, `B` over a directory of scenarios.
    Calibrate { dir: PathBuf },
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Run { scenario } => {
            let sc = Scenario::load(scenario)?;
            let base = scenario.parent().unwrap_or(Path::new("."));
            let res = run_scenario(&sc, base, &RunOptions { seed: cli.seed, out_dir: cli.out.clone() })?;
            for c in &res.checks {
                println!("{} {}", c.id, if c.passed { "PASS" } else { "FAIL" });
                for f in c.failures() {
                    println!("  {f}");
                }
            }
            for n in &res.notes {
                eprintln!("note: {n}");
            }
            Ok(if res.passed() { 0 } else { 1 })
        }
        Command::Suite { dir } => {
            let opts = SuiteOptions { seed: cli.seed, out_dir: cli.out.clone(), jobs: cli.jobs };
            let report = run_suite(dir, &opts)?;
            for row in &report.criteria {
                println!("{} {:?} {}", row.id, row.status, row.title);
            }
            for f in report.failures() {
                println!("FAILED {f}");
            }
            Ok(report.exit_code())
        }
        Command::Calibrate { dir } => {
            let opts = SuiteOptions { seed: cli.seed, out_dir: cli.out.clone(), jobs: cli.jobs };
            let cal = calibrate_dir(dir, &opts)?;
            println!("A = {:e}, c = {:e}, B = {:e}", cal.config.a, cal.config.c, cal.config.b);
            for s in cal.infeasible_a.iter().chain(&cal.infeasible_b) {
                println!("infeasible: {s}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
