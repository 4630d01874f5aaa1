use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use clonebound::bounds::Curve;
use clonebound::cloner::PairMember;
use clonebound::harness::{
    cmd_cloner, cmd_sweep, cmd_verify, reports_json, ClonerChoice, ClonerRequest, Suite, SweepSpec,
    VerifySpec, DEFAULT_STEPS,
};

const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(
    name = "clonebound",
    version,
    about = "Bounds for state-dependent N->L cloning"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a curve family on a z grid and write CSV.
    Sweep {
        #[arg(long)]
        curve: Curve,
        #[arg(long)]
        n: usize,
        /// Comma-separated output counts.
        #[arg(long, value_delimiter = ',', required = true)]
        l: Vec<usize>,
        #[arg(long, default_value_t = 0.0)]
        z_min: f64,
        #[arg(long, default_value_t = 1.0)]
        z_max: f64,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build one cloner and report its errors next to the closed forms.
    Cloner {
        #[arg(long)]
        z: f64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        kind: ClonerChoice,
        #[arg(long, default_value = "phi")]
        perfect: PairMember,
        #[arg(long)]
        split: Option<f64>,
        /// Write the JSON here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run randomized property suites.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        trials: usize,
        #[arg(long, env = "CLONEBOUND_SEED")]
        seed: Option<u64>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> clonebound::Result<ExitCode> {
    match command {
        Command::Sweep {
            curve,
            n,
            l,
            z_min,
            z_max,
            steps,
            out,
        } => {
            let spec = SweepSpec {
                curve,
                n,
                l_values: l,
                z_min,
                z_max,
                steps,
            };
            cmd_sweep(&spec, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cloner {
            z,
            n,
            l,
            kind,
            perfect,
            split,
            json,
        } => {
            let req = ClonerRequest {
                z,
                n,
                l,
                kind,
                perfect,
                split,
            };
            let mut text = serde_json::to_string_pretty(&cmd_cloner(&req)?)?;
            text.push('\n');
            match json {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            trials,
            seed,
            dim,
            report,
        } => {
            let spec = VerifySpec {
                suite,
                trials,
                seed: seed.unwrap_or(DEFAULT_SEED),
                dim,
            };
            let reports = cmd_verify(&spec, report.as_deref())?;
            for r in &reports {
                eprintln!(
                    "{:<24} trials {:>7}  failures {:>5}  worst margin {:+.3e}  {:.2}s",
                    r.suite, r.trials, r.failures, r.worst_margin, r.wall_time
                );
            }
            if report.is_none() {
                print!("{}", reports_json(&reports)?);
            }
            Ok(if reports.iter().all(|r| r.passed()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}
