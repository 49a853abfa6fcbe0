//! Command-line front end for scenario files.
//!
//! Exit status: 0 when every check passes (warnings allowed), 1 when a check
//! fails or a run aborts, 2 when the configuration is invalid.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pryce_spin::scenario::{
    load_config, run_converge, run_gallery, run_simulate, run_verify_algebra, run_verify_fg, AlgebraBlock, Mode,
    RunReport, ScenarioConfig,
};
use pryce_spin::Error;

#[derive(Parser)]
#[command(name = "pryce-spin", version, about = "Spin-dependent mass centers of the Dirac electron")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// scenario file (TOML)
    #[arg(long)]
    config: Option<PathBuf>,
    /// output directory
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// also write gnuplot two-column files
    #[arg(long)]
    plot: bool,
    /// seed for random momentum samples
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// integrate a classical scenario and write trajectory.csv
    Simulate(Common),
    /// check the expectation-value relations of a wave packet
    VerifyFg(Common),
    /// check the Dirac-algebra identities at random momenta
    VerifyAlgebra(Common),
    /// refinement ladder with observed orders
    Converge(Common),
    /// run the shipped scenarios
    Gallery(Common),
}

fn load(common: &Common, mode: Mode) -> Result<ScenarioConfig, Error> {
    let path = common
        .config
        .as_ref()
        .ok_or_else(|| Error::Config("--config is required for this subcommand".into()))?;
    let cfg = load_config(path)?;
    if cfg.mode != mode {
        return Err(Error::Config(format!(
            "{}: mode is '{}', expected '{}'",
            path.display(),
            cfg.mode.as_str(),
            mode.as_str()
        )));
    }
    Ok(cfg)
}

fn run(command: &Command) -> Result<RunReport, Error> {
    match command {
        Command::Simulate(c) => Ok(run_simulate(&load(c, Mode::Simulate)?, Some(&c.out), c.plot)?.report),
        Command::VerifyFg(c) => Ok(run_verify_fg(&load(c, Mode::VerifyFg)?, c.seed, Some(&c.out))?.report),
        Command::VerifyAlgebra(c) => {
            let (mut block, mass) = match &c.config {
                Some(_) => {
                    let cfg = load(c, Mode::VerifyAlgebra)?;
                    (cfg.algebra.clone().unwrap_or_default(), cfg.mass)
                }
                None => (AlgebraBlock::default(), 1.0),
            };
            if let Some(seed) = c.seed {
                block.seed = seed;
            }
            let report = run_verify_algebra(&block, mass)?;
            std::fs::create_dir_all(&c.out)?;
            std::fs::write(c.out.join("report.txt"), report.to_string())?;
            std::fs::write(c.out.join("report.toml"), report.to_toml())?;
            Ok(report)
        }
        Command::Converge(c) => {
            let result = run_converge(&load(c, Mode::Converge)?, Some(&c.out))?;
            print!("{}", result.table);
            Ok(result.report)
        }
        Command::Gallery(c) => Ok(run_gallery(Some(&c.out), c.plot)?.1),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            print!("{report}");
            ExitCode::from(report.exit_code())
        }
        Err(e @ (Error::Config(_) | Error::LadderTooShort(_))) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
