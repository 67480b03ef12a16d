use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod config;

use config::{Defaults, RunConfig, CONFIG_ENV};

#[derive(Parser, Debug)]
#[command(
    name = "fricke",
    version,
    about = "Character variety dimensions, type C root elements, and the variety round trip"
)]
struct Cli {
    /// TOML file with default settings.
    #[arg(long, global = true, env = CONFIG_ENV)]
    config: Option<PathBuf>,

    /// Also write the JSON report to this file.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Seed for randomized witnesses.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute κ(Γ, n) = dim X_n(Γ).
    Kappa(KappaArgs),
    /// Type C root system checks.
    #[command(subcommand)]
    Chevalley(ChevalleyCommand),
    /// Check ψ∘θ = id on sample points of a variety.
    Realize(RealizeArgs),
}

#[derive(Args, Debug)]
pub struct KappaArgs {
    /// Presentation file, e.g. `<a,b|aba^-1b^-1>`.
    #[arg(long)]
    pub group: PathBuf,
    #[arg(long)]
    pub n: usize,
    /// orbit, elimination, closed-form or all.
    #[arg(long, default_value = "all")]
    pub method: String,
    /// Representation file (JSON) to use as the orbit witness.
    #[arg(long)]
    pub witness: Option<PathBuf>,
    /// Trace-word length bound.
    #[arg(long = "L", short = 'L')]
    pub word_length: Option<usize>,
    /// Maximum number of ambient variables for elimination.
    #[arg(long)]
    pub cap: Option<usize>,
    /// Random witnesses to try when none is given.
    #[arg(long)]
    pub tries: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum ChevalleyCommand {
    /// Verify symplecticity and all commutator identities of C_n.
    Check(ChevalleyArgs),
}

#[derive(Args, Debug)]
pub struct ChevalleyArgs {
    #[arg(long)]
    pub rank: usize,
    /// Highest weight for the Weyl dimension, e.g. `w1`, `w1+2w2` or `1,0`.
    #[arg(long)]
    pub weyl: Option<String>,
    /// Compare the constants against this golden file.
    #[arg(long)]
    pub golden: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct RealizeArgs {
    /// Variety file: ideal format plus optional `points:` lines.
    #[arg(long)]
    pub variety: PathBuf,
    /// The ring inverts 2M.
    #[arg(long = "M")]
    pub modulus: Option<u64>,
    /// Calibration constant in ψ = c − τ.
    #[arg(long)]
    pub c: Option<String>,
    /// Coordinate height for the point search when the file has no points.
    #[arg(long)]
    pub grid_height: Option<i64>,
}

pub enum Failure {
    /// Bad input: exit code 2.
    Input(String),
    /// A check did not hold: exit code 1. The report has been printed.
    Verification(String),
}

fn run(cli: Cli) -> Result<(), Failure> {
    let defaults = Defaults::load(cli.config.as_deref()).map_err(Failure::Input)?;
    let mut cfg = RunConfig {
        command: String::new(),
        inputs: Vec::new(),
        config_file: cli.config.clone(),
        word_length: defaults.word_length.unwrap_or(2),
        cap: defaults
            .cap
            .unwrap_or(fricke_core::charvar::DEFAULT_ELIMINATION_CAP),
        seed: cli.seed.or(defaults.seed).unwrap_or(7),
        tries: defaults.tries.unwrap_or(8),
        modulus: defaults.modulus.unwrap_or(1),
        c: defaults.c.clone().unwrap_or_else(|| "2".into()),
        grid_height: defaults.grid_height.unwrap_or(5),
        output: cli.output.clone(),
    };
    match cli.command {
        Command::Kappa(args) => {
            cfg.command = "kappa".into();
            cfg.inputs.push(args.group.clone());
            cfg.inputs.extend(args.witness.clone());
            cfg.word_length = args.word_length.unwrap_or(cfg.word_length);
            cfg.cap = args.cap.unwrap_or(cfg.cap);
            cfg.tries = args.tries.unwrap_or(cfg.tries);
            commands::kappa(&cfg, &args)
        }
        Command::Chevalley(ChevalleyCommand::Check(args)) => {
            cfg.command = "chevalley check".into();
            cfg.inputs.extend(args.golden.clone());
            commands::chevalley_check(&cfg, &args)
        }
        Command::Realize(args) => {
            cfg.command = "realize".into();
            cfg.inputs.push(args.variety.clone());
            cfg.modulus = args.modulus.unwrap_or(cfg.modulus);
            cfg.c = args.c.clone().unwrap_or(cfg.c);
            cfg.grid_height = args.grid_height.unwrap_or(cfg.grid_height);
            commands::realize(&cfg, &args)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("fricke: verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("fricke: {msg}");
            ExitCode::from(2)
        }
    }
}
