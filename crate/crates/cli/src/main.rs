use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mimo_lab::runner::{load_config, preset, parse_config, run, write_csv_file, Mode};
use mimo_lab::sim::ExecutionMode;
use mimo_lab::{Error, PowerConvention};

/// Large-system analysis and Monte Carlo simulation of regularized MIMO
/// decoders under imperfect channel knowledge.
#[derive(Parser, Debug)]
#[command(name = "mimo-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Asymptotic predictions only.
    Predict(Args),
    /// Predictions plus Monte Carlo estimates.
    Simulate(Args),
    /// Like simulate, flagging points where the two disagree by more than 3 standard errors.
    Compare(Args),
    /// Optimal pilot/data power split at each point.
    OptimizePower(Args),
    /// Pilot length and power split maximizing goodput.
    OptimizeGoodput(Args),
}

#[derive(clap::Args, Debug)]
struct Args {
    /// Config file, or `preset:<name>` for a shipped one.
    #[arg(long)]
    config: String,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    convention: Option<Convention>,
    /// Run trials on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Convention {
    Energy,
    Direct,
}

fn exit_code(e: &Error) -> u8 {
    if e.is_non_convergence() {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let (mode, args) = match cli.command {
        Command::Predict(a) => (Mode::Predict, a),
        Command::Simulate(a) => (Mode::Simulate, a),
        Command::Compare(a) => (Mode::Compare, a),
        Command::OptimizePower(a) => (Mode::OptimizePower, a),
        Command::OptimizeGoodput(a) => (Mode::OptimizeGoodput, a),
    };

    let spec = match args.config.strip_prefix("preset:") {
        Some(name) => match preset(name) {
            Some(text) => parse_config(text),
            None => Err(Error::config("config", format!("no preset named `{name}`"))),
        },
        None => load_config(&args.config),
    };
    let mut spec = match spec {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(n) = args.trials {
        spec.trials = n;
    }
    if let Some(s) = args.seed {
        spec.master_seed = s;
    }
    if let Some(c) = args.convention {
        spec.base.power_convention = match c {
            Convention::Energy => PowerConvention::EnergyConserving,
            Convention::Direct => PowerConvention::DirectSplit,
        };
    }
    if let Err(e) = spec.base.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }

    let exec = if args.sequential {
        ExecutionMode::Sequential
    } else {
        ExecutionMode::default()
    };
    let out = match run(&spec, mode, exec) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    if let Err(e) = write_csv_file(&out.records, &args.out) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    print!("{}", out.report);

    for e in out.records.iter().filter_map(|r| r.error.as_deref()) {
        eprintln!("row error: {e}");
    }
    if mode == Mode::Compare && out.gate_failures > 0 {
        return ExitCode::from(4);
    }
    if out.records.iter().any(|r| r.non_converged) {
        return ExitCode::from(3);
    }
    ExitCode::SUCCESS
}
