//! `kumcert`: hypothesis checks for Hasse-principle theorems on Kummer surfaces.
//!
//! Exit codes: 0 hypotheses hold (or a tool succeeded), 1 a hypothesis fails,
//! 2 undecided, 3 input error.

mod commands;
mod config;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use config::Overrides;

#[derive(Parser)]
#[command(name = "kumcert", version, about = "Check the hypotheses of Hasse-principle theorems for Kummer surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hypotheses for z^2 = g1(x) g2(y) with quartics g1, g2 and odd primes w1, w2.
    CheckA(RunArgs),
    /// Hypotheses for the twisted Kummer surface of y^2 = f(x), f a monic quintic.
    CheckB(RunArgs),
    /// Individual module operations.
    Tools {
        #[command(subcommand)]
        tool: Tool,
    },
}

#[derive(Subcommand)]
enum Tool {
    /// Galois group of a cubic, quartic or quintic.
    Galois(RunArgs),
    /// Conditions (a) to (d) for the zero-sum module under S_m.
    Cohomology(RunArgs),
    /// The three quadrics of the twisted Kummer surface.
    KummerEqs(RunArgs),
    /// Local solubility at one place or at every place that needs a computation.
    Locsol(RunArgs),
    /// Smallest auxiliary prime with prescribed Frobenius cycle types.
    FindPrime(RunArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum EffortLevel {
    Low,
    Default,
    High,
}

#[derive(Args)]
struct RunArgs {
    /// Config file (TOML, or JSON); `-` reads stdin.
    #[arg(default_value = "-")]
    config: String,
    /// Write the JSON output here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// RNG seed for randomized searches.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    effort: Option<EffortLevel>,
    /// Run every check even after a failure.
    #[arg(long)]
    keep_going: bool,
}

impl RunArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            seed: self.seed,
            effort: self.effort.map(|e| {
                match e {
                    EffortLevel::Low => "low",
                    EffortLevel::Default => "default",
                    EffortLevel::High => "high",
                }
                .to_string()
            }),
            keep_going: self.keep_going,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (args, result) = match &cli.command {
        Command::CheckA(a) => (a, commands::check_a(&a.config, &a.overrides())),
        Command::CheckB(a) => (a, commands::check_b(&a.config, &a.overrides())),
        Command::Tools { tool } => match tool {
            Tool::Galois(a) => (a, commands::galois(&a.config)),
            Tool::Cohomology(a) => (a, commands::cohomology(&a.config)),
            Tool::KummerEqs(a) => (a, commands::kummer_eqs(&a.config)),
            Tool::Locsol(a) => (a, commands::locsol(&a.config, &a.overrides())),
            Tool::FindPrime(a) => (a, commands::find_prime(&a.config)),
        },
    };
    match result {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.json).expect("output serializes") + "\n";
            match &args.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(3);
                    }
                }
                None => print!("{text}"),
            }
            eprint!("{}", out.summary);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
