use cartan_cli::runner::{run, RunOptions};
use cartan_cli::{catalog, config::RunConfig, gapcmd, SEED_ENV_VAR};
use clap::{Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

/// Classical bounded symmetric domains: explicit holomorphic maps and
/// numerical verification of their identities.
#[derive(Parser)]
#[command(name = "cartan", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every buildable map family with its parameter ranges.
    ListFamilies {
        /// Emit the catalog as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run the checks described by a JSON config, one report per line.
    Verify {
        /// Path to the run config.
        #[arg(long)]
        config: PathBuf,
        /// Base seed (precedence: this flag, then CARTAN_SEED, then the
        /// config, then the built-in default).
        #[arg(long)]
        seed: Option<u64>,
        /// Override every job's sample count.
        #[arg(long)]
        samples: Option<usize>,
        /// Override the functional-equation tolerance.
        #[arg(long = "tol-isometry")]
        tol_isometry: Option<f64>,
        /// Emit one JSON object per report line instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print the gap intervals for minimum proper monomial maps.
    Gap {
        /// Source ball dimension (must exceed 2).
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::ListFamilies { json } => {
            let families = catalog::catalog();
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            if json {
                let text = serde_json::to_string_pretty(&families).expect("catalog serializes");
                let _ = writeln!(out, "{text}");
            } else {
                for f in families {
                    let _ = writeln!(
                        out,
                        "{:<18} {:<22} {} -> {}\n{:<18} {}",
                        f.name, f.group, f.source, f.target, "", f.params
                    );
                }
            }
            ExitCode::SUCCESS
        }
        Command::Verify {
            config,
            seed,
            samples,
            tol_isometry,
            json,
        } => {
            let text = match std::fs::read_to_string(&config) {
                Ok(text) => text,
                Err(e) => {
                    eprintln!("cannot read {}: {e}", config.display());
                    return ExitCode::from(2);
                }
            };
            let parsed = match RunConfig::from_json(&text) {
                Ok(parsed) => parsed,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(2);
                }
            };
            let env_seed = std::env::var(SEED_ENV_VAR)
                .ok()
                .and_then(|s| s.parse::<u64>().ok());
            let opts = RunOptions {
                seed_flag: seed,
                env_seed,
                samples_override: samples,
                tol_isometry_override: tol_isometry,
                json,
            };
            let stdout = std::io::stdout();
            let stderr = std::io::stderr();
            let status = run(&parsed, &opts, &mut stdout.lock(), &mut stderr.lock());
            ExitCode::from(status.exit_code() as u8)
        }
        Command::Gap { n } => match gapcmd::gap_json(n) {
            Ok(text) => {
                println!("{text}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("{e}");
                ExitCode::from(2)
            }
        },
    }
}
