//! Command-line front end for the overlapping-IFS laboratory.
//!
//! One static binary with one subcommand per analysis. Primary artifacts
//! are CSV or JSON; they go to `--out` via an atomic rename, or to stdout
//! when no path is given. Every JSON artifact carries `schema: 1` and the
//! configuration that produced it, and reruns of the same command write
//! byte-identical bytes regardless of `--threads`.

#![forbid(unsafe_code)]

mod args;
mod cmd;
mod error;
mod output;
mod specs;

pub use args::{Cli, Command, DEFAULT_SEED};
pub use error::CliError;

use clap::Parser;

/// Parses the process arguments, dispatches, and returns the exit code:
/// 0 on success, 2 for configuration and parse errors, 3 when a resource
/// cap refuses the requested size.
pub fn run() -> i32 {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // A second build_global in one process (tests) is harmless: the
        // first pool wins and the result is ignored.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    let result = match &cli.command {
        Command::Cf(a) => cmd::cf::run(a),
        Command::Phit(a) => cmd::phit::run(a),
        Command::Separation(a) => cmd::separation::run(a),
        Command::Coverage(a) => cmd::coverage::run(a),
        Command::Sweep(a) => cmd::sweep::run(a, cli.seed),
        Command::Families(a) => cmd::families::run(a),
        Command::Pushforward(a) => cmd::pushforward::run(a),
    };
    match result {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
