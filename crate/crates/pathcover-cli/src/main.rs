//! `pathcover`: stream coverage items and test paths for directed graphs.

use clap::{Parser, Subcommand};
use pathcover_cli::bench::{run_bench, BenchArgs};
use pathcover_cli::run::{run_check, run_cover, run_enumerate, CheckArgs, CoverArgs, EnumerateArgs};

/// Streaming enumeration of path-based coverage items and test paths.
///
/// Exit codes: 0 done, 1 internal failure, 2 invalid input, 3 truncated by
/// a budget, 4 graph is not single-entry single-exit.
#[derive(Parser)]
#[command(name = "pathcover", version, about, long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream coverage items of a graph, one per line.
    Enumerate(EnumerateArgs),
    /// Stream entry-to-exit test paths satisfying a coverage criterion.
    Cover(CoverArgs),
    /// Check that a graph is single-entry single-exit.
    Check(CheckArgs),
    /// Compare enumeration engines under time and item budgets.
    Bench(BenchArgs),
}

fn main() {
    let cli = Cli::parse();
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    let code = match &cli.command {
        Command::Enumerate(args) => run_enumerate(args, &mut out, &mut err),
        Command::Cover(args) => run_cover(args, &mut out, &mut err),
        Command::Check(args) => run_check(args, &mut out, &mut err),
        Command::Bench(args) => run_bench(args, &mut out, &mut err),
    };
    std::process::exit(code);
}
