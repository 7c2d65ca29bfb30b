//! Command-line driver. `build` turns a parsed corpus into networks on
//! disk; `balance`, `structure`, and `profile` read those networks back and
//! write JSON reports with CSV plot data next to them. Identical
//! configuration produces byte-identical reports.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod cmd_balance;
mod cmd_build;
mod cmd_profile;
mod cmd_structure;
mod report;

#[derive(Debug, Parser)]
#[command(name = "cognet", version, about = "Lexical network analysis of annotated text corpora")]
struct Cli {
    /// Worker threads for parallel sections; 0 means all available cores.
    /// Results do not depend on this.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse the corpus and write the co-occurrence, SVO, and
    /// free-association networks.
    Build(cmd_build::BuildArgs),
    /// Triangle balance of signed networks against null ensembles.
    Balance(cmd_balance::BalanceArgs),
    /// Giant-component structure: communities, strength tail, hub
    /// shrinkage, focus neighborhood valence.
    Structure(cmd_structure::StructureArgs),
    /// Closeness rankings, rank robustness, and emotion profiles.
    Profile(cmd_profile::ProfileArgs),
}

/// Bad inputs exit 2, failed analyses exit 1. Anything outside the core
/// analysis (unwritable output, bad flags) counts as an input problem.
fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(core) = cause.downcast_ref::<cognet_core::Error>() {
            return if core.is_input_error() { 2 } else { 1 };
        }
    }
    2
}

/// Join the error chain, skipping causes a layer above already spelled out
/// in its own message.
fn render(err: &anyhow::Error) -> String {
    let mut parts: Vec<String> = Vec::new();
    for cause in err.chain() {
        let s = cause.to_string();
        if parts.last().is_some_and(|prev| prev.ends_with(&s)) {
            continue;
        }
        parts.push(s);
    }
    parts.join(": ")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.workers > 0 {
        // Only the first initialization in a process can win; later ones
        // would fail harmlessly.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.workers)
            .build_global();
    }
    let result = match &cli.command {
        Command::Build(args) => cmd_build::run(args),
        Command::Balance(args) => cmd_balance::run(args),
        Command::Structure(args) => cmd_structure::run(args),
        Command::Profile(args) => cmd_profile::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("cognet: {}", render(&err));
            ExitCode::from(exit_code(&err))
        }
    }
}
