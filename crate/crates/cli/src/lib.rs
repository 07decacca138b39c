//! Command-line front end for `symte-core`.

pub mod args;
pub mod commands;
pub mod ingest;

use std::io::Write;

use args::{Cli, Command};
use commands::{CliError, CliResult};

/// Runs one parsed invocation and writes its output.
pub fn run(cli: &Cli) -> CliResult<()> {
    let (text, output) = match &cli.command {
        Command::Compute(a) => (commands::compute(a)?, a.output.output.as_ref()),
        Command::Trace(a) => (commands::trace(a)?, a.output.output.as_ref()),
        Command::Compare(a) => (commands::compare(a)?, a.output.output.as_ref()),
        Command::Alphabet(a) => (commands::alphabet(a)?, a.output.output.as_ref()),
        Command::Synth(a) => (commands::synth(a)?, a.output.as_ref()),
    };
    let written = match output {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| anyhow::anyhow!("writing {}: {e}", path.display())),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(anyhow::Error::from),
    };
    written.map_err(CliError::Runtime)
}
