use std::io::{self, Write};

use clap::Parser;
use dfmc_cli::{run, Cli, Io};
use tracing_subscriber::EnvFilter;

fn main() {
    tracing_subscriber::fmt()
        .with_writer(io::stderr)
        .with_env_filter(
            EnvFilter::try_from_default_env().unwrap_or_else(|_| EnvFilter::new("info")),
        )
        .with_target(false)
        .init();

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 0 for --help/--version and 2 for usage errors.
        Err(e) => e.exit(),
    };
    // Unlocked handles: the server logs to stderr from worker threads.
    let mut out = io::stdout();
    let mut err = io::stderr();
    let status = run(
        cli,
        &mut Io {
            out: &mut out,
            err: &mut err,
        },
    );
    let _ = out.flush();
    std::process::exit(status.code());
}
