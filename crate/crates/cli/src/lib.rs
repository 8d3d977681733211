//! `dfmc` command-line interface.
//!
//! Payload goes to standard output; diagnostics and logs go to standard
//! error, except for `validate`, whose payload is the diagnostics.
//!
//! # Exit codes
//!
//! - 0: success (warnings alone never fail a command)
//! - 1: the card has error diagnostics
//! - 2: usage, I/O or storage failure

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use dfmc_core::render::{emit_schema, parse_timestamp, to_json, to_markdown, RenderOptions};
use dfmc_core::store::{self, StoreError, StoreLocation};
use dfmc_core::validation::{check_document, has_errors, Diagnostic};
use dfmc_core::vocabulary::{canonicalize, vocabulary, VocabularyId};
use dfmc_core::ModelCard;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Invalid = 1,
    Failure = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Parser)]
#[command(name = "dfmc", version, about = "Digital forensics model card toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and lint a card document.
    Validate {
        /// Card JSON file, or `-` for standard input.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = DiagnosticFormat::Text)]
        format: DiagnosticFormat,
    },
    /// Render a card as JSON or Markdown.
    Render {
        input: PathBuf,
        #[arg(long, value_enum)]
        format: OutputFormat,
        /// Write to this file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Pin the generation time, e.g. 2025-12-01T12:00:00Z.
        #[arg(long)]
        timestamp: Option<String>,
    },
    /// Inspect the controlled vocabularies.
    Vocab {
        #[command(subcommand)]
        action: VocabAction,
    },
    /// Print the card JSON Schema.
    Schema,
    /// Store a card under its MMCID (or a content hash).
    Save {
        input: PathBuf,
        #[arg(long, env = "DFMC_STORE")]
        store: PathBuf,
        /// Replace an existing card with the same id.
        #[arg(long)]
        overwrite: bool,
    },
    /// List stored cards, optionally filtered by forensic domain.
    List {
        #[arg(long, env = "DFMC_STORE")]
        store: PathBuf,
        #[arg(long)]
        domain: Option<String>,
    },
    /// Run the HTTP API.
    Serve {
        #[arg(long, default_value_t = dfmc_service::DEFAULT_PORT)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        #[arg(long, env = "DFMC_STORE")]
        store: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DiagnosticFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Markdown,
}

#[derive(Debug, Subcommand)]
pub enum VocabAction {
    /// Print the vocabulary ids.
    List,
    /// Print a vocabulary's terms, one per line.
    Show { id: String },
}

/// Standard output and standard error for one command run.
pub struct Io<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

/// Runs a parsed command.
pub fn run(cli: Cli, io: &mut Io<'_>) -> ExitStatus {
    let result = match cli.command {
        Command::Validate { input, format } => validate(&input, format, io),
        Command::Render {
            input,
            format,
            output,
            timestamp,
        } => render(&input, format, output.as_deref(), timestamp.as_deref(), io),
        Command::Vocab { action } => vocab(action, io),
        Command::Schema => io
            .out
            .write_all(&emit_schema())
            .map(|_| ExitStatus::Success),
        Command::Save {
            input,
            store,
            overwrite,
        } => save(&input, &store, overwrite, io),
        Command::List { store, domain } => list(&store, domain.as_deref(), io),
        Command::Serve { port, host, store } => serve(&host, port, &store, io),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(io.err, "error: {e}");
        ExitStatus::Failure
    })
}

fn read_input(path: &Path) -> io::Result<Vec<u8>> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        fs::read(path).map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    }
}

fn print_diagnostics(w: &mut dyn Write, diagnostics: &[Diagnostic]) -> io::Result<()> {
    for d in diagnostics {
        writeln!(w, "{d}")?;
    }
    Ok(())
}

/// Reads, parses and lints a card. Diagnostics go to standard error; the
/// card is returned only when there are no error-severity findings.
fn load_card(path: &Path, io: &mut Io<'_>) -> io::Result<Result<ModelCard, ExitStatus>> {
    let bytes = read_input(path)?;
    let (card, diagnostics) = check_document(&bytes);
    print_diagnostics(io.err, &diagnostics)?;
    Ok(match card {
        Some(card) if !has_errors(&diagnostics) => Ok(card),
        _ => Err(ExitStatus::Invalid),
    })
}

fn validate(path: &Path, format: DiagnosticFormat, io: &mut Io<'_>) -> io::Result<ExitStatus> {
    let bytes = read_input(path)?;
    let (_, diagnostics) = check_document(&bytes);
    match format {
        DiagnosticFormat::Text => print_diagnostics(io.out, &diagnostics)?,
        DiagnosticFormat::Json => {
            serde_json::to_writer_pretty(&mut *io.out, &diagnostics)?;
            writeln!(io.out)?;
        }
    }
    Ok(if has_errors(&diagnostics) {
        ExitStatus::Invalid
    } else {
        ExitStatus::Success
    })
}

fn render(
    path: &Path,
    format: OutputFormat,
    output: Option<&Path>,
    timestamp: Option<&str>,
    io: &mut Io<'_>,
) -> io::Result<ExitStatus> {
    let mut opts = RenderOptions::default();
    if let Some(ts) = timestamp {
        match parse_timestamp(ts) {
            Ok(t) => opts.timestamp = Some(t),
            Err(e) => {
                writeln!(io.err, "error: invalid --timestamp `{ts}`: {e}")?;
                return Ok(ExitStatus::Failure);
            }
        }
    }
    let card = match load_card(path, io)? {
        Ok(card) => card,
        Err(status) => return Ok(status),
    };
    let opts = opts.resolved();
    let bytes = match format {
        OutputFormat::Json => to_json(&card, &opts),
        OutputFormat::Markdown => to_markdown(&card, &opts).into_bytes(),
    };
    match output {
        Some(out) => fs::write(out, bytes)
            .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", out.display())))?,
        None => io.out.write_all(&bytes)?,
    }
    Ok(ExitStatus::Success)
}

fn vocab(action: VocabAction, io: &mut Io<'_>) -> io::Result<ExitStatus> {
    match action {
        VocabAction::List => {
            for id in VocabularyId::ALL {
                writeln!(io.out, "{id}")?;
            }
        }
        VocabAction::Show { id } => match vocabulary(&id) {
            Ok(vocab) => {
                for term in vocab.terms {
                    writeln!(io.out, "{}", term.label)?;
                }
            }
            Err(e) => {
                writeln!(io.err, "error: {e}")?;
                return Ok(ExitStatus::Failure);
            }
        },
    }
    Ok(ExitStatus::Success)
}

fn store_failure(e: StoreError, io: &mut Io<'_>) -> io::Result<ExitStatus> {
    match e {
        StoreError::RejectedInvalid(diagnostics) => {
            print_diagnostics(io.err, &diagnostics)?;
            Ok(ExitStatus::Invalid)
        }
        e => {
            writeln!(io.err, "error: {e}")?;
            Ok(ExitStatus::Failure)
        }
    }
}

fn save(path: &Path, root: &Path, overwrite: bool, io: &mut Io<'_>) -> io::Result<ExitStatus> {
    let card = match load_card(path, io)? {
        Ok(card) => card,
        Err(status) => return Ok(status),
    };
    let saved = StoreLocation::create(root)
        .and_then(|loc| store::save(&loc, &card, &RenderOptions::default(), overwrite));
    match saved {
        Ok(id) => {
            writeln!(io.out, "{id}")?;
            Ok(ExitStatus::Success)
        }
        Err(e) => store_failure(e, io),
    }
}

fn list(root: &Path, domain: Option<&str>, io: &mut Io<'_>) -> io::Result<ExitStatus> {
    let filter = match domain.map(|d| canonicalize(VocabularyId::ForensicClassification, d)) {
        None => None,
        Some(Ok(sel)) => Some(sel),
        Some(Err(e)) => {
            writeln!(io.err, "error: --domain: {e}")?;
            return Ok(ExitStatus::Failure);
        }
    };
    let listing =
        match StoreLocation::open(root).and_then(|loc| store::list_cards(&loc, filter.as_ref())) {
            Ok(listing) => listing,
            Err(e) => return store_failure(e, io),
        };
    for skipped in &listing.skipped {
        writeln!(
            io.err,
            "skipped {}: {}",
            skipped.path.display(),
            skipped.reason
        )?;
    }
    for card in &listing.cards {
        let domains: Vec<String> = card
            .classification
            .domains
            .iter()
            .map(ToString::to_string)
            .collect();
        writeln!(io.out, "{}\t{}", card.id, domains.join("; "))?;
    }
    Ok(ExitStatus::Success)
}

fn serve(host: &str, port: u16, root: &Path, io: &mut Io<'_>) -> io::Result<ExitStatus> {
    let loc = match StoreLocation::create(root) {
        Ok(loc) => loc,
        Err(e) => return store_failure(e, io),
    };
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(async {
        let listener = match tokio::net::TcpListener::bind((host, port)).await {
            Ok(l) => l,
            Err(e) => {
                writeln!(io.err, "error: cannot bind {host}:{port}: {e}")?;
                return Ok(ExitStatus::Failure);
            }
        };
        dfmc_service::serve(listener, loc).await?;
        Ok(ExitStatus::Success)
    })
}
