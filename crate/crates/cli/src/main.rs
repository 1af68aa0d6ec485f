use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rtclosure::{parse_edge_list, CliError, Method, Outcome};
use rtclosure_core::derivation::RuleSet;

/// Reflexive-transitive closure toolkit.
#[derive(Debug, Parser)]
#[command(name = "rtclosure", version)]
struct Cli {
    /// Read the edge list (or word list for `star-lang`) from FILE instead
    /// of standard input.
    #[arg(short, long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the closure of the input relation, one `x y` pair per line.
    Close {
        #[arg(long, value_enum, default_value = "powers")]
        method: Method,
        /// Emit Graphviz DOT with added edges dashed.
        #[arg(long)]
        dot: bool,
    },
    /// Print a derivation certificate for `X R* Y`.
    Certify { x: String, y: String },
    /// Check a certificate file against the input relation.
    CheckCert {
        certificate: PathBuf,
        #[arg(long)]
        allow_trx: bool,
        #[arg(long)]
        allow_in: bool,
    },
    /// All-pairs shortest distances of a weighted edge list.
    Shortest,
    /// Star of a finite language, truncated at a maximum word length.
    StarLang {
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Run a law suite (`quantale-relation-n2`, `path-tropical`, ...).
    Laws { target: String },
}

fn read_input(path: Option<&PathBuf>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) => text = fs::read_to_string(p).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?,
        None => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let input = cli.input.as_ref();
    let edges = || -> Result<_, CliError> { Ok(parse_edge_list(&read_input(input)?)?) };
    match cli.command {
        Command::Close { method, dot } => Ok(Outcome {
            stdout: rtclosure::cmd_close(&edges()?, method, dot)?,
            ..Outcome::default()
        }),
        Command::Certify { x, y } => rtclosure::cmd_certify(&edges()?, &x, &y),
        Command::CheckCert {
            certificate,
            allow_trx,
            allow_in,
        } => {
            let doc = edges()?;
            let text = read_input(Some(&certificate))?;
            rtclosure::cmd_check_cert(&doc, &text, RuleSet { allow_in, allow_trx })
        }
        Command::Shortest => Ok(Outcome {
            stdout: rtclosure::cmd_shortest(&edges()?)?,
            ..Outcome::default()
        }),
        Command::StarLang { alphabet, max_len } => Ok(Outcome {
            stdout: rtclosure::cmd_star_lang(&alphabet, max_len, &read_input(input)?)?,
            ..Outcome::default()
        }),
        Command::Laws { target } => rtclosure::cmd_laws(&target),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let _ = io::stdout().write_all(out.stdout.as_bytes());
            let _ = io::stderr().write_all(out.stderr.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
