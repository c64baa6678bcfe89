//! JSON front end for the `symplin` library.

pub mod commands;
pub mod doc;
pub mod error;
pub mod json;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::Value;

use commands::Output;
use doc::Document;
use error::{invalid, CliResult};

#[derive(Parser, Debug)]
#[command(name = "symplin", version, about = "Exact symplectic linear algebra on JSON documents")]
pub struct Cli {
    /// Seed for `gen` and `selftest`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Battery size for `selftest`.
    #[arg(long, global = true, default_value = "small", value_parser = ["small", "medium"])]
    pub size: String,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// Inputs are file paths, or `-` for standard input.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a subspace of a symplectic space.
    Classify { space: String, subspace: String },
    /// Canonical and elementary invariants of a coisotropic pair.
    Invariants { pair: String },
    /// Normal form of a pair, or block normal form of a canonical relation.
    NormalForm { input: String },
    /// Decide equivalence of two pairs or two canonical endo-relations.
    Equivalence { left: String, right: String },
    /// The composite `Q ∘ R` (apply `R` first).
    Compose { q: String, r: String },
    /// Factor a canonical relation through its reductions.
    Factorize { relation: String },
    /// Block signature of an endo-relation.
    Towber { relation: String },
    /// Witt-Artin decomposition attached to a subspace.
    WittArtin { space: String, subspace: String },
    /// Darboux basis of a space, or of a symplectic subspace.
    Darboux { space: String, subspace: Option<String> },
    /// Generate a document from a parameter object.
    Gen { params: String },
    /// Run the seeded property battery.
    Selftest,
}

/// Reads inputs, allowing standard input at most once.
struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Inputs<'_> {
    fn json(&mut self, path: &str) -> CliResult<Value> {
        let text = if path == "-" {
            if self.stdin_used {
                return Err(invalid("standard input can be read only once"));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| invalid(format!("reading standard input: {e}")))?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| invalid(format!("{path}: {e}")))?
        };
        serde_json::from_str(&text).map_err(|e| invalid(format!("{path}: malformed JSON: {e}")))
    }

    fn doc(&mut self, path: &str) -> CliResult<Document> {
        let v = self.json(path)?;
        Document::from_json(&v).map_err(|e| match e {
            error::CliError::Invalid(m) => invalid(format!("{path}: {m}")),
            other => other,
        })
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> CliResult<Output> {
    let mut io = Inputs { stdin, stdin_used: false };
    match &cli.command {
        Command::Classify { space, subspace } => commands::classify(io.doc(space)?, io.doc(subspace)?),
        Command::Invariants { pair } => commands::invariants(io.doc(pair)?),
        Command::NormalForm { input } => commands::normal_form(io.doc(input)?),
        Command::Equivalence { left, right } => commands::equivalence(io.doc(left)?, io.doc(right)?),
        Command::Compose { q, r } => commands::compose(io.doc(q)?, io.doc(r)?),
        Command::Factorize { relation } => commands::factorize_cmd(io.doc(relation)?),
        Command::Towber { relation } => commands::towber(io.doc(relation)?),
        Command::WittArtin { space, subspace } => commands::witt_artin(io.doc(space)?, io.doc(subspace)?),
        Command::Darboux { space, subspace } => {
            let space = io.doc(space)?;
            let sub = subspace.as_deref().map(|p| io.doc(p)).transpose()?;
            commands::darboux(space, sub)
        }
        Command::Gen { params } => commands::gen(&io.json(params)?, cli.seed),
        Command::Selftest => commands::selftest(cli.seed, &cli.size),
    }
}

/// Compact JSON with sorted keys and a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values serialize");
    s.push('\n');
    s
}
