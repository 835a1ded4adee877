//! Command-line front end: parser, corpus generator, commands and reports.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub mod commands;
pub mod corpus;
pub mod parse;
pub mod report;

pub use commands::{parse_rational, run_command, CommandName, CommandOutput, Config};
pub use parse::parse_polynomial;
pub use report::{AnalysisReport, MapSpecText};

use crate::error::Result;
use corpus::CorpusConfig;

#[derive(Debug, Parser)]
#[command(
    name = "planemap",
    version,
    about = "Exact analysis of polynomial maps of the plane"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jacobian, monic form, parametric resultant, geometric degree, non-properness set
    Analyze(MapArgs),
    /// Everything `analyze` reports plus the resultant inversion test
    Invert(MapArgs),
    /// Puiseux branches at infinity of the fibers p = c
    Puiseux(MapArgs),
    /// Bounded branches of the fibers p = c with their Laurent coefficients
    Probe(MapArgs),
    /// Critical values of both kinds over the lines u = c
    Classify(MapArgs),
    /// Seeded random tame automorphisms, one `p ; q` per line
    Corpus(CorpusArgs),
}

#[derive(Debug, Args)]
pub struct MapArgs {
    #[arg(long)]
    pub p: String,
    #[arg(long)]
    pub q: String,
    /// Fiber value; repeatable
    #[arg(long = "c", allow_hyphen_values = true)]
    pub c: Vec<String>,
    /// Truncation order of Puiseux series
    #[arg(long, env = "ORDER", default_value_t = 16)]
    pub order: u32,
    /// Largest total degree handed to the Kronecker irreducibility test
    #[arg(long, env = "KRONECKER_BOUND", default_value_t = 8)]
    pub kronecker_bound: u32,
    /// Decimal digits of numeric roots
    #[arg(long, default_value_t = 12)]
    pub precision: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long)]
    pub json: bool,
    /// Include wall-clock timing (makes output run-dependent)
    #[arg(long)]
    pub timing: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    #[arg(long, env = "SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Maximal number of generators composed
    #[arg(long, default_value_t = 5)]
    pub depth: usize,
    /// Coefficient height
    #[arg(long, default_value_t = 3)]
    pub height: i64,
    #[arg(long, default_value_t = 16)]
    pub max_degree: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// What a command produced and where it should go.
#[derive(Debug)]
pub struct Rendered {
    pub body: String,
    pub out: Option<PathBuf>,
    pub json: bool,
}

impl Cli {
    /// Runs the parsed command and renders its output.
    pub fn execute(&self) -> Result<Rendered> {
        let (name, args) = match &self.command {
            Command::Corpus(a) => {
                let cfg = Config {
                    corpus: CorpusConfig {
                        count: a.count,
                        depth: a.depth,
                        height: a.height,
                        max_degree: a.max_degree,
                        seed: a.seed,
                    },
                    ..Config::default()
                };
                let body = match run_command(CommandName::Corpus, None, &cfg)? {
                    CommandOutput::Corpus(text) => text,
                    CommandOutput::Report(r) => r.to_json(),
                };
                return Ok(Rendered {
                    body,
                    out: a.out.clone(),
                    json: false,
                });
            }
            Command::Analyze(a) => (CommandName::Analyze, a),
            Command::Invert(a) => (CommandName::Invert, a),
            Command::Puiseux(a) => (CommandName::Puiseux, a),
            Command::Probe(a) => (CommandName::Probe, a),
            Command::Classify(a) => (CommandName::Classify, a),
        };
        let cfg = Config {
            order: args.order,
            kronecker_bound: args.kronecker_bound,
            fibers: args
                .c
                .iter()
                .map(|c| parse_rational(c))
                .collect::<Result<_>>()?,
            precision: args.precision,
            timing: args.output.timing,
            ..Config::default()
        };
        let spec = MapSpecText {
            p: args.p.clone(),
            q: args.q.clone(),
        };
        let output = run_command(name, Some(&spec), &cfg)?;
        let report = output.report().expect("map commands produce reports");
        Ok(Rendered {
            body: if args.output.json {
                report.to_json()
            } else {
                report.to_text()
            },
            out: args.output.out.clone(),
            json: args.output.json,
        })
    }

    pub fn wants_json(&self) -> bool {
        match &self.command {
            Command::Corpus(_) => false,
            Command::Analyze(a)
            | Command::Invert(a)
            | Command::Puiseux(a)
            | Command::Probe(a)
            | Command::Classify(a) => a.output.json,
        }
    }
}
