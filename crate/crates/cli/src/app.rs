//! Argument parsing and dispatch for the `mcg` binary.

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use mcg_core::conformal::Pattern;
use mcg_core::io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use mcg_core::{Config, Family, FamilySpec, Graph};
use serde::Serialize;
use serde_json::Value;

use crate::corpus::{generate, Corpus, CorpusParams};
use crate::report;
use crate::verify::{verify, Theorem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

#[derive(Debug, Parser)]
#[command(name = "mcg", version, about = "Matching covered graph toolkit")]
pub struct Cli {
    /// Input and output graph format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Edgelist)]
    pub format: Format,
    /// Vertex cap for exhaustive procedures (also caps the embedding search).
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Seed for corpus generation and randomized checks.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Print the JSON report instead of the text summary.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Graph file, or `-` for standard input.
    pub input: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Matching covered?, classification, b(G), solidity, removable classes, family tags.
    Analyze(Input),
    /// Tight cut decomposition into bricks and braces.
    Decompose(Input),
    /// Solidity verdict with witness cut and odd-cycle certificate.
    Solid(Input),
    /// Conformal minor search for one of the fixed patterns.
    Conformal {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_pattern)]
        pattern: Pattern,
    },
    /// Ear decomposition.
    Ears(Input),
    /// Equivalence, minimal and removable classes.
    Classes(Input),
    /// Thin-edge reduction chain down to a terminal brick.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        strict: bool,
    },
    /// Named graph families.
    Family {
        #[command(subcommand)]
        action: FamilyAction,
    },
    /// Writes the seeded corpus to a directory.
    Corpus {
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        sizes: CorpusSizes,
    },
    /// Runs a theorem check over a corpus.
    Verify {
        /// Theorem id, or `all`.
        theorem: String,
        /// Read this corpus directory instead of generating one.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[command(flatten)]
        sizes: CorpusSizes,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamilyAction {
    /// Writes a family member.
    Generate { name: String, n: usize },
    /// Lists family names.
    List,
}

#[derive(Debug, Args)]
pub struct CorpusSizes {
    #[arg(long, default_value_t = 12)]
    pub max_order: usize,
    /// Accepted random cubic graphs before deduplication.
    #[arg(long)]
    pub random_cubic: Option<usize>,
    /// Accepted random G(n, p) graphs before deduplication.
    #[arg(long)]
    pub random_gnp: Option<usize>,
}

impl CorpusSizes {
    fn params(&self, seed: u64) -> CorpusParams {
        let d = CorpusParams::default();
        CorpusParams {
            max_order: self.max_order,
            seed,
            random_cubic: self.random_cubic.unwrap_or(d.random_cubic),
            random_gnp: self.random_gnp.unwrap_or(d.random_gnp),
            ..d
        }
    }
}

fn parse_pattern(s: &str) -> Result<Pattern, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = Pattern::ALL.iter().map(|p| p.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

/// What to print and how the process should exit.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn read_graph(input: &Input, format: Format) -> anyhow::Result<Graph> {
    let text = if input.input.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&input.input)
            .with_context(|| format!("reading {}", input.input.display()))?
    };
    Ok(match format {
        Format::Edgelist => parse_edge_list(&text)?,
        Format::Graph6 => parse_graph6(&text)?,
    })
}

fn render<T: Serialize>(value: &T, json: bool) -> anyhow::Result<String> {
    let v = serde_json::to_value(value)?;
    Ok(if json {
        serde_json::to_string_pretty(&v)? + "\n"
    } else {
        text_summary(&v)
    })
}

/// One `key: value` line per top-level field; long values are summarized.
pub fn text_summary(v: &Value) -> String {
    let Value::Object(map) = v else {
        return format!("{v}\n");
    };
    let mut out = String::new();
    for (k, x) in map {
        let compact = x.to_string();
        let shown = if compact.len() <= 72 {
            compact
        } else {
            match x {
                Value::Array(a) => format!("[{} items]", a.len()),
                Value::Object(o) => format!("{{{} fields}}", o.len()),
                _ => compact,
            }
        };
        out.push_str(&format!("{k}: {shown}\n"));
    }
    out
}

pub fn run(cli: &Cli) -> anyhow::Result<Output> {
    let config = cli.cap.map_or_else(Config::default, Config::with_cap);
    let graph = |i: &Input| read_graph(i, cli.format);
    let text = match &cli.command {
        Command::Analyze(i) => render(&report::analyze(&graph(i)?, &config)?, cli.json)?,
        Command::Decompose(i) => render(&report::decompose(&graph(i)?, &config)?, cli.json)?,
        Command::Solid(i) => render(&report::solid(&graph(i)?, &config)?, cli.json)?,
        Command::Conformal { input, pattern } => render(
            &report::conformal(&graph(input)?, *pattern, &config)?,
            cli.json,
        )?,
        Command::Ears(i) => render(&report::ears(&graph(i)?, &config)?, cli.json)?,
        Command::Classes(i) => render(&report::classes(&graph(i)?, &config)?, cli.json)?,
        Command::Reduce { input, strict } => {
            render(&report::reduce(&graph(input)?, *strict, &config)?, cli.json)?
        }
        Command::Family { action } => match action {
            FamilyAction::List => Family::ALL.iter().map(|f| format!("{f}\n")).collect(),
            FamilyAction::Generate { name, n } => {
                let f: Family = name.parse()?;
                let g = FamilySpec::new(f, *n).generate()?;
                match cli.format {
                    Format::Edgelist => write_edge_list(&g),
                    Format::Graph6 => write_graph6(&g) + "\n",
                }
            }
        },
        Command::Corpus { out, sizes } => {
            let c = generate(&sizes.params(cli.seed));
            c.write(out)
                .with_context(|| format!("writing corpus to {}", out.display()))?;
            render(&c.summary(), cli.json)?
        }
        Command::Verify {
            theorem,
            corpus,
            sizes,
        } => {
            let theorems = if theorem == "all" {
                Theorem::ALL.to_vec()
            } else {
                vec![theorem.parse::<Theorem>()?]
            };
            let c = match corpus {
                Some(dir) => Corpus::read(dir)
                    .with_context(|| format!("reading corpus {}", dir.display()))?,
                None => generate(&sizes.params(cli.seed)),
            };
            let reports: Vec<_> = theorems.iter().map(|&t| verify(t, &c, &config)).collect();
            let code = if reports.iter().all(|r| r.passed()) {
                0
            } else {
                1
            };
            let text = if reports.len() == 1 {
                render(&reports[0], cli.json)?
            } else if cli.json {
                render(&reports, true)?
            } else {
                reports
                    .iter()
                    .map(|r| {
                        format!(
                            "{:<28} checked {:>4}  failures {:>3}  findings {:>3}  {} ms\n",
                            r.theorem.id(),
                            r.checked,
                            r.failures.len(),
                            r.findings.len(),
                            r.runtime_ms
                        )
                    })
                    .collect()
            };
            return Ok(Output { text, code });
        }
    };
    Ok(Output::ok(text))
}
