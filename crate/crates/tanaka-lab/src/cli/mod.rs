//! Command-line front end: configuration, JSON reports and the acceptance
//! driver. The binary only parses arguments and calls [`run`] and [`emit`].

mod acceptance;
mod commands;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use acceptance::{run_suite, suite_json, Criterion, SuiteReport};
pub use commands::{load_distribution, parse_model, ModelSpec};

use crate::abnormal::AbnormalError;
use crate::dist::DistError;
use crate::flags::FlagsError;
use crate::liecore::{LieError, ProlongError};
use crate::poly::IdealError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug, Clone)]
#[command(name = "tanaka-lab", version, about = "Exact symbol, prolongation and flag computations for rank-3 distributions")]
pub struct RunConfig {
    /// Seed for covector sampling; echoed in every report.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct KlArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub l: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Growth,
    Fields,
    Algebra,
}

#[derive(Args, Debug, Clone)]
pub struct SourceArgs {
    /// `flat:K,L`
    #[arg(long, conflicts_with = "fields")]
    pub model: Option<String>,
    /// JSON DistributionSpec.
    #[arg(long)]
    pub fields: Option<PathBuf>,
    /// JSON array of rationals, inline or in a file; defaults to the origin.
    #[arg(long)]
    pub point: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Left-invariant realization of the flat model m_{k,l}.
    FlatModel {
        #[command(flatten)]
        kl: KlArgs,
        #[arg(long, value_enum, default_value_t = Emit::Growth)]
        emit: Emit,
    },
    /// Small growth vector at a point.
    Growth {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long, default_value_t = 8)]
        max_step: usize,
    },
    /// Flag of abnormal extremals and Young-diagram type.
    Diagram {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
    /// The symbol s_{k,l} with optional prolongation and Poisson cross-checks.
    Symbol {
        #[command(flatten)]
        kl: KlArgs,
        #[arg(long)]
        check_prolongation: bool,
        #[arg(long)]
        cross_check_poisson: bool,
    },
    /// Modified prolongation tower against the Tanaka prolongation.
    Prolong {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        l: usize,
        /// Use the full csp(V) or, with `--diagonal`, the diagonal algebra on V = R^n.
        #[arg(long, conflicts_with = "k")]
        csp: Option<usize>,
        #[arg(long, requires = "csp")]
        diagonal: bool,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// dim G_{k,l} by degree.
    Gdim {
        #[command(flatten)]
        kl: KlArgs,
    },
    /// Degree-d piece of the ideal of a curve, tangential or secant variety.
    Ideal {
        #[arg(long)]
        r: usize,
        /// `curve`, `tangential:B` or `secant:S,B`
        #[arg(long)]
        variety: String,
        #[arg(long)]
        degree: u32,
    },
    /// B-matrix identities over 2..=k_max × 0..=l_max.
    Bsuite {
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        #[arg(long, default_value_t = 4)]
        l_max: usize,
    },
    /// The acceptance suite.
    Selftest,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid parameters: {0}")]
    Invalid(String),
    #[error("{code}: {message}")]
    Domain { code: &'static str, message: String },
    #[error("sampling budget exhausted: {0}")]
    Budget(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Budget(_) => 3,
            _ => 1,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Invalid(_) => "invalid_params",
            CliError::Domain { code, .. } => code,
            CliError::Budget(_) => "sampling_budget",
            CliError::Io(_) => "io",
        }
    }
}

macro_rules! domain {
    ($t:ty, $code:literal) => {
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain {
                    code: $code,
                    message: e.to_string(),
                }
            }
        }
    };
}
domain!(FlagsError, "flags");
domain!(ProlongError, "prolongation");
domain!(DistError, "distribution");
domain!(IdealError, "ideal");
domain!(LieError, "lie_algebra");

impl From<AbnormalError> for CliError {
    fn from(e: AbnormalError) -> Self {
        match e {
            AbnormalError::Budget(_) => CliError::Budget(e.to_string()),
            other => CliError::Domain {
                code: "abnormal",
                message: other.to_string(),
            },
        }
    }
}

/// Exit status and report of one invocation.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: Value,
}

/// Caps rayon's global pool at TANAKA_LAB_THREADS when set.
pub fn configure_threads() {
    if let Some(n) = std::env::var("TANAKA_LAB_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // A second initialization (tests) is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

pub fn run(config: &RunConfig) -> Outcome {
    configure_threads();
    match commands::dispatch(config) {
        Ok((exit_code, mut report)) => {
            report["seed"] = json!(config.seed);
            Outcome { exit_code, report }
        }
        Err(e) => Outcome {
            exit_code: e.exit_code(),
            report: json!({
                "seed": config.seed,
                "error": {"code": e.code(), "message": e.to_string()},
            }),
        },
    }
}

fn text_lines(v: &Value, prefix: &str, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                text_lines(x, &p, out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            out.push(format!("{prefix}: [{}]", items.join(", ")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                text_lines(x, &format!("{prefix}[{i}]"), out);
            }
        }
        _ => out.push(format!("{prefix}: {}", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Renders the report; the selftest table gets one `PASS`/`FAIL` line per criterion.
pub fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("serializable") + "\n",
        Format::Text => {
            if let Some(rows) = report.get("criteria").and_then(|c| c.as_array()) {
                let mut s = String::new();
                for c in rows {
                    let tag = if c["pass"].as_bool() == Some(true) { "PASS" } else { "FAIL" };
                    s += &format!("{tag} {:>2} {}\n", c["id"], scalar(&c["title"]));
                }
                return s;
            }
            let mut lines = Vec::new();
            text_lines(report, "", &mut lines);
            lines.join("\n") + "\n"
        }
    }
}

pub fn emit(outcome: &Outcome, config: &RunConfig) -> std::io::Result<()> {
    let s = render(&outcome.report, config.format);
    match &config.output {
        Some(p) => std::fs::write(p, s),
        None => std::io::stdout().write_all(s.as_bytes()),
    }
}
