//! Command-line front end. Exit codes: 0 when every requested check passes,
//! 1 on a check failure, 2 on an input or usage error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::analysis::{analyze, orbit_summary, rank_invariance, Options};
use crate::catalog::{catalog_entries, find_entry, run_entry};
use crate::error::Error;
use crate::normalizer::normalizer_report;
use crate::problem::Problem;
use crate::report::{self, envelope};
use crate::spherical::{
    adapted_parabolic, compact_transitivity_check, complementary_subsets, conjugate_search, is_spherical, lst_report,
    SearchOutcome, SphericalPair,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "sphercert", version, about = "Exact structure certificates for real spherical pairs")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct GlobalArgs {
    /// Budget of candidate conjugations tried when the base point is not open.
    #[arg(long = "conjugate-search", global = true, default_value_t = 0)]
    pub conjugate_search: usize,
    /// Seed for all sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Sample count for orbit and transitivity checks.
    #[arg(long, global = true, default_value_t = 100)]
    pub samples: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full analysis: openness, adapted parabolic, structure checks, rank, normalizer, orbit identity.
    Analyze { file: PathBuf },
    /// The adapted parabolic and its uniqueness count.
    Adapted {
        file: PathBuf,
        /// List every subset passing the complementarity test.
        #[arg(long)]
        list_candidates: bool,
    },
    /// Real rank with the decomposition of a.
    Rank { file: PathBuf },
    /// Normalizer and its splitting.
    Normalizer { file: PathBuf },
    /// Forward and inverse checks of the nilpotent orbit identity.
    OrbitCheck { file: PathBuf },
    /// Sampled test of h + Ad(g)p = g against the compactness of h.
    Transitivity { file: PathBuf },
    /// Rank of random openness-preserving conjugates.
    RankInvariance {
        file: PathBuf,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
    /// Built-in pairs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// List entry names.
    List,
    /// Run one entry or `all` against its frozen expectations.
    Run { name: String },
    /// Print an entry as a problem file.
    Export { name: String },
}

fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. }
            | Error::Io(_)
            | Error::UnknownEntry(_)
            | Error::DimensionMismatch { .. }
            | Error::MatrixShape { .. }
            | Error::DependentBasis { .. }
            | Error::NotClosed { .. }
            | Error::ThetaNotPreserving { .. }
            | Error::ThetaNotInvolutive
            | Error::ThetaNotAutomorphism { .. }
            | Error::SeedNotInS
            | Error::NotAbelian
            | Error::IrrationalSpectrum { .. }
            | Error::NotSemisimple { .. }
            | Error::BadPositivity
            | Error::NotSubalgebra
    )
}

/// Output of a command: the report and the exit code.
pub struct Outcome {
    pub report: Value,
    pub code: i32,
}

fn options(g: &GlobalArgs) -> Options {
    Options { conjugate_search: g.conjugate_search, seed: g.seed, samples: g.samples }
}

/// Loads a problem and applies the conjugate search if requested.
fn load(file: &Path, g: &GlobalArgs) -> Result<(SphericalPair, Option<SearchOutcome>), Error> {
    let pair = Problem::from_path(file)?.build()?;
    if is_spherical(&pair).spherical || g.conjugate_search == 0 {
        return Ok((pair, None));
    }
    let outcome = conjugate_search(&pair, g.conjugate_search, g.seed)?;
    let working = match &outcome {
        SearchOutcome::Found { pair, .. } => (**pair).clone(),
        SearchOutcome::Inconclusive { .. } => pair,
    };
    Ok((working, Some(outcome)))
}

fn name_of(pair: &SphericalPair) -> String {
    pair.label.clone().unwrap_or_else(|| "problem".into())
}

fn code(passed: bool) -> i32 {
    if passed {
        EXIT_PASS
    } else {
        EXIT_CHECK_FAILED
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let ga = &cli.global;
    match &cli.command {
        Command::Analyze { file } => {
            let pair = Problem::from_path(file)?.build()?;
            let analysis = analyze(&pair, &options(ga))?;
            let passed = analysis.ok();
            Ok(Outcome { report: envelope("analyze", &name_of(&pair), report::analysis_body(&analysis)), code: code(passed) })
        }
        Command::Adapted { file, list_candidates } => {
            let (pair, search) = load(file, ga)?;
            let sph = is_spherical(&pair);
            let mut body = Map::new();
            body.insert("spherical".into(), json!(sph.spherical));
            body.insert("defect".into(), json!(sph.defect));
            if let Some(s) = &search {
                body.insert("conjugate_search".into(), report::search_value(&pair.g, s));
            }
            let candidates: Vec<Vec<usize>> = complementary_subsets(&pair)?.into_iter().map(|q| q.subset).collect();
            body.insert("candidates_passing".into(), json!(candidates.len()));
            if *list_candidates {
                body.insert("candidates".into(), json!(candidates));
            }
            let passed = match adapted_parabolic(&pair) {
                Ok(a) => {
                    body.insert("adapted_subset".into(), json!(a.parabolic.subset));
                    body.insert("dim_u".into(), json!(a.parabolic.u.dim()));
                    true
                }
                Err(e @ (Error::NotSpherical { .. } | Error::NotUnique { .. })) => {
                    body.insert("adapted_subset".into(), Value::Null);
                    body.insert("error".into(), json!(e.to_string()));
                    false
                }
                Err(e) => return Err(e),
            };
            Ok(Outcome { report: envelope("adapted", &name_of(&pair), body), code: code(passed) })
        }
        Command::Rank { file } => {
            let (pair, search) = load(file, ga)?;
            let lst = lst_report(&pair)?;
            let mut body = Map::new();
            if let Some(s) = &search {
                body.insert("conjugate_search".into(), report::search_value(&pair.g, s));
            }
            body.insert("local_structure".into(), report::lst_value(&pair.g, &lst));
            Ok(Outcome { report: envelope("rank", &name_of(&pair), body), code: code(lst.ok()) })
        }
        Command::Normalizer { file } => {
            let (pair, _) = load(file, ga)?;
            let n = normalizer_report(&pair)?;
            let mut body = Map::new();
            body.insert("normalizer".into(), report::normalizer_value(&pair.g, &n));
            Ok(Outcome { report: envelope("normalizer", &name_of(&pair), body), code: code(n.all_ok()) })
        }
        Command::OrbitCheck { file } => {
            let (pair, _) = load(file, ga)?;
            let lst = lst_report(&pair)?;
            let o = orbit_summary(&pair, &lst, ga.samples, ga.seed)?;
            let mut body = Map::new();
            body.insert("orbit".into(), report::orbit_value(&pair.g, &o));
            Ok(Outcome { report: envelope("orbit-check", &name_of(&pair), body), code: code(o.ok()) })
        }
        Command::Transitivity { file } => {
            let (pair, _) = load(file, ga)?;
            let t = compact_transitivity_check(&pair, ga.samples, ga.seed)?;
            let mut body = Map::new();
            body.insert("transitivity".into(), report::transitivity_value(&t));
            Ok(Outcome { report: envelope("transitivity", &name_of(&pair), body), code: EXIT_PASS })
        }
        Command::RankInvariance { file, count } => {
            let (pair, _) = load(file, ga)?;
            let r = rank_invariance(&pair, *count, ga.seed)?;
            let mut body = Map::new();
            body.insert("rank_invariance".into(), report::rank_invariance_value(&r));
            Ok(Outcome { report: envelope("rank-invariance", &name_of(&pair), body), code: code(r.invariant()) })
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let entries: Vec<Value> = catalog_entries()
                    .iter()
                    .map(|e| json!({ "name": e.name, "description": e.description }))
                    .collect();
                let mut body = Map::new();
                body.insert("entries".into(), Value::Array(entries));
                Ok(Outcome { report: envelope("catalog list", "catalog", body), code: EXIT_PASS })
            }
            CatalogAction::Run { name } => {
                let entries = if name == "all" { catalog_entries() } else { vec![find_entry(name)?] };
                let mut runs = Vec::new();
                let mut all = true;
                for e in &entries {
                    let run = run_entry(e, ga.seed, ga.samples)?;
                    all &= run.passed();
                    runs.push(run);
                }
                let report = if ga.format == Format::Json {
                    let mut body = Map::new();
                    body.insert("entries".into(), Value::Array(runs.iter().map(report::entry_value).collect()));
                    body.insert("passed".into(), json!(all));
                    envelope("catalog run", name, body)
                } else {
                    let lines: Vec<Value> = runs
                        .iter()
                        .map(|r| {
                            let status = if r.passed() { "PASS" } else { "FAIL" };
                            let detail = if r.passed() { String::new() } else { format!(" ({})", r.mismatches.join("; ")) };
                            json!(format!("{status} {}{detail}", r.name))
                        })
                        .collect();
                    Value::Array(lines)
                };
                Ok(Outcome { report, code: code(all) })
            }
            CatalogAction::Export { name } => Ok(Outcome { report: find_entry(name)?.problem().to_value(), code: EXIT_PASS }),
        },
    }
}

/// Runs the CLI on `argv`, writing to the given streams; returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let is_info = matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion);
            let _ = if is_info { write!(out, "{e}") } else { write!(err, "{e}") };
            return if is_info { EXIT_PASS } else { EXIT_INPUT_ERROR };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let export = matches!(cli.command, Command::Catalog { action: CatalogAction::Export { .. } });
            let text = if cli.global.format == Format::Json || export {
                serde_json::to_string_pretty(&outcome.report).expect("serializable") + "\n"
            } else if let Value::Array(lines) = &outcome.report {
                lines.iter().map(|l| format!("{}\n", l.as_str().unwrap_or_default())).collect()
            } else {
                report::render_text(&outcome.report)
            };
            let _ = out.write_all(text.as_bytes());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if is_input_error(&e) {
                EXIT_INPUT_ERROR
            } else {
                EXIT_CHECK_FAILED
            }
        }
    }
}
