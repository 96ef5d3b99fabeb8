//! `spinweave` command-line tool.

mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;
use spinweave::{
    bundles, suite, Aggregate, Catalog, CheckReport, FrameGroup, RepKind, Representation, Signature, SpinSpace,
};

use config::{FileConfig, Overrides, RunConfig};
use output::Format;

#[derive(Parser, Debug)]
#[command(name = "spinweave", version, about = "Exact spinor representations and spin-structure checks")]
struct Cli {
    /// TOML config file; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for sampled checks; falls back to SPINWEAVE_SEED.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a representation and print its generator images.
    Build {
        #[arg(long)]
        sig: Signature,
        #[arg(long)]
        kind: RepKind,
    },
    /// Run the algebra, group and Lipschitz suites.
    Verify {
        #[arg(long, conflicts_with = "sig")]
        max_m: Option<usize>,
        #[arg(long)]
        sig: Option<Signature>,
    },
    /// Obstruction table for catalog manifolds.
    Obstructions {
        #[arg(long)]
        catalog: Option<PathBuf>,
        manifold: Option<String>,
    },
    /// Sampled checks of the bundle examples.
    Examples {
        name: Example,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        sig: Option<Signature>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Example {
    Sphere,
    Projective,
    Quadric,
    Exterior,
    Hermitean,
    Associated,
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<spinweave::Error> for Failure {
    fn from(e: spinweave::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

#[derive(serde::Serialize)]
struct Envelope<'a, T: serde::Serialize> {
    schema: u32,
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    implications_hold: Option<bool>,
    #[serde(flatten)]
    body: T,
}

fn envelope<'a, T: serde::Serialize>(command: &'a str, body: T) -> Envelope<'a, T> {
    Envelope { schema: spinweave::SCHEMA_VERSION, command, implications_hold: None, body }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes") + "\n"
}

fn finish(agg: Aggregate, rc: &RunConfig) -> Result<(), Failure> {
    let text = match rc.format {
        Format::Json => to_json(&agg),
        Format::Table => output::aggregate_table(&agg),
    };
    output::emit(&text, rc.out.as_deref())?;
    if agg.all_passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn cmd_build(sig: Signature, kind: RepKind, rc: &RunConfig) -> Result<(), Failure> {
    let rep = Representation::build(sig, kind)?;
    let text = match rc.format {
        Format::Json => to_json(&envelope("build", json!({"representation": rep}))),
        Format::Table => output::representation_table(&rep),
    };
    output::emit(&text, rc.out.as_deref())?;
    Ok(())
}

fn cmd_verify(max_m: Option<usize>, sig: Option<Signature>, rc: &RunConfig) -> Result<(), Failure> {
    let sigs = match sig {
        Some(s) => vec![s],
        None => {
            let m = max_m.or(rc.max_m).unwrap_or(config::DEFAULT_VERIFY_M);
            if m > config::MAX_VERIFY_M {
                return Err(Failure::Usage(format!("--max-m is capped at {}", config::MAX_VERIFY_M)));
            }
            Signature::all_up_to(m)
        }
    };
    let pairs = rc.samples_or(config::DEFAULT_VERIFY_PAIRS);
    let results: Vec<spinweave::Result<Vec<CheckReport>>> =
        sigs.par_iter().map(|s| suite::verify_signature(*s, pairs, rc.seed)).collect();
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    finish(Aggregate::new("verify", reports), rc)
}

fn cmd_obstructions(catalog: Option<PathBuf>, manifold: Option<String>, rc: &RunConfig) -> Result<(), Failure> {
    let cat = match catalog.or_else(|| rc.catalog.clone()) {
        Some(p) => {
            let text = std::fs::read_to_string(&p).map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            Catalog::from_json(&text)?
        }
        None => Catalog::builtin(),
    };
    let selected: Vec<_> = match &manifold {
        Some(name) => vec![cat.find(name).ok_or_else(|| format!("unknown manifold `{name}`"))?],
        None => cat.manifolds.iter().collect(),
    };
    let rows: Vec<_> = selected.iter().map(|m| m.obstructions()).collect();
    let consistent = rows.iter().all(|r| r.implications_hold());
    let text = match rc.format {
        Format::Json => to_json(&Envelope {
            implications_hold: Some(consistent),
            ..envelope("obstructions", json!({"rows": rows}))
        }),
        Format::Table => output::obstruction_table(&rows),
    };
    output::emit(&text, rc.out.as_deref())?;
    if consistent {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn signatures_for(sig: Option<Signature>, m: usize) -> Result<Vec<Signature>, Failure> {
    if let Some(s) = sig {
        return Ok(vec![s]);
    }
    if m == 0 {
        return Err(Failure::Usage("--m must be positive".into()));
    }
    Ok(Signature::all_up_to(m).into_iter().filter(|s| s.dim() == m).collect())
}

fn cmd_examples(name: Example, m: Option<usize>, sig: Option<Signature>, rc: &RunConfig) -> Result<(), Failure> {
    let samples = rc.samples_or(config::DEFAULT_SAMPLES);
    let seed = rc.seed;
    let reports = match name {
        Example::Sphere => bundles::sphere_checks(m.unwrap_or(2), samples, seed)?,
        Example::Projective => bundles::projective_checks(m.unwrap_or(2), samples, seed)?,
        Example::Quadric => bundles::quadric_checks(samples, seed)?,
        Example::Exterior => signatures_for(sig, m.unwrap_or(4))?.into_iter().map(bundles::exterior_check).collect(),
        Example::Hermitean => {
            let d = m.unwrap_or(2);
            if d == 0 {
                return Err(Failure::Usage("--m must be positive".into()));
            }
            vec![bundles::hermitean_check(d)]
        }
        Example::Associated => {
            let mut out = Vec::new();
            for s in signatures_for(sig, m.unwrap_or(3))? {
                let ss = SpinSpace::standard(s)?;
                let g = FrameGroup::generate(&ss)?;
                out.extend(bundles::associated_tau_welldefined(&ss, &g)?);
            }
            out
        }
    };
    finish(Aggregate::new(format!("examples {}", name.to_possible_value().expect("named").get_name()), reports), rc)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let file = match &cli.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let rc = RunConfig::resolve(
        file,
        Overrides {
            seed: cli.seed,
            samples: cli.samples,
            max_m: None,
            format: cli.format,
            catalog: None,
            out: cli.out,
        },
    )?;
    match cli.command {
        Command::Build { sig, kind } => cmd_build(sig, kind, &rc),
        Command::Verify { max_m, sig } => cmd_verify(max_m, sig, &rc),
        Command::Obstructions { catalog, manifold } => cmd_obstructions(catalog, manifold, &rc),
        Command::Examples { name, m, sig } => cmd_examples(name, m, sig, &rc),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
