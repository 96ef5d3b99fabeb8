use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::output::Format;

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_SAMPLES: usize = 100;
pub const DEFAULT_VERIFY_PAIRS: usize = 20;
pub const DEFAULT_VERIFY_M: usize = 5;
pub const MAX_VERIFY_M: usize = 7;

/// Optional TOML config; command-line flags take precedence.
#[derive(Clone, Debug, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub max_m: Option<usize>,
    pub format: Option<Format>,
    pub catalog: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
    }
}

/// Resolved settings for one run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: Option<usize>,
    pub max_m: Option<usize>,
    pub format: Format,
    pub catalog: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

fn env_seed() -> Result<Option<u64>, String> {
    match std::env::var("SPINWEAVE_SEED") {
        Ok(s) => s.trim().parse().map(Some).map_err(|_| format!("SPINWEAVE_SEED is not an integer: `{s}`")),
        Err(_) => Ok(None),
    }
}

pub struct Overrides {
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub max_m: Option<usize>,
    pub format: Option<Format>,
    pub catalog: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn resolve(file: FileConfig, flags: Overrides) -> Result<Self, String> {
        let seed = match flags.seed.or(file.seed) {
            Some(s) => s,
            None => env_seed()?.unwrap_or(DEFAULT_SEED),
        };
        let samples = flags.samples.or(file.samples);
        if samples == Some(0) {
            return Err("sample count must be positive".into());
        }
        Ok(RunConfig {
            seed,
            samples,
            max_m: flags.max_m.or(file.max_m),
            format: flags.format.or(file.format).unwrap_or(Format::Json),
            catalog: flags.catalog.or(file.catalog),
            out: flags.out.or(file.out),
        })
    }

    pub fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
}
