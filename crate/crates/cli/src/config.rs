//! Defaults from an optional TOML file, overridden by command-line flags.
//!
//! ```toml
//! word_length = 2
//! cap = 16
//! seed = 7
//! tries = 8
//! modulus = 1
//! c = "2"
//! grid_height = 5
//! ```

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

pub const CONFIG_ENV: &str = "FRICKE_CONFIG";

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Defaults {
    pub word_length: Option<usize>,
    pub cap: Option<usize>,
    pub seed: Option<u64>,
    pub tries: Option<usize>,
    pub modulus: Option<u64>,
    pub c: Option<String>,
    pub grid_height: Option<i64>,
}

impl Defaults {
    pub fn load(path: Option<&Path>) -> Result<Self, String> {
        let Some(path) = path else {
            return Ok(Defaults::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }
}

/// Everything needed to reproduce a run; embedded in every report.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub inputs: Vec<PathBuf>,
    pub config_file: Option<PathBuf>,
    pub word_length: usize,
    pub cap: usize,
    pub seed: u64,
    pub tries: usize,
    #[serde(rename = "M")]
    pub modulus: u64,
    pub c: String,
    pub grid_height: i64,
    pub output: Option<PathBuf>,
}
