//! Optional TOML config file mirroring the command-line flags.
//! A flag given on the command line always wins over the file.

use std::path::Path;

use anyhow::{Context, Result};
use serde::Deserialize;

#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub kind: Option<String>,
    pub n: Option<u32>,
    pub n_max: Option<u32>,
    pub c: Option<String>,
    pub d: Option<u64>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub num_bound: Option<u32>,
    pub den_bound: Option<u32>,
    pub threads: Option<usize>,
    pub format: Option<String>,
    pub output: Option<String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config file {}", path.display()))?;
        toml::from_str(&text)
            .map_err(|e| anyhow::anyhow!("{}", e.message()))
            .with_context(|| format!("invalid config file {}", path.display()))
    }
}
