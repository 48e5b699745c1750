use std::path::Path;

use serde::Deserialize;

use crate::args::ReportFormat;
use crate::CliError;

/// Defaults read from the config file; command-line flags take precedence.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub tol: Option<f64>,
    pub jobs: Option<usize>,
    pub format: Option<ReportFormat>,
}

impl Config {
    pub fn load(path: Option<&Path>) -> Result<Config, CliError> {
        let Some(path) = path else {
            return Ok(Config::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::file(format!("cannot read config {}: {e}", path.display())))?;
        let cfg: Config = toml::from_str(&text)
            .map_err(|e| CliError::usage(format!("bad config {}: {e}", path.display())))?;
        if let Some(t) = cfg.tol {
            if !(t > 0.0) {
                return Err(CliError::usage(format!("config tol must be positive, got {t}")));
            }
        }
        Ok(cfg)
    }
}
