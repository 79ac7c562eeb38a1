//! Optional `key = value` settings file.
//!
//! Recognized keys: `budget_subsets`, `budget_tuples`, `format` (`json` or
//! `tsv`). Blank lines and lines starting with `#` are ignored. Command-line
//! flags take precedence over the environment, which takes precedence over
//! this file.

use std::path::Path;

use crate::error::CliError;

pub const BUDGET_ENV: &str = "RELPRIME_BUDGET_SUBSETS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Tsv,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Config {
    pub budget_subsets: Option<u64>,
    pub budget_tuples: Option<u64>,
    pub format: Option<Format>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut cfg = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: &str| CliError::Usage(format!("config line {}: {msg}", lineno + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key = value"))?;
            let value = value.trim();
            match key.trim() {
                "budget_subsets" => {
                    cfg.budget_subsets = Some(value.parse().map_err(|_| bad("not an integer"))?)
                }
                "budget_tuples" => {
                    cfg.budget_tuples = Some(value.parse().map_err(|_| bad("not an integer"))?)
                }
                "format" => {
                    cfg.format = Some(match value {
                        "json" => Format::Json,
                        "tsv" => Format::Tsv,
                        _ => return Err(bad("format must be json or tsv")),
                    })
                }
                other => return Err(bad(&format!("unknown key '{other}'"))),
            }
        }
        Ok(cfg)
    }
}
