//! Optional key=value config file; command-line flags override it.

use crate::CliError;
use adorned::adorn::Adorn;
use std::path::Path;

/// Defaults loadable from a config file.
#[derive(Debug, Clone, Default)]
pub struct Config {
    pub universe: Option<String>,
    pub max_rank: Option<u32>,
    pub seed: Option<u64>,
    pub adorns: Option<Vec<Adorn>>,
    pub pool_target: Option<usize>,
    pub witness_count: Option<usize>,
}

/// Parses a comma-separated adorn list such as `-1,0,1/2`.
pub fn parse_adorn_list(text: &str) -> Result<Vec<Adorn>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<Adorn>()
                .map_err(CliError::Usage)
        })
        .collect()
}

/// Loads a config file of `key=value` lines; `#` starts a comment.
pub fn load(path: &Path) -> Result<Config, CliError> {
    let text = std::fs::read_to_string(path)?;
    let mut config = Config::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |message: String| {
            CliError::Usage(format!("{}:{}: {message}", path.display(), lineno + 1))
        };
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| bad("expected key=value".to_string()))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "universe" => config.universe = Some(value.to_string()),
            "max_rank" => {
                config.max_rank =
                    Some(value.parse().map_err(|_| bad(format!("bad max_rank '{value}'")))?)
            }
            "seed" => {
                config.seed = Some(value.parse().map_err(|_| bad(format!("bad seed '{value}'")))?)
            }
            "adorns" => config.adorns = Some(parse_adorn_list(value)?),
            "pool_target" => {
                config.pool_target =
                    Some(value.parse().map_err(|_| bad(format!("bad pool_target '{value}'")))?)
            }
            "witness_count" => {
                config.witness_count = Some(
                    value
                        .parse()
                        .map_err(|_| bad(format!("bad witness_count '{value}'")))?,
                )
            }
            other => return Err(bad(format!("unknown key '{other}'"))),
        }
    }
    Ok(config)
}
