use crate::config::RunConfig;
use bigal::report::Report;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

pub const OUT_DIR_VAR: &str = "BIGAL_OUT_DIR";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Engine(#[from] bigal::Error),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use bigal::Error as E;
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Engine(
                E::Invalid(_)
                | E::Parse { .. }
                | E::NotDivisor { .. }
                | E::ZeroConductor
                | E::NotPrimitive(_)
                | E::FieldMismatch(..)
                | E::DivisionByZero
                | E::Json(_),
            ) => 2,
            CliError::Engine(_) => 1,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckLine {
    pub subject: String,
    pub name: String,
    pub passed: bool,
    pub evaluated: usize,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config: RunConfig,
    pub passed: bool,
    pub checks: Vec<CheckLine>,
    pub timing_ms: u128,
    pub result: serde_json::Value,
}

/// What a command produced.
pub struct Outcome {
    pub reports: Vec<Report>,
    pub result: serde_json::Value,
    pub csv: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }
}

impl Certificate {
    pub fn new(command: &str, config: RunConfig, o: &Outcome, timing_ms: u128) -> Certificate {
        let checks = o
            .reports
            .iter()
            .flat_map(|r| {
                r.checks.iter().map(|c| CheckLine {
                    subject: r.subject.clone(),
                    name: c.name.clone(),
                    passed: c.passed,
                    evaluated: c.evaluated,
                    detail: c.detail.clone(),
                })
            })
            .collect();
        Certificate {
            tool: "bigal".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            config,
            passed: o.passed(),
            checks,
            timing_ms,
            result: o.result.clone(),
        }
    }
}

/// `--out`, then the config, then `BIGAL_OUT_DIR`, then `./bigal-out`.
pub fn out_dir(flag: Option<&Path>, cfg: &RunConfig) -> PathBuf {
    flag.map(Path::to_path_buf)
        .or_else(|| cfg.out.clone())
        .or_else(|| std::env::var_os(OUT_DIR_VAR).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("bigal-out"))
}

pub fn write(dir: &Path, stem: &str, cert: &Certificate, csv: Option<&str>) -> Result<PathBuf, CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    let path = dir.join(format!("{stem}.json"));
    let text = serde_json::to_string_pretty(cert).map_err(|e| CliError::Io(e.to_string()))?;
    std::fs::write(&path, text + "\n").map_err(io)?;
    if let Some(csv) = csv {
        std::fs::write(dir.join(format!("{stem}.csv")), csv).map_err(io)?;
    }
    Ok(path)
}
