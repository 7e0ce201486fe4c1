//! `key<TAB>value` run reports and the CLI error type.

use std::fmt::{Display, Write as _};
use std::path::{Path, PathBuf};
use std::time::Duration;

use sha2::{Digest, Sha256};
use thiserror::Error;

use burnkit::gadgets::GadgetError;
use burnkit::lift::LiftError;
use burnkit::reduction::ReductionError;
use burnkit::solvers::SolveError;
use burnkit::{BurnError, GraphError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Burn(#[from] BurnError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Lift(#[from] LiftError),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        Self::Io {
            path: path.to_owned(),
            source,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Usage(_) => "Usage",
            Self::Io { .. } => "Io",
            Self::Graph(e) => e.name(),
            Self::Burn(e) => e.name(),
            Self::Solve(e) => e.name(),
            Self::Gadget(e) => e.name(),
            Self::Reduction(e) => e.name(),
            Self::Lift(e) => e.name(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Deterministic results first, wall-clock timings in a trailing section.
pub struct Report {
    command: &'static str,
    digest: Sha256,
    lines: Vec<(String, String)>,
    timings: Vec<(String, String)>,
    failure: Option<&'static str>,
    silent: bool,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            digest: Sha256::new(),
            lines: Vec::new(),
            timings: Vec::new(),
            failure: None,
            silent: false,
        }
    }

    pub fn input(&mut self, bytes: &[u8]) {
        self.digest.update((bytes.len() as u64).to_le_bytes());
        self.digest.update(bytes);
    }

    pub fn param(&mut self, text: &str) {
        self.input(text.as_bytes());
    }

    pub fn kv(&mut self, key: &str, value: impl Display) {
        self.lines.push((key.to_owned(), value.to_string()));
    }

    pub fn timing(&mut self, key: &str, d: Duration) {
        self.timings
            .push((key.to_owned(), format!("{:.3}", d.as_secs_f64() * 1e3)));
    }

    /// Marks a domain failure that still produces a report.
    pub fn fail(&mut self, name: &'static str) {
        self.failure = Some(name);
    }

    pub fn failure(&self) -> Option<&'static str> {
        self.failure
    }

    /// Suppresses the report on standard output.
    pub fn silence(&mut self) {
        self.silent = true;
    }

    fn render(&self, timings: bool) -> String {
        let mut out = String::new();
        let digest = hex::encode(self.digest.clone().finalize());
        writeln!(out, "command\t{}", self.command).unwrap();
        writeln!(out, "inputs_sha256\t{digest}").unwrap();
        for (k, v) in &self.lines {
            writeln!(out, "{k}\t{v}").unwrap();
        }
        let status = self.failure.map_or("ok".into(), |f| format!("error:{f}"));
        writeln!(out, "status\t{status}").unwrap();
        if timings {
            out.push_str("[timings]\n");
            for (k, v) in &self.timings {
                writeln!(out, "{k}\t{v}").unwrap();
            }
        }
        out
    }

    pub fn emit(&self, timings: bool, path: Option<&Path>) -> Result<(), CliError> {
        let text = self.render(timings);
        if !self.silent {
            print!("{text}");
        }
        if let Some(p) = path {
            std::fs::write(p, &text).map_err(|e| CliError::io(p, e))?;
        }
        Ok(())
    }
}
