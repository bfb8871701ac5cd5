//! Exhaustive verification sweeps over graph6 corpora and labeled enumerations.

pub mod checks;
pub mod extremal;
pub mod sweep;

use std::path::PathBuf;

pub use checks::{evaluate, Check, Outcome};
pub use extremal::{emit_extremal, ExtremalKind};
pub use sweep::{run_sweep, CheckStats, CorpusSource, SweepOptions, SweepReport, Tightness};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}: {source}")]
    Malformed { line: usize, source: zagreb_core::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] zagreb_core::Error),
}
