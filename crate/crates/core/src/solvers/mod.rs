//! Exact solvers for desk-scale instances.

mod bits;
pub mod burning_exact;
pub mod naive;
pub mod paths;
pub mod vertex_cover;

use std::time::Duration;

use thiserror::Error;

pub use burning_exact::{burning_number_exact, greedy_sequence};
pub use naive::{all_optimal_sequences, burning_number_naive, NAIVE_LIMIT};
pub use paths::{path_cycle_burning_number, path_cycle_witness, LineKind};
pub use vertex_cover::{is_vertex_cover, vertex_cover_exact, VC_LIMIT};

/// Default search-node budget.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: W,
    pub stats: SolveStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("search budget exhausted; value lies in [{lower}, {upper}]")]
    BudgetExceeded { lower: usize, upper: usize },
    #[error("instance has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("solver produced a witness that failed validation")]
    WitnessRejected,
}

impl SolveError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::BudgetExceeded { .. } => "BudgetExceeded",
            Self::TooLarge { .. } => "TooLarge",
            Self::InvalidInput(_) => "InvalidInput",
            Self::WitnessRejected => "WitnessRejected",
        }
    }
}
