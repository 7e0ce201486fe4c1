//! Vertex cover on cubic graphs to burning number on cubic graphs.
//!
//! `G` is turned into `G'` by subdividing one edge twice. Every edge of `G'`
//! becomes a BTP gadget between its endpoints, the two new vertices `x`, `y`
//! feed a Y-gadget, and the Y-gadget's third end carries a C-gadget. A cover
//! `Q'` of `G'` yields a burning sequence of length `|Q'| + cn' + 3`.
//!
//! Labels: `g:<v>` for `G'` vertices, `btp:<u>:<v>:bt:<ab|ba>:<level>:<i>`
//! and `btp:<u>:<v>:t:<i>:<column>:<pos>` inside BTP gadgets, `y:...` for the
//! Y-gadget and `c:...` for the C-gadget.

mod audit;
mod build;
mod meta;
mod params;

use thiserror::Error;

use crate::gadgets::GadgetError;
use crate::graph::GraphError;

pub use audit::{audit_sequence, vc_to_witness, witness_to_vc, AuditReport, SourceSite};
pub use build::{
    btp_prefix, build_h, core_label, double_subdivide, lift_cover, Origin, ReductionInstance,
    Subdivision,
};
pub use params::{choose_params, ReductionParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("input graph is not cubic")]
    NotCubic,
    #[error("input graph is not connected")]
    NotConnected,
    #[error("edge `{0}` -- `{1}` not found")]
    EdgeNotFound(String, String),
    #[error("subdivided graph order {0} must be even and at least 6")]
    BadOrder(usize),
    #[error("not a vertex cover: edge `{0}` -- `{1}` is uncovered")]
    NotACover(String, String),
    #[error("cover contains neither x nor y")]
    MissingXY,
    #[error("sequence has {len} sources, the block partition needs {min}")]
    SequenceTooShort { len: usize, min: usize },
    #[error("not a burning sequence (valid placement: {valid}, unburned: {unburned})")]
    NotABurningSequence { valid: bool, unburned: usize },
    #[error("owners leave {} edges of G' unrepresented", .0.len())]
    OwnersNotACover(Vec<(String, String)>),
    #[error("bad instance metadata: {0}")]
    BadMeta(String),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl ReductionError {
    /// Variant name, for CLI error reporting.
    pub fn name(&self) -> &'static str {
        match self {
            Self::NotCubic => "NotCubic",
            Self::NotConnected => "NotConnected",
            Self::EdgeNotFound(..) => "EdgeNotFound",
            Self::BadOrder(_) => "BadOrder",
            Self::NotACover(..) => "NotACover",
            Self::MissingXY => "MissingXY",
            Self::SequenceTooShort { .. } => "SequenceTooShort",
            Self::NotABurningSequence { .. } => "NotABurningSequence",
            Self::OwnersNotACover(_) => "OwnersNotACover",
            Self::BadMeta(_) => "BadMeta",
            Self::Gadget(e) => e.name(),
            Self::Graph(e) => e.name(),
        }
    }
}
