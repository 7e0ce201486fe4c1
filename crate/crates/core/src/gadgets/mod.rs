//! Parameterized gadgets with named landmarks.
//!
//! Every gadget has an `emit_*` form that writes into a shared
//! [`GraphBuilder`] under a label prefix (used when composing the reduction)
//! and a `make_*` form that returns a standalone [`GadgetHandle`].

mod annexe;
mod btp;
mod t;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::Graph;

pub use annexe::{
    c_vertex_count, emit_c, emit_p, emit_tail, emit_y, make_c, make_c_witness, make_p, make_tail,
    make_y, p_vertex_count, y_vertex_count,
};
pub use btp::{btp_vertex_count, check_btp_params, emit_bt, emit_btp, make_bt, make_btp};
pub use t::{emit_t, make_t};

/// Length difference between trunk and trunk′ of a C-gadget.
pub const FIXED_OVERLAP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parameter inequality violated: {}", violated_names(*.eq1, *.eq2))]
    ParamInequalityViolated { eq1: bool, eq2: bool },
}

impl GadgetError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::InvalidParams(_) => "InvalidParams",
            Self::ParamInequalityViolated { .. } => "ParamInequalityViolated",
        }
    }
}

fn violated_names(eq1: bool, eq2: bool) -> &'static str {
    match (eq1, eq2) {
        (true, true) => "l1 + l2 < 2^(h-2) and l2 > l1 + h + 1",
        (true, false) => "l1 + l2 < 2^(h-2)",
        _ => "l2 > l1 + h + 1",
    }
}

/// Named vertices and vertex sets of a gadget.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Landmarks(BTreeMap<String, Vec<String>>);

impl Landmarks {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_one(&mut self, name: &str, label: String) {
        self.0.insert(name.to_owned(), vec![label]);
    }

    pub fn set_many(&mut self, name: &str, labels: Vec<String>) {
        self.0.insert(name.to_owned(), labels);
    }

    /// The single label stored under `name`; panics on a missing or set-valued landmark.
    pub fn one(&self, name: &str) -> &str {
        match self.0.get(name).map(Vec::as_slice) {
            Some([l]) => l,
            _ => panic!("no single-vertex landmark `{name}`"),
        }
    }

    pub fn many(&self, name: &str) -> &[String] {
        self.0
            .get(name)
            .unwrap_or_else(|| panic!("no landmark `{name}`"))
    }

    pub fn get(&self, name: &str) -> Option<&[String]> {
        self.0.get(name).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[String])> {
        self.0.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }

    /// Sidecar text: `name<TAB>label[,label...]` per line, sorted by name.
    pub fn to_sidecar(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.0 {
            out.push_str(k);
            out.push('\t');
            out.push_str(&v.join(","));
            out.push('\n');
        }
        out
    }

    pub fn parse_sidecar(text: &str) -> Result<Self, GadgetError> {
        let mut lm = Self::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (k, v) = line
                .split_once('\t')
                .ok_or_else(|| GadgetError::InvalidParams(format!("bad landmark line `{line}`")))?;
            lm.set_many(k, v.split(',').map(str::to_owned).collect());
        }
        Ok(lm)
    }
}

#[derive(Debug, Clone)]
pub struct GadgetHandle {
    pub graph: Graph,
    pub landmarks: Landmarks,
}

impl GadgetHandle {
    /// Every landmark label exists in the graph.
    pub fn landmarks_resolve(&self) -> bool {
        self.landmarks
            .iter()
            .all(|(_, ls)| ls.iter().all(|l| self.graph.contains(l)))
    }
}
