//! d-regular lift of a cubic graph and sequence projection between levels.
//!
//! `H_d` takes `d - 2` copies of a cubic graph and joins the twins of each
//! vertex into a clique. Vertex `v` of copy `j` is labelled `copy<j>:<v>`.
//! `H_(d')` for `d' < d` is the subgraph induced by copies `1..d'-2`.

use thiserror::Error;

use crate::burning::{evaluate_ids, is_burning_sequence, BurningSequence};
use crate::graph::{Graph, GraphBuilder, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("base graph is not cubic")]
    NotCubic,
    #[error("base graph is not connected")]
    NotConnected,
    #[error("degree {0} is out of range")]
    BadDegree(usize),
    #[error("`{0}` is not a lifted vertex label")]
    BadLabel(String),
    #[error("input sequence does not burn the graph")]
    InputNotValid,
    #[error("offending projected source at position {position} is not the final duplicate")]
    InternalContradiction { position: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl LiftError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::NotCubic => "NotCubic",
            Self::NotConnected => "NotConnected",
            Self::BadDegree(_) => "BadDegree",
            Self::BadLabel(_) => "BadLabel",
            Self::InputNotValid => "InputNotValid",
            Self::InternalContradiction { .. } => "InternalContradiction",
            Self::Graph(e) => e.name(),
        }
    }
}

pub fn copy_label(j: usize, v: &str) -> String {
    format!("copy{j}:{v}")
}

/// Splits `copy<j>:<v>` into `(j, v)`.
pub fn parse_copy_label(label: &str) -> Result<(usize, &str), LiftError> {
    label
        .strip_prefix("copy")
        .and_then(|r| r.split_once(':'))
        .and_then(|(j, v)| Some((j.parse().ok().filter(|&j| j >= 1)?, v)))
        .ok_or_else(|| LiftError::BadLabel(label.to_owned()))
}

#[derive(Debug, Clone)]
pub struct LiftedGraph {
    pub base: Graph,
    pub d: usize,
    pub graph: Graph,
}

fn lift(base: &Graph, d: usize) -> Graph {
    let mut b = GraphBuilder::new();
    for j in 1..=d - 2 {
        for v in base.vertices() {
            b.add_vertex(&copy_label(j, base.label(v)));
        }
        for (u, v) in base.edges() {
            b.add_edge(&copy_label(j, base.label(u)), &copy_label(j, base.label(v)))
                .expect("copies are disjoint");
        }
    }
    for v in base.labels() {
        for i in 1..=d - 2 {
            for j in i + 1..=d - 2 {
                b.add_edge(&copy_label(i, v), &copy_label(j, v))
                    .expect("twin pairs are distinct");
            }
        }
    }
    b.build()
}

/// Builds `H_d` for `d >= 4` over a connected cubic base.
pub fn build_hd(base: &Graph, d: usize) -> Result<LiftedGraph, LiftError> {
    if base.is_empty() || !base.is_regular(3) {
        return Err(LiftError::NotCubic);
    }
    if !base.is_connected() {
        return Err(LiftError::NotConnected);
    }
    if d < 4 {
        return Err(LiftError::BadDegree(d));
    }
    Ok(LiftedGraph {
        base: base.clone(),
        d,
        graph: lift(base, d),
    })
}

/// How [`LiftedGraph::project_sequence`] treats an offending source that is
/// not the final duplicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProjectMode {
    /// Replace it with the smallest vertex still unburned, or truncate.
    #[default]
    Repair,
    /// Report [`LiftError::InternalContradiction`].
    Strict,
}

impl LiftedGraph {
    /// `H_(d')` for `3 <= d' <= d`; `H_3` is copy 1.
    pub fn level(&self, dprime: usize) -> Result<Graph, LiftError> {
        if dprime < 3 || dprime > self.d {
            return Err(LiftError::BadDegree(dprime));
        }
        let keep = dprime - 2;
        Ok(self
            .graph
            .induced(|v| parse_copy_label(self.graph.label(v)).is_ok_and(|(j, _)| j <= keep)))
    }

    /// Keeps vertices of `H_(d')`, sends the rest to their copy-1 twin.
    pub fn project_vertex(&self, label: &str, dprime: usize) -> Result<String, LiftError> {
        if !self.graph.contains(label) {
            return Err(LiftError::BadLabel(label.to_owned()));
        }
        let (j, v) = parse_copy_label(label)?;
        Ok(if j <= dprime.saturating_sub(2) {
            label.to_owned()
        } else {
            copy_label(1, v)
        })
    }

    /// Projects a burning sequence of `H_d` onto `H_(d')`.
    ///
    /// Each source is projected. While some projected source is already
    /// burned when placed (a repeat or an earlier-reached vertex), it is
    /// replaced by the smallest vertex unburned at the end of the previous
    /// step, or the sequence is cut there if nothing is left. For an offender
    /// in the final slot this is: drop it, keep the result if it burns
    /// `H_(d')`, otherwise append one unburned vertex.
    pub fn project_sequence(
        &self,
        seq: &BurningSequence,
        dprime: usize,
        mode: ProjectMode,
    ) -> Result<BurningSequence, LiftError> {
        if !is_burning_sequence(&self.graph, seq) {
            return Err(LiftError::InputNotValid);
        }
        if dprime < 3 || dprime >= self.d {
            return Err(LiftError::BadDegree(dprime));
        }
        let target = self.level(dprime)?;
        let mut ids: Vec<VertexId> = seq
            .sources()
            .iter()
            .map(|l| {
                self.project_vertex(l, dprime)
                    .and_then(|p| Ok(target.require(&p)?))
            })
            .collect::<Result<_, _>>()?;

        while let Some(v) = evaluate_ids(&target, &ids).violation {
            let p = v.position;
            if mode == ProjectMode::Strict {
                let twin = ids[..p - 1].iter().rposition(|&u| u == ids[p - 1]);
                if p != ids.len() || twin != Some(p - 2) {
                    return Err(LiftError::InternalContradiction { position: p });
                }
            }
            let prefix = &ids[..p - 1];
            let fresh = evaluate_ids(&target, prefix).schedule.unburned().next();
            match fresh {
                Some(u) => ids[p - 1] = u,
                None => ids.truncate(p - 1),
            }
        }
        debug_assert!(crate::burning::is_burning_sequence_ids(&target, &ids));
        Ok(BurningSequence::from_ids(&target, &ids))
    }

    /// Places a base sequence in copy 1 and appends the smallest unburned
    /// vertex if any remains.
    pub fn lift_sequence(&self, seq: &BurningSequence) -> Result<BurningSequence, LiftError> {
        if !is_burning_sequence(&self.base, seq) {
            return Err(LiftError::InputNotValid);
        }
        let mut ids: Vec<VertexId> = seq
            .sources()
            .iter()
            .map(|l| self.graph.require(&copy_label(1, l)))
            .collect::<Result<_, _>>()?;
        if let Some(u) = evaluate_ids(&self.graph, &ids).schedule.unburned().next() {
            ids.push(u);
        }
        Ok(BurningSequence::from_ids(&self.graph, &ids))
    }
}
