//! The discrete burning process.
//!
//! At step `i` the source `b_i` is ignited while fire spreads one hop from
//! every vertex burned at step `i - 1`. A vertex therefore burns at step
//! `min_i (i + d(b_i, v))`. A source must still be unburned at the end of step
//! `i - 1`; being reached by older fire exactly at step `i` is allowed.
//!
//! Two engines compute schedules: [`simulate`] evaluates the closed form from
//! per-source BFS layers, [`simulate_frontier`] literally expands the fire
//! front step by step. They must agree on every input.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};

/// Ordered burning sources, by label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BurningSequence(pub Vec<String>);

impl BurningSequence {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(labels: I) -> Self {
        Self(labels.into_iter().map(Into::into).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sources(&self) -> &[String] {
        &self.0
    }

    pub fn resolve(&self, g: &Graph) -> Result<Vec<VertexId>, GraphError> {
        self.0.iter().map(|l| g.require(l)).collect()
    }

    pub fn from_ids(g: &Graph, ids: &[VertexId]) -> Self {
        Self(ids.iter().map(|&v| g.label(v).to_owned()).collect())
    }

    /// Parses one label per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Self {
        Self(
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(str::to_owned)
                .collect(),
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.0 {
            out.push_str(s);
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BurningSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BurnError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("empty burning sequence")]
    EmptySequence,
    #[error("source {position} `{label}` was already burned at step {burned_at}")]
    InvalidSequence {
        position: usize,
        label: String,
        burned_at: usize,
    },
    #[error("schedule leaves {unburned} vertices unburned")]
    IncompleteSchedule { unburned: usize },
}

impl BurnError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Graph(e) => e.name(),
            Self::EmptySequence => "EmptySequence",
            Self::InvalidSequence { .. } => "InvalidSequence",
            Self::IncompleteSchedule { .. } => "IncompleteSchedule",
        }
    }
}

/// A source that was already burned before its own step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// 1-based step of the offending source.
    pub position: usize,
    pub vertex: VertexId,
    /// Step at which earlier fire burned it.
    pub burned_at: usize,
}

/// Outcome of running a sequence for `len` steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurningSchedule {
    len: usize,
    burn_time: Vec<Option<usize>>,
    /// 1-based indices of the sources responsible for each burned vertex.
    responsible: Vec<Vec<usize>>,
}

impl BurningSchedule {
    pub fn steps(&self) -> usize {
        self.len
    }

    pub fn burn_time(&self, v: VertexId) -> Option<usize> {
        self.burn_time[v]
    }

    pub fn burn_times(&self) -> &[Option<usize>] {
        &self.burn_time
    }

    /// Source positions (1-based) in `S_v`.
    pub fn responsible(&self, v: VertexId) -> &[usize] {
        &self.responsible[v]
    }

    pub fn unburned(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.burn_time
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_none())
            .map(|(v, _)| v)
    }

    pub fn is_complete(&self) -> bool {
        self.burn_time.iter().all(Option::is_some)
    }

    /// Last step at which any vertex burns.
    pub fn completion_step(&self) -> Option<usize> {
        if self.is_complete() {
            self.burn_time.iter().flatten().copied().max()
        } else {
            None
        }
    }

    fn require_complete(&self) -> Result<(), BurnError> {
        let unburned = self.unburned().count();
        if unburned > 0 {
            Err(BurnError::IncompleteSchedule { unburned })
        } else {
            Ok(())
        }
    }
}

/// Schedule plus the first source-placement violation, if any.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub schedule: BurningSchedule,
    pub violation: Option<Violation>,
}

/// Closed-form evaluation without rejecting invalid placements.
pub fn evaluate_ids(g: &Graph, seq: &[VertexId]) -> Evaluation {
    let k = seq.len();
    let n = g.vertex_count();
    let layers: Vec<Vec<Option<usize>>> = seq.iter().map(|&s| g.bfs(s)).collect();

    let mut violation = None;
    for (j, &s) in seq.iter().enumerate() {
        let step = j + 1;
        let earliest = layers[..j]
            .iter()
            .enumerate()
            .filter_map(|(i, d)| d[s].map(|d| i + 1 + d))
            .min();
        if let Some(t) = earliest.filter(|&t| t < step) {
            violation = Some(Violation {
                position: step,
                vertex: s,
                burned_at: t,
            });
            break;
        }
    }

    let mut burn_time = vec![None; n];
    let mut responsible = vec![Vec::new(); n];
    for v in 0..n {
        let best = layers
            .iter()
            .enumerate()
            .filter_map(|(i, d)| d[v].map(|d| i + 1 + d))
            .min()
            .filter(|&t| t <= k);
        if let Some(t) = best {
            burn_time[v] = Some(t);
            responsible[v] = layers
                .iter()
                .enumerate()
                .filter(|(i, d)| d[v].is_some_and(|d| i + 1 + d == t))
                .map(|(i, _)| i + 1)
                .collect();
        }
    }
    Evaluation {
        schedule: BurningSchedule {
            len: k,
            burn_time,
            responsible,
        },
        violation,
    }
}

pub fn evaluate(g: &Graph, seq: &BurningSequence) -> Result<Evaluation, BurnError> {
    Ok(evaluate_ids(g, &seq.resolve(g)?))
}

fn reject(g: &Graph, ev: Evaluation) -> Result<BurningSchedule, BurnError> {
    match ev.violation {
        Some(v) => Err(BurnError::InvalidSequence {
            position: v.position,
            label: g.label(v.vertex).to_owned(),
            burned_at: v.burned_at,
        }),
        None => Ok(ev.schedule),
    }
}

/// Runs `seq` on `g` with the closed-form engine.
pub fn simulate(g: &Graph, seq: &BurningSequence) -> Result<BurningSchedule, BurnError> {
    if seq.is_empty() {
        return Err(BurnError::EmptySequence);
    }
    reject(g, evaluate(g, seq)?)
}

/// Literal step-by-step expansion of the fire front.
pub fn frontier_ids(g: &Graph, seq: &[VertexId]) -> Evaluation {
    let n = g.vertex_count();
    let mut burn_time: Vec<Option<usize>> = vec![None; n];
    let mut responsible: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut front: Vec<VertexId> = Vec::new();
    let mut violation = None;

    for (j, &s) in seq.iter().enumerate() {
        let step = j + 1;
        if violation.is_none() {
            if let Some(t) = burn_time[s] {
                violation = Some(Violation {
                    position: step,
                    vertex: s,
                    burned_at: t,
                });
            }
        }
        // Spread from last step's front.
        let mut next: Vec<VertexId> = Vec::new();
        for &u in &front {
            for &w in g.neighbors(u) {
                match burn_time[w] {
                    None => {
                        burn_time[w] = Some(step);
                        next.push(w);
                        let inherited = responsible[u].clone();
                        responsible[w].extend(inherited);
                    }
                    Some(t) if t == step => {
                        let inherited = responsible[u].clone();
                        responsible[w].extend(inherited);
                    }
                    Some(_) => {}
                }
            }
        }
        match burn_time[s] {
            None => {
                burn_time[s] = Some(step);
                responsible[s].insert(step);
                next.push(s);
            }
            Some(t) if t == step => {
                responsible[s].insert(step);
            }
            Some(_) => {}
        }
        front = next;
    }

    Evaluation {
        schedule: BurningSchedule {
            len: seq.len(),
            burn_time,
            responsible: responsible
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
        },
        violation,
    }
}

/// Runs `seq` on `g` with the frontier engine.
pub fn simulate_frontier(g: &Graph, seq: &BurningSequence) -> Result<BurningSchedule, BurnError> {
    if seq.is_empty() {
        return Err(BurnError::EmptySequence);
    }
    let ids = seq.resolve(g)?;
    reject(g, frontier_ids(g, &ids))
}

/// Valid placement and every vertex burned by step `|seq|`.
pub fn is_burning_sequence(g: &Graph, seq: &BurningSequence) -> bool {
    simulate(g, seq).is_ok_and(|s| s.is_complete())
}

pub fn is_burning_sequence_ids(g: &Graph, seq: &[VertexId]) -> bool {
    if seq.is_empty() {
        return g.is_empty();
    }
    let ev = evaluate_ids(g, seq);
    ev.violation.is_none() && ev.schedule.is_complete()
}

/// `BL`: vertices burned at the final step.
pub fn last_step_set(schedule: &BurningSchedule) -> Result<BTreeSet<VertexId>, BurnError> {
    schedule.require_complete()?;
    Ok(schedule
        .burn_time
        .iter()
        .enumerate()
        .filter(|(_, t)| **t == Some(schedule.len))
        .map(|(v, _)| v)
        .collect())
}

/// `UB`: vertices whose responsible set is a single source.
pub fn uniquely_burned_set(schedule: &BurningSchedule) -> Result<BTreeSet<VertexId>, BurnError> {
    schedule.require_complete()?;
    Ok(schedule
        .responsible
        .iter()
        .enumerate()
        .filter(|(_, s)| s.len() == 1)
        .map(|(v, _)| v)
        .collect())
}

/// `BL ∩ UB` for a complete schedule.
pub fn last_and_unique(schedule: &BurningSchedule) -> Result<BTreeSet<VertexId>, BurnError> {
    let bl = last_step_set(schedule)?;
    let ub = uniquely_burned_set(schedule)?;
    Ok(bl.intersection(&ub).copied().collect())
}
