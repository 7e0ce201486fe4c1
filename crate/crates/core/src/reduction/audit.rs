use std::collections::BTreeSet;
use std::ops::Range;

use super::build::{core_label, ReductionInstance};
use super::ReductionError;
use crate::burning::{evaluate_ids, last_and_unique, BurningSequence};
use crate::gadgets::make_c_witness;
use crate::graph::VertexId;
use crate::solvers::is_vertex_cover;

/// Builds the sequence `x|y, rest of Q' (sorted), C witness`.
pub fn vc_to_witness(
    inst: &ReductionInstance,
    cover: &[String],
) -> Result<BurningSequence, ReductionError> {
    let gp = inst.g_prime();
    for l in cover {
        gp.require(l)?;
    }
    let sub = &inst.subdivision;
    let first = if cover.contains(&sub.x) {
        &sub.x
    } else if cover.contains(&sub.y) {
        &sub.y
    } else {
        return Err(ReductionError::MissingXY);
    };
    if let Some((u, v)) = gp
        .edges()
        .find(|&(u, v)| !cover.iter().any(|c| c == gp.label(u) || c == gp.label(v)))
    {
        return Err(ReductionError::NotACover(
            gp.label(u).to_owned(),
            gp.label(v).to_owned(),
        ));
    }
    let rest: BTreeSet<&String> = cover.iter().filter(|c| *c != first).collect();
    let mut seq = vec![core_label(first)];
    seq.extend(rest.into_iter().map(|c| core_label(c)));
    let c = make_c_witness(inst.params.m)?;
    seq.extend(c.sources().iter().map(|l| format!("c:{l}")));
    Ok(BurningSequence(seq))
}

/// Which region a source lies in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceSite {
    pub label: String,
    pub owner: Option<String>,
}

#[derive(Debug, Clone)]
pub struct AuditReport {
    pub len: usize,
    pub start: Range<usize>,
    pub middle: Range<usize>,
    pub end: Range<usize>,
    pub sites: Vec<SourceSite>,
    pub owners: BTreeSet<String>,
    pub represented: Vec<(String, String)>,
    pub unrepresented: Vec<(String, String)>,
    /// No source was already burned when placed.
    pub valid: bool,
    /// Every vertex burned within `len` steps.
    pub complete: bool,
    pub unburned: usize,
    /// `|BL ∩ UB|`, when the schedule is complete.
    pub last_unique: Option<usize>,
}

impl AuditReport {
    fn count_outside(&self, r: &Range<usize>) -> usize {
        self.sites[r.clone()]
            .iter()
            .filter(|s| s.owner.is_none())
            .count()
    }

    /// Sources of each block lying outside every domain.
    pub fn outside_counts(&self) -> [usize; 3] {
        [
            self.count_outside(&self.start),
            self.count_outside(&self.middle),
            self.count_outside(&self.end),
        ]
    }

    pub fn is_burning_sequence(&self) -> bool {
        self.valid && self.complete
    }

    pub fn to_kv(&self) -> Vec<(String, String)> {
        let [so, mo, eo] = self.outside_counts();
        let range = |r: &Range<usize>| format!("{}..{}", r.start, r.end);
        let edges = |es: &[(String, String)]| {
            es.iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        vec![
            ("length".into(), self.len.to_string()),
            ("start_block".into(), range(&self.start)),
            ("middle_block".into(), range(&self.middle)),
            ("end_block".into(), range(&self.end)),
            ("start_outside".into(), so.to_string()),
            ("middle_outside".into(), mo.to_string()),
            ("end_outside".into(), eo.to_string()),
            (
                "owners".into(),
                self.owners.iter().cloned().collect::<Vec<_>>().join(","),
            ),
            ("represented".into(), self.represented.len().to_string()),
            ("unrepresented".into(), self.unrepresented.len().to_string()),
            ("unrepresented_edges".into(), edges(&self.unrepresented)),
            ("valid".into(), self.valid.to_string()),
            ("complete".into(), self.complete.to_string()),
            ("unburned".into(), self.unburned.to_string()),
            (
                "last_unique".into(),
                self.last_unique
                    .map_or_else(|| "n/a".into(), |n| n.to_string()),
            ),
        ]
    }
}

/// Block partition, owners, edge representation and schedule summary.
pub fn audit_sequence(
    inst: &ReductionInstance,
    seq: &BurningSequence,
) -> Result<AuditReport, ReductionError> {
    let p = &inst.params;
    let len = seq.len();
    let min = p.cn + 3;
    if len < min {
        return Err(ReductionError::SequenceTooShort { len, min });
    }
    let ids: Vec<VertexId> = seq.resolve(&inst.h)?;
    let s = len - min;
    let start = 0..s;
    let middle = s..s + p.h + 1;
    let end = s + p.h + 1..len;

    let gp = inst.g_prime();
    let sites: Vec<SourceSite> = ids
        .iter()
        .map(|&v| SourceSite {
            label: inst.h.label(v).to_owned(),
            owner: inst.owner[v].map(|u| gp.label(u).to_owned()),
        })
        .collect();
    let owners: BTreeSet<String> = sites[start.clone()]
        .iter()
        .filter_map(|s| s.owner.clone())
        .collect();
    let (represented, unrepresented): (Vec<_>, Vec<_>) = gp
        .edges()
        .map(|(u, v)| (gp.label(u).to_owned(), gp.label(v).to_owned()))
        .partition(|(u, v)| owners.contains(u) || owners.contains(v));

    let ev = evaluate_ids(&inst.h, &ids);
    let unburned = ev.schedule.unburned().count();
    let last_unique = last_and_unique(&ev.schedule).ok().map(|s| s.len());
    Ok(AuditReport {
        len,
        start,
        middle,
        end,
        sites,
        owners,
        represented,
        unrepresented,
        valid: ev.violation.is_none(),
        complete: unburned == 0,
        unburned,
        last_unique,
    })
}

/// Extracts `Owners` from a burning sequence of `H`; never repairs it.
pub fn witness_to_vc(
    inst: &ReductionInstance,
    seq: &BurningSequence,
) -> Result<Vec<String>, ReductionError> {
    let report = audit_sequence(inst, seq)?;
    if !report.is_burning_sequence() {
        return Err(ReductionError::NotABurningSequence {
            valid: report.valid,
            unburned: report.unburned,
        });
    }
    if !report.unrepresented.is_empty() {
        return Err(ReductionError::OwnersNotACover(report.unrepresented));
    }
    let cover: Vec<String> = report.owners.into_iter().collect();
    debug_assert!(is_vertex_cover(inst.g_prime(), &cover));
    Ok(cover)
}
