//! Exhaustive oracle: tries every ordered sequence of distinct sources,
//! shortest first, on the frontier engine.

use std::time::Instant;

use super::{SolveError, SolveResult, SolveStats};
use crate::burning::{frontier_ids, BurningSequence};
use crate::graph::{Graph, VertexId};

pub const NAIVE_LIMIT: usize = 12;

fn valid(g: &Graph, seq: &[VertexId]) -> bool {
    let ev = frontier_ids(g, seq);
    ev.violation.is_none() && ev.schedule.is_complete()
}

/// Calls `visit` on every ordered sequence of `k` distinct vertices.
fn for_each_sequence(
    n: usize,
    k: usize,
    seq: &mut Vec<VertexId>,
    used: &mut [bool],
    visit: &mut dyn FnMut(&[VertexId]) -> bool,
) -> bool {
    if seq.len() == k {
        return visit(seq);
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        used[v] = true;
        seq.push(v);
        let stop = for_each_sequence(n, k, seq, used, visit);
        seq.pop();
        used[v] = false;
        if stop {
            return true;
        }
    }
    false
}

fn guard(g: &Graph) -> Result<(), SolveError> {
    let n = g.vertex_count();
    if n > NAIVE_LIMIT {
        return Err(SolveError::TooLarge {
            n,
            limit: NAIVE_LIMIT,
        });
    }
    Ok(())
}

pub fn burning_number_naive(g: &Graph) -> Result<SolveResult<BurningSequence>, SolveError> {
    guard(g)?;
    let start = Instant::now();
    let n = g.vertex_count();
    let mut nodes = 0u64;
    for k in 1..=n {
        let mut found = None;
        for_each_sequence(n, k, &mut Vec::new(), &mut vec![false; n], &mut |s| {
            nodes += 1;
            if valid(g, s) {
                found = Some(s.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(ids) = found {
            return Ok(SolveResult {
                value: k,
                witness: BurningSequence::from_ids(g, &ids),
                stats: SolveStats {
                    nodes,
                    elapsed: start.elapsed(),
                },
            });
        }
    }
    Ok(SolveResult {
        value: 0,
        witness: BurningSequence::default(),
        stats: SolveStats::default(),
    })
}

/// Every burning sequence of minimum length, in lexicographic id order.
pub fn all_optimal_sequences(g: &Graph) -> Result<Vec<BurningSequence>, SolveError> {
    let k = burning_number_naive(g)?.value;
    let n = g.vertex_count();
    let mut out = Vec::new();
    for_each_sequence(n, k, &mut Vec::new(), &mut vec![false; n], &mut |s| {
        if valid(g, s) {
            out.push(BurningSequence::from_ids(g, s));
        }
        false
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn small_values() {
        assert_eq!(burning_number_naive(&generators::path(2)).unwrap().value, 2);
        assert_eq!(burning_number_naive(&generators::k4()).unwrap().value, 2);
        let star = Graph::from_edges([("c", "x"), ("c", "y"), ("c", "z")]).unwrap();
        assert_eq!(burning_number_naive(&star).unwrap().value, 2);
    }

    #[test]
    fn k4_has_twelve_optimal_sequences() {
        // Any ordered pair of distinct vertices works.
        assert_eq!(all_optimal_sequences(&generators::k4()).unwrap().len(), 12);
    }

    #[test]
    fn guard_rejects_large_graphs() {
        assert_eq!(
            burning_number_naive(&generators::path(13)),
            Err(SolveError::TooLarge { n: 13, limit: 12 })
        );
    }
}
