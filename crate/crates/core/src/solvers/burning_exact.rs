//! Exact burning number by branch and bound over radius-ordered balls.
//!
//! `b(G) <= k` iff there are centers `x_1..x_k` whose balls of radius `k - i`
//! cover `V` and `d(x_i, x_j) >= j - i` for `i < j`. The search deepens `k`
//! from 1. At each node it picks the uncovered vertex with the fewest
//! feasible `(slot, center)` options and branches over them in slot, then
//! label, order. A node is pruned when the best per-slot coverage cannot
//! reach the uncovered count.

use std::time::Instant;

use super::bits::Bits;
use super::{SolveError, SolveResult, SolveStats, DEFAULT_BUDGET};
use crate::burning::{evaluate_ids, is_burning_sequence_ids, BurningSequence};
use crate::graph::{Graph, VertexId};

/// Greedy valid sequence: each step ignites the smallest unburned vertex.
pub fn greedy_sequence(g: &Graph) -> Vec<VertexId> {
    let mut seq = Vec::new();
    loop {
        let ev = evaluate_ids(g, &seq);
        let next = ev.schedule.burn_times().iter().position(Option::is_none);
        match next {
            Some(v) => seq.push(v),
            None => return seq,
        }
    }
}

struct Search<'a> {
    n: usize,
    k: usize,
    dist: &'a [Vec<u32>],
    /// `balls[r][x]`: vertices within distance `r` of `x`.
    balls: Vec<Vec<Bits>>,
    slots: Vec<Option<VertexId>>,
    nodes: u64,
    budget: u64,
}

struct OutOfBudget;

impl Search<'_> {
    fn radius(&self, slot: usize) -> usize {
        self.k - 1 - slot
    }

    fn compatible(&self, slot: usize, x: VertexId) -> bool {
        self.slots.iter().enumerate().all(|(j, c)| match *c {
            Some(c) => c != x && self.dist[x][c] as usize >= slot.abs_diff(j),
            None => true,
        })
    }

    fn compat_set(&self, slot: usize) -> Bits {
        let mut b = Bits::empty(self.n);
        for x in 0..self.n {
            if self.compatible(slot, x) {
                b.insert(x);
            }
        }
        b
    }

    fn solve(&mut self, uncovered: &Bits) -> Result<bool, OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OutOfBudget);
        }
        if uncovered.is_empty() {
            return Ok(self.fill(0));
        }

        let free: Vec<usize> = (0..self.k).filter(|&i| self.slots[i].is_none()).collect();
        let compat: Vec<Bits> = free.iter().map(|&i| self.compat_set(i)).collect();

        let mut capacity = 0;
        for (fi, &i) in free.iter().enumerate() {
            let r = self.radius(i);
            capacity += compat[fi]
                .iter()
                .map(|x| self.balls[r][x].and_count(uncovered))
                .max()
                .unwrap_or(0);
        }
        if capacity < uncovered.count() {
            return Ok(false);
        }

        let mut pick: Option<(usize, VertexId)> = None;
        for v in uncovered.iter() {
            let options: usize = free
                .iter()
                .zip(&compat)
                .map(|(&i, c)| self.balls[self.radius(i)][v].and_count(c))
                .sum();
            if options == 0 {
                return Ok(false);
            }
            if pick.is_none_or(|(best, _)| options < best) {
                pick = Some((options, v));
            }
        }
        let (_, v) = pick.expect("uncovered set is nonempty");

        for (fi, &i) in free.iter().enumerate() {
            let r = self.radius(i);
            let candidates = self.balls[r][v].intersection(&compat[fi]);
            for x in candidates.iter() {
                self.slots[i] = Some(x);
                let rest = uncovered.difference(&self.balls[r][x]);
                if self.solve(&rest)? {
                    return Ok(true);
                }
                self.slots[i] = None;
            }
        }
        Ok(false)
    }

    /// Assigns any still-empty slots once everything is covered.
    fn fill(&mut self, from: usize) -> bool {
        let Some(i) = (from..self.k).find(|&i| self.slots[i].is_none()) else {
            return true;
        };
        for x in 0..self.n {
            if self.compatible(i, x) {
                self.slots[i] = Some(x);
                if self.fill(i + 1) {
                    return true;
                }
                self.slots[i] = None;
            }
        }
        false
    }
}

/// Exact burning number with a witness. `budget` counts search nodes.
pub fn burning_number_exact(
    g: &Graph,
    budget: Option<u64>,
) -> Result<SolveResult<BurningSequence>, SolveError> {
    let start = Instant::now();
    let n = g.vertex_count();
    if n == 0 {
        return Ok(SolveResult {
            value: 0,
            witness: BurningSequence::default(),
            stats: SolveStats::default(),
        });
    }
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let dist = g.distance_matrix();
    let mut nodes = 0;

    for k in 1..=n {
        let balls = (0..k)
            .map(|r| {
                (0..n)
                    .map(|x| {
                        let mut b = Bits::empty(n);
                        for v in 0..n {
                            if dist[x][v] as usize <= r {
                                b.insert(v);
                            }
                        }
                        b
                    })
                    .collect()
            })
            .collect();
        let mut search = Search {
            n,
            k,
            dist: &dist,
            balls,
            slots: vec![None; k],
            nodes: 0,
            budget: budget.saturating_sub(nodes),
        };
        let outcome = search.solve(&Bits::full(n));
        nodes += search.nodes;
        match outcome {
            Err(OutOfBudget) => {
                return Err(SolveError::BudgetExceeded {
                    lower: k,
                    upper: greedy_sequence(g).len().max(k),
                })
            }
            Ok(false) => continue,
            Ok(true) => {
                let ids: Vec<VertexId> = search.slots.iter().map(|s| s.unwrap()).collect();
                if !is_burning_sequence_ids(g, &ids) {
                    return Err(SolveError::WitnessRejected);
                }
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
    }
    unreachable!("n sources always burn n vertices")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burning::is_burning_sequence;
    use crate::generators;

    fn b(g: &Graph) -> usize {
        burning_number_exact(g, None).unwrap().value
    }

    #[test]
    fn small_values() {
        assert_eq!(b(&generators::k4()), 2);
        assert_eq!(b(&generators::path(9)), 3);
        assert_eq!(b(&generators::path(10)), 4);
        assert_eq!(b(&generators::path(2)), 2);
        assert_eq!(b(&generators::path(1)), 1);
        let star = Graph::from_edges([("c", "x"), ("c", "y"), ("c", "z")]).unwrap();
        assert_eq!(b(&star), 2);
    }

    #[test]
    fn disconnected_graph() {
        // Two isolated vertices plus an edge: three components.
        let g = crate::io::read_graph("a\nb\nc d\n").unwrap();
        let r = burning_number_exact(&g, None).unwrap();
        assert_eq!(r.value, 3);
        assert!(is_burning_sequence(&g, &r.witness));
    }

    #[test]
    fn witness_is_deterministic() {
        let g = generators::petersen();
        let a = burning_number_exact(&g, None).unwrap();
        let b = burning_number_exact(&g, None).unwrap();
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.value, 3);
    }

    #[test]
    fn budget_is_enforced() {
        let g = generators::path(30);
        match burning_number_exact(&g, Some(3)) {
            Err(SolveError::BudgetExceeded { lower, upper }) => {
                assert!(lower <= 6 && upper >= 6);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn greedy_is_valid() {
        for g in [
            generators::k33(),
            generators::path(7),
            generators::cycle(11),
        ] {
            let seq = greedy_sequence(&g);
            assert!(is_burning_sequence_ids(&g, &seq));
        }
    }
}
