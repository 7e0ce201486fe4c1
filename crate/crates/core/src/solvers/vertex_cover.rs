//! Minimum vertex cover by degree branching on `u128` masks.

use std::time::Instant;

use super::{SolveError, SolveResult, SolveStats, DEFAULT_BUDGET};
use crate::graph::Graph;

pub const VC_LIMIT: usize = 128;

pub fn is_vertex_cover<S: AsRef<str>>(g: &Graph, cover: &[S]) -> bool {
    let ids: Vec<_> = cover.iter().filter_map(|l| g.id(l.as_ref())).collect();
    ids.len() == cover.len() && g.edges().all(|(u, v)| ids.contains(&u) || ids.contains(&v))
}

struct Search {
    adj: Vec<u128>,
    best: u128,
    nodes: u64,
    budget: u64,
}

struct OutOfBudget;

impl Search {
    fn deg(&self, v: usize, alive: u128) -> u32 {
        (self.adj[v] & alive).count_ones()
    }

    fn solve(&mut self, mut alive: u128, mut cover: u128) -> Result<(), OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OutOfBudget);
        }
        // Degree 0: drop. Degree 1: take the neighbor.
        loop {
            let mut changed = false;
            let mut rest = alive;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if alive >> v & 1 == 0 {
                    continue;
                }
                match self.deg(v, alive) {
                    0 => {
                        alive &= !(1 << v);
                        changed = true;
                    }
                    1 => {
                        let u = (self.adj[v] & alive).trailing_zeros() as usize;
                        cover |= 1 << u;
                        alive &= !(1 << u) & !(1 << v);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }

        let mut edges = 0u32;
        let mut max = (0u32, 0usize);
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = self.deg(v, alive);
            edges += d;
            if d > max.0 {
                max = (d, v);
            }
        }
        edges /= 2;
        let taken = cover.count_ones();
        if edges == 0 {
            if taken < self.best.count_ones() {
                self.best = cover;
            }
            return Ok(());
        }
        if taken + edges.div_ceil(max.0) >= self.best.count_ones() {
            return Ok(());
        }
        let v = max.1;
        let nv = self.adj[v] & alive;
        self.solve(alive & !(1 << v), cover | 1 << v)?;
        self.solve(alive & !nv & !(1 << v), cover | nv)
    }
}

fn greedy(adj: &[u128], n: usize) -> u128 {
    let mut alive: u128 = if n == 128 { u128::MAX } else { (1 << n) - 1 };
    let mut cover = 0;
    loop {
        let best = (0..n)
            .filter(|&v| alive >> v & 1 == 1)
            .map(|v| ((adj[v] & alive).count_ones(), std::cmp::Reverse(v)))
            .max();
        match best {
            Some((d, std::cmp::Reverse(v))) if d > 0 => {
                cover |= 1 << v;
                alive &= !(1 << v);
            }
            _ => return cover,
        }
    }
}

/// Minimum vertex cover; the witness lists labels in order.
pub fn vertex_cover_exact(
    g: &Graph,
    budget: Option<u64>,
) -> Result<SolveResult<Vec<String>>, SolveError> {
    let n = g.vertex_count();
    if n > VC_LIMIT {
        return Err(SolveError::TooLarge { n, limit: VC_LIMIT });
    }
    let start = Instant::now();
    let adj: Vec<u128> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u))
        .collect();
    let initial = greedy(&adj, n);
    let mut search = Search {
        adj,
        best: initial,
        nodes: 0,
        budget: budget.unwrap_or(DEFAULT_BUDGET),
    };
    let all = if n == 128 { u128::MAX } else { (1 << n) - 1 };
    if search.solve(all, 0).is_err() {
        return Err(SolveError::BudgetExceeded {
            lower: 0,
            upper: search.best.count_ones() as usize,
        });
    }
    let witness: Vec<String> = g
        .vertices()
        .filter(|&v| search.best >> v & 1 == 1)
        .map(|v| g.label(v).to_owned())
        .collect();
    if !is_vertex_cover(g, &witness) {
        return Err(SolveError::WitnessRejected);
    }
    Ok(SolveResult {
        value: witness.len(),
        witness,
        stats: SolveStats {
            nodes: search.nodes,
            elapsed: start.elapsed(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn brute(g: &Graph) -> usize {
        let n = g.vertex_count();
        (0u32..1 << n)
            .filter(|m| g.edges().all(|(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1))
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    }

    #[test]
    fn known_values() {
        assert_eq!(
            vertex_cover_exact(&generators::k4(), None).unwrap().value,
            3
        );
        let p3 = generators::path(3);
        let r = vertex_cover_exact(&p3, None).unwrap();
        assert_eq!(r.witness, vec!["v2"]);
        assert_eq!(
            vertex_cover_exact(&generators::petersen(), None)
                .unwrap()
                .value,
            6
        );
    }

    #[test]
    fn matches_brute_force_on_all_cubic_six() {
        for g in generators::all_cubic(6) {
            assert_eq!(vertex_cover_exact(&g, None).unwrap().value, brute(&g));
        }
    }

    #[test]
    fn edgeless_graph() {
        let g = crate::io::read_graph("a\nb\n").unwrap();
        assert_eq!(vertex_cover_exact(&g, None).unwrap().value, 0);
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            vertex_cover_exact(&generators::path(129), None),
            Err(SolveError::TooLarge { .. })
        ));
    }
}
