//! Small named graphs and seeded random families used by tests and the CLI.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, GraphBuilder};

/// Zero-padded vertex label `v<i>` so that label order matches index order.
pub fn indexed_label(i: usize, n: usize) -> String {
    let width = n.to_string().len();
    format!("v{i:0width$}")
}

/// Path `v1 - v2 - ... - vn`.
pub fn path(n: usize) -> Graph {
    let mut b = GraphBuilder::new();
    for i in 1..=n {
        b.add_vertex(&indexed_label(i, n));
    }
    for i in 1..n {
        b.add_edge(&indexed_label(i, n), &indexed_label(i + 1, n))
            .unwrap();
    }
    b.build()
}

/// Cycle on `n >= 3` vertices `v1 .. vn`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a simple cycle needs at least three vertices");
    let mut b = path(n).to_builder();
    b.add_edge(&indexed_label(n, n), &indexed_label(1, n))
        .unwrap();
    b.build()
}

pub fn complete(n: usize) -> Graph {
    let mut b = GraphBuilder::new();
    for i in 1..=n {
        b.add_vertex(&indexed_label(i, n));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            b.add_edge(&indexed_label(i, n), &indexed_label(j, n))
                .unwrap();
        }
    }
    b.build()
}

/// K4 with the labels `a b c d`.
pub fn k4() -> Graph {
    complete(4).relabeled(|l| match l {
        "v1" => "a".into(),
        "v2" => "b".into(),
        "v3" => "c".into(),
        _ => "d".into(),
    })
}

pub fn k33() -> Graph {
    let mut b = GraphBuilder::new();
    for i in 1..=3 {
        for j in 1..=3 {
            b.add_edge(&format!("a{i}"), &format!("b{j}")).unwrap();
        }
    }
    b.build()
}

/// Triangular prism: two triangles `a*`, `b*` joined by a perfect matching.
pub fn prism() -> Graph {
    let mut b = GraphBuilder::new();
    for side in ["a", "b"] {
        for (i, j) in [(1, 2), (2, 3), (3, 1)] {
            b.add_edge(&format!("{side}{i}"), &format!("{side}{j}"))
                .unwrap();
        }
    }
    for i in 1..=3 {
        b.add_edge(&format!("a{i}"), &format!("b{i}")).unwrap();
    }
    b.build()
}

pub fn petersen() -> Graph {
    let mut b = GraphBuilder::new();
    for i in 0..5 {
        b.add_edge(&format!("o{i}"), &format!("o{}", (i + 1) % 5))
            .unwrap();
        b.add_edge(&format!("i{i}"), &format!("i{}", (i + 2) % 5))
            .unwrap();
        b.add_edge(&format!("o{i}"), &format!("i{i}")).unwrap();
    }
    b.build()
}

/// Uniform-ish random connected cubic graph on `n` vertices via the
/// configuration model with rejection. `n` must be even and at least 4.
pub fn random_cubic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 4 && n % 2 == 0, "cubic graphs need an even n >= 4");
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(rng);
        let mut b = GraphBuilder::new();
        for i in 0..n {
            b.add_vertex(&indexed_label(i + 1, n));
        }
        let ok = points.chunks(2).all(|pair| {
            b.add_edge(
                &indexed_label(pair[0] + 1, n),
                &indexed_label(pair[1] + 1, n),
            )
            .is_ok()
        });
        if ok {
            let g = b.build();
            if g.is_connected() {
                return g;
            }
        }
    }
}

/// Random connected graph: a random recursive tree plus each remaining pair
/// independently with probability `p`.
pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut b = GraphBuilder::new();
    for i in 1..=n {
        b.add_vertex(&indexed_label(i, n));
    }
    let mut tree = vec![vec![false; n]; n];
    for i in 1..n {
        let j = rng.gen_range(0..i);
        tree[i][j] = true;
        tree[j][i] = true;
        b.add_edge(&indexed_label(i + 1, n), &indexed_label(j + 1, n))
            .unwrap();
    }
    for i in 0..n {
        for j in i + 1..n {
            if !tree[i][j] && rng.gen_bool(p) {
                b.add_edge(&indexed_label(i + 1, n), &indexed_label(j + 1, n))
                    .unwrap();
            }
        }
    }
    b.build()
}

/// Every labeled cubic graph on vertex set `v1..vn` (connected or not).
pub fn all_cubic(n: usize) -> Vec<Graph> {
    fn extend(n: usize, adj: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some(u) = (0..n).find(|&u| adj[u].len() < 3) else {
            out.push(adj.clone());
            return;
        };
        let need = 3 - adj[u].len();
        let candidates: Vec<usize> = (u + 1..n)
            .filter(|&w| adj[w].len() < 3 && !adj[u].contains(&w))
            .collect();
        let mut pick = Vec::with_capacity(need);
        choose(n, u, need, &candidates, 0, &mut pick, adj, out);
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        n: usize,
        u: usize,
        need: usize,
        candidates: &[usize],
        from: usize,
        pick: &mut Vec<usize>,
        adj: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if pick.len() == need {
            for &w in pick.iter() {
                adj[u].push(w);
                adj[w].push(u);
            }
            extend(n, adj, out);
            for &w in pick.iter() {
                adj[u].pop();
                adj[w].pop();
            }
            return;
        }
        for i in from..candidates.len() {
            pick.push(candidates[i]);
            choose(n, u, need, candidates, i + 1, pick, adj, out);
            pick.pop();
        }
    }

    let mut raw = Vec::new();
    extend(n, &mut vec![Vec::new(); n], &mut raw);
    raw.into_iter()
        .map(|adj| {
            let mut b = GraphBuilder::new();
            for (u, nbrs) in adj.iter().enumerate() {
                for &w in nbrs.iter().filter(|&&w| w > u) {
                    b.add_edge(&indexed_label(u + 1, n), &indexed_label(w + 1, n))
                        .unwrap();
                }
            }
            b.build()
        })
        .collect()
}
