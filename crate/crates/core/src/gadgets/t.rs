//! T-gadget.
//!
//! Fixed arm: a ladder of two columns `a` (continuous) and `b` over `2 l1`
//! levels, level 1 next to `p`, level `2 l1` next to `q`, a rung on every
//! level. Column `b` is cut between levels `l1` and `l1 + 1`; from those two
//! vertices (`jn_pq`, `jn_qp`) the floating arm starts: columns `wp` and `wq`
//! of `l2` levels, rungs on levels `1..l2-2`, level `l2 - 1` wired to both
//! tips, and the tips (level `l2`) adjacent to each other.

use super::{GadgetError, GadgetHandle, Landmarks};
use crate::graph::GraphBuilder;

fn add(b: &mut GraphBuilder, u: &str, v: &str) {
    b.add_edge(u, v).expect("gadget labels are fresh");
}

/// Writes `T(l1, l2)` between existing or new hooks `p` and `q`.
pub fn emit_t(
    b: &mut GraphBuilder,
    prefix: &str,
    p: &str,
    q: &str,
    l1: usize,
    l2: usize,
) -> Result<Landmarks, GadgetError> {
    if l1 < 1 || l2 < 2 {
        return Err(GadgetError::InvalidParams(format!(
            "T needs l1 >= 1 and l2 >= 2, got ({l1}, {l2})"
        )));
    }
    let v = |col: &str, pos: usize| format!("{prefix}{col}:{pos}");
    let top = 2 * l1;

    for i in 1..=top {
        add(b, &v("a", i), &v("b", i));
        if i < top {
            add(b, &v("a", i), &v("a", i + 1));
            if i != l1 {
                add(b, &v("b", i), &v("b", i + 1));
            }
        }
    }
    for col in ["a", "b"] {
        add(b, p, &v(col, 1));
        add(b, q, &v(col, top));
    }

    // Floating arm; level l2 holds the tips.
    add(b, &v("b", l1), &v("wp", 1));
    add(b, &v("b", l1 + 1), &v("wq", 1));
    for i in 1..l2 - 1 {
        add(b, &v("wp", i), &v("wq", i));
        add(b, &v("wp", i), &v("wp", i + 1));
        add(b, &v("wq", i), &v("wq", i + 1));
    }
    let (tp, tq) = (v("wp", l2), v("wq", l2));
    for col in ["wp", "wq"] {
        add(b, &v(col, l2 - 1), &tp);
        add(b, &v(col, l2 - 1), &tq);
    }
    add(b, &tp, &tq);

    let mut lm = Landmarks::new();
    lm.set_one("p", p.to_owned());
    lm.set_one("q", q.to_owned());
    lm.set_one("f1_pq", v("a", 1));
    lm.set_one("f2_pq", v("b", 1));
    lm.set_one("f1_qp", v("a", top));
    lm.set_one("f2_qp", v("b", top));
    lm.set_one("j_pq", v("a", l1));
    lm.set_one("jn_pq", v("b", l1));
    lm.set_one("j_qp", v("a", l1 + 1));
    lm.set_one("jn_qp", v("b", l1 + 1));
    lm.set_one("w_pq", v("wp", 1));
    lm.set_one("w_qp", v("wq", 1));
    lm.set_one("tip_pq", tp);
    lm.set_one("tip_qp", tq);
    let half = |levels: std::ops::RangeInclusive<usize>, float: &str| {
        let mut h: Vec<String> = levels.flat_map(|i| [v("a", i), v("b", i)]).collect();
        h.extend((1..=l2).map(|i| v(float, i)));
        h
    };
    lm.set_many("half_pq", half(1..=l1, "wp"));
    lm.set_many("half_qp", half(l1 + 1..=top, "wq"));
    Ok(lm)
}

/// Standalone `T(l1, l2)` including hook vertices `p` and `q`.
pub fn make_t(l1: usize, l2: usize) -> Result<GadgetHandle, GadgetError> {
    let mut b = GraphBuilder::new();
    let landmarks = emit_t(&mut b, "", "p", "q", l1, l2)?;
    Ok(GadgetHandle {
        graph: b.build(),
        landmarks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(h: &GadgetHandle, a: &str, b: &str) -> usize {
        let g = &h.graph;
        g.distance(h.landmarks.one(a), h.landmarks.one(b))
            .unwrap()
            .unwrap()
    }

    #[test]
    fn t_2_6() {
        let t = make_t(2, 6).unwrap();
        assert_eq!(t.graph.vertex_count() - 2, 20);
        assert_eq!(d(&t, "p", "q"), 5);
        assert_eq!(d(&t, "p", "tip_pq"), 8);
        assert_eq!(d(&t, "q", "tip_qp"), 8);
        assert!(t.landmarks_resolve());
    }

    #[test]
    fn degree_discipline() {
        for (l1, l2) in [(1, 2), (1, 3), (2, 2), (3, 7)] {
            let t = make_t(l1, l2).unwrap();
            let g = &t.graph;
            for v in g.vertices() {
                let hook = ["p", "q"].contains(&g.label(v));
                assert_eq!(
                    g.degree(v),
                    if hook { 2 } else { 3 },
                    "T({l1},{l2}) {}",
                    g.label(v)
                );
            }
            // f vertices have two neighbors besides the hook.
            for f in ["f1_pq", "f2_pq", "f1_qp", "f2_qp"] {
                let id = g.id(t.landmarks.one(f)).unwrap();
                let hooks = g
                    .neighbors(id)
                    .iter()
                    .filter(|&&u| ["p", "q"].contains(&g.label(u)))
                    .count();
                assert_eq!(g.degree(id) - hooks, 2);
            }
        }
    }

    #[test]
    fn halves_partition_internal_vertices() {
        let t = make_t(3, 5).unwrap();
        let mut all: Vec<String> = t.landmarks.many("half_pq").to_vec();
        all.extend_from_slice(t.landmarks.many("half_qp"));
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 4 * 3 + 2 * 5);
        assert!(t
            .landmarks
            .many("half_pq")
            .contains(&t.landmarks.one("tip_pq").to_owned()));
    }

    #[test]
    fn rejects_small_params() {
        assert!(make_t(0, 4).is_err());
        assert!(make_t(2, 1).is_err());
    }
}
