//! Annexe gadgets: P, Y, Tail and C.

use super::{GadgetError, GadgetHandle, Landmarks};
use crate::burning::BurningSequence;
use crate::graph::GraphBuilder;

fn add(b: &mut GraphBuilder, u: &str, v: &str) {
    b.add_edge(u, v).expect("gadget labels are fresh");
}

fn standalone(
    f: impl FnOnce(&mut GraphBuilder) -> Result<Landmarks, GadgetError>,
) -> Result<GadgetHandle, GadgetError> {
    let mut b = GraphBuilder::new();
    let landmarks = f(&mut b)?;
    Ok(GadgetHandle {
        graph: b.build(),
        landmarks,
    })
}

/// Major path `a1..ad`, minor path `b2..b(d-1)`, rungs `bi - ai`, plus
/// `b2 - a1` and `b(d-1) - ad`.
pub fn emit_p(b: &mut GraphBuilder, prefix: &str, d: usize) -> Result<Landmarks, GadgetError> {
    if d < 3 {
        return Err(GadgetError::InvalidParams(format!(
            "P needs d >= 3, got {d}"
        )));
    }
    let a = |i: usize| format!("{prefix}a{i}");
    let m = |i: usize| format!("{prefix}b{i}");
    for i in 1..d {
        add(b, &a(i), &a(i + 1));
    }
    for i in 2..d - 1 {
        add(b, &m(i), &m(i + 1));
    }
    for i in 2..d {
        add(b, &m(i), &a(i));
    }
    add(b, &m(2), &a(1));
    add(b, &m(d - 1), &a(d));

    let mut lm = Landmarks::new();
    lm.set_one("a1", a(1));
    lm.set_one("ad", a(d));
    lm.set_one("middle", a(d.div_ceil(2)));
    lm.set_many("major", (1..=d).map(a).collect());
    lm.set_many("end", vec![a(1), a(d)]);
    Ok(lm)
}

pub fn make_p(d: usize) -> Result<GadgetHandle, GadgetError> {
    standalone(|b| emit_p(b, "", d))
}

/// Three P-gadgets `px:`, `py:` (parameter `d1`) and `pz:` (parameter `d2`)
/// around a center `z` adjacent to `x_b`, `y_b` and `z_a`.
pub fn emit_y(
    b: &mut GraphBuilder,
    prefix: &str,
    d1: usize,
    d2: usize,
) -> Result<Landmarks, GadgetError> {
    let px = emit_p(b, &format!("{prefix}px:"), d1)?;
    let py = emit_p(b, &format!("{prefix}py:"), d1)?;
    let pz = emit_p(b, &format!("{prefix}pz:"), d2)?;
    let z = format!("{prefix}z");
    add(b, px.one("ad"), &z);
    add(b, py.one("ad"), &z);
    add(b, pz.one("a1"), &z);

    let mut lm = Landmarks::new();
    lm.set_one("x_a", px.one("a1").to_owned());
    lm.set_one("x_b", px.one("ad").to_owned());
    lm.set_one("y_a", py.one("a1").to_owned());
    lm.set_one("y_b", py.one("ad").to_owned());
    lm.set_one("z_a", pz.one("a1").to_owned());
    lm.set_one("z_b", pz.one("ad").to_owned());
    lm.set_one("z", z);
    lm.set_many(
        "end",
        vec![
            px.one("a1").to_owned(),
            py.one("a1").to_owned(),
            pz.one("ad").to_owned(),
        ],
    );
    Ok(lm)
}

pub fn make_y(d1: usize, d2: usize) -> Result<GadgetHandle, GadgetError> {
    standalone(|b| emit_y(b, "", d1, d2))
}

/// Spine `v1..v9` with `p ~ {v2,v3,v4}`, `q ~ {v5,v7,v9}`, `r ~ {v1,v6,v8}`.
pub fn emit_tail(b: &mut GraphBuilder, prefix: &str) -> Landmarks {
    let v = |i: usize| format!("{prefix}v{i}");
    for i in 1..9 {
        add(b, &v(i), &v(i + 1));
    }
    for (hub, spokes) in [("p", [2, 3, 4]), ("q", [5, 7, 9]), ("r", [1, 6, 8])] {
        for s in spokes {
            add(b, &format!("{prefix}{hub}"), &v(s));
        }
    }
    let mut lm = Landmarks::new();
    for i in 1..=9 {
        lm.set_one(&format!("v{i}"), v(i));
    }
    for hub in ["p", "q", "r"] {
        lm.set_one(hub, format!("{prefix}{hub}"));
    }
    lm.set_many("PT1", vec![v(1)]);
    lm.set_many("PT2", (2..=4).map(v).collect());
    lm.set_many("PT3", (5..=9).map(v).collect());
    lm.set_many("end", vec![v(1), v(9)]);
    lm
}

pub fn make_tail() -> GadgetHandle {
    standalone(|b| Ok(emit_tail(b, ""))).expect("tail has no parameters")
}

/// Parameter of the P-gadget at position `i` of `C(m)`.
fn c_p_param(m: usize, i: usize) -> usize {
    if i == m {
        2 * m - 2
    } else {
        2 * i - 1
    }
}

/// `v_m2 - P_m - P_(m-1) - ... - P_4 - Tail(v9..v1) - v_m2`.
pub fn emit_c(b: &mut GraphBuilder, prefix: &str, m: usize) -> Result<Landmarks, GadgetError> {
    if m < 4 {
        return Err(GadgetError::InvalidParams(format!(
            "C needs m >= 4, got {m}"
        )));
    }
    let vm2 = format!("{prefix}vm2");
    let mut trunk = vec![vm2.clone()];
    let mut middles = Vec::new();
    let mut prev = vm2.clone();
    for i in (4..=m).rev() {
        let d = c_p_param(m, i);
        let p = emit_p(b, &format!("{prefix}p{i}:"), d)?;
        add(b, &prev, p.one("a1"));
        trunk.extend_from_slice(p.many("major"));
        middles.push(if i == m {
            p.many("major")[m - 2].clone()
        } else {
            p.one("middle").to_owned()
        });
        prev = p.one("ad").to_owned();
    }
    let tail = emit_tail(b, &format!("{prefix}tail:"));
    add(b, &prev, tail.one("v9"));
    add(b, tail.one("v1"), &vm2);

    let mut trunk_prime = trunk.clone();
    trunk_prime.extend(["v9", "v8", "r", "v1"].map(|n| tail.one(n).to_owned()));
    trunk.extend((1..=9).rev().map(|i| tail.one(&format!("v{i}")).to_owned()));
    middles.extend(["v7", "v3", "v1"].map(|n| tail.one(n).to_owned()));

    let mut lm = Landmarks::new();
    lm.set_one("v_m2", vm2.clone());
    lm.set_one("v1", tail.one("v1").to_owned());
    lm.set_one("end", vm2);
    lm.set_many("trunk", trunk);
    lm.set_many("trunk_prime", trunk_prime);
    lm.set_many("middles", middles);
    for (name, labels) in tail.iter() {
        if name != "end" && !name.starts_with('v') {
            lm.set_many(&format!("tail_{name}"), labels.to_vec());
        }
    }
    Ok(lm)
}

pub fn make_c(m: usize) -> Result<GadgetHandle, GadgetError> {
    standalone(|b| emit_c(b, "", m))
}

/// `(a_m, a_(m-1), ..., a_4, v7, v3, v1)` on the labels of [`make_c`].
pub fn make_c_witness(m: usize) -> Result<BurningSequence, GadgetError> {
    if m < 4 {
        return Err(GadgetError::InvalidParams(format!(
            "C needs m >= 4, got {m}"
        )));
    }
    let mut seq = vec![format!("p{m}:a{}", m - 1)];
    seq.extend((4..m).rev().map(|i| format!("p{i}:a{i}")));
    seq.extend(["tail:v7", "tail:v3", "tail:v1"].map(str::to_owned));
    Ok(BurningSequence(seq))
}

/// Closed-form vertex counts.
pub fn p_vertex_count(d: usize) -> usize {
    2 * d - 2
}

pub fn y_vertex_count(d1: usize, d2: usize) -> usize {
    4 * d1 + 2 * d2 - 5
}

pub fn c_vertex_count(m: usize) -> usize {
    2 * m * m - 2 * m - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burning::is_burning_sequence;

    #[test]
    fn p_counts_and_middle() {
        let p = make_p(7).unwrap();
        assert_eq!(p.graph.vertex_count(), 12);
        assert_eq!(make_p(3).unwrap().graph.vertex_count(), 4);
        let d = p.graph.bfs_distances(p.landmarks.one("middle")).unwrap();
        assert_eq!(d.dist.iter().flatten().max(), Some(&3));
    }

    #[test]
    fn y_counts_and_spread() {
        assert_eq!(make_y(3, 3).unwrap().graph.vertex_count(), 13);
        assert_eq!(make_y(17, 19).unwrap().graph.vertex_count(), 101);
        for (d1, d2) in [(3, 3), (5, 9), (8, 4)] {
            let y = make_y(d1, d2).unwrap();
            let d = y.graph.bfs_distances(y.landmarks.one("x_a")).unwrap();
            let far = d.dist.iter().flatten().max().unwrap() + 1;
            assert_eq!(far, (2 * d1 + 1).max(d1 + d2 + 1));
        }
    }

    #[test]
    fn tail_shape() {
        let t = make_tail();
        assert_eq!(t.graph.vertex_count(), 12);
        let g = &t.graph;
        assert_eq!(g.degree(g.id("v1").unwrap()), 2);
        assert_eq!(g.distance("v9", "v1").unwrap(), Some(3));
    }

    #[test]
    fn c4_shape_and_witness() {
        let c = make_c(4).unwrap();
        assert_eq!(c.graph.vertex_count(), 23);
        assert_eq!(c.landmarks.many("trunk").len(), 16);
        assert_eq!(c.landmarks.many("trunk_prime").len(), 11);
        let w = make_c_witness(4).unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.sources(), c.landmarks.many("middles"));
        assert!(is_burning_sequence(&c.graph, &w));
    }

    #[test]
    fn c_only_end_has_degree_two() {
        let c = make_c(6).unwrap();
        let g = &c.graph;
        for v in g.vertices() {
            let expect = if g.label(v) == "vm2" { 2 } else { 3 };
            assert_eq!(g.degree(v), expect, "{}", g.label(v));
        }
    }
}
