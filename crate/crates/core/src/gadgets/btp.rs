//! Binary-tree gadget and the tree pair joined by T-gadgets.

use super::t::emit_t;
use super::{GadgetError, GadgetHandle, Landmarks};
use crate::graph::GraphBuilder;

/// Perfect binary tree of height `h`; vertices `<prefix><level>:<index>`.
pub fn emit_bt(b: &mut GraphBuilder, prefix: &str, h: usize) -> Result<Landmarks, GadgetError> {
    if h < 1 {
        return Err(GadgetError::InvalidParams("BT needs h >= 1".into()));
    }
    let v = |level: usize, i: usize| format!("{prefix}{level}:{i}");
    for level in 1..=h {
        for i in 0..1usize << level {
            b.add_edge(&v(level - 1, i / 2), &v(level, i))
                .expect("tree labels are fresh");
        }
    }
    let mut lm = Landmarks::new();
    lm.set_one("root", v(0, 0));
    lm.set_many("leaves", (0..1usize << h).map(|i| v(h, i)).collect());
    lm.set_many(
        "vertices",
        (0..=h)
            .flat_map(|l| (0..1usize << l).map(move |i| (l, i)))
            .map(|(l, i)| v(l, i))
            .collect(),
    );
    Ok(lm)
}

pub fn make_bt(h: usize) -> Result<GadgetHandle, GadgetError> {
    let mut b = GraphBuilder::new();
    let landmarks = emit_bt(&mut b, "", h)?;
    Ok(GadgetHandle {
        graph: b.build(),
        landmarks,
    })
}

/// Checks `l1 + l2 < 2^(h-2)` and `l2 > l1 + h + 1`.
pub fn check_btp_params(h: usize, l1: usize, l2: usize) -> Result<(), GadgetError> {
    if h < 2 || l1 < 1 || l2 < 2 {
        return Err(GadgetError::InvalidParams(format!(
            "BTP needs h >= 2, l1 >= 1, l2 >= 2, got ({h}, {l1}, {l2})"
        )));
    }
    let eq1 = l1 + l2 >= 1usize.checked_shl((h - 2) as u32).unwrap_or(usize::MAX);
    let eq2 = l2 <= l1 + h + 1;
    if eq1 || eq2 {
        return Err(GadgetError::ParamInequalityViolated { eq1, eq2 });
    }
    Ok(())
}

/// Writes `BTP(h, l1, l2)` under `prefix`: trees `bt:ab:`, `bt:ba:` and
/// T-gadgets `t:<i>:` joining leaf `i` of one tree to leaf `i` of the other.
pub fn emit_btp(
    b: &mut GraphBuilder,
    prefix: &str,
    h: usize,
    l1: usize,
    l2: usize,
) -> Result<Landmarks, GadgetError> {
    check_btp_params(h, l1, l2)?;
    let ab = emit_bt(b, &format!("{prefix}bt:ab:"), h)?;
    let ba = emit_bt(b, &format!("{prefix}bt:ba:"), h)?;
    let mut tips_ab = Vec::new();
    let mut tips_ba = Vec::new();
    let mut a_half = ab.many("vertices").to_vec();
    let mut b_half = ba.many("vertices").to_vec();
    for (i, (p, q)) in ab.many("leaves").iter().zip(ba.many("leaves")).enumerate() {
        let t = emit_t(b, &format!("{prefix}t:{i}:"), p, q, l1, l2)?;
        tips_ab.push(t.one("tip_pq").to_owned());
        tips_ba.push(t.one("tip_qp").to_owned());
        a_half.extend_from_slice(t.many("half_pq"));
        b_half.extend_from_slice(t.many("half_qp"));
    }
    let mut lm = Landmarks::new();
    lm.set_one("r_ab", ab.one("root").to_owned());
    lm.set_one("r_ba", ba.one("root").to_owned());
    lm.set_many("leaves_ab", ab.many("leaves").to_vec());
    lm.set_many("leaves_ba", ba.many("leaves").to_vec());
    lm.set_many("tips_ab", tips_ab);
    lm.set_many("tips_ba", tips_ba);
    lm.set_many("a_half", a_half);
    lm.set_many("b_half", b_half);
    Ok(lm)
}

pub fn make_btp(h: usize, l1: usize, l2: usize) -> Result<GadgetHandle, GadgetError> {
    let mut b = GraphBuilder::new();
    let landmarks = emit_btp(&mut b, "", h, l1, l2)?;
    Ok(GadgetHandle {
        graph: b.build(),
        landmarks,
    })
}

/// Closed-form vertex count of `BTP(h, l1, l2)`.
pub fn btp_vertex_count(h: usize, l1: usize, l2: usize) -> usize {
    2 * ((1 << (h + 1)) - 1) + (1 << h) * (4 * l1 + 2 * l2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bt_shape() {
        let t = make_bt(3).unwrap();
        assert_eq!(t.graph.vertex_count(), 15);
        assert_eq!(t.landmarks.many("leaves").len(), 8);
        assert_eq!(make_bt(1).unwrap().graph.vertex_count(), 3);
        let d = t.graph.bfs_distances(t.landmarks.one("root")).unwrap();
        for leaf in t.landmarks.many("leaves") {
            assert_eq!(d.get(&t.graph, leaf), Some(3));
        }
    }

    #[test]
    fn btp_6_1_9() {
        let g = make_btp(6, 1, 9).unwrap();
        assert_eq!(g.graph.vertex_count(), 1662);
        assert_eq!(btp_vertex_count(6, 1, 9), 1662);
        let lm = &g.landmarks;
        let d = g.graph.bfs_distances(lm.one("r_ab")).unwrap();
        assert_eq!(d.get(&g.graph, lm.one("r_ba")), Some(15));
        for tip in lm.many("tips_ab") {
            assert_eq!(d.get(&g.graph, tip), Some(6 + 1 + 9));
        }
        assert_eq!(lm.many("tips_ab").len(), 64);
        assert!(lm
            .many("tips_ab")
            .iter()
            .all(|t| !lm.many("tips_ba").contains(t)));
        assert_eq!(lm.many("a_half").len() + lm.many("b_half").len(), 1662);
    }

    #[test]
    fn btp_inequalities() {
        assert_eq!(
            make_btp(5, 1, 7).unwrap_err(),
            GadgetError::ParamInequalityViolated {
                eq1: true,
                eq2: true
            }
        );
        assert_eq!(
            check_btp_params(6, 1, 7),
            Err(GadgetError::ParamInequalityViolated {
                eq1: false,
                eq2: true
            })
        );
        assert!(check_btp_params(7, 9, 18).is_ok());
    }
}
