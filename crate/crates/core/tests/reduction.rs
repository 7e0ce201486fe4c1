use std::collections::BTreeSet;
use std::sync::OnceLock;

use burnkit::burning::{evaluate, is_burning_sequence, simulate, BurningSequence};
use burnkit::generators;
use burnkit::reduction::{
    audit_sequence, build_h, core_label, lift_cover, vc_to_witness, witness_to_vc, ReductionError,
    ReductionInstance,
};
use burnkit::solvers::vertex_cover_exact;

fn k4() -> &'static ReductionInstance {
    static INST: OnceLock<ReductionInstance> = OnceLock::new();
    INST.get_or_init(|| build_h(&generators::k4(), None).unwrap())
}

fn min_cover(inst: &ReductionInstance) -> Vec<String> {
    vertex_cover_exact(inst.g_prime(), None).unwrap().witness
}

#[test]
fn k4_vertex_count_from_gadget_counts() {
    // n' = 6, |E(G')| = 8; BTP(7,9,18) = 2*255 + 128*72; Y(17,19); C(35).
    let btp = 2 * (256 - 1) + 128 * (4 * 9 + 2 * 18);
    assert_eq!(btp, 9726);
    let y = 4 * 17 + 2 * 19 - 5;
    let c = 2 * 35 * 35 - 2 * 35 - 1;
    assert_eq!((y, c), (101, 2379));
    let total = 6 + 8 * btp + y + c;
    assert_eq!(total, 80_294);
    let inst = k4();
    assert_eq!(inst.h.vertex_count(), total);
    assert_eq!(inst.params.h_vertex_count(8), total);
}

#[test]
fn k4_h_is_connected_cubic() {
    let h = &k4().h;
    assert!(h.is_regular(3));
    assert!(h.is_connected());
    assert_eq!(
        h.degree_histogram().into_iter().collect::<Vec<_>>(),
        vec![(3, 80_294)]
    );
}

#[test]
fn domains_partition_h() {
    let inst = k4();
    let doms = inst.domains();
    assert_eq!(doms.len(), 6);
    let mut seen = BTreeSet::new();
    for d in doms.values() {
        for &v in d {
            assert!(seen.insert(v), "domains overlap");
        }
    }
    let outside = inst.outside_domains();
    assert!(outside.iter().all(|v| !seen.contains(v)));
    assert_eq!(seen.len() + outside.len(), inst.h.vertex_count());
    // Outside = {z} ∪ P_z ∪ C.
    assert_eq!(outside.len(), 1 + (2 * 19 - 2) + 2379);
    // Dom_x holds two extended halves and P_x.
    let half = 9726 / 2;
    assert_eq!(doms["x"].len(), 1 + 2 * half + (2 * 17 - 2));
    assert_eq!(doms["a"].len(), 1 + 3 * half);
}

#[test]
fn distances_through_the_annexe() {
    let inst = k4();
    let h = &inst.h;
    let x = core_label("x");
    let zb = inst.y_landmarks.one("z_b");
    let vm2 = inst.c_landmarks.one("v_m2");
    assert_eq!(h.distance(&x, zb).unwrap(), Some(17 + 19 + 1));
    // One more hop reaches v_m2.
    assert_eq!(h.distance(&x, vm2).unwrap(), Some(38));
}

#[test]
fn leaving_a_domain_takes_long() {
    let inst = k4();
    let h = &inst.h;
    let p = &inst.params;
    let doms = inst.domains();
    for u in ["a", "b", "c", "d"] {
        let d = h.bfs(h.id(&core_label(u)).unwrap());
        let dom = &doms[u];
        let nearest = h
            .vertices()
            .filter(|v| !dom.contains(v))
            .filter_map(|v| d[v])
            .min()
            .unwrap();
        assert!(nearest + 1 >= p.cn / 2 + 3, "{u}: {nearest}");
    }
}

#[test]
fn tips_of_adjacent_gadgets_are_far_apart() {
    let inst = k4();
    let h = &inst.h;
    let p = &inst.params;
    // BTP(a,c) and BTP(a,d) share endpoint a.
    let t1 = h.id("btp:a:c:t:0:wp:18").unwrap();
    let t2 = h.id("btp:a:d:t:0:wp:18").unwrap();
    let d = h.bfs(t1)[t2].unwrap();
    assert_eq!(d, 2 * (p.h + p.l1 + p.l2 + 1));
    assert!(d > 2 * (p.l1 + p.l2));
}

#[test]
fn witness_from_minimum_cover() {
    let inst = k4();
    let cover = min_cover(inst);
    assert_eq!(cover.len(), 4);
    let w = vc_to_witness(inst, &cover).unwrap();
    assert_eq!(w.len(), 39);
    assert!(w.sources()[0] == "g:x" || w.sources()[0] == "g:y");
    let s = simulate(&inst.h, &w).unwrap();
    assert_eq!(s.completion_step(), Some(39));

    let short = BurningSequence(w.sources()[..38].to_vec());
    let ev = evaluate(&inst.h, &short).unwrap();
    assert!(ev.violation.is_none());
    let unburned: Vec<_> = ev.schedule.unburned().map(|v| inst.h.label(v)).collect();
    assert!(!unburned.is_empty());
    assert!(unburned.iter().any(|l| l.starts_with("c:tail:")));

    let audit = audit_sequence(inst, &w).unwrap();
    assert!(audit.unrepresented.is_empty());
    assert_eq!(audit.start, 0..4);
    assert_eq!(audit.middle.len(), 8);
    assert_eq!(audit.end.len(), 32 - 7 + 2);
    assert_eq!(audit.outside_counts()[0], 0);
    assert!(audit.owners.iter().all(|o| cover.contains(o)));
    assert!(audit.last_unique.unwrap() > 0);

    let back = witness_to_vc(inst, &w).unwrap();
    assert_eq!(back, cover);
}

#[test]
fn witness_from_lifted_and_non_minimum_covers() {
    let inst = k4();
    let base_cover = vertex_cover_exact(&inst.base, None).unwrap().witness;
    let lifted = lift_cover(&inst.subdivision, &base_cover);
    assert_eq!(lifted.len(), 4);
    let w = vc_to_witness(inst, &lifted).unwrap();
    assert!(is_burning_sequence(&inst.h, &w));

    let big: Vec<String> = ["a", "b", "c", "d", "x"].map(String::from).to_vec();
    let w = vc_to_witness(inst, &big).unwrap();
    assert_eq!(w.len(), 5 + 32 + 3);
    assert!(is_burning_sequence(&inst.h, &w));
    let back = witness_to_vc(inst, &w).unwrap();
    assert!(back.len() <= 5);
}

#[test]
fn witness_errors() {
    let inst = k4();
    let no_xy: Vec<String> = ["a", "b", "c", "d"].map(String::from).to_vec();
    assert_eq!(vc_to_witness(inst, &no_xy), Err(ReductionError::MissingXY));
    let partial: Vec<String> = ["a", "x"].map(String::from).to_vec();
    assert!(matches!(
        vc_to_witness(inst, &partial),
        Err(ReductionError::NotACover(..))
    ));
    let short = BurningSequence::new(["g:a"]);
    assert!(matches!(
        audit_sequence(inst, &short),
        Err(ReductionError::SequenceTooShort { len: 1, min: 35 })
    ));
    // A valid-length but non-burning sequence.
    let mut w = vc_to_witness(inst, &min_cover(inst)).unwrap().0;
    w.pop();
    w.insert(0, "g:a".into());
    w.remove(1);
    assert!(matches!(
        witness_to_vc(inst, &BurningSequence(w)),
        Err(ReductionError::NotABurningSequence { .. })
    ));
}
