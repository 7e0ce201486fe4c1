use burnkit::burning::{is_burning_sequence, last_and_unique, simulate};
use burnkit::generators;
use burnkit::lift::{build_hd, parse_copy_label, ProjectMode};
use burnkit::solvers::{all_optimal_sequences, burning_number_exact};
use burnkit::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn b(g: &Graph) -> usize {
    burning_number_exact(g, None).unwrap().value
}

fn bases() -> Vec<Graph> {
    let mut out = vec![generators::k4(), generators::k33(), generators::prism()];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [8, 10] {
        out.push(generators::random_cubic(n, &mut rng));
    }
    out
}

#[test]
fn burning_number_grows_by_at_most_one() {
    for base in bases() {
        let b0 = b(&base);
        let mut prev = b0;
        for d in 4..=6 {
            let h = build_hd(&base, d).unwrap();
            assert!(h.graph.is_regular(d) && h.graph.is_connected());
            assert_eq!(h.graph.vertex_count(), (d - 2) * base.vertex_count());
            let bd = b(&h.graph);
            assert!(b0 <= bd && bd <= b0 + 1, "d = {d}: {b0} vs {bd}");
            assert!(prev <= bd);
            prev = bd;
        }
    }
}

#[test]
fn k4_h4_needs_one_more_step() {
    let k4 = generators::k4();
    let h4 = build_hd(&k4, 4).unwrap();
    assert_eq!(b(&h4.graph), 3);
    for seq in all_optimal_sequences(&k4).unwrap() {
        let s = simulate(&k4, &seq).unwrap();
        assert!(!last_and_unique(&s).unwrap().is_empty(), "{seq}");
    }
}

#[test]
fn lift_and_project_round_trip() {
    for base in bases() {
        let opt = burning_number_exact(&base, None).unwrap();
        for d in 4..=6 {
            let h = build_hd(&base, d).unwrap();
            let lifted = h.lift_sequence(&opt.witness).unwrap();
            assert!(lifted.len() <= opt.value + 1);
            assert!(is_burning_sequence(&h.graph, &lifted));

            let hd_opt = burning_number_exact(&h.graph, None).unwrap();
            for dp in 3..d {
                let p = h
                    .project_sequence(&hd_opt.witness, dp, ProjectMode::Repair)
                    .unwrap();
                assert!(p.len() <= hd_opt.value);
                assert!(is_burning_sequence(&h.level(dp).unwrap(), &p));
            }
        }
    }
}

#[test]
fn distance_law_and_projection_contracts() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for base in bases() {
        let h = build_hd(&base, 6).unwrap();
        let g = &h.graph;
        let dm = g.distance_matrix();
        let parts: Vec<(usize, &str)> = g
            .labels()
            .iter()
            .map(|l| parse_copy_label(l).unwrap())
            .collect();
        let id = |j: usize, v: &str| g.id(&format!("copy{j}:{v}")).unwrap();
        for _ in 0..300 {
            let u = rng.gen_range(0..g.vertex_count());
            let w = rng.gen_range(0..g.vertex_count());
            let ((ju, bu), (jw, bw)) = (parts[u], parts[w]);
            if bu != bw && ju != jw {
                assert_eq!(dm[u][w], dm[u][id(ju, bw)] + 1);
            }
            for dp in 3..6 {
                let pu = g.id(&h.project_vertex(g.label(u), dp).unwrap()).unwrap();
                let pw = g.id(&h.project_vertex(g.label(w), dp).unwrap()).unwrap();
                assert!(dm[pu][pw] <= dm[u][w]);
            }
        }
    }
}
