use std::collections::{BTreeMap, BTreeSet};

use super::params::{choose_params, ReductionParams};
use super::ReductionError;
use crate::gadgets::{emit_btp, emit_c, emit_y, Landmarks};
use crate::graph::{Graph, GraphBuilder, VertexId};

/// `G'` with the subdivided edge and the two inserted vertices.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub graph: Graph,
    pub p: String,
    pub q: String,
    pub x: String,
    pub y: String,
}

fn fresh(g: &Graph, base: &str, avoid: &str) -> String {
    let mut l = base.to_owned();
    while g.contains(&l) || l == avoid {
        l.push('\'');
    }
    l
}

/// Replaces edge `p - q` (default: the smallest edge) by `p - x - y - q`.
pub fn double_subdivide(
    g: &Graph,
    edge: Option<(&str, &str)>,
) -> Result<Subdivision, ReductionError> {
    let (p, q) = match edge {
        Some((p, q)) => {
            let (pi, qi) = (g.id(p), g.id(q));
            match (pi, qi) {
                (Some(a), Some(b)) if g.has_edge(a, b) => (p.to_owned(), q.to_owned()),
                _ => return Err(ReductionError::EdgeNotFound(p.to_owned(), q.to_owned())),
            }
        }
        None => {
            let (a, b) = g
                .edges()
                .next()
                .ok_or_else(|| ReductionError::EdgeNotFound(String::new(), String::new()))?;
            (g.label(a).to_owned(), g.label(b).to_owned())
        }
    };
    let x = fresh(g, "x", "");
    let y = fresh(g, "y", &x);
    let mut b = g.to_builder();
    b.remove_edge(&p, &q);
    for (u, v) in [(&p, &x), (&x, &y), (&y, &q)] {
        b.add_edge(u, v).expect("fresh labels");
    }
    Ok(Subdivision {
        graph: b.build(),
        p,
        q,
        x,
        y,
    })
}

/// Extends a cover of `G` to one of `G'`: add `y` if `p` is covered, else `x`.
pub fn lift_cover(sub: &Subdivision, cover: &[String]) -> Vec<String> {
    let mut out: Vec<String> = cover.to_vec();
    out.push(if cover.contains(&sub.p) {
        sub.y.clone()
    } else {
        sub.x.clone()
    });
    out.sort();
    out
}

/// Where a vertex of `H` comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    /// A vertex of `G'`.
    Core(String),
    /// Half of the BTP gadget for `G'` edge `(u, v)`, belonging to `owner`.
    Btp {
        u: String,
        v: String,
        owner: String,
    },
    PathX,
    PathY,
    PathZ,
    Center,
    CGadget,
}

/// The reduction output with provenance.
#[derive(Debug, Clone)]
pub struct ReductionInstance {
    pub base: Graph,
    pub subdivision: Subdivision,
    pub h: Graph,
    pub params: ReductionParams,
    /// Per vertex of `h`.
    pub origin: Vec<Origin>,
    /// Per vertex of `h`: the `G'` vertex whose domain contains it.
    pub owner: Vec<Option<VertexId>>,
    pub y_landmarks: Landmarks,
    pub c_landmarks: Landmarks,
}

pub fn core_label(v: &str) -> String {
    format!("g:{v}")
}

pub fn btp_prefix(u: &str, v: &str) -> String {
    format!("btp:{u}:{v}:")
}

/// Builds `H` from a connected cubic `G`, subdividing `edge` (default smallest).
pub fn build_h(g: &Graph, edge: Option<(&str, &str)>) -> Result<ReductionInstance, ReductionError> {
    if !g.is_regular(3) || g.is_empty() {
        return Err(ReductionError::NotCubic);
    }
    if !g.is_connected() {
        return Err(ReductionError::NotConnected);
    }
    let sub = double_subdivide(g, edge)?;
    let gp = &sub.graph;
    let params = choose_params(gp.vertex_count())?;

    let mut b = GraphBuilder::new();
    let mut origin: BTreeMap<String, Origin> = BTreeMap::new();
    for v in gp.vertices() {
        let l = gp.label(v);
        b.add_vertex(&core_label(l));
        origin.insert(core_label(l), Origin::Core(l.to_owned()));
    }
    for (ui, vi) in gp.edges() {
        let (u, v) = (gp.label(ui), gp.label(vi));
        let lm = emit_btp(&mut b, &btp_prefix(u, v), params.h, params.l1, params.l2)?;
        b.add_edge(&core_label(u), lm.one("r_ab")).expect("fresh");
        b.add_edge(&core_label(v), lm.one("r_ba")).expect("fresh");
        for (half, owner) in [("a_half", u), ("b_half", v)] {
            for l in lm.many(half) {
                origin.insert(
                    l.clone(),
                    Origin::Btp {
                        u: u.to_owned(),
                        v: v.to_owned(),
                        owner: owner.to_owned(),
                    },
                );
            }
        }
    }

    let before = b.labels().len();
    let y_lm = emit_y(&mut b, "y:", params.d1, params.d2)?;
    for l in &b.labels()[before..] {
        let o = if l.starts_with("y:px:") {
            Origin::PathX
        } else if l.starts_with("y:py:") {
            Origin::PathY
        } else if l.starts_with("y:pz:") {
            Origin::PathZ
        } else {
            Origin::Center
        };
        origin.insert(l.clone(), o);
    }
    let before = b.labels().len();
    let c_lm = emit_c(&mut b, "c:", params.m)?;
    for l in &b.labels()[before..] {
        origin.insert(l.clone(), Origin::CGadget);
    }
    b.add_edge(&core_label(&sub.x), y_lm.one("x_a"))
        .expect("fresh");
    b.add_edge(&core_label(&sub.y), y_lm.one("y_a"))
        .expect("fresh");
    b.add_edge(y_lm.one("z_b"), c_lm.one("v_m2"))
        .expect("fresh");

    let h = b.build();
    debug_assert_eq!(origin.len(), h.vertex_count());
    // BTreeMap order equals the id order of `h`.
    let origin: Vec<Origin> = origin.into_values().collect();
    let x = gp.id(&sub.x).expect("x in G'");
    let y = gp.id(&sub.y).expect("y in G'");
    let owner = origin
        .iter()
        .map(|o| match o {
            Origin::Core(u) | Origin::Btp { owner: u, .. } => gp.id(u),
            Origin::PathX => Some(x),
            Origin::PathY => Some(y),
            _ => None,
        })
        .collect();

    Ok(ReductionInstance {
        base: g.clone(),
        subdivision: sub,
        h,
        params,
        origin,
        owner,
        y_landmarks: y_lm,
        c_landmarks: c_lm,
    })
}

impl ReductionInstance {
    pub fn g_prime(&self) -> &Graph {
        &self.subdivision.graph
    }

    /// `Dom_u` for every `u` in `G'`, as vertex ids of `h`.
    pub fn domains(&self) -> BTreeMap<String, BTreeSet<VertexId>> {
        let mut out: BTreeMap<String, BTreeSet<VertexId>> = self
            .g_prime()
            .labels()
            .iter()
            .map(|l| (l.clone(), BTreeSet::new()))
            .collect();
        for (v, o) in self.owner.iter().enumerate() {
            if let Some(u) = o {
                out.get_mut(self.g_prime().label(*u))
                    .expect("owner is a G' vertex")
                    .insert(v);
            }
        }
        out
    }

    /// `{z} ∪ V(P_z) ∪ V(C)`.
    pub fn outside_domains(&self) -> BTreeSet<VertexId> {
        self.owner
            .iter()
            .enumerate()
            .filter(|(_, o)| o.is_none())
            .map(|(v, _)| v)
            .collect()
    }

    pub fn owner_of(&self, label: &str) -> Option<&str> {
        let v = self.h.id(label)?;
        self.owner[v].map(|u| self.g_prime().label(u))
    }

    /// Landmarks for the sidecar: Y and C landmarks plus x, y and the edge.
    pub fn landmarks(&self) -> Landmarks {
        let mut lm = Landmarks::new();
        for (k, v) in self.y_landmarks.iter() {
            lm.set_many(&format!("y_{k}"), v.to_vec());
        }
        for (k, v) in self.c_landmarks.iter() {
            lm.set_many(&format!("c_{k}"), v.to_vec());
        }
        lm.set_one("x", core_label(&self.subdivision.x));
        lm.set_one("y", core_label(&self.subdivision.y));
        lm
    }
}
