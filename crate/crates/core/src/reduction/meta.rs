//! `key<TAB>value` description of a reduction instance, enough to rebuild it.
//!
//! Base-graph edges are stored as repeated `g_edge<TAB>u v` lines.

use std::fmt::Write as _;

use super::build::{build_h, ReductionInstance};
use super::ReductionError;
use crate::io::read_graph;

impl ReductionInstance {
    pub fn to_meta(&self) -> String {
        let mut out = String::new();
        let s = &self.subdivision;
        for (k, v) in self.params.to_kv() {
            writeln!(out, "{k}\t{v}").unwrap();
        }
        for (k, v) in [("edge_p", &s.p), ("edge_q", &s.q), ("x", &s.x), ("y", &s.y)] {
            writeln!(out, "{k}\t{v}").unwrap();
        }
        writeln!(out, "h_vertices\t{}", self.h.vertex_count()).unwrap();
        writeln!(out, "h_edges\t{}", self.h.edge_count()).unwrap();
        for (u, v) in self.base.edges() {
            writeln!(out, "g_edge\t{} {}", self.base.label(u), self.base.label(v)).unwrap();
        }
        out
    }

    /// Rebuilds the instance and checks it against the recorded values.
    pub fn from_meta(text: &str) -> Result<Self, ReductionError> {
        let mut edges = String::new();
        let mut kv = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (k, v) = line
                .split_once('\t')
                .ok_or_else(|| ReductionError::BadMeta(format!("no tab in `{line}`")))?;
            if k == "g_edge" {
                edges.push_str(v);
                edges.push('\n');
            } else {
                kv.push((k.to_owned(), v.to_owned()));
            }
        }
        let get = |key: &str| {
            kv.iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.as_str())
                .ok_or_else(|| ReductionError::BadMeta(format!("missing `{key}`")))
        };
        let base = read_graph(&edges)?;
        let inst = build_h(&base, Some((get("edge_p")?, get("edge_q")?)))?;
        let rebuilt = inst.to_meta();
        for (k, v) in &kv {
            let line = format!("{k}\t{v}\n");
            if !rebuilt.contains(&line) {
                return Err(ReductionError::BadMeta(format!(
                    "`{k}` does not match `{v}`"
                )));
            }
        }
        Ok(inst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn round_trip_and_tamper() {
        let inst = build_h(&generators::k4(), Some(("b", "c"))).unwrap();
        let meta = inst.to_meta();
        assert!(meta.contains("edge_p\tb\n") && meta.contains("h_vertices\t80294\n"));
        let again = ReductionInstance::from_meta(&meta).unwrap();
        assert_eq!(again.h, inst.h);
        let bad = meta.replace("m\t35", "m\t36");
        assert!(matches!(
            ReductionInstance::from_meta(&bad),
            Err(ReductionError::BadMeta(_))
        ));
        assert!(matches!(
            ReductionInstance::from_meta("edge_p\ta\n"),
            Err(ReductionError::BadMeta(_))
        ));
    }
}
