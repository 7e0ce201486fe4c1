//! Edge-list text format.
//!
//! One edge per line as two whitespace-separated labels; `#` starts a comment
//! line. A line holding a single label declares an isolated vertex, which is
//! the only way to write graphs such as a lone vertex. Canonical output sorts
//! edges lexicographically with the smaller endpoint first.

use std::fmt::Write as _;

use crate::gadgets::Landmarks;
use crate::graph::{Graph, GraphBuilder, GraphError};

pub fn read_graph(text: &str) -> Result<Graph, GraphError> {
    let mut b = GraphBuilder::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [v] => {
                b.add_vertex(v);
            }
            [u, v] => b.add_edge(u, v)?,
            _ => {
                return Err(GraphError::Malformed {
                    line: n + 1,
                    text: raw.to_owned(),
                })
            }
        }
    }
    Ok(b.build())
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        writeln!(out, "{}", g.label(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", g.label(u), g.label(v)).unwrap();
    }
    out
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT text. Landmark vertices are filled and carry their
/// landmark names as `xlabel`.
pub fn write_dot(g: &Graph, landmarks: Option<&Landmarks>) -> String {
    let mut names: Vec<Vec<&str>> = vec![Vec::new(); g.vertex_count()];
    if let Some(lm) = landmarks {
        for (name, labels) in lm.iter() {
            for v in labels.iter().filter_map(|l| g.id(l)) {
                names[v].push(name);
            }
        }
    }
    let mut out = String::from("graph G {\n  node [shape=circle, fontsize=8];\n");
    for v in g.vertices() {
        let id = dot_id(g.label(v));
        if names[v].is_empty() {
            writeln!(out, "  {id};").unwrap();
        } else {
            let xl = dot_id(&names[v].join(","));
            writeln!(out, "  {id} [style=filled, fillcolor=gold, xlabel={xl}];").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {} -- {};", dot_id(g.label(u)), dot_id(g.label(v))).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reads_p3() {
        let g = read_graph("a b\nb c\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(g.id("b").unwrap()), 2);
    }

    #[test]
    fn canonicalizes_order_and_comments() {
        let g = read_graph("# header\nc b\n\n  b   a  \n").unwrap();
        assert_eq!(write_graph(&g), "a b\nb c\n");
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(read_graph("a a\n"), Err(GraphError::SelfLoop("a".into())));
    }

    #[test]
    fn rejects_duplicate_edge_either_direction() {
        assert!(matches!(
            read_graph("a b\nb a\n"),
            Err(GraphError::DuplicateEdge(..))
        ));
    }

    #[test]
    fn rejects_malformed_line() {
        assert_eq!(
            read_graph("a b\na b c\n"),
            Err(GraphError::Malformed {
                line: 2,
                text: "a b c".into()
            })
        );
    }

    #[test]
    fn isolated_vertex_round_trips() {
        let g = read_graph("solo\n").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(write_graph(&g), "solo\n");
    }

    #[test]
    fn dot_p3() {
        let g = read_graph("a b\nb c\n").unwrap();
        let dot = write_dot(&g, None);
        assert_eq!(dot.matches(" -- ").count(), 2);
        assert_eq!(
            dot.lines()
                .filter(|l| l.starts_with("  \"") && !l.contains(" -- "))
                .count(),
            3
        );
        assert_eq!(dot, write_dot(&g, None));
    }

    #[test]
    fn dot_highlights_tips() {
        let t = crate::gadgets::make_t(2, 6).unwrap();
        let dot = write_dot(&t.graph, Some(&t.landmarks));
        let tip = format!("\"{}\" [style=filled", t.landmarks.one("tip_pq"));
        assert!(dot.contains(&tip));
        assert!(dot.contains("xlabel=\"p\""));
    }

    #[test]
    fn dot_escapes_quotes() {
        let g = read_graph("a\"b c\n").unwrap();
        assert!(write_dot(&g, None).contains(r#""a\"b" -- "c""#));
    }

    proptest! {
        #[test]
        fn write_read_write_is_idempotent(edges in prop::collection::vec((0u8..12, 0u8..12), 0..40)) {
            let mut b = GraphBuilder::new();
            for (u, v) in edges {
                let _ = b.add_edge(&format!("n{u}"), &format!("n{v}"));
            }
            let text = write_graph(&b.build());
            let again = write_graph(&read_graph(&text).unwrap());
            prop_assert_eq!(text, again);
        }
    }
}
