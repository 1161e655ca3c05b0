//! DOT and JSON exports.

use std::fmt::Write;

use super::SimpleGraph;

/// Graphviz `graph` block with one statement per edge; isolated vertices
/// are listed explicitly.
pub fn to_dot(g: &SimpleGraph, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\""));
    for v in (0..g.vertex_count()).filter(|&v| g.degree(v) == 0) {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// `{"n": …, "edges": [[u, v], …]}`.
pub fn to_json(g: &SimpleGraph) -> String {
    serde_json::to_string(g).expect("edge lists always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_lists_edges_and_isolated() {
        let g = SimpleGraph::path(2).disjoint_union(&SimpleGraph::empty(1));
        assert_eq!(to_dot(&g, "g"), "graph \"g\" {\n  2;\n  0 -- 1;\n}\n");
        assert_eq!(to_json(&g), r#"{"n":3,"edges":[[0,1]]}"#);
    }
}
