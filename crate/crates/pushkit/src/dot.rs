//! Graphviz DOT export. Display-only: nothing here parses back.

use pushcore::{OrientedGraph, Sign, SignedGraph, SimpleGraph};

pub fn oriented_dot(g: &OrientedGraph) -> String {
    let mut out = String::from("digraph pushkit {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {v};\n"));
    }
    for &(u, v) in g.arcs() {
        out.push_str(&format!("  {u} -> {v};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn graph_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph pushkit {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {v};\n"));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn signed_dot(g: &SignedGraph) -> String {
    let mut out = String::from("graph pushkit {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {v};\n"));
    }
    for &(u, v, sign) in g.edges() {
        match sign {
            Sign::Plus => out.push_str(&format!("  {u} -- {v} [label=\"+\"];\n")),
            Sign::Minus => out.push_str(&format!("  {u} -- {v} [label=\"-\", style=dashed];\n")),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_output_lists_every_vertex_and_edge() {
        let g = OrientedGraph::new(3, [(0, 1), (2, 1)]).unwrap();
        let dot = oriented_dot(&g);
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("  2;\n"));
        assert!(dot.contains("  0 -> 1;\n"));
        assert!(dot.contains("  2 -> 1;\n"));

        let s = SignedGraph::new(2, [(0, 1, Sign::Minus)]).unwrap();
        assert!(signed_dot(&s).contains("style=dashed"));
    }
}
