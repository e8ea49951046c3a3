//! Graphviz export. Jewel centers are highlighted and annotated with their
//! high-degree neighbor count; linking vertices get a lighter mark.

use crate::jewel::jewel_profile;
use crate::tree::Tree;
use std::fmt::Write as _;

/// Renders the tree in DOT format. Output is deterministic: vertices and
/// edges appear in ascending order.
pub fn to_dot(t: &Tree) -> String {
    let profile = jewel_profile(t);
    let mut out = String::from("graph tree {\n  node [shape=circle];\n");
    for v in 1..=t.n() {
        let mut attrs = Vec::new();
        if let Some((_, d)) = profile.centers.iter().find(|(c, _)| *c == v) {
            attrs.push(format!("label=\"{v}\\nD={d}\""));
            attrs.push("style=filled".to_string());
            attrs.push("fillcolor=gold".to_string());
        } else if profile.c_g.contains(&v) {
            attrs.push(format!("label=\"{v}\""));
            attrs.push("style=filled".to_string());
            attrs.push("fillcolor=lightblue".to_string());
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {v};");
        } else {
            let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
        }
    }
    for (u, v) in t.graph().edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encodings::{jewel10, linked_centers_example};
    use crate::graph::path_graph;

    #[test]
    fn path_has_no_decorations() {
        let dot = to_dot(&Tree::new(path_graph(3)).unwrap());
        assert!(dot.starts_with("graph tree {"));
        assert!(dot.contains("  1 -- 2;"));
        assert!(dot.contains("  2 -- 3;"));
        assert!(!dot.contains("fillcolor"));
    }

    #[test]
    fn jewel_center_is_highlighted() {
        let dot = to_dot(&jewel10());
        assert!(dot.contains("1 [label=\"1\\nD=3\", style=filled, fillcolor=gold];"));
    }

    #[test]
    fn linking_vertex_is_marked() {
        let dot = to_dot(&linked_centers_example());
        assert!(dot.contains("3 [label=\"3\", style=filled, fillcolor=lightblue];"));
    }

    #[test]
    fn deterministic() {
        let t = jewel10();
        assert_eq!(to_dot(&t), to_dot(&t));
    }
}
