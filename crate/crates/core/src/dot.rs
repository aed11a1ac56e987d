//! Graphviz export.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_rational::Ratio;

use crate::geometry::Geometry;

/// Undirected edges, with optional successor arrows drawn in bold.
pub fn geometry_to_dot(g: &Geometry, successor: Option<&BTreeMap<String, String>>) -> String {
    let mut s = String::from("graph geometry {\n");
    for v in g.vertices() {
        let shape = match (g.inputs().contains(v), g.outputs().contains(v)) {
            (true, true) => "doublecircle",
            (true, false) => "box",
            (false, true) => "diamond",
            _ => "circle",
        };
        let _ = writeln!(s, "  \"{v}\" [shape={shape}];");
    }
    for (u, v, w) in g.edges() {
        let flow = successor.is_some_and(|f| f.get(u).map(String::as_str) == Some(v) || f.get(v).map(String::as_str) == Some(u));
        let mut attrs = Vec::new();
        if w != Ratio::from_integer(1) {
            attrs.push(format!("label=\"{w}\""));
        }
        if flow {
            attrs.push("style=bold".to_string());
            let dir = if successor.and_then(|f| f.get(u)).map(String::as_str) == Some(v) { "forward" } else { "back" };
            attrs.push(format!("dir={dir}"));
        }
        if attrs.is_empty() {
            let _ = writeln!(s, "  \"{u}\" -- \"{v}\";");
        } else {
            let _ = writeln!(s, "  \"{u}\" -- \"{v}\" [{}];", attrs.join(", "));
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrows_follow_successor() {
        let g = Geometry::from_parts(&["a", "b"], &[("a", "b")], &["a"], &["b"]).unwrap();
        let f: BTreeMap<String, String> = [("a".to_string(), "b".to_string())].into();
        let d = geometry_to_dot(&g, Some(&f));
        assert!(d.contains("\"a\" -- \"b\" [style=bold, dir=forward]"));
        assert!(geometry_to_dot(&g, None).contains("\"a\" -- \"b\";"));
    }
}
