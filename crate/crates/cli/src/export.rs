//! Graphviz DOT output for graphs, orientations and colorings.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use oddorient_core::{Coloring, Graph, Orientation};

/// Colors are written as `colorscheme=set312` fill indices, wrapping after 12.
pub fn to_dot(g: &Graph, orientation: Option<&Orientation>, coloring: Option<&Coloring>) -> String {
    let directed = orientation.is_some();
    let mut out = String::new();
    let _ = writeln!(out, "{} G {{", if directed { "digraph" } else { "graph" });
    let _ = writeln!(out, "  node [shape=circle];");
    for v in 0..g.n() {
        let name = quote(&g.label(v).to_string());
        match coloring {
            Some(c) => {
                let k = c.color(v);
                let _ = writeln!(
                    out,
                    "  {name} [style=filled, colorscheme=set312, fillcolor={}, xlabel=\"{k}\"];",
                    k % 12 + 1
                );
            }
            None => {
                let _ = writeln!(out, "  {name};");
            }
        }
    }
    let pairs = match orientation {
        Some(o) => o.arcs(),
        None => g.edges().to_vec(),
    };
    let sep = if directed { "->" } else { "--" };
    for (u, v) in pairs {
        let _ = writeln!(out, "  {} {sep} {};", quote(&g.label(u).to_string()), quote(&g.label(v).to_string()));
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn write_dot(
    path: &Path,
    g: &Graph,
    orientation: Option<&Orientation>,
    coloring: Option<&Coloring>,
) -> io::Result<()> {
    std::fs::write(path, to_dot(g, orientation, coloring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use oddorient_core::families::{complete, kneser};

    #[test]
    fn undirected_petersen() {
        let dot = to_dot(&kneser(5, 2).unwrap(), None, None);
        assert!(dot.starts_with("graph G {"));
        assert_eq!(dot.matches(" -- ").count(), 15);
        assert!(dot.contains("\"{1,2}\" -- \"{3,4}\";"));
    }

    #[test]
    fn directed_and_colored() {
        let k3 = complete(3).unwrap();
        let o = Orientation::ascending(&k3);
        let c = Coloring::new(vec![0, 1, 2]);
        let dot = to_dot(&k3, Some(&o), Some(&c));
        assert!(dot.starts_with("digraph G {"));
        assert!(dot.contains("\"0\" -> \"1\";"));
        assert!(dot.contains("fillcolor=3"));
        assert_eq!(dot, to_dot(&k3, Some(&o), Some(&c)));
    }
}
