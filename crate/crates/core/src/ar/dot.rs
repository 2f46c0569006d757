//! Graphviz output for knitted AR quivers.

use super::knit::KnitResult;
use std::fmt::Write;

/// Solid arrows carry multiplicities above one as labels; τ-links are dashed and point from z to τz.
pub fn to_dot(res: &KnitResult, labels: &[String]) -> String {
    let mut s = String::from("digraph ar {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (i, l) in labels.iter().enumerate() {
        let mut style = String::new();
        if res.projective[i] && res.injective[i] {
            style.push_str(", peripheries=2");
        } else if res.projective[i] || res.injective[i] {
            style.push_str(", style=rounded");
        }
        let _ = writeln!(s, "  n{i} [label=\"{}\"{style}];", l.replace('"', "\\\""));
    }
    for (&(a, b), &m) in &res.arrows {
        if m == 1 {
            let _ = writeln!(s, "  n{a} -> n{b};");
        } else {
            let _ = writeln!(s, "  n{a} -> n{b} [label=\"{m}\"];");
        }
    }
    for &(z, x) in &res.tau {
        let _ = writeln!(s, "  n{z} -> n{x} [style=dashed, constraint=false];");
    }
    s.push_str("}\n");
    s
}
