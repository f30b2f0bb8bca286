//! Graphviz export.

use std::fmt::Write;

use cambrian_core::fan::{FrameworkGraph, Provenance};
use cambrian_core::{ExchangeGraphSlice, Vector};

fn root(v: &Vector) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn color(p: Provenance) -> &'static str {
    match p {
        Provenance::FromC => "blue",
        Provenance::FromAntiCinv => "red",
        Provenance::Both => "purple",
    }
}

/// Framework graph with provenance colors, labels on edge ends and open
/// slots of core vertices drawn as half-edges.
pub fn framework(fg: &FrameworkGraph) -> String {
    let mut s = String::from("graph dcamb {\n  node [shape=box, fontsize=9];\n  edge [fontsize=8];\n");
    for (i, v) in fg.vertices.iter().enumerate() {
        let labels: Vec<String> = v.labels.iter().map(root).collect();
        let style = if fg.is_frontier(i) {
            "dashed"
        } else if fg.in_core(i) {
            "solid"
        } else {
            "dotted"
        };
        let _ = writeln!(s, "  v{i} [label=\"{}\", color={}, style={style}];", labels.join("\\n"), color(v.provenance));
    }
    for (v, e, w, f) in fg.full_edges() {
        let (a, b) = (&fg.vertices[v].labels[e], &fg.vertices[w].labels[f]);
        let _ = writeln!(s, "  v{v} -- v{w} [taillabel=\"{}\", headlabel=\"{}\"];", root(a), root(b));
    }
    for v in fg.core() {
        for (e, slot) in fg.vertices[v].slots.iter().enumerate() {
            if slot.is_none() {
                let _ = writeln!(s, "  h{v}_{e} [shape=point];\n  v{v} -- h{v}_{e} [style=dashed, taillabel=\"{}\"];", root(&fg.vertices[v].labels[e]));
            }
        }
    }
    s.push_str("}\n");
    s
}

pub fn exchange(ex: &ExchangeGraphSlice) -> String {
    let mut s = String::from("graph exchange {\n  node [shape=box, fontsize=9];\n");
    for (i, node) in ex.nodes.iter().enumerate() {
        let g: Vec<String> = node.seed.gvectors.iter().map(root).collect();
        let style = if ex.is_frontier(i) { "dashed" } else { "solid" };
        let _ = writeln!(s, "  s{i} [label=\"{}\", style={style}];", g.join("\\n"));
    }
    for (i, node) in ex.nodes.iter().enumerate() {
        for (k, edge) in node.edges.iter().enumerate() {
            if let Some((j, _)) = *edge {
                if i < j {
                    let _ = writeln!(s, "  s{i} -- s{j} [label=\"{}\"];", k + 1);
                }
            }
        }
    }
    s.push_str("}\n");
    s
}
