//! Graphviz rendering of M-graphs.

use std::fmt::Write;

use crate::error::Result;
use crate::melody::Melody;
use crate::slope::slope_of_melody;
use crate::symmetry::Line;

/// The M-graph as a DOT digraph. Each vertex carries its lattice position
/// (`pos="x,y!"`) so `neato -n` reproduces the plane layout. When `axis` is
/// given it is recorded as a dashed-line comment.
pub fn to_dot(m: &Melody, axis: Option<&Line>) -> Result<String> {
    let g = m.m_graph()?;
    let mut out = String::new();
    let name = m.label().replace('"', "\\\"");
    writeln!(out, "digraph \"{name}\" {{").unwrap();
    writeln!(
        out,
        "  node [shape=circle, width=0.15, fixedsize=true, fontsize=8];"
    )
    .unwrap();
    for (i, p) in g.points().iter().enumerate() {
        writeln!(
            out,
            "  p{} [label=\"{}\", pos=\"{},{}!\"];",
            i + 1,
            p,
            p.x,
            p.y
        )
        .unwrap();
    }
    for i in 1..g.points().len() {
        writeln!(out, "  p{} -> p{};", i, i + 1).unwrap();
    }
    if let Ok(s) = slope_of_melody(m) {
        writeln!(out, "  // least-squares slope: {} ({})", s, s.display(3)).unwrap();
    }
    if let Some(axis) = axis {
        writeln!(out, "  // axis of symmetry (dashed): {axis}").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
