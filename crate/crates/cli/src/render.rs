//! Output renderers: DOT, CSV rows, and the edge-list passthrough.

use anyhow::Result;
use zagreb_core::graph::{Graph, Orientation};
use zagreb_core::indices::m1_graph;
use zagreb_core::io::to_graph6;
use zagreb_core::matching::matching_number;
use zagreb_core::verify::max_orientation_m1;

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for &(a, b) in g.edges() {
        out.push_str(&format!("  {a} -- {b};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn orientation_to_dot(d: &Orientation) -> String {
    let mut out = String::from("digraph {\n");
    for v in 0..d.base().n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (from, to) in d.arcs() {
        out.push_str(&format!("  {from} -> {to};\n"));
    }
    out.push_str("}\n");
    out
}

pub const CSV_HEADER: &str = "graph6,n,m,m1,max_oriented_m1_doubled";

/// One CSV row per graph: identity, matching number, index, and the
/// orientation maximum.
pub fn csv_row(g: &Graph) -> Result<String> {
    let scan = max_orientation_m1(g)?;
    Ok(format!(
        "{},{},{},{},{}",
        to_graph6(g)?,
        g.n(),
        matching_number(g),
        m1_graph(g),
        scan.doubled
    ))
}
