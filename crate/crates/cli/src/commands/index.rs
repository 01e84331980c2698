use std::io::Read;

use anyhow::{bail, Context, Result};
use zagreb_core::graph::Graph;
use zagreb_core::indices::{m1_digraph_arcs, m1_digraph_vertices, m1_graph};
use zagreb_core::io::{from_edge_list, from_graph6};

use crate::IndexArgs;

pub fn run(args: &IndexArgs) -> Result<i32> {
    let text = read_input(&args.input)?;
    let graphs = parse_graphs(&text)?;
    if graphs.is_empty() {
        bail!("no graphs in input");
    }
    if args.bits.is_some() && graphs.len() > 1 {
        bail!(
            "--bits applies to a single input graph, got {}",
            graphs.len()
        );
    }
    for g in &graphs {
        println!(
            "M1(G) = {}  [n={}, {} edges]",
            m1_graph(g),
            g.n(),
            g.edge_count()
        );
        if let Some(bits) = args.bits {
            let d = g.orient(bits)?;
            let arcs = m1_digraph_arcs(&d);
            let verts = m1_digraph_vertices(&d);
            println!(
                "M1(D) = {arcs}  [arc-sum doubled {}, vertex-sum doubled {}]",
                arcs.doubled, verts.doubled
            );
        }
    }
    Ok(0)
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

/// Accepts either an edge-list block (first line is a vertex count) or one
/// graph6 string per line.
fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    if lines.is_empty() {
        return Ok(Vec::new());
    }
    if lines[0].parse::<usize>().is_ok() {
        return Ok(vec![from_edge_list(text)?]);
    }
    lines
        .into_iter()
        .map(|line| from_graph6(line).map_err(Into::into))
        .collect()
}
