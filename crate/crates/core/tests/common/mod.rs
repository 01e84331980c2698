//! Independent oracles shared by the integration suites. Everything here
//! works by direct definition — full permutation scans and raw subset
//! filtering — and deliberately avoids the pruned search paths under test.

// Not every suite uses every oracle.
#![allow(dead_code)]

use zagreb_core::graph::{Graph, Orientation};

pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    fn rec(k: usize, idx: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == idx.len() {
            out.push(idx.clone());
            return;
        }
        for i in k..idx.len() {
            idx.swap(k, i);
            rec(k + 1, idx, out);
            idx.swap(k, i);
        }
    }
    rec(0, &mut idx, &mut out);
    out
}

pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    Graph::new(g.n(), &edges).expect("permutation preserves validity")
}

/// Relabels an orientation: the relabeled base graph carrying the image of
/// every arc.
pub fn relabel_orientation(d: &Orientation, perm: &[usize]) -> Orientation {
    let base = relabel(d.base(), perm);
    let mut dirs = 0u64;
    for (from, to) in d.arcs() {
        let (from, to) = (perm[from], perm[to]);
        let idx = base.edge_index(from, to).expect("relabeled edge exists");
        if from < to {
            dirs |= 1 << idx;
        }
    }
    base.orient(dirs).expect("mask fits the edge count")
}

/// Permutation-minimal edge list: a canonical form computed straight from
/// the definition, one permutation at a time.
pub fn brute_canonical_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut best: Option<Vec<(usize, usize)>> = None;
    for p in all_perms(g.n()) {
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (p[a], p[b]);
                if x < y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| &edges < b) {
            best = Some(edges);
        }
    }
    best.expect("at least the identity permutation")
}

/// Permutation-minimal arc list of an orientation.
pub fn brute_canonical_arcs(d: &Orientation) -> Vec<(usize, usize)> {
    let n = d.base().n();
    let arcs: Vec<(usize, usize)> = d.arcs().collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    for p in all_perms(n) {
        let mut mapped: Vec<(usize, usize)> = arcs.iter().map(|&(a, b)| (p[a], p[b])).collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| &mapped < b) {
            best = Some(mapped);
        }
    }
    best.expect("at least the identity permutation")
}

/// Connected graphs with `n` vertices and `n + excess` edges, one per
/// isomorphism class, by filtering every edge subset and deduplicating with
/// the permutation oracle. Practical for `n <= 6`.
pub fn subset_filter_excess(n: usize, excess: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .collect();
    let want = n + excess;
    let mut classes = std::collections::BTreeMap::new();
    for mask in 0u64..(1 << pairs.len()) {
        if mask.count_ones() as usize != want {
            continue;
        }
        let edges: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|i| (mask >> i) & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let g = Graph::new(n, &edges).expect("subset edges are valid");
        if !g.is_connected() {
            continue;
        }
        classes.entry(brute_canonical_edges(&g)).or_insert(g);
    }
    classes.into_values().collect()
}
