//! Canonical labeling and isomorphism testing for small graphs and digraphs.
//!
//! The canonical form is the lexicographically least adjacency bit-string
//! over all vertex permutations, restricted to permutations that list the
//! degree sequence in ascending order (out/in-degree pairs for digraphs).
//! The search backtracks over positions, pruning any branch whose partial
//! encoding already exceeds the best found. Two (di)graphs have equal labels
//! exactly when they are isomorphic. Vertex counts are capped at 16, which
//! keeps the worst case trivial at the scales handled here.

use thiserror::Error;

use crate::graph::{Graph, Orientation};

pub const MAX_CANON_VERTICES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonError {
    #[error("canonical labeling supports at most {MAX_CANON_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
}

/// Relabeling-invariant encoding of a graph or digraph. Equal labels mean
/// isomorphic objects of the same kind.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalLabel(Vec<u8>);

impl CanonicalLabel {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

const KIND_GRAPH: u8 = 0;
const KIND_DIGRAPH: u8 = 1;

/// Backtracking state shared by the graph and digraph searches. `cols[k]`
/// holds the adjacency bits of the vertex placed at position `k` against
/// positions `0..k`, most significant bit first, so lexicographic comparison
/// of column vectors equals lexicographic comparison of the bit-string.
struct Search {
    n: usize,
    target: Vec<(usize, usize)>,
    sig: Vec<(usize, usize)>,
    best: Option<(Vec<u32>, Vec<usize>)>,
}

impl Search {
    fn run(&mut self, column: &impl Fn(usize, &[usize]) -> u32) -> (Vec<u32>, Vec<usize>) {
        let mut perm = Vec::with_capacity(self.n);
        let mut cols = Vec::with_capacity(self.n);
        self.dfs(&mut perm, 0, &mut cols, column);
        self.best.take().expect("search visits at least one leaf")
    }

    fn dfs(
        &mut self,
        perm: &mut Vec<usize>,
        used: u32,
        cols: &mut Vec<u32>,
        column: &impl Fn(usize, &[usize]) -> u32,
    ) {
        let k = perm.len();
        if k == self.n {
            if self.best.as_ref().is_none_or(|(bc, _)| cols[..] < bc[..]) {
                self.best = Some((cols.clone(), perm.clone()));
            }
            return;
        }
        let mut cands: Vec<(u32, usize)> = Vec::new();
        for v in 0..self.n {
            if (used >> v) & 1 == 1 || self.sig[v] != self.target[k] {
                continue;
            }
            cands.push((column(v, perm), v));
        }
        cands.sort_unstable();
        for (col, v) in cands {
            cols.push(col);
            perm.push(v);
            let prune = match &self.best {
                Some((bc, _)) => cols[..] > bc[..k + 1],
                None => false,
            };
            if !prune {
                self.dfs(perm, used | (1 << v), cols, column);
            }
            perm.pop();
            cols.pop();
        }
    }
}

/// Packs column values into bytes, MSB first. Column `k` carries
/// `bits_per_slot * k` significant bits.
fn pack_columns(cols: &[u32], bits_per_slot: u32) -> Vec<u8> {
    let mut bytes = Vec::new();
    let mut acc = 0u8;
    let mut nbits = 0usize;
    for (k, &col) in cols.iter().enumerate() {
        let width = bits_per_slot * k as u32;
        for b in (0..width).rev() {
            acc = (acc << 1) | ((col >> b) & 1) as u8;
            nbits += 1;
            if nbits.is_multiple_of(8) {
                bytes.push(acc);
                acc = 0;
            }
        }
    }
    if !nbits.is_multiple_of(8) {
        acc <<= 8 - (nbits % 8);
        bytes.push(acc);
    }
    bytes
}

fn check_size(n: usize) -> Result<(), CanonError> {
    if n > MAX_CANON_VERTICES {
        return Err(CanonError::TooManyVertices(n));
    }
    Ok(())
}

fn graph_search(g: &Graph) -> Result<(Vec<u32>, Vec<usize>), CanonError> {
    check_size(g.n())?;
    let n = g.n();
    let mut adj = vec![0u32; n];
    for &(a, b) in g.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let sig: Vec<(usize, usize)> = g.degree_vector().into_iter().map(|d| (d, 0)).collect();
    let mut target = sig.clone();
    target.sort_unstable();
    let mut search = Search {
        n,
        target,
        sig,
        best: None,
    };
    let column = |v: usize, placed: &[usize]| {
        let mut col = 0u32;
        for &p in placed {
            col = (col << 1) | ((adj[v] >> p) & 1);
        }
        col
    };
    Ok(search.run(&column))
}

/// Canonical label of an undirected graph.
pub fn canonical_graph(g: &Graph) -> Result<CanonicalLabel, CanonError> {
    Ok(canonicalize_graph(g)?.0)
}

/// Canonical label together with the canonical representative: the relabeled
/// graph whose label equals its own canonical label.
pub fn canonicalize_graph(g: &Graph) -> Result<(CanonicalLabel, Graph), CanonError> {
    let (cols, perm) = graph_search(g)?;
    let n = g.n();
    let mut pos_of = vec![0usize; n];
    for (pos, &v) in perm.iter().enumerate() {
        pos_of[v] = pos;
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (pos_of[a], pos_of[b]);
            if x < y {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect();
    let form = Graph::new(n, &edges).expect("relabeling preserves validity");

    let mut bytes = vec![KIND_GRAPH, n as u8];
    for &v in &perm {
        bytes.push(g.degree(v) as u8);
    }
    bytes.extend(pack_columns(&cols, 1));
    Ok((CanonicalLabel(bytes), form))
}

/// Canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph, CanonError> {
    Ok(canonicalize_graph(g)?.1)
}

/// Canonical label of an oriented graph (ordered-pair adjacency encoding).
pub fn canonical_digraph(d: &Orientation) -> Result<CanonicalLabel, CanonError> {
    let n = d.base().n();
    check_size(n)?;
    let mut out_adj = vec![0u32; n];
    for (from, to) in d.arcs() {
        out_adj[from] |= 1 << to;
    }
    let sig: Vec<(usize, usize)> = d.degree_vector().pairs().to_vec();
    let mut target = sig.clone();
    target.sort_unstable();
    let mut search = Search {
        n,
        target,
        sig: sig.clone(),
        best: None,
    };
    let column = |v: usize, placed: &[usize]| {
        let mut col = 0u32;
        for &p in placed {
            // two bits per placed vertex: arc p->v, then arc v->p
            col = (col << 2) | (((out_adj[p] >> v) & 1) << 1) | ((out_adj[v] >> p) & 1);
        }
        col
    };
    let (cols, perm) = search.run(&column);

    let mut bytes = vec![KIND_DIGRAPH, n as u8];
    for &v in &perm {
        bytes.push(sig[v].0 as u8);
        bytes.push(sig[v].1 as u8);
    }
    bytes.extend(pack_columns(&cols, 2));
    Ok(CanonicalLabel(bytes))
}

pub fn is_isomorphic_graph(a: &Graph, b: &Graph) -> Result<bool, CanonError> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_graph(a)? == canonical_graph(b)?)
}

pub fn is_isomorphic_digraph(a: &Orientation, b: &Orientation) -> Result<bool, CanonError> {
    if a.base().n() != b.base().n() || a.base().edge_count() != b.base().edge_count() {
        return Ok(false);
    }
    Ok(canonical_digraph(a)? == canonical_digraph(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> =
            g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Graph::new(g.n(), &edges).unwrap()
    }

    #[test]
    fn triangle_label_is_permutation_invariant() {
        let c3 = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let base = canonical_graph(&c3).unwrap();
        let perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for p in perms {
            assert_eq!(canonical_graph(&relabel(&c3, &p)).unwrap(), base);
        }
    }

    #[test]
    fn canonical_form_is_a_fixpoint() {
        let g = Graph::new(5, &[(4, 2), (0, 4), (1, 3), (3, 4), (0, 1)]).unwrap();
        let (label, form) = canonicalize_graph(&g).unwrap();
        assert_eq!(canonical_graph(&form).unwrap(), label);
        assert_eq!(canonical_form(&form).unwrap(), form);
    }

    #[test]
    fn distinguishes_non_isomorphic_graphs() {
        let c3 = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!is_isomorphic_graph(&c3, &p3).unwrap());

        // same degree sequence, different structure: C6 vs two triangles
        let c6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
        let tt = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_isomorphic_graph(&c6, &tt).unwrap());
    }

    #[test]
    fn star_sink_source_orientations_differ() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let ss = star.sink_source_orientations();
        assert_eq!(ss.len(), 2);
        assert!(!is_isomorphic_digraph(&ss[0], &ss[1]).unwrap());
        assert_ne!(
            canonical_digraph(&ss[0]).unwrap(),
            canonical_digraph(&ss[1]).unwrap()
        );
    }

    #[test]
    fn c4_sink_source_pair_is_isomorphic() {
        // rotating the cycle by one maps the alternating orientation to its
        // reverse, so the two sink-source orientations share a label
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let ss = c4.sink_source_orientations();
        assert_eq!(ss.len(), 2);
        assert!(is_isomorphic_digraph(&ss[0], &ss[1]).unwrap());
    }

    #[test]
    fn c4_orientations_have_four_classes() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let mut labels = std::collections::BTreeSet::new();
        for dirs in 0..16u64 {
            labels.insert(canonical_digraph(&c4.orient(dirs).unwrap()).unwrap());
        }
        assert_eq!(labels.len(), 4);
    }

    #[test]
    fn directed_triangle_isomorphic_to_its_reverse() {
        // a reflection of the triangle maps the clockwise cycle to the
        // counterclockwise one
        let c3 = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let cycle = c3.orient(0b101).unwrap();
        assert_eq!(
            cycle.degree_vector().pairs(),
            &[(1, 1), (1, 1), (1, 1)],
            "mask 0b101 is the directed cycle"
        );
        assert!(is_isomorphic_digraph(&cycle, &cycle.reverse()).unwrap());
    }

    #[test]
    fn size_cap() {
        let g = Graph::new(17, &[]).unwrap();
        assert_eq!(canonical_graph(&g), Err(CanonError::TooManyVertices(17)));
    }
}
