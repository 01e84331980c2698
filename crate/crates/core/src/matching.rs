//! Maximum matching and matching number.
//!
//! [`maximum_matching`] is the textbook O(V³) augmenting-path search with
//! blossom contraction, so odd cycles (present in every bicyclic graph
//! handled here) are treated correctly. [`brute_force_matching_number`] is an
//! independent oracle over all independent edge subsets, used to
//! cross-validate the blossom implementation on small graphs.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("brute-force matching supports at most {max} edges, graph has {edges}")]
    TooManyEdges { edges: usize, max: usize },
    #[error("invalid matching certificate: {0}")]
    InvalidCertificate(String),
}

/// An explicit independent edge set witnessing a matching.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatchingCertificate {
    edge_indices: Vec<usize>,
}

impl MatchingCertificate {
    /// Sorted indices into the owning graph's edge list.
    pub fn edge_indices(&self) -> &[usize] {
        &self.edge_indices
    }

    pub fn size(&self) -> usize {
        self.edge_indices.len()
    }

    /// Checks the certificate against `g`: indices in range, no repeats, no
    /// two selected edges sharing a vertex.
    pub fn validate(&self, g: &Graph) -> Result<(), MatchingError> {
        let mut seen = vec![false; g.n()];
        let mut prev = None;
        for &i in &self.edge_indices {
            if Some(i) == prev {
                return Err(MatchingError::InvalidCertificate(format!(
                    "repeated edge index {i}"
                )));
            }
            prev = Some(i);
            let &(a, b) = g.edges().get(i).ok_or_else(|| {
                MatchingError::InvalidCertificate(format!("edge index {i} out of range"))
            })?;
            if seen[a] || seen[b] {
                return Err(MatchingError::InvalidCertificate(format!(
                    "edges share vertex at edge index {i}"
                )));
            }
            seen[a] = true;
            seen[b] = true;
        }
        Ok(())
    }
}

const UNMATCHED: usize = usize::MAX;

/// A maximum-cardinality matching by augmenting paths with blossom
/// contraction. Ties between maximum matchings are broken arbitrarily; the
/// size is the contract-bearing part.
pub fn maximum_matching(g: &Graph) -> MatchingCertificate {
    let n = g.n();
    let adj = g.adjacency_lists();
    let mut mate = vec![UNMATCHED; n];

    for start in 0..n {
        if mate[start] != UNMATCHED {
            continue;
        }
        if let Some(finish) = find_augmenting_path(&adj, &mate, start) {
            augment(&mut mate, &finish);
        }
    }

    let mut edge_indices = Vec::new();
    for (v, &m) in mate.iter().enumerate() {
        if m != UNMATCHED && v < m {
            edge_indices.push(g.edge_index(v, m).expect("matched pair must be an edge"));
        }
    }
    edge_indices.sort_unstable();
    MatchingCertificate { edge_indices }
}

/// Result of a successful search: the exposed endpoint plus the parent links
/// needed to flip the path.
struct AugmentingPath {
    finish: usize,
    parent: Vec<usize>,
}

fn find_augmenting_path(
    adj: &[Vec<usize>],
    mate: &[usize],
    start: usize,
) -> Option<AugmentingPath> {
    let n = adj.len();
    let mut parent = vec![UNMATCHED; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    used[start] = true;
    let mut queue = std::collections::VecDeque::from([start]);

    while let Some(v) = queue.pop_front() {
        for &to in &adj[v] {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == start || (mate[to] != UNMATCHED && parent[mate[to]] != UNMATCHED) {
                // Odd cycle: contract the blossom rooted at the least common
                // ancestor of v and to in the alternating tree.
                let cur = blossom_base(&parent, &base, mate, v, to);
                let mut in_blossom = vec![false; n];
                mark_blossom_path(&mut parent, &base, mate, &mut in_blossom, v, cur, to);
                mark_blossom_path(&mut parent, &base, mate, &mut in_blossom, to, cur, v);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = cur;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == UNMATCHED {
                parent[to] = v;
                if mate[to] == UNMATCHED {
                    return Some(AugmentingPath { finish: to, parent });
                }
                used[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }
    None
}

fn blossom_base(
    parent: &[usize],
    base: &[usize],
    mate: &[usize],
    mut v: usize,
    mut w: usize,
) -> usize {
    let mut on_path = vec![false; parent.len()];
    loop {
        v = base[v];
        on_path[v] = true;
        if mate[v] == UNMATCHED {
            break;
        }
        v = parent[mate[v]];
    }
    while !on_path[base[w]] {
        w = parent[mate[w]];
    }
    base[w]
}

fn mark_blossom_path(
    parent: &mut [usize],
    base: &[usize],
    mate: &[usize],
    in_blossom: &mut [bool],
    mut v: usize,
    blossom_root: usize,
    mut child: usize,
) {
    while base[v] != blossom_root {
        in_blossom[base[v]] = true;
        in_blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

fn augment(mate: &mut [usize], path: &AugmentingPath) {
    let mut v = path.finish;
    while v != UNMATCHED {
        let pv = path.parent[v];
        let next = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = next;
    }
}

/// Size of a maximum matching.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).size()
}

pub const MAX_BRUTE_FORCE_EDGES: usize = 24;

/// Independent oracle: maximum independent edge set size by subset search
/// with pruning. Limited to 24 edges.
pub fn brute_force_matching_number(g: &Graph) -> Result<usize, MatchingError> {
    let m = g.edge_count();
    if m > MAX_BRUTE_FORCE_EDGES {
        return Err(MatchingError::TooManyEdges {
            edges: m,
            max: MAX_BRUTE_FORCE_EDGES,
        });
    }
    let edges = g.edges();
    let mut best = 0usize;
    // Explicit stack of (next edge index, used-vertex mask, picked count);
    // taking an edge first finds large matchings early, tightening the bound.
    fn recurse(edges: &[(usize, usize)], idx: usize, used: u64, count: usize, best: &mut usize) {
        if count > *best {
            *best = count;
        }
        if idx == edges.len() || count + (edges.len() - idx) <= *best {
            return;
        }
        let (a, b) = edges[idx];
        if (used >> a) & 1 == 0 && (used >> b) & 1 == 0 {
            recurse(edges, idx + 1, used | (1 << a) | (1 << b), count + 1, best);
        }
        recurse(edges, idx + 1, used, count, best);
    }
    recurse(edges, 0, 0, 0, &mut best);
    Ok(best)
}

/// True when the certificate saturates every vertex (`n = 2|M|`). The
/// certificate is validated against `g` first.
pub fn is_perfect(g: &Graph, m: &MatchingCertificate) -> Result<bool, MatchingError> {
    m.validate(g)?;
    Ok(2 * m.size() == g.n())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn small_matchings() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(matching_number(&c4), 2);

        assert_eq!(matching_number(&bowtie()), 2);

        let b63 = Graph::new(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5)]).unwrap();
        assert_eq!(matching_number(&b63), 3);
        assert!(is_perfect(&b63, &maximum_matching(&b63)).unwrap());
    }

    #[test]
    fn brute_force_examples() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(brute_force_matching_number(&p4).unwrap(), 2);

        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(brute_force_matching_number(&c5).unwrap(), 2);
        assert_eq!(matching_number(&c5), 2);
    }

    #[test]
    fn blossom_with_odd_cycle_structure() {
        // 5-cycle with a chord, the classic blossom trap
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap();
        assert_eq!(matching_number(&g), 2);

        // two triangles joined by a bridge: perfect matching of size 3
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        assert_eq!(matching_number(&g), 3);
        assert_eq!(brute_force_matching_number(&g).unwrap(), 3);
    }

    #[test]
    fn certificates_are_valid() {
        for g in [
            bowtie(),
            Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6)]).unwrap(),
        ] {
            let m = maximum_matching(&g);
            m.validate(&g).unwrap();
            assert_eq!(m.size(), brute_force_matching_number(&g).unwrap());
        }
    }

    #[test]
    fn perfect_matching_checks() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(is_perfect(&c4, &maximum_matching(&c4)).unwrap());
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!(!is_perfect(&c5, &maximum_matching(&c5)).unwrap());

        let bogus = MatchingCertificate {
            edge_indices: vec![0, 1],
        };
        assert!(is_perfect(&c4, &bogus).is_err());
    }

    #[test]
    fn brute_force_edge_cap() {
        let k8 = {
            let mut edges = Vec::new();
            for a in 0..8 {
                for b in (a + 1)..8 {
                    edges.push((a, b));
                }
            }
            Graph::new(8, &edges).unwrap()
        };
        assert!(brute_force_matching_number(&k8).is_err());
    }
}
