//! Exhaustive, isomorphism-free enumeration of small graph classes and of
//! all orientations of a graph.
//!
//! Connected graphs with cyclomatic number 1 (unicyclic) or 2 (bicyclic) are
//! generated recursively: every such graph is either pendant-free — a cycle,
//! a theta graph, or a dumbbell — or arises from a smaller graph of the same
//! class by attaching one pendant vertex. Candidates are deduplicated by
//! canonical label and emitted as canonical representatives in label order,
//! so the stream is deterministic and independent of worker count.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::canon::{canonical_digraph, canonicalize_graph, CanonError};
use crate::construct::{build_cycle, build_dumbbell, build_theta};
use crate::graph::{Graph, GraphError, Orientation};
use crate::matching::matching_number;

/// Enumeration never goes past 9 vertices; the bicyclic search space beyond
/// that is out of desk-scale reach.
pub const MAX_ENUMERATION_VERTICES: usize = 9;
/// Cap for the all-connected-graphs enumerator used by the lemma suites.
pub const MAX_ALL_GRAPHS_VERTICES: usize = 8;
/// Full orientation scans run over `2^|E|` masks.
pub const MAX_ORIENTATION_EDGES: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("enumeration supports at most {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("excess must be 0 (unicyclic) or 1 (bicyclic), got {0}")]
    BadExcess(usize),
    #[error("orientation scans support at most {max} edges, graph has {edges}")]
    TooManyEdges { edges: usize, max: usize },
    #[error("bad class query: {0}")]
    BadQuery(String),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Graph family selector: unicyclic (`|E| = |V|`) or bicyclic
/// (`|E| = |V| + 1`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Unicyclic,
    Bicyclic,
}

impl Family {
    pub fn excess(self) -> usize {
        match self {
            Family::Unicyclic => 0,
            Family::Bicyclic => 1,
        }
    }

    /// Smallest admissible matching number for the family.
    pub fn min_matching(self) -> usize {
        match self {
            Family::Unicyclic => 2,
            Family::Bicyclic => 3,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::Unicyclic => 'U',
            Family::Bicyclic => 'B',
        }
    }
}

/// A `(family, n, m)` class query: connected graphs of the family with `n`
/// vertices and matching number `m`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClassQuery {
    pub family: Family,
    pub n: usize,
    pub m: usize,
}

impl ClassQuery {
    pub fn new(family: Family, n: usize, m: usize) -> ClassQuery {
        ClassQuery { family, n, m }
    }

    /// Checks the admissible matching range `min_m <= m <= floor(n/2)`.
    pub fn validate(&self) -> Result<(), EnumerateError> {
        if self.m < self.family.min_matching() || 2 * self.m > self.n {
            return Err(EnumerateError::BadQuery(format!(
                "{} class needs {} <= m <= floor(n/2), got n={}, m={}",
                self.family.letter(),
                self.family.min_matching(),
                self.n,
                self.m
            )));
        }
        Ok(())
    }
}

impl Serialize for ClassQuery {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ClassQuery", 4)?;
        s.serialize_field("family", &self.family.letter().to_string())?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("excess", &self.family.excess())?;
        s.end()
    }
}

/// Deduplicates candidate graphs by canonical label, in parallel, and
/// returns canonical representatives sorted by label.
fn dedupe_canonical(candidates: Vec<Graph>) -> Result<Vec<Graph>, CanonError> {
    let labeled = candidates
        .into_par_iter()
        .map(|g| canonicalize_graph(&g))
        .collect::<Result<Vec<_>, _>>()?;
    let mut map = BTreeMap::new();
    for (label, form) in labeled {
        map.entry(label).or_insert(form);
    }
    Ok(map.into_values().collect())
}

/// Pendant-free members on exactly `n` vertices: the single cycle for
/// excess 0; theta graphs and dumbbells for excess 1.
fn cores(n: usize, excess: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    match excess {
        0 => {
            if n >= 3 {
                out.push(build_cycle(n).expect("n >= 3"));
            }
        }
        1 => {
            // theta graphs: sorted path lengths summing to n + 1
            let total = n + 1;
            for a in 1..=total / 3 {
                for b in a.max(2)..=(total - a) / 2 {
                    let c = total - a - b;
                    if c < b {
                        continue;
                    }
                    out.push(build_theta([a, b, c]).expect("valid theta lengths"));
                }
            }
            // dumbbells: p + q + bridge = n + 1, cycles of at least 3
            for p in 3..=n {
                for q in p..=n {
                    if p + q > n + 1 {
                        break;
                    }
                    let bridge = n + 1 - p - q;
                    out.push(build_dumbbell(p, q, bridge).expect("valid dumbbell"));
                }
            }
        }
        _ => unreachable!("excess checked by callers"),
    }
    out
}

/// Every connected graph with `n` vertices and `n - 1 + excess + 1` edges —
/// that is, `|E| = n + excess` — exactly one canonical representative per
/// isomorphism class, in canonical-label order.
pub fn enumerate_connected_excess(n: usize, excess: usize) -> Result<Vec<Graph>, EnumerateError> {
    if excess > 1 {
        return Err(EnumerateError::BadExcess(excess));
    }
    if n > MAX_ENUMERATION_VERTICES {
        return Err(EnumerateError::TooManyVertices {
            n,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    let base = 3 + excess;
    if n < base {
        return Ok(Vec::new());
    }
    let mut level: Vec<Graph> = dedupe_canonical(cores(base, excess))?;
    for k in (base + 1)..=n {
        let mut candidates: Vec<Graph> = level
            .par_iter()
            .flat_map_iter(|g| (0..g.n()).map(move |v| g.add_pendant(v).expect("vertex exists")))
            .collect();
        candidates.extend(cores(k, excess));
        level = dedupe_canonical(candidates)?;
    }
    Ok(level)
}

/// Graphs of the class query: the excess enumeration filtered by matching
/// number. Matching number is an isomorphism invariant, so filtering the
/// canonical representatives is sound.
pub fn enumerate_class(q: &ClassQuery) -> Result<Vec<Graph>, EnumerateError> {
    q.validate()?;
    let all = enumerate_connected_excess(q.n, q.family.excess())?;
    Ok(all
        .into_iter()
        .filter(|g| matching_number(g) == q.m)
        .collect())
}

/// Every connected graph on `n` vertices up to isomorphism, in label order.
/// Grows one vertex at a time over all attachment subsets; disconnected
/// intermediates are kept (deleting a vertex may disconnect) and filtered at
/// the end.
pub fn enumerate_all_connected(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n > MAX_ALL_GRAPHS_VERTICES {
        return Err(EnumerateError::TooManyVertices {
            n,
            max: MAX_ALL_GRAPHS_VERTICES,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: Vec<Graph> = vec![Graph::new(1, &[])?];
    for k in 2..=n {
        let candidates: Vec<Graph> = level
            .par_iter()
            .flat_map_iter(|g| {
                (0u64..(1 << (k - 1))).map(move |subset| {
                    let mut edges = g.edges().to_vec();
                    for v in 0..k - 1 {
                        if (subset >> v) & 1 == 1 {
                            edges.push((v, k - 1));
                        }
                    }
                    Graph::new(k, &edges).expect("attachment subsets stay valid")
                })
            })
            .collect();
        level = dedupe_canonical(candidates)?;
    }
    Ok(level.into_iter().filter(|g| g.is_connected()).collect())
}

/// Iterator over all `2^|E|` orientations of a graph, in mask order.
pub struct Orientations {
    graph: Graph,
    next: u64,
    total: u64,
}

impl Iterator for Orientations {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        if self.next == self.total {
            return None;
        }
        let d = self
            .graph
            .orient(self.next)
            .expect("mask below 2^|E| is valid");
        self.next += 1;
        Some(d)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

/// All orientations of `g` by direction-mask counter, deterministic order.
pub fn orientations(g: &Graph) -> Result<Orientations, EnumerateError> {
    let m = g.edge_count();
    if m > MAX_ORIENTATION_EDGES {
        return Err(EnumerateError::TooManyEdges {
            edges: m,
            max: MAX_ORIENTATION_EDGES,
        });
    }
    Ok(Orientations {
        graph: g.clone(),
        next: 0,
        total: 1 << m,
    })
}

/// Orientations deduplicated by canonical digraph label; one representative
/// per class (the smallest direction mask), in label order.
pub fn orientations_up_to_iso(g: &Graph) -> Result<Vec<Orientation>, EnumerateError> {
    let mut classes: BTreeMap<_, Orientation> = BTreeMap::new();
    for d in orientations(g)? {
        let label = canonical_digraph(&d)?;
        classes.entry(label).or_insert(d);
    }
    Ok(classes.into_values().collect())
}
