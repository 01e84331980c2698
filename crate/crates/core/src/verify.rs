//! The theorem engine: closed-form bounds, per-graph orientation maxima,
//! class-wide extremal scans, and the supporting lemma checks.
//!
//! A scan walks every graph of a class and every orientation of each graph,
//! records the maximum doubled index and all maximizing orientation classes,
//! and compares the result against the closed-form bound and the expected
//! extremal set. A bound violation or an extremal-set mismatch is reported
//! as a first-class counterexample in the result, never as a crash: the
//! counterexample is the most valuable output the tool could produce.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_digraph, canonical_graph, CanonError, CanonicalLabel};
use crate::construct::{build_b_star, build_u_star, ConstructError};
use crate::enumerate::{enumerate_class, ClassQuery, EnumerateError, Family};
use crate::graph::{Graph, GraphError, Orientation};
use crate::indices::{m1_digraph_arcs, m1_digraph_vertices, m1_graph};
use crate::io::{to_graph6, FormatError};

/// Class scans above this vertex count are refused unless explicitly raised.
pub const FEASIBLE_CLASS_VERTICES: usize = 8;
/// Hard ceiling even for raised scans, set by the enumerator.
pub const MAX_CLASS_VERTICES: usize = crate::enumerate::MAX_ENUMERATION_VERTICES;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("parameters out of range: {0}")]
    ParamRange(String),
    #[error("class scan at n={n} is beyond the feasible cap {cap}; raise the cap to force it")]
    Infeasible { n: usize, cap: usize },
    #[error("transform preconditions not met: {0}")]
    TransformPrecondition(String),
    #[error("measured transform delta {measured} differs from predicted {predicted}")]
    TransformMismatch { measured: i64, predicted: i64 },
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Format(#[from] FormatError),
}

/// Doubled bound for oriented bicyclic graphs with `n` vertices and matching
/// number `m`: `m² - m(1 + 2n) + n² + 5n + 2`.
pub fn bound_general(n: usize, m: usize) -> Result<u64, VerifyError> {
    if !(3..=n / 2).contains(&m) {
        return Err(VerifyError::ParamRange(format!(
            "bound needs 3 <= m <= floor(n/2), got n={n}, m={m}"
        )));
    }
    let (n, m) = (n as i64, m as i64);
    let v = m * m - m * (1 + 2 * n) + n * n + 5 * n + 2;
    debug_assert!(v > 0);
    Ok(v as u64)
}

/// Doubled bound for the perfect-matching case `n = 2m`: `m² + 9m + 2`.
pub fn bound_perfect(m: usize) -> Result<u64, VerifyError> {
    if m < 3 {
        return Err(VerifyError::ParamRange(format!(
            "perfect-matching bound needs m >= 3, got {m}"
        )));
    }
    Ok((m * m + 9 * m + 2) as u64)
}

/// Doubled bound for oriented unicyclic graphs with a perfect matching:
/// `m² + 7m - 2`.
pub fn bound_unicyclic(m: usize) -> Result<u64, VerifyError> {
    if m < 2 {
        return Err(VerifyError::ParamRange(format!(
            "unicyclic bound needs m >= 2, got {m}"
        )));
    }
    Ok((m * m + 7 * m - 2) as u64)
}

/// One maximizing orientation class of a fixed graph: its canonical digraph
/// label and the smallest direction mask attaining it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MaximizerClass {
    pub label: CanonicalLabel,
    pub dirs: u64,
}

/// Maximum doubled index over all orientations of one graph, with all
/// maximizing orientation classes up to digraph isomorphism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrientationMaximum {
    pub doubled: u64,
    pub classes: Vec<MaximizerClass>,
}

fn doubled_of_mask(g: &Graph, dirs: u64) -> u64 {
    let mut pairs = vec![(0u64, 0u64); g.n()];
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if (dirs >> i) & 1 == 1 {
            pairs[a].0 += 1;
            pairs[b].1 += 1;
        } else {
            pairs[b].0 += 1;
            pairs[a].1 += 1;
        }
    }
    pairs.into_iter().map(|(o, i)| o * o + i * i).sum()
}

/// Maximum doubled index over all `2^|E|` orientations, plus the maximizers
/// deduplicated by canonical digraph label (label order, smallest mask per
/// class).
pub fn max_orientation_m1(g: &Graph) -> Result<OrientationMaximum, VerifyError> {
    let m = g.edge_count();
    if m > crate::enumerate::MAX_ORIENTATION_EDGES {
        return Err(VerifyError::Enumerate(EnumerateError::TooManyEdges {
            edges: m,
            max: crate::enumerate::MAX_ORIENTATION_EDGES,
        }));
    }
    let mut best = 0u64;
    let mut masks: Vec<u64> = Vec::new();
    for dirs in 0..(1u64 << m) {
        let doubled = doubled_of_mask(g, dirs);
        if doubled > best {
            best = doubled;
            masks.clear();
        }
        if doubled == best {
            masks.push(dirs);
        }
    }
    let mut by_label: std::collections::BTreeMap<CanonicalLabel, u64> =
        std::collections::BTreeMap::new();
    for dirs in masks {
        let label = canonical_digraph(&g.orient(dirs)?)?;
        by_label.entry(label).or_insert(dirs);
    }
    Ok(OrientationMaximum {
        doubled: best,
        classes: by_label
            .into_iter()
            .map(|(label, dirs)| MaximizerClass { label, dirs })
            .collect(),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Counterexample,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CounterexampleKind {
    BoundExceeded,
    BoundUnattained,
    ExtremalSetMismatch,
}

/// Witness of a failed theorem check, in replayable form.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Counterexample {
    pub kind: CounterexampleKind,
    pub graph6: String,
    pub orientation_bits: Option<u64>,
    pub doubled: Option<u64>,
    pub detail: String,
}

/// One extremal witness: a graph (as graph6) plus a maximizing direction
/// mask over its edges, one entry per digraph isomorphism class.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ExtremalWitness {
    pub graph6: String,
    pub orientation_bits: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ScanCounts {
    pub graphs: u64,
    pub orientations: u64,
}

/// Result of a class-wide extremal scan.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ExtremalReport {
    pub query: ClassQuery,
    pub bound_doubled: u64,
    pub observed_doubled: u64,
    pub extremal: Vec<ExtremalWitness>,
    pub scanned: ScanCounts,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub extremal_digraph_labels: Vec<CanonicalLabel>,
    #[serde(skip)]
    pub extremal_graph_labels: Vec<CanonicalLabel>,
}

impl ExtremalReport {
    /// Stable JSON document for machine consumption.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Scans every graph of the class and every orientation, with the default
/// feasibility cap.
pub fn verify_theorem(q: &ClassQuery) -> Result<ExtremalReport, VerifyError> {
    verify_theorem_with_cap(q, FEASIBLE_CLASS_VERTICES)
}

/// Scan with an explicit vertex cap (at most the enumerator limit).
pub fn verify_theorem_with_cap(q: &ClassQuery, cap: usize) -> Result<ExtremalReport, VerifyError> {
    q.validate().map_err(VerifyError::Enumerate)?;
    let cap = cap.min(MAX_CLASS_VERTICES);
    if q.n > cap {
        return Err(VerifyError::Infeasible { n: q.n, cap });
    }
    let (bound, star) = match q.family {
        Family::Bicyclic => (bound_general(q.n, q.m)?, build_b_star(q.n, q.m)?.to_vec()),
        Family::Unicyclic => {
            if q.n != 2 * q.m {
                return Err(VerifyError::ParamRange(format!(
                    "unicyclic verification covers perfect-matching classes (n = 2m), got n={}, m={}",
                    q.n, q.m
                )));
            }
            (bound_unicyclic(q.m)?, build_u_star(q.n, q.m)?)
        }
    };
    let expected_labels: BTreeSet<CanonicalLabel> = star
        .iter()
        .map(canonical_digraph)
        .collect::<Result<_, _>>()?;

    let graphs = enumerate_class(q)?;
    let scans = graphs
        .par_iter()
        .map(max_orientation_m1)
        .collect::<Result<Vec<_>, _>>()?;

    let observed = scans.iter().map(|s| s.doubled).max().unwrap_or(0);
    let orientations_scanned: u64 = graphs.iter().map(|g| 1u64 << g.edge_count()).sum();
    let scanned = ScanCounts {
        graphs: graphs.len() as u64,
        orientations: orientations_scanned,
    };

    let mut witnesses: Vec<(ExtremalWitness, CanonicalLabel)> = Vec::new();
    let mut digraph_labels = BTreeSet::new();
    let mut graph_labels = BTreeSet::new();
    for (g, scan) in graphs.iter().zip(&scans) {
        if scan.doubled != observed {
            continue;
        }
        let g6 = to_graph6(g)?;
        graph_labels.insert(canonical_graph(g)?);
        for class in &scan.classes {
            digraph_labels.insert(class.label.clone());
            witnesses.push((
                ExtremalWitness {
                    graph6: g6.clone(),
                    orientation_bits: class.dirs,
                },
                class.label.clone(),
            ));
        }
    }

    let counterexample = if observed > bound {
        let (g, scan) = graphs
            .iter()
            .zip(&scans)
            .find(|(_, s)| s.doubled == observed)
            .expect("a scan attains the maximum");
        Some(Counterexample {
            kind: CounterexampleKind::BoundExceeded,
            graph6: to_graph6(g)?,
            orientation_bits: scan.classes.first().map(|c| c.dirs),
            doubled: Some(observed),
            detail: format!(
                "orientation exceeds the closed-form bound: doubled {observed} > {bound}"
            ),
        })
    } else if observed < bound {
        Some(Counterexample {
            kind: CounterexampleKind::BoundUnattained,
            graph6: to_graph6(star[0].base())?,
            orientation_bits: None,
            doubled: Some(observed),
            detail: format!(
                "no orientation attains the closed-form bound: doubled {observed} < {bound}"
            ),
        })
    } else if digraph_labels != expected_labels {
        let unexpected = witnesses
            .iter()
            .find(|(_, label)| !expected_labels.contains(label));
        let (g6, bits) = match unexpected {
            Some((w, _)) => (w.graph6.clone(), Some(w.orientation_bits)),
            None => (to_graph6(star[0].base())?, None),
        };
        Some(Counterexample {
            kind: CounterexampleKind::ExtremalSetMismatch,
            graph6: g6,
            orientation_bits: bits,
            doubled: Some(observed),
            detail: format!(
                "extremal orientation classes differ from the expected family: \
                 found {} classes, expected {}",
                digraph_labels.len(),
                expected_labels.len()
            ),
        })
    } else {
        None
    };

    let verdict = if counterexample.is_none() {
        Verdict::Verified
    } else {
        Verdict::Counterexample
    };
    let extremal = witnesses.into_iter().map(|(w, _)| w).collect();
    Ok(ExtremalReport {
        query: *q,
        bound_doubled: bound,
        observed_doubled: observed,
        extremal,
        scanned,
        verdict,
        counterexample,
        extremal_digraph_labels: digraph_labels.into_iter().collect(),
        extremal_graph_labels: graph_labels.into_iter().collect(),
    })
}

/// Checks that every orientation of `g` satisfies `2·M1(D) <= M1(G)` with
/// equality exactly on the sink-source orientations.
pub fn check_sink_source_bound(g: &Graph) -> Result<bool, VerifyError> {
    let m = g.edge_count();
    if m > 16 {
        return Err(VerifyError::Enumerate(EnumerateError::TooManyEdges {
            edges: m,
            max: 16,
        }));
    }
    let m1 = m1_graph(g);
    let sink_source: BTreeSet<u64> = g
        .sink_source_orientations()
        .into_iter()
        .map(|d| d.dirs())
        .collect();
    for dirs in 0..(1u64 << m) {
        let doubled = doubled_of_mask(g, dirs);
        if doubled > m1 {
            return Ok(false);
        }
        if (doubled == m1) != sink_source.contains(&dirs) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Applies the degree-shift transform `G' = G - uw + vw` (where `u` has
/// degree 2 with neighbors `v, w`, `d(v) >= 2`, and `vw` is not an edge) and
/// returns the exact index gain, which always equals `2(d(v) - 1) > 0`.
pub fn check_transform(g: &Graph, u: usize, v: usize, w: usize) -> Result<i64, VerifyError> {
    let n = g.n();
    if u >= n || v >= n || w >= n || u == v || u == w || v == w {
        return Err(VerifyError::TransformPrecondition(format!(
            "need three distinct vertices below {n}, got u={u}, v={v}, w={w}"
        )));
    }
    if g.degree(u) != 2 || g.neighbors(u) != [v.min(w), v.max(w)] {
        return Err(VerifyError::TransformPrecondition(format!(
            "vertex {u} must have degree 2 with neighbors {{{v}, {w}}}"
        )));
    }
    if g.degree(v) < 2 {
        return Err(VerifyError::TransformPrecondition(format!(
            "vertex {v} must have degree at least 2"
        )));
    }
    if g.has_edge(v, w) {
        return Err(VerifyError::TransformPrecondition(format!(
            "edge ({v}, {w}) must be absent"
        )));
    }
    let shifted = g.delete_edge(u, w)?.add_edge(v, w)?;
    let measured = m1_graph(&shifted) as i64 - m1_graph(g) as i64;
    let predicted = 2 * (g.degree(v) as i64 - 1);
    if measured != predicted {
        return Err(VerifyError::TransformMismatch {
            measured,
            predicted,
        });
    }
    Ok(measured)
}

/// Arc-sum and vertex-sum routes agree on `2·M1(D)`.
pub fn check_identity(d: &Orientation) -> bool {
    m1_digraph_arcs(d) == m1_digraph_vertices(d)
}
