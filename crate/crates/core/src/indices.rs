//! Exact first Zagreb index for graphs and oriented graphs.
//!
//! For a graph, `M1(G) = Σ_{uv ∈ E} (d_u + d_v) = Σ_v d_v²`, an integer. For
//! an orientation the index is `M1(D) = ½ Σ_{uv ∈ A} (d⁺_u + d⁻_v)`, a
//! half-integer; all arithmetic here keeps the doubled value `2·M1(D)` as an
//! exact integer instead (see [`ZValue`]). Two independent routes are
//! provided: the arc-sum definition and the vertex-sum identity
//! `2·M1(D) = Σ_v [(d⁺_v)² + (d⁻_v)²]`.

use std::fmt;

use crate::graph::{Graph, Orientation};

/// Doubled first Zagreb index of an oriented graph: `doubled = 2·M1(D)`.
///
/// Displays as the half value, `"19"` or `"18.5"`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ZValue {
    pub doubled: u64,
}

impl ZValue {
    pub fn new(doubled: u64) -> ZValue {
        ZValue { doubled }
    }
}

impl fmt::Display for ZValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled.is_multiple_of(2) {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}.5", self.doubled / 2)
        }
    }
}

/// `M1(G) = Σ_v d_v²`.
pub fn m1_graph(g: &Graph) -> u64 {
    g.degree_vector().into_iter().map(|d| (d * d) as u64).sum()
}

/// Doubled digraph index by the arc-sum definition:
/// `2·M1(D) = Σ_{uv ∈ A} (d⁺_u + d⁻_v)`.
pub fn m1_digraph_arcs(d: &Orientation) -> ZValue {
    let dv = d.degree_vector();
    let doubled = d
        .arcs()
        .map(|(u, v)| (dv.out_degree(u) + dv.in_degree(v)) as u64)
        .sum();
    ZValue { doubled }
}

/// Doubled digraph index by the vertex-sum identity:
/// `2·M1(D) = Σ_v [(d⁺_v)² + (d⁻_v)²]`.
pub fn m1_digraph_vertices(d: &Orientation) -> ZValue {
    let doubled = d
        .degree_vector()
        .pairs()
        .iter()
        .map(|&(o, i)| (o * o + i * i) as u64)
        .sum();
    ZValue { doubled }
}

/// Doubled digraph index; uses the vertex-sum route.
pub fn m1_digraph(d: &Orientation) -> ZValue {
    m1_digraph_vertices(d)
}
