//! Builders for the named graph families and their extremal orientations.
//!
//! `B(n, m)` work centers on the bicyclic graph `B_{n,m}`: two triangles
//! through a single hub, plus `n - 2m + 1` pendant edges and `m - 3` paths of
//! length two attached at the hub. Its two extremal orientations are the
//! hub-all-out orientation and its arc reversal. `U_{n,m}` is the unicyclic
//! analogue built on one triangle with `m - 2` attached paths.
//!
//! Vertex labeling convention, fixed for reproducible examples: hub = 0,
//! then triangle vertices, then path midpoint/endpoint pairs, then pendants.

use thiserror::Error;

use crate::graph::{Graph, GraphError, Orientation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("parameters out of range: {0}")]
    ParamRange(String),
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("graph is not connected bicyclic with minimum degree 2")]
    NotBicyclicCore,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Structural type of a connected bicyclic graph with minimum degree 2:
/// two vertex-disjoint cycles joined by an edge (B1) or by a longer path
/// (B2), two cycles sharing a vertex (B3), a cycle with a chord (B4), or two
/// non-adjacent cycle vertices joined by a path of length at least two (B5).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BetaClass {
    B1,
    B2,
    B3,
    B4,
    B5,
}

impl std::fmt::Display for BetaClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self {
            BetaClass::B1 => "beta1",
            BetaClass::B2 => "beta2",
            BetaClass::B3 => "beta3",
            BetaClass::B4 => "beta4",
            BetaClass::B5 => "beta5",
        };
        f.write_str(tag)
    }
}

/// Cycle on `k >= 3` vertices.
pub fn build_cycle(k: usize) -> Result<Graph, ConstructError> {
    if k < 3 {
        return Err(ConstructError::ParamRange(format!(
            "cycle needs at least 3 vertices, got {k}"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, k - 1));
    Ok(Graph::new(k, &edges)?)
}

/// Path on `k >= 1` vertices.
pub fn build_path(k: usize) -> Result<Graph, ConstructError> {
    if k == 0 {
        return Err(ConstructError::ParamRange(
            "path needs at least 1 vertex".into(),
        ));
    }
    let edges: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::new(k, &edges)?)
}

fn check_b_params(n: usize, m: usize) -> Result<(), ConstructError> {
    if !(3..=n / 2).contains(&m) {
        return Err(ConstructError::ParamRange(format!(
            "bicyclic family needs 3 <= m <= floor(n/2), got n={n}, m={m}"
        )));
    }
    Ok(())
}

fn check_u_params(n: usize, m: usize) -> Result<(), ConstructError> {
    if !(2..=n / 2).contains(&m) {
        return Err(ConstructError::ParamRange(format!(
            "unicyclic family needs 2 <= m <= floor(n/2), got n={n}, m={m}"
        )));
    }
    Ok(())
}

/// Hub-centred family pieces shared by the bicyclic and unicyclic builders:
/// `triangles` triangles through hub 0, then `paths` length-2 paths, then
/// `pendants` pendant edges.
fn hub_family(n: usize, triangles: usize, paths: usize, pendants: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(n + 1);
    let mut next = 1;
    for _ in 0..triangles {
        let (a, b) = (next, next + 1);
        edges.push((0, a));
        edges.push((0, b));
        edges.push((a, b));
        next += 2;
    }
    for _ in 0..paths {
        let (mid, end) = (next, next + 1);
        edges.push((0, mid));
        edges.push((mid, end));
        next += 2;
    }
    for _ in 0..pendants {
        edges.push((0, next));
        next += 1;
    }
    debug_assert_eq!(next, n);
    edges
}

/// The bicyclic graph `B_{n,m}`: hub of degree `n - m + 2`, two triangles,
/// `n - 2m + 1` pendants and `m - 3` length-2 paths at the hub. It has `n`
/// vertices, `n + 1` edges and matching number `m`.
pub fn build_b(n: usize, m: usize) -> Result<Graph, ConstructError> {
    check_b_params(n, m)?;
    let edges = hub_family(n, 2, m - 3, n - 2 * m + 1);
    Ok(Graph::new(n, &edges)?)
}

/// The unicyclic graph `U_{n,m}`: one triangle, `n - 2m + 1` pendants and
/// `m - 2` length-2 paths at the hub.
pub fn build_u(n: usize, m: usize) -> Result<Graph, ConstructError> {
    check_u_params(n, m)?;
    let edges = hub_family(n, 1, m - 2, n - 2 * m + 1);
    Ok(Graph::new(n, &edges)?)
}

/// Direction mask for the hub-all-out extremal orientation: every
/// hub-incident arc leaves the hub, each triangle's outer edge follows the
/// smaller-to-larger direction, and each length-2 path's outer edge points
/// in toward the path midpoint (so the midpoint collects in-degree 2).
fn hub_all_out_mask(g: &Graph) -> u64 {
    let mut mask = 0u64;
    let deg = g.degree_vector();
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if a == 0 {
            mask |= 1 << i; // hub edge, oriented out of the hub
        } else if deg[a] == 2 && deg[b] == 1 {
            // path outer edge (midpoint, endpoint): leave bit clear so the
            // arc runs endpoint -> midpoint
        } else {
            mask |= 1 << i; // triangle outer edge
        }
    }
    mask
}

/// The two extremal orientations of `B_{n,m}`: hub-all-out and its reversal.
/// Both attain the doubled maximum `m² - m(1 + 2n) + n² + 5n + 2`.
pub fn build_b_star(n: usize, m: usize) -> Result<[Orientation; 2], ConstructError> {
    let g = build_b(n, m)?;
    let mask = hub_all_out_mask(&g);
    let first = g.orient(mask)?;
    let second = first.reverse();
    Ok([first, second])
}

/// The extremal orientations of `U_{n,m}`: hub-all-out and its reversal.
/// For `(n, m) = (4, 2)` the two sink-source orientations of `C4` also
/// attain the maximum and are appended, giving a four-element list.
pub fn build_u_star(n: usize, m: usize) -> Result<Vec<Orientation>, ConstructError> {
    let g = build_u(n, m)?;
    let mask = hub_all_out_mask(&g);
    let first = g.orient(mask)?;
    let second = first.reverse();
    let mut out = vec![first, second];
    if (n, m) == (4, 2) {
        out.extend(build_cycle(4)?.sink_source_orientations());
    }
    Ok(out)
}

/// Looks up a named graph: `C<k>`, `P<k>`, `B4` (K4 minus an edge), `Q0`
/// (the bowtie), `Q1` (B4 with a pendant on each degree-2 vertex), or
/// `B_{n,m}`.
pub fn build_named(name: &str) -> Result<Graph, ConstructError> {
    let name = name.trim();
    match name {
        "B4" => {
            // degrees (2, 3, 3, 2)
            return Ok(Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])?);
        }
        "Q0" => {
            let edges = hub_family(5, 2, 0, 0);
            return Ok(Graph::new(5, &edges)?);
        }
        "Q1" => {
            return Ok(Graph::new(
                6,
                &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (3, 5)],
            )?);
        }
        _ => {}
    }
    if let Some(num) = name.strip_prefix('C') {
        if let Ok(k) = num.parse::<usize>() {
            return build_cycle(k);
        }
    }
    if let Some(num) = name.strip_prefix('P') {
        if let Ok(k) = num.parse::<usize>() {
            return build_path(k);
        }
    }
    if let Some(args) = name
        .strip_prefix("B_{")
        .and_then(|rest| rest.strip_suffix('}'))
    {
        if let Some((ns, ms)) = args.split_once(',') {
            if let (Ok(n), Ok(m)) = (ns.trim().parse(), ms.trim().parse()) {
                return build_b(n, m);
            }
        }
    }
    Err(ConstructError::UnknownName(name.to_string()))
}

/// Classifies a connected bicyclic graph with minimum degree 2 into its
/// structural type. Errors when the preconditions fail.
pub fn classify_beta(g: &Graph) -> Result<BetaClass, ConstructError> {
    let deg = g.degree_vector();
    if !g.is_connected() || g.cyclomatic_number() != 2 || deg.iter().any(|&d| d < 2) {
        return Err(ConstructError::NotBicyclicCore);
    }
    // Degree sum is 2n + 2 with minimum 2, so the surplus is one degree-4
    // vertex or two degree-3 vertices.
    let fours: Vec<usize> = (0..g.n()).filter(|&v| deg[v] == 4).collect();
    if fours.len() == 1 {
        return Ok(BetaClass::B3);
    }
    let threes: Vec<usize> = (0..g.n()).filter(|&v| deg[v] == 3).collect();
    debug_assert_eq!(threes.len(), 2);
    let (u, v) = (threes[0], threes[1]);

    // Walk from u along each incident edge through degree-2 vertices until
    // hitting u or v again; record walks that end at v with their lengths.
    let mut paths_to_v = Vec::new();
    for &first in &g.neighbors(u) {
        let mut prev = u;
        let mut cur = first;
        let mut len = 1usize;
        while cur != u && cur != v {
            let next = *g
                .neighbors(cur)
                .iter()
                .find(|&&w| w != prev)
                .expect("degree-2 interior vertex has a forward neighbor");
            prev = cur;
            cur = next;
            len += 1;
        }
        if cur == v {
            paths_to_v.push(len);
        }
    }
    paths_to_v.sort_unstable();
    match paths_to_v.len() {
        // theta shape: three internally disjoint u-v paths
        3 => {
            if paths_to_v[0] == 1 {
                Ok(BetaClass::B4)
            } else {
                Ok(BetaClass::B5)
            }
        }
        // dumbbell shape: a cycle at u, a cycle at v, one connecting path
        1 => {
            if paths_to_v[0] == 1 {
                Ok(BetaClass::B1)
            } else {
                Ok(BetaClass::B2)
            }
        }
        _ => unreachable!("degree surplus admits only theta or dumbbell shapes"),
    }
}

/// Theta graph: terminals 0 and 1 joined by three internally disjoint paths
/// with `lens` edges each (sorted, at most one equal to 1).
pub fn build_theta(lens: [usize; 3]) -> Result<Graph, ConstructError> {
    let [a, b, c] = lens;
    if a < 1 || b < 2 || a > b || b > c {
        return Err(ConstructError::ParamRange(format!(
            "theta paths must be sorted with at most one length-1 path, got {lens:?}"
        )));
    }
    let n = a + b + c - 1;
    let mut edges = Vec::new();
    let mut next = 2;
    for len in lens {
        let mut prev = 0;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Ok(Graph::new(n, &edges)?)
}

/// Dumbbell: cycles of `p` and `q` vertices joined by a path with `bridge`
/// edges; `bridge = 0` identifies one vertex of each cycle.
pub fn build_dumbbell(p: usize, q: usize, bridge: usize) -> Result<Graph, ConstructError> {
    if p < 3 || q < 3 {
        return Err(ConstructError::ParamRange(format!(
            "dumbbell cycles need at least 3 vertices, got {p} and {q}"
        )));
    }
    let n = p + q + bridge - 1;
    let mut edges = Vec::new();
    // first cycle on 0..p, anchored at 0
    for i in 0..p - 1 {
        edges.push((i, i + 1));
    }
    edges.push((0, p - 1));
    // connecting path from 0
    let mut anchor = 0;
    let mut next = p;
    for _ in 0..bridge {
        edges.push((anchor, next));
        anchor = next;
        next += 1;
    }
    // second cycle anchored at the path end
    let mut prev = anchor;
    for _ in 0..q - 1 {
        edges.push((prev, next));
        prev = next;
        next += 1;
    }
    edges.push((anchor, prev));
    Ok(Graph::new(n, &edges)?)
}
