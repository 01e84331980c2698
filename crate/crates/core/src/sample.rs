//! Seeded random graph and instance generators for the randomized property
//! suites. Everything is driven by an explicit RNG so runs are reproducible
//! from a seed.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Orientation};

/// Deterministic RNG for a seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph on `n` vertices with independent edge probability `p`.
/// May be disconnected; guaranteed at least one edge when `n >= 2`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if rng.random_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        if n < 2 || !edges.is_empty() {
            return Graph::new(n, &edges).expect("generated edges are valid");
        }
    }
}

/// Random connected graph: a random spanning tree plus `extra` random edges
/// (fewer when the graph fills up).
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    let mut g = Graph::new(n, &edges).expect("tree edges are valid");
    for _ in 0..extra {
        if g.edge_count() == n * (n - 1) / 2 {
            break;
        }
        loop {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            if a != b && !g.has_edge(a, b) {
                g = g.add_edge(a, b).expect("checked absent");
                break;
            }
        }
    }
    g
}

/// Uniformly random orientation of `g`.
pub fn random_orientation<R: Rng>(rng: &mut R, g: &Graph) -> Orientation {
    let m = g.edge_count();
    let mask = if m == 0 {
        0
    } else if m == 64 {
        rng.random::<u64>()
    } else {
        rng.random::<u64>() & ((1u64 << m) - 1)
    };
    g.orient(mask).expect("mask fits the edge count")
}

/// A random valid degree-shift instance `(g, u, v, w)`: `u` of degree 2 with
/// neighbors `v` and `w`, `d(v) >= 2`, and `vw` not an edge. Returns `None`
/// when the sampled graph admits no such triple.
pub fn random_transform_instance<R: Rng>(
    rng: &mut R,
    n: usize,
    extra: usize,
) -> Option<(Graph, usize, usize, usize)> {
    let g = random_connected_graph(rng, n, extra);
    let deg = g.degree_vector();
    let mut triples = Vec::new();
    for u in 0..n {
        if deg[u] != 2 {
            continue;
        }
        let nb = g.neighbors(u);
        let (a, b) = (nb[0], nb[1]);
        if g.has_edge(a, b) {
            continue;
        }
        for (v, w) in [(a, b), (b, a)] {
            if deg[v] >= 2 {
                triples.push((u, v, w));
            }
        }
    }
    if triples.is_empty() {
        return None;
    }
    let (u, v, w) = triples[rng.random_range(0..triples.len())];
    Some((g, u, v, w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let mut a = rng_from_seed(7);
        let mut b = rng_from_seed(7);
        assert_eq!(
            random_connected_graph(&mut a, 8, 3),
            random_connected_graph(&mut b, 8, 3)
        );
        let g = random_graph(&mut a, 6, 0.4);
        assert_eq!(random_orientation(&mut a, &g).base(), &g);
    }

    #[test]
    fn connected_graphs_are_connected() {
        let mut rng = rng_from_seed(11);
        for _ in 0..50 {
            let n = rng.random_range(2..10);
            let g = random_connected_graph(&mut rng, n, 3);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn transform_instances_are_valid() {
        let mut rng = rng_from_seed(3);
        let mut found = 0;
        for _ in 0..200 {
            if let Some((g, u, v, w)) = random_transform_instance(&mut rng, 7, 2) {
                assert_eq!(g.degree(u), 2);
                assert!(g.degree(v) >= 2);
                assert!(!g.has_edge(v, w));
                found += 1;
            }
        }
        assert!(found > 50);
    }
}
