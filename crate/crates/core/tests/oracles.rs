//! Cross-validation of the pruned implementations against direct-definition
//! oracles: canonical labeling vs. full permutation scans, the structured
//! class enumeration vs. raw subset filtering, and blossom matching vs.
//! subset-search matching.

mod common;

use std::collections::BTreeSet;

use rand::Rng;
use zagreb_core::canon::{canonical_digraph, canonical_graph};
use zagreb_core::construct::{build_dumbbell, build_named, build_theta, classify_beta, BetaClass};
use zagreb_core::enumerate::{
    enumerate_all_connected, enumerate_connected_excess, orientations, orientations_up_to_iso,
};
use zagreb_core::graph::Graph;
use zagreb_core::indices::m1_graph;
use zagreb_core::matching::{brute_force_matching_number, matching_number};
use zagreb_core::sample::{random_connected_graph, random_graph, rng_from_seed};

/// Label equality must decide isomorphism exactly as exhaustive permutation
/// testing does. Swept over every labeled graph on up to 5 vertices, so the
/// universe is not biased by either method: the map from permutation-minimal
/// edge lists to labels must be a bijection.
#[test]
fn canonical_labels_match_permutation_oracle() {
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .collect();
        let mut brute_to_label = std::collections::BTreeMap::new();
        let mut label_to_brute = std::collections::BTreeMap::new();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|i| (mask >> i) & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Graph::new(n, &edges).unwrap();
            let brute = common::brute_canonical_edges(&g);
            let label = canonical_graph(&g).unwrap();
            let prev = brute_to_label
                .entry(brute.clone())
                .or_insert_with(|| label.clone());
            assert_eq!(prev, &label, "n={n}: one brute class got two labels");
            let prev = label_to_brute.entry(label).or_insert_with(|| brute.clone());
            assert_eq!(prev, &brute, "n={n}: one label covers two brute classes");
        }
        assert_eq!(brute_to_label.len(), label_to_brute.len());
    }
    // and on the connected 6-vertex bicyclic universe from raw subsets
    let graphs = common::subset_filter_excess(6, 1);
    let labels: BTreeSet<_> = graphs.iter().map(|g| canonical_graph(g).unwrap()).collect();
    assert_eq!(labels.len(), graphs.len());
}

/// Sink-source orientations exist exactly for bipartite graphs, and a
/// connected bipartite graph with an edge has exactly two of them, over
/// every connected graph with up to 7 vertices.
#[test]
fn sink_source_existence_matches_bipartiteness_up_to_n7() {
    for n in 1..=7 {
        for g in enumerate_all_connected(n).unwrap() {
            let ss = g.sink_source_orientations();
            assert_eq!(!ss.is_empty(), g.is_bipartite(), "{g:?}");
            if g.is_bipartite() && g.edge_count() > 0 {
                assert_eq!(ss.len(), 2, "{g:?}");
                assert_eq!(ss[0], ss[1].reverse(), "{g:?}");
            }
        }
    }
}

#[test]
fn canonical_label_invariant_under_random_relabeling() {
    let mut rng = rng_from_seed(0xC0FFEE);
    for _ in 0..1000 {
        let n = rng.random_range(2..9);
        let g = random_graph(&mut rng, n, 0.4);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            perm.swap(i, j);
        }
        let h = common::relabel(&g, &perm);
        assert_eq!(
            canonical_graph(&g).unwrap(),
            canonical_graph(&h).unwrap(),
            "relabeling changed the label of {g:?} under {perm:?}"
        );
    }
}

#[test]
fn digraph_classes_match_permutation_oracle() {
    for g in [
        build_named("C3").unwrap(),
        build_named("C4").unwrap(),
        Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
        build_named("B4").unwrap(),
    ] {
        let by_labels = orientations_up_to_iso(&g).unwrap().len();
        let by_oracle: BTreeSet<_> = orientations(&g)
            .unwrap()
            .map(|d| common::brute_canonical_arcs(&d))
            .collect();
        assert_eq!(by_labels, by_oracle.len(), "graph {g:?}");
        for d in orientations(&g).unwrap() {
            let r = d.reverse();
            assert_eq!(
                canonical_digraph(&d).unwrap() == canonical_digraph(&r).unwrap(),
                common::brute_canonical_arcs(&d) == common::brute_canonical_arcs(&r)
            );
        }
    }
}

#[test]
fn digraph_label_invariant_under_random_relabeling() {
    let mut rng = rng_from_seed(0xD16);
    for _ in 0..500 {
        let n = rng.random_range(2..8);
        let g = random_graph(&mut rng, n, 0.5);
        let mask = rng.random_range(0..(1u64 << g.edge_count()));
        let d = g.orient(mask).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            perm.swap(i, j);
        }
        let relabeled = common::relabel_orientation(&d, &perm);
        assert_eq!(
            canonical_digraph(&d).unwrap(),
            canonical_digraph(&relabeled).unwrap(),
            "relabeling changed the digraph label of {d:?} under {perm:?}"
        );
    }
}

/// The two extremal orientations of B_{6,3} are distinct digraphs over the
/// same underlying graph, decided identically by labels and by the full
/// permutation oracle.
#[test]
fn b63_star_pair_by_permutation_oracle() {
    let pair = zagreb_core::construct::build_b_star(6, 3).unwrap();
    assert_ne!(
        common::brute_canonical_arcs(&pair[0]),
        common::brute_canonical_arcs(&pair[1])
    );
    assert_ne!(
        canonical_digraph(&pair[0]).unwrap(),
        canonical_digraph(&pair[1]).unwrap()
    );
    assert_eq!(
        common::brute_canonical_edges(pair[0].base()),
        common::brute_canonical_edges(pair[1].base())
    );
    assert_eq!(
        canonical_graph(pair[0].base()).unwrap(),
        canonical_graph(pair[1].base()).unwrap()
    );
}

/// The structured enumeration and the subset-filter method must agree for
/// every vertex count up to 6, for both the unicyclic and bicyclic classes.
#[test]
fn enumeration_agrees_with_subset_filter() {
    for excess in [0usize, 1] {
        for n in 3..=6 {
            let structured = enumerate_connected_excess(n, excess).unwrap();
            let filtered = common::subset_filter_excess(n, excess);
            assert_eq!(
                structured.len(),
                filtered.len(),
                "count mismatch at n={n}, excess={excess}"
            );
            let a: BTreeSet<_> = structured
                .iter()
                .map(common::brute_canonical_edges)
                .collect();
            let b: BTreeSet<_> = filtered.iter().map(common::brute_canonical_edges).collect();
            assert_eq!(a, b, "class mismatch at n={n}, excess={excess}");
        }
    }
}

#[test]
fn blossom_matches_brute_force_on_random_graphs() {
    let mut rng = rng_from_seed(0xBEEF);
    for _ in 0..1000 {
        let n = rng.random_range(2..11);
        let extra = rng.random_range(0..8);
        let g = random_connected_graph(&mut rng, n, extra);
        if g.edge_count() > 20 {
            continue;
        }
        assert_eq!(
            matching_number(&g),
            brute_force_matching_number(&g).unwrap(),
            "matching mismatch on {g:?}"
        );
    }
}

/// Degree arithmetic of the pendant-attachment constructions: attaching a
/// pendant to every vertex of a minimum-degree-2 bicyclic core on m vertices
/// gives a 2m-vertex graph with M1 = 10m + 14 (10m + 16 for the shared-vertex
/// type); attaching pendants to the degree-2 vertices of a core on m + 1
/// vertices gives M1 = 10m + 8; pendant-free cores on 2m + 1 vertices have
/// M1 = 8m + 14 or 8m + 16.
#[test]
fn pendant_attachment_m1_table() {
    for m in [5usize, 6] {
        for core in enumerate_connected_excess(m, 1).unwrap() {
            if core.degree_vector().iter().any(|&d| d < 2) {
                continue;
            }
            let tag = classify_beta(&core).unwrap();
            let mut g = core.clone();
            for v in 0..core.n() {
                g = g.add_pendant(v).unwrap();
            }
            assert_eq!(g.n(), 2 * m);
            let expect = match tag {
                BetaClass::B3 => 10 * m as u64 + 16,
                _ => 10 * m as u64 + 14,
            };
            assert_eq!(m1_graph(&g), expect, "core {core:?} tagged {tag}");
        }
        for core in enumerate_connected_excess(m + 1, 1).unwrap() {
            let deg = core.degree_vector();
            if deg.iter().any(|&d| d < 2) {
                continue;
            }
            if classify_beta(&core).unwrap() == BetaClass::B3 {
                continue;
            }
            let mut g = core.clone();
            for (v, &d) in deg.iter().enumerate() {
                if d == 2 {
                    g = g.add_pendant(v).unwrap();
                }
            }
            assert_eq!(g.n(), 2 * m);
            assert_eq!(m1_graph(&g), 10 * m as u64 + 8, "core {core:?}");
        }
    }

    // pendant-free cores on 2m + 1 vertices: full enumeration where feasible
    for m in [3usize, 4] {
        for core in enumerate_connected_excess(2 * m + 1, 1).unwrap() {
            if core.degree_vector().iter().any(|&d| d < 2) {
                continue;
            }
            let expect = match classify_beta(&core).unwrap() {
                BetaClass::B3 => 8 * m as u64 + 16,
                _ => 8 * m as u64 + 14,
            };
            assert_eq!(m1_graph(&core), expect, "core {core:?}");
        }
    }
    // constructed witnesses per class beyond the enumeration cap
    for m in [5usize, 6] {
        let n = 2 * m + 1;
        let witnesses = [
            (build_dumbbell(3, n - 3, 1).unwrap(), BetaClass::B1),
            (build_dumbbell(3, 3, n - 5).unwrap(), BetaClass::B2),
            (build_dumbbell(3, n - 2, 0).unwrap(), BetaClass::B3),
            (build_theta([1, 2, n - 2]).unwrap(), BetaClass::B4),
            (build_theta([2, 2, n - 3]).unwrap(), BetaClass::B5),
        ];
        for (g, want_tag) in witnesses {
            assert_eq!(g.n(), n);
            assert_eq!(classify_beta(&g).unwrap(), want_tag);
            let expect = match want_tag {
                BetaClass::B3 => 8 * m as u64 + 16,
                _ => 8 * m as u64 + 14,
            };
            assert_eq!(m1_graph(&g), expect);
        }
    }
}

/// Every minimum-degree-2 bicyclic graph classifies into exactly one type,
/// and the theta/dumbbell split matches the degree surplus.
#[test]
fn beta_tags_partition_the_cores() {
    for n in 4..=8 {
        let mut theta_like = 0usize;
        let mut dumbbell_like = 0usize;
        for core in enumerate_connected_excess(n, 1).unwrap() {
            if core.degree_vector().iter().any(|&d| d < 2) {
                continue;
            }
            match classify_beta(&core).unwrap() {
                BetaClass::B4 | BetaClass::B5 => theta_like += 1,
                BetaClass::B1 | BetaClass::B2 | BetaClass::B3 => dumbbell_like += 1,
            }
            let max_deg = *core.degree_vector().iter().max().unwrap();
            assert!(max_deg == 3 || max_deg == 4);
        }
        assert!(theta_like > 0, "n={n}");
        // the smallest dumbbell is the bowtie on 5 vertices
        assert_eq!(dumbbell_like > 0, n >= 5, "n={n}");
    }
}
