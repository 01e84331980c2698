//! Shared fixtures for the benchmark targets.

use zagreb_core::construct::{build_b, build_named};
use zagreb_core::enumerate::enumerate_all_connected;
use zagreb_core::graph::Graph;

/// Every connected graph on `n` vertices, canonical representatives.
pub fn connected_corpus(n: usize) -> Vec<Graph> {
    enumerate_all_connected(n).expect("within the enumeration cap")
}

/// The heaviest fixed graphs the acceptance checks exercise.
pub fn scan_targets() -> Vec<(&'static str, Graph)> {
    vec![
        ("B_{8,4}", build_b(8, 4).expect("valid parameters")),
        ("B_{12,5}", build_b(12, 5).expect("valid parameters")),
        ("C9", build_named("C9").expect("known name")),
    ]
}
