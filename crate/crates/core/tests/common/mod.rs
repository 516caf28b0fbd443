#![allow(dead_code)]

use dyncolor::graph::Graph;
use proptest::prelude::*;

/// Graphs on `0..n` with each pair an edge with probability `density`.
pub fn graph(min_n: usize, max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(move |n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(proptest::bool::weighted(density), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[i] {
                        g.insert_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

pub fn connected(min_n: usize, max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    graph(min_n, max_n, density).prop_filter("connected", |g| g.is_connected())
}
