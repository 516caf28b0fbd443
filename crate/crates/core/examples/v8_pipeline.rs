//! Suppress a subdivided Wagner graph, classify it, and color it.

use dyncolor::dynamic::verify_dynamic;
use dyncolor::generate::{v8, v8_subdivision};
use dyncolor::graph::{is_isomorphic, suppress_degree_two};
use dyncolor::k5free::color_k5free;
use dyncolor::minor::classify_3connected;

fn main() {
    for seed in 0..5 {
        let g = v8_subdivision(24, seed);
        let s = suppress_degree_two(&g).unwrap();
        let verdict = classify_3connected(&s.suppressed).unwrap();
        let (c, trace) = color_k5free(&g).unwrap();
        println!(
            "seed {seed}: n={} suppresses to V8: {} classifier: {verdict:?} colored: {} ({} steps)",
            g.vertex_count(),
            is_isomorphic(&s.suppressed, &v8()),
            verify_dynamic(&g, &c).ok,
            trace.steps.len(),
        );
    }
}
