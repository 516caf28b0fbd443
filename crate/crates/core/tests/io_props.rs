mod common;

use dyncolor::generate::{clique_sum, complete, v8, v8_subdivision};
use dyncolor::graph::{is_isomorphic, suppress_degree_two};
use dyncolor::io::{emit_coloring, emit_edgelist, emit_graph6, parse_coloring, parse_edgelist, parse_graph6};
use dyncolor::dynamic::Coloring;
use dyncolor::minor::has_minor;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn edgelist_round_trip(g in common::graph(0, 20, 0.2)) {
        let text = emit_edgelist(&g);
        let back = parse_edgelist(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_edgelist(&back), text);
    }

    #[test]
    fn edgelist_is_canonicalized(g in common::graph(2, 12, 0.3), flip in any::<u64>()) {
        // Reversed pairs, shuffled lines and comments parse to the same graph.
        let mut lines: Vec<String> = g.edges().enumerate().map(|(i, (u, v))| {
            if flip >> (i % 64) & 1 == 1 { format!("{v} {u}") } else { format!("{u}  {v} # e{i}") }
        }).collect();
        lines.reverse();
        for v in g.vertices().filter(|&v| g.degree(v) == 0) {
            lines.push(v.to_string());
        }
        let back = parse_edgelist(&lines.join("\n")).unwrap();
        prop_assert_eq!(emit_edgelist(&back), emit_edgelist(&g));
    }

    #[test]
    fn graph6_round_trip(g in common::graph(0, 30, 0.3)) {
        let s = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        prop_assert_eq!(emit_graph6(&parse_graph6(&s).unwrap()).unwrap(), s);
    }

    #[test]
    fn parsers_never_panic(s in "\\PC{0,40}") {
        let _ = parse_edgelist(&s);
        let _ = parse_graph6(&s);
        let _ = parse_coloring(&s);
    }

    #[test]
    fn coloring_round_trip(pairs in proptest::collection::btree_map(0usize..50, 1usize..7, 0..20)) {
        let c = Coloring::from_pairs(6, pairs).unwrap();
        prop_assert_eq!(parse_coloring(&emit_coloring(&c, &["x".into()])).unwrap(), c);
    }

    #[test]
    fn v8_subdivisions_suppress_back(n in 8usize..40, seed in any::<u64>()) {
        let g = v8_subdivision(n, seed);
        prop_assert_eq!(g.vertex_count(), n);
        prop_assert_eq!(g.max_degree(), 3);
        prop_assert!(is_isomorphic(&suppress_degree_two(&g).unwrap().suppressed, &v8()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn clique_sums_are_k5_minor_free(pieces in 1usize..3, seed in any::<u64>()) {
        let g = clique_sum(pieces, seed);
        prop_assume!(g.vertex_count() <= 14);
        prop_assert!(!has_minor(&g, &complete(5)));
    }
}
