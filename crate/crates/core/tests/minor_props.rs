mod common;

use dyncolor::generate::{clique_sum, complete, complete_bipartite, random_planar};
use dyncolor::minor::{classify_3connected, has_minor, has_topological_minor, is_planar, is_planar_kuratowski, HalinVerdict};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn planarity_agrees_with_kuratowski(g in common::graph(1, 8, 0.5)) {
        prop_assert_eq!(is_planar(&g), is_planar_kuratowski(&g));
    }

    #[test]
    fn euler_bound(g in common::graph(3, 12, 0.4)) {
        if is_planar(&g) {
            prop_assert!(g.edge_count() + 6 <= 3 * g.vertex_count());
        }
    }

    #[test]
    fn topological_minor_implies_minor(g in common::graph(5, 9, 0.6)) {
        for h in [complete(5), complete_bipartite(3, 3), complete(4)] {
            if has_topological_minor(&g, &h) {
                prop_assert!(has_minor(&g, &h));
            }
        }
    }

    #[test]
    fn minors_are_monotone(g in common::connected(6, 10, 0.5), ops in proptest::collection::vec((any::<bool>(), 0usize..64), 1..5)) {
        // Walk down a delete/contract chain; once K4 or K5 appears it stays
        // present in every larger graph.
        let mut chain = vec![g.clone()];
        let mut cur = g;
        for (contract, pick) in ops {
            let edges: Vec<_> = cur.edges().collect();
            if edges.is_empty() { break; }
            let (u, v) = edges[pick % edges.len()];
            cur = if contract { cur.contract_edge(u, v).unwrap() } else {
                let mut h = cur.clone();
                h.remove_edge(u, v);
                h
            };
            chain.push(cur.clone());
        }
        for h in [complete(4), complete(5)] {
            let found: Vec<bool> = chain.iter().map(|g| has_minor(g, &h)).collect();
            for w in found.windows(2) {
                prop_assert!(w[0] || !w[1], "minor lost going up the chain: {:?}", found);
            }
        }
    }
}

#[test]
fn classifier_on_three_connected_k5_free_graphs() {
    let mut checked = 0;
    for seed in 0..200 {
        for g in [random_planar(9, seed), clique_sum(2, seed)] {
            if g.vertex_count() > 14 || !g.is_3_connected() {
                continue;
            }
            assert!(!has_minor(&g, &complete(5)));
            match classify_3connected(&g).unwrap() {
                HalinVerdict::Planar => assert!(is_planar(&g)),
                HalinVerdict::IsV8 => assert_eq!(g.vertex_count(), 8),
                HalinVerdict::ThreeCut(x) => assert!(g.components_without(&x).len() >= 3),
            }
            checked += 1;
        }
    }
    assert!(checked > 20, "only {checked} graphs checked");
}
