mod common;

use dyncolor::dynamic::verify_dynamic;
use dyncolor::generate::{clique_sum, complete, random_planar, three_sum};
use dyncolor::k5free::{color_k5free, Colorer, K5FreeError};
use dyncolor::minor::has_minor;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn output_contract_on_clique_sums(pieces in 1usize..6, seed in any::<u64>()) {
        let g = clique_sum(pieces, seed);
        let (c, trace) = Colorer::new().trust_input().color(&g).unwrap();
        prop_assert!(verify_dynamic(&g, &c).ok);
        prop_assert!(c.max_color() <= 4);
        prop_assert!(trace.edges_decrease());
        prop_assert_eq!(trace.fallbacks(), 0);
    }

    #[test]
    fn output_contract_on_three_sums(pieces in 2usize..5, seed in any::<u64>()) {
        let g = three_sum(pieces, seed);
        let (c, trace) = Colorer::new().trust_input().color(&g).unwrap();
        prop_assert!(verify_dynamic(&g, &c).ok);
        prop_assert!(trace.edges_decrease());
        prop_assert_eq!(trace.fallbacks(), 0);
    }

    #[test]
    fn small_inputs_match_the_minor_test(g in common::connected(3, 8, 0.5)) {
        match color_k5free(&g) {
            Ok((c, _)) => {
                prop_assert!(verify_dynamic(&g, &c).ok && c.max_color() <= 4);
                prop_assert!(!has_minor(&g, &complete(5)));
            }
            Err(K5FreeError::HasK5Minor) => prop_assert!(has_minor(&g, &complete(5))),
            Err(K5FreeError::NotColorable) => prop_assert!(g.is_c5()),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}

#[test]
fn auxiliary_graphs_stay_k5_minor_free() {
    for seed in 0..40 {
        let g = clique_sum(3, seed);
        let (_, trace) = color_k5free(&g).unwrap();
        for step in &trace.steps {
            for child in step.children.iter().filter(|c| c.vertex_count() <= 14) {
                assert!(!has_minor(child, &complete(5)), "seed {seed}: {step}");
            }
        }
    }
}

#[test]
fn planar_inputs_take_the_base_case() {
    for seed in 0..10 {
        let (c, trace) = color_k5free(&random_planar(30, seed)).unwrap();
        assert!(c.max_color() <= 4);
        assert_eq!(trace.steps.len(), 1);
    }
}
