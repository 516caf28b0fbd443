mod common;

use std::collections::BTreeSet;

use dyncolor::budget::{budget, color_apex, color_degenerate, BudgetMode, Excluded};
use dyncolor::dynamic::verify_dynamic;
use dyncolor::generate::{apex_instance, random_planar, random_tree, series_parallel};
use dyncolor::minor::is_planar;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn degenerate_trees(n in 1usize..60, seed in any::<u64>()) {
        let g = random_tree(n, seed);
        let c = color_degenerate(&g, 1).unwrap();
        prop_assert!(verify_dynamic(&g, &c).ok);
        prop_assert!(c.max_color() <= 4);
    }

    #[test]
    fn degenerate_series_parallel(n in 2usize..60, seed in any::<u64>(), k in 2usize..5) {
        let g = series_parallel(n, seed);
        let c = color_degenerate(&g, k).unwrap();
        prop_assert!(verify_dynamic(&g, &c).ok);
        prop_assert!(c.max_color() <= k + 3);
    }

    #[test]
    fn degenerate_planar_with_k5(n in 1usize..40, seed in any::<u64>()) {
        // Planar graphs have no K6 topological minor, so every topological
        // minor has a vertex of degree at most 5.
        let g = random_planar(n, seed);
        let c = color_degenerate(&g, 5).unwrap();
        prop_assert!(verify_dynamic(&g, &c).ok);
        prop_assert!(c.max_color() <= 8);
    }

    #[test]
    fn apex_colorings(planar_n in 3usize..14, k in 1usize..4, seed in any::<u64>()) {
        let (g, x) = apex_instance(planar_n, k, seed);
        let c = color_apex(&g, &x).unwrap();
        prop_assert!(verify_dynamic(&g, &c).ok);
        prop_assert!(c.max_color() <= k + 4);
        for &v in &x {
            if g.degree(v) >= 2 {
                let seen: BTreeSet<usize> = g.neighbors(v).iter().filter_map(|&u| c.get(u)).collect();
                prop_assert!(seen.len() >= 2);
            }
        }
    }

    #[test]
    fn apex_with_universal_vertices(n in 3usize..12, seed in any::<u64>()) {
        let mut g = random_planar(n, seed);
        for a in [100, 101] {
            for u in 0..n {
                g.insert_edge(a, u).unwrap();
            }
        }
        g.insert_edge(100, 101).unwrap();
        let c = color_apex(&g, &BTreeSet::from([100, 101])).unwrap();
        prop_assert!(verify_dynamic(&g, &c).ok);
        prop_assert!(c.max_color() <= 6);
        prop_assert!(is_planar(&g.without(&BTreeSet::from([100, 101]))));
    }

    #[test]
    fn budgets_increase(t in 2u64..200) {
        for mode in [Excluded::TopologicalMinor, Excluded::Minor] {
            let a = budget(BudgetMode::new(mode, t).unwrap()).unwrap();
            let b = budget(BudgetMode::new(mode, t + 1).unwrap()).unwrap();
            prop_assert!(a < b);
        }
    }
}
