//! (k+4)-colorings of graphs made planar by deleting k vertices.

use std::collections::BTreeSet;

use dyncolor::budget::color_apex;
use dyncolor::dynamic::chi_d;
use dyncolor::generate::{apex_instance, complete};

fn main() {
    let k5 = complete(5);
    let c = color_apex(&k5, &BTreeSet::from([0])).unwrap();
    println!("K5, apex {{0}}: {} colors; chi_d(K5) = {}", c.colors_used(), chi_d(&k5));

    for k in 1..=3 {
        let (g, x) = apex_instance(12, k, 40 + k as u64);
        let c = color_apex(&g, &x).unwrap();
        println!("planar(12) + {k} apex vertices {x:?}: {} colors (bound {})", c.colors_used(), k + 4);
    }
}
