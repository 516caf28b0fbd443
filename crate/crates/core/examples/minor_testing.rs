//! Planarity, minors and topological minors.

use dyncolor::generate::{complete, complete_bipartite, petersen, random_planar, subdivided_complete, v8};
use dyncolor::minor::{classify_3connected, has_minor, has_topological_minor, is_planar, is_planar_kuratowski};

fn main() {
    let k5 = complete(5);
    let k33 = complete_bipartite(3, 3);
    for (name, g) in [("V8", v8()), ("Petersen", petersen()), ("K5 subdivided", subdivided_complete(5)), ("planar(10)", random_planar(10, 1))] {
        println!(
            "{name}: planar={} (kuratowski {}) K5 minor={} K33 minor={} K5 topological={}",
            is_planar(&g),
            is_planar_kuratowski(&g),
            has_minor(&g, &k5),
            has_minor(&g, &k33),
            has_topological_minor(&g, &k5),
        );
    }
    println!("classify V8: {:?}", classify_3connected(&v8()).unwrap());
    println!("classify K3,3: {:?}", classify_3connected(&k33).unwrap());
}
