//! Happiness and the dynamic-coloring verifier.

use dyncolor::dynamic::{is_happy, verify_dynamic, Coloring};
use dyncolor::generate::cycle;

fn main() {
    let c5 = cycle(5);

    // Proper, but vertex 0 sees color 2 on both sides.
    let almost = Coloring::from_pairs(4, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 2)]).unwrap();
    let report = verify_dynamic(&c5, &almost);
    println!("table coloring of C5: ok={} unhappy={:?}", report.ok, report.unhappy);
    for v in c5.vertices() {
        println!("  vertex {v} happy: {}", is_happy(&c5, &almost, v).unwrap());
    }

    let rainbow = Coloring::from_pairs(5, (0..5).map(|v| (v, v + 1))).unwrap();
    println!("five distinct colors: ok={}", verify_dynamic(&c5, &rainbow).ok);

    let clash = Coloring::from_pairs(3, [(0, 1), (1, 1), (2, 2), (3, 3), (4, 2)]).unwrap();
    let report = verify_dynamic(&c5, &clash);
    println!("improper coloring: improper edges {:?}", report.proper_violations);
}
