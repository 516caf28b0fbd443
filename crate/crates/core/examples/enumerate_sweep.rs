//! Enumerate small connected graphs and sweep the 4-colorer over them.

use dyncolor::enumerate::connected_graphs;
use dyncolor::sweep::sweep_compare;

fn main() {
    for n in 1..=7 {
        println!("n={n}: {} connected, {} with max degree 3", connected_graphs(n, None).len(), connected_graphs(n, Some(3)).len());
    }
    let report = sweep_compare(6, None);
    print!("{report}");
}
