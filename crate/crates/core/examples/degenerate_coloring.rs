//! Greedy (k+3)-colorings by minimum-degree elimination.

use dyncolor::budget::{color_degenerate, BudgetError};
use dyncolor::generate::{complete, random_tree, series_parallel, subdivided_complete};

fn main() {
    let tree = random_tree(30, 5);
    let c = color_degenerate(&tree, 1).unwrap();
    println!("tree, k=1: {} colors (bound 4)", c.colors_used());

    let sp = series_parallel(40, 2);
    let c = color_degenerate(&sp, 2).unwrap();
    println!("series-parallel, k=2: {} colors (bound 5)", c.colors_used());

    let g = subdivided_complete(5);
    let c = color_degenerate(&g, 4).unwrap();
    println!("K5 subdivided, k=4: {} colors (bound 7, at least 5 needed)", c.colors_used());

    if let Err(BudgetError::DegeneracyViolation { min_degree, witness, .. }) = color_degenerate(&complete(6), 3) {
        println!("K6 with k=3: stuck at minimum degree {min_degree} on {} vertices", witness.vertex_count());
    }
}
