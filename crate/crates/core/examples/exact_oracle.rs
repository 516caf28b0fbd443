//! Exact dynamic chromatic numbers of small graphs.

use dyncolor::dynamic::{chi, chi_d, solve_exact, Coloring};
use dyncolor::generate::{complete, cycle, petersen, subdivided_complete, v8};

fn main() {
    println!("C5: chi = {}, chi_d = {}", chi(&cycle(5)), chi_d(&cycle(5)));
    for n in 3..=5 {
        let g = subdivided_complete(n);
        println!("K{n} subdivided: chi = {}, chi_d = {}", chi(&g), chi_d(&g));
    }
    for n in [4, 6, 7, 8, 9] {
        let three = solve_exact(&cycle(n), 3, &Coloring::new(3)).is_some();
        println!("C{n}: dynamically 3-colorable = {three}, chi_d = {}", chi_d(&cycle(n)));
    }
    println!("K5: chi_d = {}", chi_d(&complete(5)));
    println!("V8: chi_d = {}", chi_d(&v8()));
    println!("Petersen: chi_d = {}", chi_d(&petersen()));

    // Extending a precoloring.
    let pre = Coloring::from_pairs(4, [(0, 4), (2, 4)]).unwrap();
    let c = solve_exact(&v8(), 4, &pre).expect("extension exists");
    println!("V8 with 0 and 2 forced to color 4: {c:?}");
}
