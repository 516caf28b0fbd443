//! Color budgets for graphs excluding K_t.

use dyncolor::budget::{budget, color_no_kt, BudgetMode};
use dyncolor::generate::{cycle, random_planar};

fn main() {
    println!(" t  topological  minor");
    for t in 2..=10 {
        let top = budget(BudgetMode::topological(t).unwrap()).unwrap();
        let min = budget(BudgetMode::minor(t).unwrap()).unwrap();
        println!("{t:2}  {top:11}  {min:5}");
    }

    let g = random_planar(30, 3);
    let c = color_no_kt(&g, BudgetMode::minor(5).unwrap()).unwrap();
    println!("planar graph without K5 minor: {} colors used", c.colors_used());
    let c = color_no_kt(&cycle(5), BudgetMode::minor(3).unwrap()).unwrap();
    println!("C5: {} colors used", c.colors_used());
}
