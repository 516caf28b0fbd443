//! Constructive dynamic 4-coloring of K5-minor-free graphs, with its trace.

use dyncolor::dynamic::verify_dynamic;
use dyncolor::generate::{clique_sum, cycle, three_sum};
use dyncolor::k5free::{color_k5free, K5FreeError, Rule};

fn main() {
    let g = clique_sum(4, 7);
    println!("clique sum: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    let (c, trace) = color_k5free(&g).expect("K5-minor-free and not C5");
    println!("verified: {}, colors used: {}", verify_dynamic(&g, &c).ok, c.colors_used());
    for step in &trace.steps {
        println!("  {step}");
    }

    let g = three_sum(4, 177);
    let (_, trace) = color_k5free(&g).unwrap();
    let order3 = [Rule::Order3Case1, Rule::Order3Case2, Rule::Order3Case3];
    let hits: usize = order3.iter().map(|&r| trace.count(r)).sum();
    println!("three-sum: {} steps, {hits} order-3 merges, edges shrink: {}", trace.steps.len(), trace.edges_decrease());

    match color_k5free(&cycle(5)) {
        Err(K5FreeError::NotColorable) => println!("C5 rejected as expected"),
        other => println!("unexpected: {other:?}"),
    }
}
