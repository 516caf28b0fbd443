//! Edge lists, graph6 and coloring documents.

use dyncolor::dynamic::chi_d_within;
use dyncolor::io::{emit_coloring, emit_edgelist, emit_graph6, parse_coloring, parse_edgelist, parse_graph6};
use std::time::Duration;

fn main() {
    let g = parse_edgelist("# a triangle with a tail\n0 1\n1 2\n2 0\n2 3\n7\n").unwrap();
    print!("canonical edge list:\n{}", emit_edgelist(&g));

    let petersen = parse_graph6("IheA@GUAo").unwrap();
    println!("graph6 IheA@GUAo: {} vertices, {} edges", petersen.vertex_count(), petersen.edge_count());
    println!("K2 as graph6: {}", emit_graph6(&parse_graph6("A_").unwrap()).unwrap());

    let (_, c) = chi_d_within(&petersen, Duration::from_secs(10)).unwrap();
    let doc = emit_coloring(&c, &["Exact n=10 m=15".to_string()]);
    print!("{doc}");
    assert_eq!(parse_coloring(&doc).unwrap(), c);

    match parse_edgelist("0 1\n1 1\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
