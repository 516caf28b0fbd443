//! Cut vertices, blocks, 2-cuts and degree-2 suppression.

use dyncolor::generate::{cycle, v8};
use dyncolor::graph::{suppress_degree_two, Graph};

fn main() {
    // Two 4-cycles sharing vertex 0, plus a pendant path.
    let g = Graph::from_edges(9, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0), (6, 7), (7, 8)]);
    println!("cut vertices: {:?}", g.cut_vertices().unwrap());
    println!("blocks: {:?}", g.blocks());
    for sep in g.separations(1).unwrap().iter().take(3) {
        println!("order-1 separation A={:?} B={:?}", sep.a(), sep.b());
    }

    let c6 = cycle(6);
    for (x, y, comps) in c6.nontrivial_two_cuts().iter().take(3) {
        println!("C6 two-cut {{{x},{y}}} leaves {comps:?}");
    }

    println!("V8 internally 3-connected: {}", v8().is_internally_3_connected());

    let mut long = v8();
    long.remove_edge(0, 1);
    for (u, v) in [(0, 8), (8, 9), (9, 1)] {
        long.insert_edge(u, v).unwrap();
    }
    let s = suppress_degree_two(&long).unwrap();
    println!("suppressed: {} vertices, {} edges; path for branch edge: {:?}", s.suppressed.vertex_count(), s.suppressed.edge_count(), s.path_map);
}
