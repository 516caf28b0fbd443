//! Seeded graph families.

use dyncolor::generate::{generate, GenKind, GenSpec};
use dyncolor::minor::{has_minor, is_planar};
use dyncolor::generate::complete;

fn main() {
    for kind in GenKind::ALL {
        let n = match kind {
            GenKind::CliqueSum | GenKind::ThreeSum => 3,
            GenKind::Complete | GenKind::SubdividedComplete => 4,
            GenKind::V8Subdivision => 14,
            _ => 9,
        };
        let g = generate(&GenSpec::new(kind, n, 1)).unwrap();
        let small = g.vertex_count() <= 14;
        println!(
            "{kind:20} n={:3} m={:3} planar={:5} K5 minor={}",
            g.vertex_count(),
            g.edge_count(),
            is_planar(&g),
            if small { has_minor(&g, &complete(5)).to_string() } else { "-".into() },
        );
    }
}
