//! Graph families used throughout the crate and its tests.
//!
//! Named graphs are deterministic. Random families take a seed and are fully
//! reproducible: the same seed always yields the same graph.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{combinations, Graph, Vertex};
use crate::minor::is_planar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid parameters for {kind}: {reason}")]
    InvalidParams { kind: GenKind, reason: String },
    #[error("unknown graph kind `{0}`")]
    UnknownKind(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenKind {
    Cycle,
    Path,
    Complete,
    CompleteBipartite,
    V8,
    Petersen,
    V8Subdivision,
    SubdividedComplete,
    CliqueSum,
    ThreeSum,
    RandomPlanar,
    Tree,
    SeriesParallel,
}

impl GenKind {
    pub const ALL: [GenKind; 13] = [
        GenKind::Cycle,
        GenKind::Path,
        GenKind::Complete,
        GenKind::CompleteBipartite,
        GenKind::V8,
        GenKind::Petersen,
        GenKind::V8Subdivision,
        GenKind::SubdividedComplete,
        GenKind::CliqueSum,
        GenKind::ThreeSum,
        GenKind::RandomPlanar,
        GenKind::Tree,
        GenKind::SeriesParallel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenKind::Cycle => "cycle",
            GenKind::Path => "path",
            GenKind::Complete => "complete",
            GenKind::CompleteBipartite => "complete_bipartite",
            GenKind::V8 => "v8",
            GenKind::Petersen => "petersen",
            GenKind::V8Subdivision => "v8_subdivision",
            GenKind::SubdividedComplete => "subdivided_complete",
            GenKind::CliqueSum => "clique_sum",
            GenKind::ThreeSum => "three_sum",
            GenKind::RandomPlanar => "random_planar",
            GenKind::Tree => "tree",
            GenKind::SeriesParallel => "series_parallel",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for GenKind {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GenKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| GenError::UnknownKind(s.to_string()))
    }
}

/// What to generate. `n` is the main size parameter of the kind (vertex
/// count, or clique order for `complete`/`subdivided_complete`, or number of
/// pieces for `clique_sum` and `three_sum`); `m` is the second side of `complete_bipartite`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(kind: GenKind, n: usize, seed: u64) -> Self {
        GenSpec { kind, n, m: n, seed }
    }
}

pub fn generate(spec: &GenSpec) -> Result<Graph, GenError> {
    let bad = |reason: &str| GenError::InvalidParams { kind: spec.kind, reason: reason.to_string() };
    let n = spec.n;
    Ok(match spec.kind {
        GenKind::Cycle if n < 3 => return Err(bad("cycle needs n >= 3")),
        GenKind::Cycle => cycle(n),
        GenKind::Path if n < 1 => return Err(bad("path needs n >= 1")),
        GenKind::Path => path(n),
        GenKind::Complete => complete(n),
        GenKind::CompleteBipartite => complete_bipartite(n, spec.m),
        GenKind::V8 => v8(),
        GenKind::Petersen => petersen(),
        GenKind::V8Subdivision if n < 8 => return Err(bad("a V8 subdivision has at least 8 vertices")),
        GenKind::V8Subdivision => v8_subdivision(n, spec.seed),
        GenKind::SubdividedComplete if n < 2 => return Err(bad("subdivided_complete needs n >= 2")),
        GenKind::SubdividedComplete => subdivided_complete(n),
        GenKind::CliqueSum if n < 1 => return Err(bad("clique_sum needs at least one piece")),
        GenKind::CliqueSum => clique_sum(n, spec.seed),
        GenKind::ThreeSum => three_sum(n, spec.seed),
        GenKind::RandomPlanar if n < 1 => return Err(bad("random_planar needs n >= 1")),
        GenKind::RandomPlanar => random_planar(n, spec.seed),
        GenKind::Tree if n < 1 => return Err(bad("tree needs n >= 1")),
        GenKind::Tree => random_tree(n, spec.seed),
        GenKind::SeriesParallel if n < 2 => return Err(bad("series_parallel needs n >= 2")),
        GenKind::SeriesParallel => series_parallel(n, spec.seed),
    })
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            g.insert_edge(i, j).unwrap();
        }
    }
    g
}

/// Sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for i in 0..a {
        for j in a..a + b {
            g.insert_edge(i, j).unwrap();
        }
    }
    g
}

/// The Wagner graph: the cycle `0..8` plus the chords `i, i+4`.
pub fn v8() -> Graph {
    let mut g = cycle(8);
    for i in 0..4 {
        g.insert_edge(i, i + 4).unwrap();
    }
    g
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i, i+5`.
pub fn petersen() -> Graph {
    let mut g = cycle(5);
    for i in 0..5 {
        g.insert_edge(i, i + 5).unwrap();
        g.insert_edge(i + 5, (i + 2) % 5 + 5).unwrap();
    }
    g
}

/// Hub `0` joined to the cycle `1..=n`.
pub fn wheel(n: usize) -> Graph {
    let mut g = Graph::new();
    for i in 0..n {
        g.insert_edge(1 + i, 1 + (i + 1) % n).unwrap();
        g.insert_edge(0, 1 + i).unwrap();
    }
    g
}

/// `K_n` with every edge subdivided once; branch vertices are `0..n`.
pub fn subdivided_complete(n: usize) -> Graph {
    subdivide_each_edge(&complete(n))
}

/// Replaces every edge by a path of length two, numbering the new vertices
/// after the largest existing identifier in edge order.
pub fn subdivide_each_edge(g: &Graph) -> Graph {
    let mut out = Graph::new();
    for v in g.vertices() {
        out.add_vertex(v);
    }
    let mut next = g.vertices().max().map_or(0, |m| m + 1);
    for (u, v) in g.edges() {
        out.insert_edge(u, next).unwrap();
        out.insert_edge(next, v).unwrap();
        next += 1;
    }
    out
}

/// Subdivides `edge` with a fresh vertex `fresh`.
fn subdivide(g: &mut Graph, (u, v): (Vertex, Vertex), fresh: Vertex) {
    g.remove_edge(u, v);
    g.insert_edge(u, fresh).unwrap();
    g.insert_edge(fresh, v).unwrap();
}

/// A random subdivision of V8 on exactly `n` vertices.
pub fn v8_subdivision(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = v8();
    for fresh in 8..n {
        let edges: Vec<_> = g.edges().collect();
        let e = *edges.choose(&mut rng).unwrap();
        subdivide(&mut g, e, fresh);
    }
    g
}

/// Random tree on `0..n`: vertex `i` attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.insert_edge(i, j).unwrap();
    }
    g
}

/// Random connected series-parallel graph on `0..n`, grown from an edge by
/// attaching leaves, subdividing edges, and adding vertices adjacent to
/// both ends of an edge.
pub fn series_parallel(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::from_edges(2, &[(0, 1)]);
    for fresh in 2..n {
        let edges: Vec<_> = g.edges().collect();
        let (u, v) = *edges.choose(&mut rng).unwrap();
        match rng.gen_range(0..5) {
            0 => {
                let host = rng.gen_range(0..fresh);
                g.insert_edge(host, fresh).unwrap();
            }
            1 => subdivide(&mut g, (u, v), fresh),
            _ => {
                g.insert_edge(u, fresh).unwrap();
                g.insert_edge(v, fresh).unwrap();
            }
        }
    }
    g
}

/// Random connected planar graph on `0..n`: a random spanning tree, then
/// candidate edges in random order, each kept only if the graph stays
/// planar, until a seeded target edge count is reached.
pub fn random_planar(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.insert_edge(i, j).unwrap();
    }
    if n < 3 {
        return g;
    }
    let max_edges = 3 * n - 6;
    let target = rng.gen_range(n - 1..=max_edges);
    let mut candidates: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !g.has_edge(i, j))
        .collect();
    candidates.shuffle(&mut rng);
    for (u, v) in candidates {
        if g.edge_count() >= target {
            break;
        }
        g.insert_edge(u, v).unwrap();
        if !is_planar(&g) {
            g.remove_edge(u, v);
        }
    }
    g
}

/// Vertex sets of all cliques of exactly `size` vertices.
pub fn cliques(g: &Graph, size: usize) -> Vec<Vec<Vertex>> {
    let verts: Vec<Vertex> = g.vertices().collect();
    match size {
        0 => vec![vec![]],
        1 => verts.into_iter().map(|v| vec![v]).collect(),
        2 => g.edges().map(|(u, v)| vec![u, v]).collect(),
        _ => combinations(&verts, size)
            .into_iter()
            .filter(|c| combinations(c, 2).iter().all(|p| g.has_edge(p[0], p[1])))
            .collect(),
    }
}

/// Glues `piece` onto `base` by identifying the clique `piece_clique` of
/// `piece` with `base_clique` of `base` (position by position). All other
/// vertices of `piece` receive fresh identifiers.
pub fn glue(base: &Graph, base_clique: &[Vertex], piece: &Graph, piece_clique: &[Vertex]) -> Graph {
    assert_eq!(base_clique.len(), piece_clique.len());
    let mut next = base.vertices().max().map_or(0, |m| m + 1);
    let mut rename = std::collections::BTreeMap::new();
    for (&p, &b) in piece_clique.iter().zip(base_clique) {
        rename.insert(p, b);
    }
    for v in piece.vertices() {
        rename.entry(v).or_insert_with(|| {
            next += 1;
            next - 1
        });
    }
    let mut g = base.clone();
    for v in piece.vertices() {
        g.add_vertex(rename[&v]);
    }
    for (u, v) in piece.edges() {
        g.insert_edge(rename[&u], rename[&v]).unwrap();
    }
    g
}

/// Random clique-sum of `pieces` K5-minor-free building blocks: copies of
/// V8 and random planar graphs on 4 to 8 vertices, glued along cliques of
/// size 1 to 3 and optionally losing some glued clique edges while staying
/// connected.
pub fn clique_sum(pieces: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let piece = |rng: &mut ChaCha8Rng| -> Graph {
        if rng.gen_bool(0.3) {
            v8()
        } else {
            let n = rng.gen_range(4..=8);
            random_planar(n, rng.gen())
        }
    };
    let mut g = piece(&mut rng);
    for _ in 1..pieces {
        let p = piece(&mut rng);
        let mut sizes: Vec<usize> = (1..=3).collect();
        sizes.shuffle(&mut rng);
        for size in sizes {
            let in_base = cliques(&g, size);
            let in_piece = cliques(&p, size);
            if in_base.is_empty() || in_piece.is_empty() {
                continue;
            }
            let bc = in_base.choose(&mut rng).unwrap().clone();
            let mut pc = in_piece.choose(&mut rng).unwrap().clone();
            pc.shuffle(&mut rng);
            let mut glued = glue(&g, &bc, &p, &pc);
            for pair in combinations(&bc, 2) {
                if rng.gen_bool(0.3) {
                    glued.remove_edge(pair[0], pair[1]);
                    if !glued.is_connected() {
                        glued.insert_edge(pair[0], pair[1]).unwrap();
                    }
                }
            }
            g = glued;
            break;
        }
    }
    g
}

/// Random 3-sum: `pieces` random planar graphs glued on one shared triangle
/// `{0, 1, 2}`, after which each triangle edge is deleted with probability
/// 0.6 if the graph stays connected. Nonplanar as soon as three pieces have
/// vertices off the triangle, and K5-minor-free.
pub fn three_sum(pieces: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = complete(3);
    for _ in 0..pieces {
        let (p, triangles) = loop {
            let p = random_planar(rng.gen_range(4..=7), rng.gen());
            let t = cliques(&p, 3);
            if !t.is_empty() {
                break (p, t);
            }
        };
        let tri = triangles.choose(&mut rng).unwrap();
        g = glue(&g, &[0, 1, 2], &p, tri);
    }
    for (u, v) in [(0, 1), (1, 2), (0, 2)] {
        if rng.gen_bool(0.6) {
            g.remove_edge(u, v);
            if !g.is_connected() {
                g.insert_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// A random planar graph on `planar_n` vertices plus `k` apex vertices
/// numbered from `planar_n`, each joined to at least two random vertices of
/// the planar part and, with probability one half each, to earlier apex
/// vertices. Returns the graph and the apex set.
pub fn apex_instance(planar_n: usize, k: usize, seed: u64) -> (Graph, BTreeSet<Vertex>) {
    assert!(planar_n >= 2, "apex neighborhoods need two planar vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = random_planar(planar_n, rng.gen());
    let mut apex = BTreeSet::new();
    for a in planar_n..planar_n + k {
        let mut base: Vec<Vertex> = (0..planar_n).collect();
        base.shuffle(&mut rng);
        let size = rng.gen_range(2..=planar_n);
        g.add_vertex(a);
        for &v in &base[..size] {
            g.insert_edge(a, v).unwrap();
        }
        for &b in &apex {
            if rng.gen_bool(0.5) {
                g.insert_edge(a, b).unwrap();
            }
        }
        apex.insert(a);
    }
    (g, apex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::suppress_degree_two;

    #[test]
    fn v8_shape() {
        let g = v8();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert!(g.has_edge(0, 4) && g.has_edge(3, 7) && g.has_edge(7, 0));
    }

    #[test]
    fn named_generators() {
        let c5 = generate(&GenSpec::new(GenKind::Cycle, 5, 0)).unwrap();
        assert!(c5.is_c5());
        let sk4 = generate(&GenSpec::new(GenKind::SubdividedComplete, 4, 0)).unwrap();
        assert_eq!((sk4.vertex_count(), sk4.edge_count()), (10, 12));
        let p = petersen();
        assert_eq!((p.vertex_count(), p.edge_count(), p.max_degree()), (10, 15, 3));
        assert_eq!(wheel(5).edge_count(), 10);
    }

    #[test]
    fn invalid_params_are_errors() {
        assert!(generate(&GenSpec::new(GenKind::Cycle, 2, 0)).is_err());
        assert!(generate(&GenSpec::new(GenKind::V8Subdivision, 7, 0)).is_err());
        assert!("dodecahedron".parse::<GenKind>().is_err());
        assert_eq!("v8_subdivision".parse::<GenKind>(), Ok(GenKind::V8Subdivision));
    }

    #[test]
    fn seeds_are_reproducible() {
        for kind in [GenKind::RandomPlanar, GenKind::CliqueSum, GenKind::SeriesParallel, GenKind::Tree] {
            let a = generate(&GenSpec::new(kind, 9, 42)).unwrap();
            let b = generate(&GenSpec::new(kind, 9, 42)).unwrap();
            assert_eq!(a, b, "{kind}");
        }
    }

    #[test]
    fn v8_subdivisions_suppress_back() {
        for seed in 0..10 {
            let g = v8_subdivision(20, seed);
            assert_eq!(g.vertex_count(), 20);
            assert_eq!(g.max_degree(), 3);
            let map = suppress_degree_two(&g).unwrap();
            assert!(crate::graph::is_isomorphic(&map.suppressed, &v8()));
        }
    }

    #[test]
    fn random_families_are_connected() {
        for seed in 0..20 {
            assert!(random_planar(12, seed).is_connected());
            assert!(is_planar(&random_planar(12, seed)));
            assert!(series_parallel(15, seed).is_connected());
            assert_eq!(random_tree(15, seed).edge_count(), 14);
            assert!(clique_sum(4, seed).is_connected());
            assert!(three_sum(3, seed).is_connected());
        }
    }

    #[test]
    fn apex_instance_shape() {
        let (g, x) = apex_instance(10, 2, 7);
        assert_eq!(x, BTreeSet::from([10, 11]));
        assert!(is_planar(&g.without(&x)));
        assert!(x.iter().all(|&a| g.neighbors(a).iter().filter(|&&v| v < 10).count() >= 2));
    }
}
