//! Minor and topological-minor containment, planarity, and the trichotomy
//! for 3-connected graphs without a K5 minor.

mod halin;
mod planarity;
mod topological;

pub use halin::{classify_3connected, HalinVerdict, MinorError};
pub use planarity::is_planar;
pub use topological::{has_topological_minor, is_planar_kuratowski};

use std::collections::{BTreeSet, HashSet};

use crate::graph::{combinations, Graph, Vertex};

/// Whether `h` is a minor of `g`.
///
/// Branch and bound over vertex deletions and edge contractions (edge
/// deletions are folded into a final spanning-subgraph test once `g` has
/// shrunk to `|V(h)|` vertices). Depending on the connectivity and minimum
/// degree of `h` the search first splits `g` into components, blocks,
/// torsos of 2-cuts and torsos of 3-cuts, drops low-degree vertices, and
/// cuts off planar states when `h` is nonplanar. Exponential in the worst
/// case; meant for `|V(g)|` up to about 14 when `h = K5`.
pub fn has_minor(g: &Graph, h: &Graph) -> bool {
    if h.is_empty() {
        return true;
    }
    let mut search = MinorSearch { target: Target::new(h), seen: HashSet::new() };
    search.contains(g.clone())
}

struct Target {
    adj: Vec<Vec<usize>>,
    n: usize,
    m: usize,
    min_degree: usize,
    connectivity: usize,
    planar: bool,
    degrees: Vec<usize>,
}

impl Target {
    fn new(h: &Graph) -> Self {
        let (adj, _) = h.to_adjacency();
        Target {
            adj,
            n: h.vertex_count(),
            m: h.edge_count(),
            min_degree: h.min_degree(),
            connectivity: vertex_connectivity(h),
            planar: is_planar(h),
            degrees: h.degree_sequence(),
        }
    }
}

/// Vertex connectivity by brute force; `n - 1` for complete graphs.
fn vertex_connectivity(h: &Graph) -> usize {
    let n = h.vertex_count();
    if n == 0 || !h.is_connected() {
        return 0;
    }
    let verts: Vec<Vertex> = h.vertices().collect();
    for k in 1..n.saturating_sub(1) {
        for x in combinations(&verts, k) {
            let x: BTreeSet<Vertex> = x.into_iter().collect();
            if h.components_without(&x).len() > 1 {
                return k;
            }
        }
    }
    n - 1
}

struct MinorSearch {
    target: Target,
    seen: HashSet<Graph>,
}

impl MinorSearch {
    fn contains(&mut self, g: Graph) -> bool {
        let g = self.reduce(g);
        let t = &self.target;
        if g.vertex_count() < t.n || g.edge_count() < t.m {
            return false;
        }
        if !self.seen.insert(g.clone()) {
            return false;
        }
        if !t.planar && is_planar(&g) {
            return false;
        }
        if let Some(pieces) = self.split(&g) {
            return pieces.into_iter().any(|p| self.contains(p));
        }
        if g.vertex_count() == self.target.n {
            return self.spanning_subgraph(&g);
        }
        let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
        for (u, v) in edges {
            if self.contains(g.contract_edge(u, v).unwrap()) {
                return true;
            }
        }
        let verts: Vec<Vertex> = g.vertices().collect();
        verts.into_iter().any(|v| self.contains(g.without_vertex(v)))
    }

    /// Deletions and contractions that cannot destroy an `h` minor.
    fn reduce(&self, mut g: Graph) -> Graph {
        let t = &self.target;
        if t.connectivity == 0 || t.n < 3 {
            return g;
        }
        loop {
            let Some(v) = g.min_degree_vertex() else {
                return g;
            };
            let d = g.degree(v);
            if d <= 1 && t.min_degree >= 2 {
                g.remove_vertex(v);
            } else if d == 2 && t.min_degree >= 3 {
                let w = *g.neighbors(v).iter().next().unwrap();
                g = g.contract_edge(v, w).unwrap();
            } else {
                return g;
            }
        }
    }

    /// Pieces of `g` such that `h ≤ g` iff `h` is a minor of some piece.
    fn split(&self, g: &Graph) -> Option<Vec<Graph>> {
        let k = self.target.connectivity;
        if k >= 1 && !g.is_connected() {
            return Some(g.components().iter().map(|c| g.induced(c)).collect());
        }
        if k >= 2 {
            let blocks = g.blocks();
            if blocks.len() > 1 {
                return Some(blocks.iter().map(|b| g.induced(b)).collect());
            }
        }
        if k >= 3 {
            if let Some(pieces) = torsos(g, 2) {
                return Some(pieces);
            }
        }
        if k >= 4 {
            if let Some(pieces) = torsos(g, 3) {
                return Some(pieces);
            }
        }
        None
    }

    fn spanning_subgraph(&self, g: &Graph) -> bool {
        let t = &self.target;
        if g.degree_sequence().iter().zip(&t.degrees).any(|(a, b)| a < b) {
            return false;
        }
        let (gadj, _) = g.to_adjacency();
        find_monomorphism(&t.adj, &gadj).is_some()
    }
}

/// Torsos along the first separator of the given size (2 or 3) whose torsos
/// are all minors of `g`. A 2-cut of a 2-connected graph always qualifies; a
/// 3-cut of a 3-connected graph qualifies when it leaves at least three
/// components, or when its missing edges share a common endpoint.
fn torsos(g: &Graph, size: usize) -> Option<Vec<Graph>> {
    let verts: Vec<Vertex> = g.vertices().collect();
    for x in combinations(&verts, size) {
        let xs: BTreeSet<Vertex> = x.iter().copied().collect();
        let comps = g.components_without(&xs);
        if comps.len() < 2 {
            continue;
        }
        let missing: Vec<(Vertex, Vertex)> = combinations(&x, 2)
            .into_iter()
            .map(|p| (p[0], p[1]))
            .filter(|&(a, b)| !g.has_edge(a, b))
            .collect();
        let realizable = size == 2
            || comps.len() >= 3
            || missing.len() <= 1
            || (missing.len() == 2 && {
                let (a, b) = (missing[0], missing[1]);
                a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
            });
        if !realizable {
            continue;
        }
        let pieces = comps
            .iter()
            .map(|c| {
                let mut keep = c.clone();
                keep.extend(xs.iter().copied());
                let mut t = g.induced(&keep);
                for &(a, b) in &missing {
                    t.insert_edge(a, b).unwrap();
                }
                t
            })
            .collect();
        return Some(pieces);
    }
    None
}

/// An injective map `V(h) → V(g)` sending edges to edges, if one exists.
/// Both graphs are dense adjacency lists.
pub(crate) fn find_monomorphism(h: &[Vec<usize>], g: &[Vec<usize>]) -> Option<Vec<usize>> {
    let hn = h.len();
    let gn = g.len();
    if hn > gn {
        return None;
    }
    let mut gm = vec![vec![false; gn]; gn];
    for (v, nbrs) in g.iter().enumerate() {
        for &w in nbrs {
            gm[v][w] = true;
        }
    }
    // Place high-degree vertices adjacent to already placed ones first.
    let mut order = Vec::with_capacity(hn);
    let mut placed = vec![false; hn];
    let mut weight = vec![0usize; hn];
    for _ in 0..hn {
        let v = (0..hn)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (weight[v], h[v].len(), std::cmp::Reverse(v)))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &w in &h[v] {
            weight[w] += 1;
        }
    }
    let mut map = vec![usize::MAX; hn];
    let mut used = vec![false; gn];
    fn extend(
        depth: usize,
        order: &[usize],
        h: &[Vec<usize>],
        g: &[Vec<usize>],
        gm: &[Vec<bool>],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for cand in 0..g.len() {
            if used[cand] || g[cand].len() < h[v].len() {
                continue;
            }
            if h[v].iter().any(|&w| map[w] != usize::MAX && !gm[cand][map[w]]) {
                continue;
            }
            map[v] = cand;
            used[cand] = true;
            if extend(depth + 1, order, h, g, gm, map, used) {
                return true;
            }
            used[cand] = false;
            map[v] = usize::MAX;
        }
        false
    }
    extend(0, &order, h, g, &gm, &mut map, &mut used).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_bipartite, cycle, petersen, subdivided_complete, v8};

    #[test]
    fn k5_examples() {
        assert!(has_minor(&complete(5), &complete(5)));
        assert!(!has_minor(&v8(), &complete(5)));
        assert!(has_minor(&petersen(), &complete(5)));
    }

    #[test]
    fn k33_examples() {
        let k33 = complete_bipartite(3, 3);
        assert!(has_minor(&v8(), &k33));
        assert!(has_minor(&petersen(), &k33));
        assert!(!has_minor(&complete(5).without_vertex(0), &k33));
        assert!(!has_minor(&complete(5), &k33));
    }

    #[test]
    fn subdivisions_keep_minors() {
        assert!(has_minor(&subdivided_complete(5), &complete(5)));
        assert!(!has_minor(&subdivided_complete(4), &complete(5)));
    }

    #[test]
    fn disconnected_and_small_targets() {
        let two_k4 = complete(4).disjoint_union(&complete(4), 10);
        assert!(has_minor(&two_k4, &complete(4)));
        assert!(!has_minor(&two_k4, &complete(5)));
        assert!(has_minor(&cycle(7), &cycle(3)));
        assert!(!has_minor(&cycle(7), &complete(4)));
        assert!(has_minor(&Graph::empty(3), &Graph::empty(2)));
        assert!(!has_minor(&Graph::empty(1), &Graph::empty(2)));
    }

    #[test]
    fn three_sum_of_k4s_along_a_triangle() {
        // K4 ⊕ K4 glued on triangle {0,1,2}: K5 minus an edge, no K5 minor.
        let mut g = complete(4);
        for v in 0..3 {
            g.insert_edge(v, 4).unwrap();
        }
        assert!(!has_minor(&g, &complete(5)));
        g.insert_edge(3, 4).unwrap();
        assert!(has_minor(&g, &complete(5)));
    }

    #[test]
    fn monomorphism_basic() {
        let (tri, _) = cycle(3).to_adjacency();
        let (k4, _) = complete(4).to_adjacency();
        let (c4, _) = cycle(4).to_adjacency();
        assert!(find_monomorphism(&tri, &k4).is_some());
        assert!(find_monomorphism(&tri, &c4).is_none());
        assert!(find_monomorphism(&c4, &k4).is_some());
    }

    #[test]
    fn connectivity_of_targets() {
        assert_eq!(vertex_connectivity(&complete(5)), 4);
        assert_eq!(vertex_connectivity(&complete_bipartite(3, 3)), 3);
        assert_eq!(vertex_connectivity(&cycle(5)), 2);
        assert_eq!(vertex_connectivity(&Graph::empty(2)), 0);
    }
}
