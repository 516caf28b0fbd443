use super::Graph;

/// Whether an edge-preserving bijection `V(g) → V(h)` exists.
///
/// Backtracking over vertices of `g` in a connectivity-first order, with
/// candidates restricted to vertices of `h` having the same degree and the
/// same multiset of neighbor degrees. Intended for small graphs.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return false;
    }
    let (ga, _) = g.to_adjacency();
    let (ha, _) = h.to_adjacency();
    let gs = signatures(&ga);
    let hs = signatures(&ha);
    let mut sorted_g = gs.clone();
    let mut sorted_h = hs.clone();
    sorted_g.sort();
    sorted_h.sort();
    if sorted_g != sorted_h {
        return false;
    }
    let n = ga.len();
    let gm = matrix(&ga);
    let hm = matrix(&ha);
    let order = search_order(&ga);
    let mut state = IsoState {
        gm: &gm,
        hm: &hm,
        gs: &gs,
        hs: &hs,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    state.extend(0)
}

fn signatures(adj: &[Vec<usize>]) -> Vec<(usize, Vec<usize>)> {
    adj.iter()
        .map(|nbrs| {
            let mut d: Vec<usize> = nbrs.iter().map(|&w| adj[w].len()).collect();
            d.sort_unstable();
            (nbrs.len(), d)
        })
        .collect()
}

fn matrix(adj: &[Vec<usize>]) -> Vec<Vec<bool>> {
    let n = adj.len();
    let mut m = vec![vec![false; n]; n];
    for (v, nbrs) in adj.iter().enumerate() {
        for &w in nbrs {
            m[v][w] = true;
        }
    }
    m
}

/// Repeatedly picks the unplaced vertex with the most placed neighbors,
/// breaking ties by degree, so that adjacency constraints bite early.
fn search_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (weight[v], adj[v].len(), std::cmp::Reverse(v)))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &w in &adj[v] {
            weight[w] += 1;
        }
    }
    order
}

struct IsoState<'a> {
    gm: &'a [Vec<bool>],
    hm: &'a [Vec<bool>],
    gs: &'a [(usize, Vec<usize>)],
    hs: &'a [(usize, Vec<usize>)],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl IsoState<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for cand in 0..self.hm.len() {
            if self.used[cand] || self.gs[v] != self.hs[cand] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.gm[v][u] == self.hm[cand][self.map[u]]);
            if !consistent {
                continue;
            }
            self.map[v] = cand;
            self.used[cand] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[cand] = false;
            self.map[v] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    fn v8_from(chord_shift: usize) -> Graph {
        let mut edges: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        for i in 0..4 {
            edges.push(((i + chord_shift) % 8, (i + chord_shift + 4) % 8));
        }
        Graph::from_edges(8, &edges)
    }

    #[test]
    fn permuted_c5() {
        let perm = [3, 0, 4, 1, 2];
        let edges: Vec<_> = (0..5).map(|i| (perm[i], perm[(i + 1) % 5])).collect();
        assert!(is_isomorphic(&cycle(5), &Graph::from_edges(5, &edges)));
    }

    #[test]
    fn c5_vs_p5() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert!(!is_isomorphic(&cycle(5), &p5));
    }

    #[test]
    fn v8_shifted_diameters() {
        // Shifting every chord by one rotation yields the same edge set up to
        // the rotation bijection i -> i + 1.
        assert!(is_isomorphic(&v8_from(0), &v8_from(1)));
    }

    #[test]
    fn v8_vs_cube() {
        // Both cubic on 8 vertices; the cube is bipartite, V8 is not.
        let cube = Graph::from_edges(
            8,
            &[
                (0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
                (0, 4), (1, 5), (2, 6), (3, 7),
            ],
        );
        assert!(!is_isomorphic(&v8_from(0), &cube));
    }

    #[test]
    fn equal_degree_sequences_distinguished() {
        // C6 vs two disjoint triangles.
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!is_isomorphic(&cycle(6), &two_triangles));
    }
}
