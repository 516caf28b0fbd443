use crate::generate::{complete, complete_bipartite};
use crate::graph::Graph;

/// Whether some subgraph of `g` is a subdivision of `h`.
///
/// Branch vertices of `h` are placed one at a time on distinct vertices of
/// `g` with large enough degree; as soon as both ends of an edge of `h` are
/// placed, the edge is routed as a path through vertices not yet used by
/// any branch vertex or earlier path. Exhaustive, so only for small `h`.
pub fn has_topological_minor(g: &Graph, h: &Graph) -> bool {
    if h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count() {
        return false;
    }
    let hd = h.degree_sequence();
    let gd = g.degree_sequence();
    if hd.iter().zip(&gd).any(|(a, b)| a > b) {
        return false;
    }
    let (gadj, _) = g.to_adjacency();
    let (hadj, _) = h.to_adjacency();
    let order = placement_order(&hadj);
    let mut rank = vec![0; hadj.len()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    // Edges to route right after placing each vertex: those to earlier ones.
    let pending: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| hadj[v].iter().copied().filter(|&w| rank[w] < rank[v]).collect())
        .collect();
    let mut search = TopoSearch {
        g: &gadj,
        h: &hadj,
        order: &order,
        pending: &pending,
        map: vec![usize::MAX; hadj.len()],
        occupied: vec![false; gadj.len()],
        routed: vec![vec![false; hadj.len()]; hadj.len()],
    };
    search.place(0)
}

/// Planarity decided by Kuratowski's theorem: no subdivision of K5 or K3,3.
pub fn is_planar_kuratowski(g: &Graph) -> bool {
    !has_topological_minor(g, &complete(5)) && !has_topological_minor(g, &complete_bipartite(3, 3))
}

fn placement_order(adj: &[Vec<usize>]) -> Vec<usize> {
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

struct TopoSearch<'a> {
    g: &'a [Vec<usize>],
    h: &'a [Vec<usize>],
    order: &'a [usize],
    pending: &'a [Vec<usize>],
    map: Vec<usize>,
    occupied: Vec<bool>,
    routed: Vec<Vec<bool>>,
}

impl TopoSearch<'_> {
    fn place(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for cand in 0..self.g.len() {
            if self.occupied[cand] || self.g[cand].len() < self.h[v].len() {
                continue;
            }
            self.map[v] = cand;
            self.occupied[cand] = true;
            if self.feasible() && self.route(depth, 0) {
                return true;
            }
            self.occupied[cand] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    /// Routes the `i`-th pending edge of the vertex placed at `depth`.
    fn route(&mut self, depth: usize, i: usize) -> bool {
        let v = self.order[depth];
        if i == self.pending[depth].len() {
            return self.place(depth + 1);
        }
        let w = self.pending[depth][i];
        let (from, to) = (self.map[v], self.map[w]);
        let mut path = vec![from];
        self.extend_path(depth, i, v, w, to, &mut path)
    }

    fn extend_path(
        &mut self,
        depth: usize,
        i: usize,
        v: usize,
        w: usize,
        to: usize,
        path: &mut Vec<usize>,
    ) -> bool {
        let last = *path.last().unwrap();
        for k in 0..self.g[last].len() {
            let next = self.g[last][k];
            if next == to {
                self.routed[v][w] = true;
                self.routed[w][v] = true;
                let ok = self.feasible() && self.route(depth, i + 1);
                self.routed[v][w] = false;
                self.routed[w][v] = false;
                if ok {
                    return true;
                }
                continue;
            }
            if self.occupied[next] {
                continue;
            }
            self.occupied[next] = true;
            path.push(next);
            let ok = self.extend_path(depth, i, v, w, to, path);
            path.pop();
            self.occupied[next] = false;
            if ok {
                return true;
            }
        }
        false
    }

    /// Every placed branch vertex still has enough free incident edges for
    /// its unrouted edges.
    fn feasible(&self) -> bool {
        for x in 0..self.h.len() {
            let img = self.map[x];
            if img == usize::MAX {
                continue;
            }
            let remaining = self.h[x].iter().filter(|&&y| !self.routed[x][y]).count();
            if remaining == 0 {
                continue;
            }
            let free = self.g[img].iter().filter(|&&u| !self.occupied[u]).count();
            let direct = self.h[x]
                .iter()
                .filter(|&&y| {
                    !self.routed[x][y] && self.map[y] != usize::MAX && self.g[img].contains(&self.map[y])
                })
                .count();
            if free + direct < remaining {
                return false;
            }
        }
        true
    }
}
