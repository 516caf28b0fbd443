use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use super::{Graph, GraphError, Vertex};

/// A pair `(A, B)` covering the vertex set with no edge between `A∖B` and
/// `B∖A`, both nonempty. Its order is `|A∩B|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Separation {
    a: BTreeSet<Vertex>,
    b: BTreeSet<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeparationError {
    #[error("A ∪ B does not cover the vertex set")]
    NotCover,
    #[error("one strict side of the separation is empty")]
    EmptySide,
    #[error("edge {0}-{1} crosses the separation")]
    CrossingEdge(Vertex, Vertex),
}

impl Separation {
    /// Validates `(a, b)` against `g`.
    pub fn new(g: &Graph, a: BTreeSet<Vertex>, b: BTreeSet<Vertex>) -> Result<Self, SeparationError> {
        let sep = Separation { a, b };
        sep.check(g)?;
        Ok(sep)
    }

    pub(crate) fn new_unchecked(a: BTreeSet<Vertex>, b: BTreeSet<Vertex>) -> Self {
        Separation { a, b }
    }

    pub fn check(&self, g: &Graph) -> Result<(), SeparationError> {
        if g.vertices().any(|v| !self.a.contains(&v) && !self.b.contains(&v))
            || self.a.iter().chain(&self.b).any(|&v| !g.has_vertex(v))
        {
            return Err(SeparationError::NotCover);
        }
        let a_only = self.a_only();
        let b_only = self.b_only();
        if a_only.is_empty() || b_only.is_empty() {
            return Err(SeparationError::EmptySide);
        }
        for &u in &a_only {
            if let Some(&w) = g.neighbors(u).iter().find(|w| b_only.contains(w)) {
                return Err(SeparationError::CrossingEdge(u, w));
            }
        }
        Ok(())
    }

    pub fn a(&self) -> &BTreeSet<Vertex> {
        &self.a
    }

    pub fn b(&self) -> &BTreeSet<Vertex> {
        &self.b
    }

    /// `A ∩ B`.
    pub fn separator(&self) -> BTreeSet<Vertex> {
        self.a.intersection(&self.b).copied().collect()
    }

    /// `A ∖ B`.
    pub fn a_only(&self) -> BTreeSet<Vertex> {
        self.a.difference(&self.b).copied().collect()
    }

    /// `B ∖ A`.
    pub fn b_only(&self) -> BTreeSet<Vertex> {
        self.b.difference(&self.a).copied().collect()
    }

    pub fn order(&self) -> usize {
        self.a.intersection(&self.b).count()
    }

    pub fn swapped(&self) -> Separation {
        Separation { a: self.b.clone(), b: self.a.clone() }
    }
}

/// All `k`-subsets of `items`, in lexicographic order of positions.
pub(crate) fn combinations<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let n = items.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl Graph {
    /// Maximal connected vertex sets, sorted by their minimum vertex.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(&start) {
                continue;
            }
            let comp = self.reachable_from(start, &BTreeSet::new());
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    /// Components of `self ∖ removed`.
    pub fn components_without(&self, removed: &BTreeSet<Vertex>) -> Vec<BTreeSet<Vertex>> {
        let mut seen = removed.clone();
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(&start) {
                continue;
            }
            let comp = self.reachable_from(start, removed);
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    fn reachable_from(&self, start: Vertex, blocked: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
        let mut comp = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if !blocked.contains(&w) && comp.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        comp
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        match self.vertices().next() {
            None => true,
            Some(v) => self.reachable_from(v, &BTreeSet::new()).len() == self.vertex_count(),
        }
    }

    /// Vertices whose removal disconnects the graph.
    pub fn cut_vertices(&self) -> Result<BTreeSet<Vertex>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let (_, cuts) = self.block_decomposition();
        Ok(cuts)
    }

    /// Vertex sets of the blocks (maximal 2-connected subgraphs, bridges and
    /// isolated vertices), in discovery order.
    pub fn blocks(&self) -> Vec<BTreeSet<Vertex>> {
        self.block_decomposition().0
    }

    fn block_decomposition(&self) -> (Vec<BTreeSet<Vertex>>, BTreeSet<Vertex>) {
        let (adj, ids) = self.to_adjacency();
        let n = adj.len();
        let mut state = BlockState {
            adj: &adj,
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
            cuts: vec![false; n],
        };
        for root in 0..n {
            if state.disc[root] != usize::MAX {
                continue;
            }
            if adj[root].is_empty() {
                state.disc[root] = state.time;
                state.time += 1;
                state.blocks.push(BTreeSet::from([root]));
                continue;
            }
            let children = state.dfs(root, usize::MAX);
            state.cuts[root] = children > 1;
        }
        let blocks = state
            .blocks
            .into_iter()
            .map(|b| b.into_iter().map(|i| ids[i]).collect())
            .collect();
        let cuts = (0..n).filter(|&i| state.cuts[i]).map(|i| ids[i]).collect();
        (blocks, cuts)
    }

    /// Every separation of exactly the given order, each listed once with
    /// `A∖B` holding the smallest vertex outside the separator.
    ///
    /// Built by enumerating vertex sets `X` of size `order` and splitting the
    /// components of `self ∖ X` into two nonempty groups in every possible
    /// way, so the output is exponential in the number of components.
    pub fn separations(&self, order: usize) -> Result<Vec<Separation>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let verts: Vec<Vertex> = self.vertices().collect();
        let mut out = Vec::new();
        for x in combinations(&verts, order) {
            let x: BTreeSet<Vertex> = x.into_iter().collect();
            let comps = self.components_without(&x);
            if comps.len() < 2 {
                continue;
            }
            let rest = comps.len() - 1;
            for mask in 0..(1u64 << rest) - 1 {
                let mut a = x.clone();
                let mut b = x.clone();
                a.extend(comps[0].iter().copied());
                for (i, comp) in comps[1..].iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        a.extend(comp.iter().copied());
                    } else {
                        b.extend(comp.iter().copied());
                    }
                }
                out.push(Separation::new_unchecked(a, b));
            }
        }
        Ok(out)
    }

    /// Pairs `{x, y}` whose removal leaves a component `C` with `|C| ≥ 2` and
    /// at least two vertices outside `C ∪ {x, y}`: the witnesses that a
    /// 2-connected graph is not internally 3-connected.
    pub fn nontrivial_two_cuts(&self) -> Vec<(Vertex, Vertex, Vec<BTreeSet<Vertex>>)> {
        let verts: Vec<Vertex> = self.vertices().collect();
        let n = verts.len();
        let mut out = Vec::new();
        for pair in combinations(&verts, 2) {
            let x = BTreeSet::from([pair[0], pair[1]]);
            let comps = self.components_without(&x);
            if comps.len() >= 2 && comps.iter().any(|c| c.len() >= 2 && n - 2 - c.len() >= 2) {
                out.push((pair[0], pair[1], comps));
            }
        }
        out
    }

    /// 2-connected with more than 3 vertices and every order-2 separation
    /// having a single-vertex side.
    pub fn is_internally_3_connected(&self) -> bool {
        self.vertex_count() > 3
            && self.is_connected()
            && self.cut_vertices().map(|c| c.is_empty()).unwrap_or(false)
            && self.nontrivial_two_cuts().is_empty()
    }

    /// No vertex set of size ≤ 2 disconnects the graph, and `|V| ≥ 4`.
    pub fn is_3_connected(&self) -> bool {
        if self.vertex_count() < 4 || !self.is_connected() {
            return false;
        }
        let verts: Vec<Vertex> = self.vertices().collect();
        for k in 1..=2 {
            for x in combinations(&verts, k) {
                let x: BTreeSet<Vertex> = x.into_iter().collect();
                if self.components_without(&x).len() > 1 {
                    return false;
                }
            }
        }
        true
    }
}

struct BlockState<'a> {
    adj: &'a [Vec<usize>],
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<BTreeSet<usize>>,
    cuts: Vec<bool>,
}

impl BlockState<'_> {
    /// Tarjan's biconnected components; returns the number of DFS children.
    fn dfs(&mut self, v: usize, parent: usize) -> usize {
        self.disc[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        let mut children = 0;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            if self.disc[w] == usize::MAX {
                children += 1;
                self.stack.push((v, w));
                self.dfs(w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent != usize::MAX {
                        self.cuts[v] = true;
                    }
                    let mut block = BTreeSet::new();
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[v] {
                self.stack.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
        children
    }
}
