//! Simple undirected graphs with stable vertex identifiers.
//!
//! A [`Graph`] never holds loops or parallel edges. Vertex identifiers are
//! plain `usize` values that survive every surgery operation: induced
//! subgraphs keep the identifiers of the surviving vertices and edge
//! contraction keeps the smaller of the two merged identifiers.

mod connectivity;
mod iso;
mod suppress;

pub(crate) use connectivity::combinations;
pub use connectivity::{Separation, SeparationError};
pub use iso::is_isomorphic;
pub use suppress::{suppress_degree_two, SuppressionMap};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Vertex identifier.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    Loop(Vertex),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is a cycle; degree-2 suppression is undefined")]
    CycleInput,
    #[error("graph has a vertex of degree {degree} at {vertex}; minimum degree 2 required")]
    LowDegree { vertex: Vertex, degree: usize },
}

/// A simple undirected graph.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Edgeless graph on `0..n`.
    pub fn empty(n: usize) -> Self {
        let mut g = Self::new();
        for v in 0..n {
            g.add_vertex(v);
        }
        g
    }

    /// Graph on `0..n` with the given edges.
    ///
    /// Panics on loops or endpoints outside `0..n`; use [`Graph::try_from_edges`]
    /// for untrusted input.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        Self::try_from_edges(n, edges.iter().copied()).expect("invalid edge list")
    }

    pub fn try_from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::UnknownVertex(w));
                }
            }
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Vertex) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, BTreeSet::new());
        true
    }

    /// Inserts `uv`, adding missing endpoints. Returns whether the edge is new.
    pub fn insert_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.add_vertex(u);
        self.add_vertex(v);
        let fresh = self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        let removed = self.adj.get_mut(&u).is_some_and(|n| n.remove(&v));
        if removed {
            self.adj.get_mut(&v).unwrap().remove(&u);
        }
        removed
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> bool {
        let Some(nbrs) = self.adj.remove(&v) else {
            return false;
        };
        for u in nbrs {
            self.adj.get_mut(&u).unwrap().remove(&v);
        }
        true
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Neighbors of `v` in ascending order. Panics if `v` is absent.
    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        match self.adj.get(&v) {
            Some(n) => n,
            None => panic!("vertex {v} is not in the graph"),
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.adj.keys().copied().collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, n)| n.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).min().unwrap_or(0)
    }

    /// Degrees sorted in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.values().map(BTreeSet::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Smallest vertex of minimum degree.
    pub fn min_degree_vertex(&self) -> Option<Vertex> {
        self.adj
            .iter()
            .min_by_key(|(&v, n)| (n.len(), v))
            .map(|(&v, _)| v)
    }

    /// Subgraph induced by `keep` (vertices outside the graph are ignored).
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, n)| (v, n.intersection(keep).copied().collect()))
            .collect();
        Graph { adj }
    }

    /// `self` with the given vertices deleted.
    pub fn without(&self, removed: &BTreeSet<Vertex>) -> Graph {
        let keep: BTreeSet<Vertex> = self.vertices().filter(|v| !removed.contains(v)).collect();
        self.induced(&keep)
    }

    pub fn without_vertex(&self, v: Vertex) -> Graph {
        let mut g = self.clone();
        g.remove_vertex(v);
        g
    }

    /// `self + uv`; idempotent when `uv` is already present.
    pub fn add_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        if u == v {
            return Err(GraphError::Loop(u));
        }
        for w in [u, v] {
            if !self.has_vertex(w) {
                return Err(GraphError::UnknownVertex(w));
            }
        }
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Simple-graph contraction `self / uv`. The merged vertex keeps
    /// `min(u, v)`; loops and duplicate edges disappear.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let mut g = self.clone();
        let moved: Vec<Vertex> = g.neighbors(gone).iter().copied().collect();
        g.remove_vertex(gone);
        for w in moved {
            if w != keep {
                g.insert_edge(keep, w)?;
            }
        }
        Ok(g)
    }

    /// Identifies `u` and `v` whether or not they are adjacent; equivalent to
    /// `(self + uv) / uv`.
    pub fn identify(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        self.add_edge(u, v)?.contract_edge(u, v)
    }

    /// Relabels vertices to `0..n` in ascending order. Returns the new graph
    /// and the original identifier of every new vertex.
    pub fn relabel_dense(&self) -> (Graph, Vec<Vertex>) {
        let order: Vec<Vertex> = self.vertices().collect();
        let index: BTreeMap<Vertex, Vertex> =
            order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Graph::empty(order.len());
        for (u, v) in self.edges() {
            g.insert_edge(index[&u], index[&v]).unwrap();
        }
        (g, order)
    }

    /// Dense adjacency lists over `0..n` (vertices in ascending order) plus
    /// the original identifiers.
    pub fn to_adjacency(&self) -> (Vec<Vec<usize>>, Vec<Vertex>) {
        let order: Vec<Vertex> = self.vertices().collect();
        let index: BTreeMap<Vertex, usize> =
            order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = order
            .iter()
            .map(|v| self.neighbors(*v).iter().map(|w| index[w]).collect())
            .collect();
        (adj, order)
    }

    /// Disjoint union; the vertices of `other` are shifted by `offset`.
    pub fn disjoint_union(&self, other: &Graph, offset: Vertex) -> Graph {
        let mut g = self.clone();
        for v in other.vertices() {
            assert!(g.add_vertex(v + offset), "vertex {} collides", v + offset);
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + offset, v + offset).unwrap();
        }
        g
    }

    /// Connected with every vertex of degree 2 (and at least 3 vertices).
    pub fn is_cycle(&self) -> bool {
        self.vertex_count() >= 3 && self.adj.values().all(|n| n.len() == 2) && self.is_connected()
    }

    /// Isomorphic to the 5-cycle.
    pub fn is_c5(&self) -> bool {
        self.vertex_count() == 5 && self.is_cycle()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}; ", self.vertex_count())?;
        let isolated: Vec<Vertex> = self
            .adj
            .iter()
            .filter(|(_, n)| n.is_empty())
            .map(|(&v, _)| v)
            .collect();
        if !isolated.is_empty() {
            write!(f, "isolated {isolated:?}; ")?;
        }
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "{})", edges.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)])
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn contract_triangle_edge_gives_k2() {
        let g = triangle().contract_edge(1, 2).unwrap();
        assert_eq!(g, Graph::from_edges(2, &[(0, 1)]));
    }

    #[test]
    fn contract_c5_edge_gives_c4() {
        let g = cycle(5).contract_edge(3, 4).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert!(g.is_cycle());
        assert!(g.has_edge(3, 0));
    }

    #[test]
    fn contract_k4_edge_gives_triangle() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let g = k4.contract_edge(2, 3).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn contract_non_edge_is_rejected() {
        assert_eq!(
            cycle(4).contract_edge(0, 2),
            Err(GraphError::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn add_edge_cases() {
        let t = triangle();
        assert_eq!(t.add_edge(0, 1).unwrap(), t);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(p3.add_edge(0, 2).unwrap(), t);
        let k4_minus = cycle(4).add_edge(0, 2).unwrap();
        assert_eq!(k4_minus.edge_count(), 5);
        assert_eq!(k4_minus.degree_sequence(), vec![3, 3, 2, 2]);
        assert_eq!(t.add_edge(1, 1), Err(GraphError::Loop(1)));
        assert_eq!(t.add_edge(1, 7), Err(GraphError::UnknownVertex(7)));
    }

    #[test]
    fn identify_non_adjacent_pair() {
        let g = cycle(4).identify(0, 2).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3)]);
    }

    #[test]
    fn loops_rejected_on_construction() {
        assert_eq!(Graph::try_from_edges(2, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::try_from_edges(2, [(0, 2)]),
            Err(GraphError::UnknownVertex(2))
        );
    }

    #[test]
    fn relabel_dense_keeps_structure() {
        let mut g = Graph::new();
        g.insert_edge(10, 4).unwrap();
        g.insert_edge(4, 7).unwrap();
        let (d, order) = g.relabel_dense();
        assert_eq!(order, vec![4, 7, 10]);
        assert_eq!(d.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn c5_detection() {
        assert!(cycle(5).is_c5());
        assert!(!cycle(6).is_c5());
        assert!(!cycle(5).add_edge(0, 2).unwrap().is_c5());
    }
}
