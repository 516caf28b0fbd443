//! Colorings, happiness, and the dynamic-coloring verifier.

mod exact;

pub use exact::{chi, chi_d, chi_d_within, solve_exact, solve_exact_within, ExactSolver, Timeout};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("color {color} of vertex {vertex} is outside 1..={k}")]
    OutOfRange { vertex: Vertex, color: usize, k: usize },
    #[error("vertex {neighbor}, a neighbor of {vertex}, is uncolored")]
    UncoloredNeighbor { vertex: Vertex, neighbor: Vertex },
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
}

/// A partial or total map from vertices to colors in `1..=k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Coloring {
    k: usize,
    colors: BTreeMap<Vertex, usize>,
}

impl Coloring {
    pub fn new(k: usize) -> Self {
        Coloring { k, colors: BTreeMap::new() }
    }

    pub fn from_pairs(k: usize, pairs: impl IntoIterator<Item = (Vertex, usize)>) -> Result<Self, ColoringError> {
        let mut c = Coloring::new(k);
        for (v, col) in pairs {
            c.set(v, col)?;
        }
        Ok(c)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Raises or lowers the palette size; colors already used must fit.
    pub fn with_k(mut self, k: usize) -> Result<Self, ColoringError> {
        if let Some((&vertex, &color)) = self.colors.iter().find(|(_, &c)| c > k) {
            return Err(ColoringError::OutOfRange { vertex, color, k });
        }
        self.k = k;
        Ok(self)
    }

    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.colors.get(&v).copied()
    }

    pub fn set(&mut self, v: Vertex, color: usize) -> Result<(), ColoringError> {
        if color == 0 || color > self.k {
            return Err(ColoringError::OutOfRange { vertex: v, color, k: self.k });
        }
        self.colors.insert(v, color);
        Ok(())
    }

    pub fn unset(&mut self, v: Vertex) -> Option<usize> {
        self.colors.remove(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.colors.iter().map(|(&v, &c)| (v, c))
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn is_total(&self, g: &Graph) -> bool {
        g.vertices().all(|v| self.colors.contains_key(&v))
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        self.colors.values().collect::<BTreeSet<_>>().len()
    }

    pub fn max_color(&self) -> usize {
        self.colors.values().copied().max().unwrap_or(0)
    }

    /// Applies `perm` (indexed by old color, `perm[0]` unused) to every color.
    pub fn permuted(&self, perm: &[usize]) -> Coloring {
        Coloring {
            k: self.k,
            colors: self.colors.iter().map(|(&v, &c)| (v, perm[c])).collect(),
        }
    }

    pub fn restricted(&self, keep: &BTreeSet<Vertex>) -> Coloring {
        Coloring {
            k: self.k,
            colors: self.colors.iter().filter(|(v, _)| keep.contains(v)).map(|(&v, &c)| (v, c)).collect(),
        }
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring(k={}) ", self.k)?;
        f.debug_map().entries(self.colors.iter()).finish()
    }
}

/// Colors every component of `g` separately and merges the results; the
/// palette is the largest one used by any component.
pub fn color_components<E>(
    g: &Graph,
    mut color: impl FnMut(&Graph) -> Result<Coloring, E>,
) -> Result<Coloring, E> {
    let mut parts = Vec::new();
    for comp in g.components() {
        parts.push(color(&g.induced(&comp))?);
    }
    let k = parts.iter().map(Coloring::k).max().unwrap_or(1);
    let mut out = Coloring::new(k);
    for part in &parts {
        out.colors.extend(part.colors.iter().map(|(&v, &c)| (v, c)));
    }
    Ok(out)
}

/// Verdict of [`verify_dynamic`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HappyReport {
    /// Edges whose ends share a color.
    pub proper_violations: Vec<(Vertex, Vertex)>,
    /// Fully surrounded vertices with at least two neighbors, all one color.
    pub unhappy: Vec<Vertex>,
    pub uncolored: Vec<Vertex>,
    /// Colored vertices that are not in the graph, or colors outside `1..=k`.
    pub stray: Vec<Vertex>,
    pub ok: bool,
}

/// Whether `v` has at most one neighbor or two neighbors of distinct colors.
pub fn is_happy(g: &Graph, c: &Coloring, v: Vertex) -> Result<bool, ColoringError> {
    if !g.has_vertex(v) {
        return Err(ColoringError::UnknownVertex(v));
    }
    let nbrs = g.neighbors(v);
    let mut seen = None;
    let mut distinct = false;
    for &w in nbrs {
        let col = c.get(w).ok_or(ColoringError::UncoloredNeighbor { vertex: v, neighbor: w })?;
        match seen {
            None => seen = Some(col),
            Some(s) if s != col => distinct = true,
            _ => {}
        }
    }
    Ok(nbrs.len() <= 1 || distinct)
}

/// Checks that `c` is a total, proper coloring of `g` in which every vertex
/// is happy.
pub fn verify_dynamic(g: &Graph, c: &Coloring) -> HappyReport {
    let mut report = HappyReport::default();
    for (v, col) in c.iter() {
        if !g.has_vertex(v) || col == 0 || col > c.k() {
            report.stray.push(v);
        }
    }
    for v in g.vertices() {
        if c.get(v).is_none() {
            report.uncolored.push(v);
        }
    }
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (c.get(u), c.get(v)) {
            if a == b {
                report.proper_violations.push((u, v));
            }
        }
    }
    for v in g.vertices() {
        if let Ok(false) = is_happy(g, c, v) {
            report.unhappy.push(v);
        }
    }
    report.ok = report.proper_violations.is_empty()
        && report.unhappy.is_empty()
        && report.uncolored.is_empty()
        && report.stray.is_empty();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, path};

    fn c5_table() -> Coloring {
        Coloring::from_pairs(4, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 2)]).unwrap()
    }

    #[test]
    fn components_are_merged() {
        let g = cycle(5).disjoint_union(&path(2), 10);
        let c = color_components(&g, |h| Ok::<_, ()>(chi_d_within(h, std::time::Duration::from_secs(5)).unwrap().1))
            .unwrap();
        assert_eq!(c.k(), 5);
        assert!(verify_dynamic(&g, &c).ok);
    }

    #[test]
    fn happiness_examples() {
        let g = Graph::empty(1);
        assert!(is_happy(&g, &Coloring::from_pairs(1, [(0, 1)]).unwrap(), 0).unwrap());

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let c = Coloring::from_pairs(2, [(0, 1), (1, 2), (2, 2), (3, 2)]).unwrap();
        assert!(!is_happy(&star, &c, 0).unwrap());

        let c5 = cycle(5);
        assert!(!is_happy(&c5, &c5_table(), 0).unwrap());
        assert!(is_happy(&c5, &c5_table(), 2).unwrap());
    }

    #[test]
    fn uncolored_neighbor_is_an_error() {
        let g = path(3);
        let c = Coloring::from_pairs(3, [(1, 1), (0, 2)]).unwrap();
        assert_eq!(
            is_happy(&g, &c, 1),
            Err(ColoringError::UncoloredNeighbor { vertex: 1, neighbor: 2 })
        );
    }

    #[test]
    fn verifier_examples() {
        let k2 = path(2);
        assert!(verify_dynamic(&k2, &Coloring::from_pairs(2, [(0, 1), (1, 2)]).unwrap()).ok);

        let c6 = cycle(6);
        let c = Coloring::from_pairs(3, (0..6).map(|i| (i, i % 3 + 1))).unwrap();
        assert!(verify_dynamic(&c6, &c).ok);

        let r = verify_dynamic(&cycle(5), &c5_table());
        assert!(!r.ok);
        assert_eq!(r.unhappy, vec![0]);
        assert!(r.proper_violations.is_empty());
    }

    #[test]
    fn verifier_reports_each_problem() {
        let g = path(3);
        let c = Coloring::from_pairs(2, [(0, 1), (1, 1), (7, 2)]).unwrap();
        let r = verify_dynamic(&g, &c);
        assert_eq!(r.proper_violations, vec![(0, 1)]);
        assert_eq!(r.uncolored, vec![2]);
        assert_eq!(r.stray, vec![7]);
        assert!(!r.ok);
    }

    #[test]
    fn out_of_range_colors_rejected() {
        let mut c = Coloring::new(3);
        assert!(c.set(0, 4).is_err());
        assert!(c.set(0, 0).is_err());
        c.set(0, 3).unwrap();
        assert!(c.clone().with_k(2).is_err());
        assert_eq!(c.with_k(5).unwrap().k(), 5);
    }
}
