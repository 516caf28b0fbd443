use std::time::{Duration, Instant};

use thiserror::Error;

use super::Coloring;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("exact search exceeded its time limit of {0:?}")]
pub struct Timeout(pub Duration);

/// Backtracking search for (dynamic) colorings.
///
/// Vertices are taken in descending degree order, ties by identifier, and
/// colors are tried in ascending order. A color is rejected when it clashes
/// with a neighbor, or when it would complete a neighborhood of size at
/// least two in a single color. After each assignment every uncolored vertex
/// within distance two is checked for a remaining admissible color. Colors
/// absent from the precoloring are interchangeable, so a new one is only
/// ever opened in ascending order.
#[derive(Debug, Clone)]
pub struct ExactSolver {
    k: usize,
    happiness: bool,
    limit: Option<Duration>,
}

impl ExactSolver {
    pub fn new(k: usize) -> Self {
        ExactSolver { k, happiness: true, limit: None }
    }

    /// Ordinary proper colorings: happiness is not required.
    pub fn proper_only(mut self) -> Self {
        self.happiness = false;
        self
    }

    pub fn time_limit(mut self, limit: Duration) -> Self {
        self.limit = Some(limit);
        self
    }

    /// A total coloring of `g` extending `pre`, or `None` if there is none.
    /// Entries of `pre` for vertices outside `g` are ignored.
    pub fn solve(&self, g: &Graph, pre: &Coloring) -> Result<Option<Coloring>, Timeout> {
        let (adj, ids) = g.to_adjacency();
        let n = adj.len();
        let mut color = vec![0usize; n];
        let mut pre_used = vec![false; self.k + 1];
        for (i, &v) in ids.iter().enumerate() {
            if let Some(c) = pre.get(v) {
                if c > self.k {
                    return Ok(None);
                }
                color[i] = c;
                pre_used[c] = true;
            }
        }
        let mut order: Vec<usize> = (0..n).filter(|&i| color[i] == 0).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(adj[i].len()), i));
        let fresh: Vec<usize> = (1..=self.k).filter(|&c| !pre_used[c]).collect();
        let mut search = Search {
            adj: &adj,
            k: self.k,
            happiness: self.happiness,
            color,
            order,
            fresh,
            fresh_open: 0,
            deadline: self.limit.map(|l| (Instant::now() + l, l)),
            nodes: 0,
        };
        if !search.consistent() {
            return Ok(None);
        }
        if !search.extend(0)? {
            return Ok(None);
        }
        let mut out = Coloring::new(self.k);
        for (i, &v) in ids.iter().enumerate() {
            out.set(v, search.color[i]).expect("solver colors lie in 1..=k");
        }
        Ok(Some(out))
    }
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    k: usize,
    happiness: bool,
    color: Vec<usize>,
    order: Vec<usize>,
    fresh: Vec<usize>,
    fresh_open: usize,
    deadline: Option<(Instant, Duration)>,
    nodes: u64,
}

impl Search<'_> {
    /// The precoloring alone violates nothing and leaves every vertex a
    /// candidate color.
    fn consistent(&self) -> bool {
        let n = self.adj.len();
        for v in 0..n {
            if self.happiness && self.monochromatic(v) {
                return false;
            }
            if self.color[v] == 0 {
                if !(1..=self.k).any(|c| self.admissible(v, c)) {
                    return false;
                }
            } else if self.adj[v].iter().any(|&w| self.color[w] == self.color[v]) {
                return false;
            }
        }
        true
    }

    /// A fully colored neighborhood of size at least two in one color.
    fn monochromatic(&self, v: usize) -> bool {
        let nb = &self.adj[v];
        if nb.len() < 2 {
            return false;
        }
        let first = self.color[nb[0]];
        first != 0 && nb.iter().all(|&w| self.color[w] == first)
    }

    /// Whether uncolored `u` may take color `c` right now.
    fn admissible(&self, u: usize, c: usize) -> bool {
        if self.adj[u].iter().any(|&w| self.color[w] == c) {
            return false;
        }
        if !self.happiness {
            return true;
        }
        // `u` may not be the last neighbor of some w to receive w's only color.
        self.adj[u].iter().all(|&w| {
            let nb = &self.adj[w];
            if nb.len() < 2 {
                return true;
            }
            let mut only = None;
            for &x in nb {
                if x == u {
                    continue;
                }
                match (self.color[x], only) {
                    (0, _) => return true,
                    (col, None) => only = Some(col),
                    (col, Some(o)) if col != o => return true,
                    _ => {}
                }
            }
            only != Some(c)
        })
    }

    /// Every uncolored vertex near `v` still has an admissible color.
    fn no_wipeout(&self, v: usize) -> bool {
        let check = |u: usize| self.color[u] != 0 || (1..=self.k).any(|c| self.admissible(u, c));
        for &w in &self.adj[v] {
            if !check(w) {
                return false;
            }
            if self.happiness && !self.adj[w].iter().all(|&x| check(x)) {
                return false;
            }
        }
        true
    }

    fn extend(&mut self, depth: usize) -> Result<bool, Timeout> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes % 4096 == 0 {
            if let Some((end, limit)) = self.deadline {
                if Instant::now() > end {
                    return Err(Timeout(limit));
                }
            }
        }
        let v = self.order[depth];
        let open = self.fresh_open;
        for c in 1..=self.k {
            let fresh_rank = self.fresh.iter().position(|&f| f == c);
            if let Some(r) = fresh_rank {
                if r > open {
                    continue;
                }
            }
            if !self.admissible(v, c) {
                continue;
            }
            self.color[v] = c;
            if fresh_rank == Some(open) {
                self.fresh_open = open + 1;
            }
            if self.no_wipeout(v) && self.extend(depth + 1)? {
                return Ok(true);
            }
            self.fresh_open = open;
            self.color[v] = 0;
        }
        Ok(false)
    }
}

/// A dynamic `k`-coloring of `g` extending `pre`, if one exists.
pub fn solve_exact(g: &Graph, k: usize, pre: &Coloring) -> Option<Coloring> {
    ExactSolver::new(k).solve(g, pre).expect("no time limit set")
}

pub fn solve_exact_within(
    g: &Graph,
    k: usize,
    pre: &Coloring,
    limit: Duration,
) -> Result<Option<Coloring>, Timeout> {
    ExactSolver::new(k).time_limit(limit).solve(g, pre)
}

/// Size of a clique found greedily from each vertex in turn.
fn greedy_clique(g: &Graph) -> usize {
    let mut best = 0;
    for v in g.vertices() {
        let mut clique = vec![v];
        let mut cands: Vec<_> = g.neighbors(v).iter().copied().collect();
        cands.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
        for w in cands {
            if clique.iter().all(|&u| g.has_edge(u, w)) {
                clique.push(w);
            }
        }
        best = best.max(clique.len());
    }
    best
}

fn smallest_k(g: &Graph, solver: impl Fn(usize) -> ExactSolver) -> usize {
    let mut k = greedy_clique(g).max(1);
    loop {
        if solver(k).solve(g, &Coloring::new(k)).expect("no time limit set").is_some() {
            return k;
        }
        k += 1;
    }
}

/// The dynamic chromatic number.
pub fn chi_d(g: &Graph) -> usize {
    smallest_k(g, ExactSolver::new)
}

/// The dynamic chromatic number with a witness, each solver call bounded by
/// `limit`.
pub fn chi_d_within(g: &Graph, limit: Duration) -> Result<(usize, Coloring), Timeout> {
    let mut k = greedy_clique(g).max(1);
    loop {
        if let Some(c) = solve_exact_within(g, k, &Coloring::new(k), limit)? {
            return Ok((k, c));
        }
        k += 1;
    }
}

/// The ordinary chromatic number.
pub fn chi(g: &Graph) -> usize {
    smallest_k(g, |k| ExactSolver::new(k).proper_only())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamic::verify_dynamic;
    use crate::generate::{complete, cycle, path, subdivided_complete, v8};

    #[test]
    fn c5_needs_five_colors() {
        let c5 = cycle(5);
        assert_eq!(solve_exact(&c5, 4, &Coloring::new(4)), None);
        let c = solve_exact(&c5, 5, &Coloring::new(5)).unwrap();
        assert!(verify_dynamic(&c5, &c).ok);
        assert_eq!(chi_d(&c5), 5);
        assert_eq!(chi(&c5), 3);
    }

    #[test]
    fn precoloring_is_respected() {
        let k2 = path(2);
        let pre = Coloring::from_pairs(2, [(0, 1)]).unwrap();
        let c = solve_exact(&k2, 2, &pre).unwrap();
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        let pre = Coloring::from_pairs(4, [(3, 4), (0, 4)]).unwrap();
        let c = solve_exact(&v8(), 4, &pre).unwrap();
        assert_eq!((c.get(0), c.get(3)), (Some(4), Some(4)));
        assert!(verify_dynamic(&v8(), &c).ok);
    }

    #[test]
    fn inconsistent_precoloring_has_no_extension() {
        let pre = Coloring::from_pairs(3, [(0, 1), (1, 1)]).unwrap();
        assert_eq!(solve_exact(&path(3), 3, &pre), None);
        // Both neighbors of the middle vertex forced equal.
        let pre = Coloring::from_pairs(3, [(0, 2), (2, 2)]).unwrap();
        assert_eq!(solve_exact(&path(3), 3, &pre), None);
    }

    #[test]
    fn small_values() {
        assert_eq!(chi_d(&cycle(4)), 4);
        assert_eq!(chi_d(&cycle(6)), 3);
        assert_eq!(chi_d(&subdivided_complete(4)), 4);
        assert_eq!(chi(&complete(4)), 4);
        assert_eq!(chi_d(&Graph::empty(3)), 1);
        assert_eq!(chi_d(&path(2)), 2);
        assert_eq!(chi_d(&path(3)), 3);
    }

    #[test]
    fn time_limit_is_reported() {
        let r = ExactSolver::new(3)
            .time_limit(Duration::ZERO)
            .solve(&subdivided_complete(6), &Coloring::new(3));
        // Either finishes before the first check or reports the limit.
        assert!(matches!(r, Ok(None) | Err(Timeout(_))));
    }
}
