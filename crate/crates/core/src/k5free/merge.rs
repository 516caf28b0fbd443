//! Separation choice, side conditions, fallback colorings of C5 and the
//! color-permutation merge.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::dynamic::{verify_dynamic, Coloring};
use crate::graph::{Graph, Separation, Vertex};
use crate::minor::is_planar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not applicable: {0}")]
pub struct NotApplicable(pub String);

fn not_applicable(msg: impl Into<String>) -> NotApplicable {
    NotApplicable(msg.into())
}

/// Fixed colorings of C5 used when an auxiliary graph is a 5-cycle, as
/// colors along the cycle starting at the attachment vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum C5Table {
    /// `v, a, b, c, d`: the cut vertex `v` is the only unhappy vertex.
    Order1,
    /// `x, a, b, c, y` around `G[B] + xy`.
    Order2Case1,
    /// `x=y, a, b, c, d` around `(G[B] + xy) / xy`.
    Order2Case2,
    /// `x=y, a, b, c, z` around `(G[B] + xy + yz) / xy`.
    Order3Case2,
    /// `x=y=z, a, b, c, d` around `(G[B] + xy + yz) / xy / yz`.
    Order3Case3,
}

impl C5Table {
    pub fn colors(self) -> [usize; 5] {
        match self {
            C5Table::Order3Case2 => [1, 2, 4, 3, 2],
            _ => [1, 2, 3, 4, 2],
        }
    }

    /// Colors the 5-cycle `g` from `start`, walking away from `last` when it
    /// is given (so that `last` is the fifth vertex) and otherwise towards
    /// the smaller neighbor of `start`.
    pub fn apply(self, g: &Graph, start: Vertex, last: Option<Vertex>) -> Coloring {
        assert!(g.is_c5(), "table colorings are for C5");
        let nbrs: Vec<Vertex> = g.neighbors(start).iter().copied().collect();
        let mut next = match last {
            Some(l) => *nbrs.iter().find(|&&w| w != l).expect("start has two neighbors"),
            None => nbrs[0],
        };
        let mut walk = vec![start];
        let mut prev = start;
        while next != start {
            walk.push(next);
            let step = *g.neighbors(next).iter().find(|&&w| w != prev).unwrap();
            prev = next;
            next = step;
        }
        Coloring::from_pairs(4, walk.into_iter().zip(self.colors())).expect("table colors lie in 1..=4")
    }
}

/// All permutations of `1..=4` in lexicographic order, as lookup tables
/// indexed by the old color.
fn permutations() -> Vec<[usize; 5]> {
    let mut out = Vec::with_capacity(24);
    for a in 1..=4 {
        for b in 1..=4 {
            for c in 1..=4 {
                for d in 1..=4 {
                    let set = BTreeSet::from([a, b, c, d]);
                    if set.len() == 4 {
                        out.push([0, a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// Combines `c1` on `A` with a color permutation of `c2` on `B`, agreeing
/// on the separator. Tries the permutations in lexicographic order and
/// returns the first combination that is a dynamic coloring of `g`.
pub fn merge_colorings(g: &Graph, sep: &Separation, c1: &Coloring, c2: &Coloring) -> Option<Coloring> {
    let x = sep.separator();
    let b_only = sep.b_only();
    permutations().into_iter().find_map(|perm| {
        if x.iter().any(|&s| c2.get(s).map(|c| perm[c]) != c1.get(s)) {
            return None;
        }
        let mut c = c1.restricted(sep.a());
        for &v in &b_only {
            c.set(v, perm[c2.get(v)?]).ok()?;
        }
        verify_dynamic(g, &c).ok.then_some(c)
    })
}

/// Vertices of `within` whose neighborhood in `g` is exactly `set`.
pub(super) fn attached_exactly(g: &Graph, within: &BTreeSet<Vertex>, set: &BTreeSet<Vertex>) -> Vec<Vertex> {
    within.iter().copied().filter(|&u| g.neighbors(u) == set).collect()
}

fn neighbors_in(g: &Graph, v: Vertex, side: &BTreeSet<Vertex>) -> usize {
    g.neighbors(v).iter().filter(|w| side.contains(w)).count()
}

/// The order-2 separation the merge is applied to, for a 2-connected
/// nonplanar `g`: among `A = {x, y} ∪ C` for a component `C` of `g - {x, y}`
/// with `|C| ≥ 2` and at least two vertices outside `A`, one minimizing
/// `|A|` such that `G[A] + xy` is nonplanar. A vertex of `B \ A` adjacent to
/// exactly `x` and `y` is then moved into `A`.
pub fn select_separation2(g: &Graph) -> Result<Separation, NotApplicable> {
    let n = g.vertex_count();
    let mut best: Option<(BTreeSet<Vertex>, BTreeSet<Vertex>)> = None;
    for (x, y, comps) in g.nontrivial_two_cuts() {
        let xs = BTreeSet::from([x, y]);
        for c in comps {
            if c.len() < 2 || n - 2 - c.len() < 2 {
                continue;
            }
            if best.as_ref().is_some_and(|(a, _)| a.len() <= c.len() + 2) {
                continue;
            }
            let mut a = c;
            a.extend([x, y]);
            let torso = g.induced(&a).add_edge(x, y).expect("x and y are distinct vertices");
            if !is_planar(&torso) {
                best = Some((a, xs.clone()));
            }
        }
    }
    let (mut a, xs) = best.ok_or_else(|| not_applicable("no order-2 separation with a nonplanar torso"))?;
    let mut b: BTreeSet<Vertex> = g.vertices().filter(|v| !a.contains(v)).collect();
    b.extend(xs.iter().copied());
    let b_only: BTreeSet<Vertex> = b.difference(&xs).copied().collect();
    if let Some(&u) = attached_exactly(g, &b_only, &xs).first() {
        a.insert(u);
        b.remove(&u);
    }
    Ok(Separation::new_unchecked(a, b))
}

/// Conditions (i) and (ii) on an order-2 separation: each separator vertex
/// has two neighbors in `G[A]`, and a vertex of `B \ A` attached exactly to
/// the separator forces an edge inside it or a twin in `A \ B`.
pub fn check_order2(g: &Graph, sep: &Separation) -> Result<(), NotApplicable> {
    let xs = sep.separator();
    if xs.len() != 2 {
        return Err(not_applicable("separator does not have two vertices"));
    }
    for &s in &xs {
        if neighbors_in(g, s, sep.a()) < 2 {
            return Err(not_applicable(format!("vertex {s} has fewer than two neighbors in G[A]")));
        }
    }
    let (x, y) = (*xs.first().unwrap(), *xs.last().unwrap());
    if !attached_exactly(g, &sep.b_only(), &xs).is_empty()
        && !g.has_edge(x, y)
        && attached_exactly(g, &sep.a_only(), &xs).is_empty()
    {
        return Err(not_applicable("B \\ A has a vertex attached exactly to the separator"));
    }
    Ok(())
}

/// Turns a vertex triple `x` of `g` into an order-3 separation: `B` is `x`
/// plus one component `C` of `g - x` and `A` is everything outside `C`.
/// `C` is the first component with more than one vertex among those
/// containing a vertex of degree more than 2, or else the first singleton
/// of degree 3. The result is checked against conditions (i) to (iii).
pub fn lift_three_cut(g: &Graph, x: &BTreeSet<Vertex>) -> Result<Separation, NotApplicable> {
    if x.len() != 3 {
        return Err(not_applicable("cut does not have three vertices"));
    }
    let heavy: Vec<BTreeSet<Vertex>> = g
        .components_without(x)
        .into_iter()
        .filter(|c| c.iter().any(|&v| g.degree(v) > 2))
        .collect();
    if heavy.len() < 3 {
        return Err(not_applicable("fewer than three components with a vertex of degree above 2"));
    }
    let c = heavy
        .iter()
        .find(|c| c.len() > 1)
        .or_else(|| heavy.iter().find(|c| g.degree(*c.first().unwrap()) == 3))
        .ok_or_else(|| not_applicable("no component to split off"))?;
    let a: BTreeSet<Vertex> = g.vertices().filter(|v| !c.contains(v)).collect();
    let mut b = c.clone();
    b.extend(x.iter().copied());
    let sep = Separation::new_unchecked(a, b);
    check_order3(g, &sep)?;
    Ok(sep)
}

/// Conditions (i) to (iii) on an order-3 separation.
pub fn check_order3(g: &Graph, sep: &Separation) -> Result<(), NotApplicable> {
    let xs = sep.separator();
    if xs.len() != 3 {
        return Err(not_applicable("separator does not have three vertices"));
    }
    for &s in &xs {
        if neighbors_in(g, s, sep.a()) < 2 {
            return Err(not_applicable(format!("vertex {s} has fewer than two neighbors in G[A]")));
        }
    }
    if sep.a_only().iter().filter(|&&v| g.degree(v) > 2).count() < 2 {
        return Err(not_applicable("A \\ B has fewer than two vertices of degree above 2"));
    }
    for w in sep.b_only() {
        let nbrs = g.neighbors(w);
        if !nbrs.is_subset(&xs) {
            continue;
        }
        let inner_edge = nbrs.iter().any(|&p| nbrs.iter().any(|&q| p < q && g.has_edge(p, q)));
        if !inner_edge && attached_exactly(g, &sep.a_only(), nbrs).is_empty() {
            return Err(not_applicable(format!("vertex {w} of B \\ A sees only the separator")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_bipartite, cycle, v8};

    #[test]
    fn tables_leave_only_the_attachment_unhappy() {
        let c5 = cycle(5);
        for table in [C5Table::Order1, C5Table::Order2Case2, C5Table::Order3Case3] {
            let c = table.apply(&c5, 2, None);
            assert_eq!(verify_dynamic(&c5, &c).unhappy, vec![2], "{table:?}");
            assert_eq!(c.get(2), Some(1));
        }
        let c = C5Table::Order2Case1.apply(&c5, 0, Some(4));
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(verify_dynamic(&c5, &c).unhappy, vec![0]);

        let c = C5Table::Order3Case2.apply(&c5, 0, Some(1));
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 2)]);
        let c = C5Table::Order3Case2.apply(&c5, 0, Some(4));
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 4), (3, 3), (4, 2)]);
        assert_eq!(verify_dynamic(&c5, &c).unhappy, vec![0]);
    }

    #[test]
    fn permutations_are_lexicographic() {
        let p = permutations();
        assert_eq!(p.len(), 24);
        assert_eq!(p[0], [0, 1, 2, 3, 4]);
        assert_eq!(p[1], [0, 1, 2, 4, 3]);
        assert_eq!(p[23], [0, 4, 3, 2, 1]);
    }

    #[test]
    fn merge_two_edges_at_a_vertex() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2)]);
        let sep = Separation::new(&g, BTreeSet::from([0, 1]), BTreeSet::from([0, 2])).unwrap();
        let c1 = Coloring::from_pairs(4, [(0, 1), (1, 2)]).unwrap();
        let c2 = Coloring::from_pairs(4, [(0, 1), (2, 2)]).unwrap();
        let c = merge_colorings(&g, &sep, &c1, &c2).unwrap();
        assert_eq!(c.get(0), Some(1));
        assert_ne!(c.get(1), c.get(2));
        assert_eq!(c.get(2), Some(3));
    }

    #[test]
    fn lift_three_cut_of_k33() {
        let g = complete_bipartite(3, 3);
        let x = BTreeSet::from([0, 1, 2]);
        let sep = lift_three_cut(&g, &x).unwrap();
        assert_eq!(sep.separator(), x);
        assert_eq!(sep.b_only(), BTreeSet::from([3]));
    }

    #[test]
    fn lift_three_cut_picks_a_triangle() {
        // Three triangles, each vertex joined to all of {0, 1, 2}.
        let mut g = Graph::empty(3);
        for t in 0..3 {
            let base = 3 + 3 * t;
            for i in 0..3 {
                g.insert_edge(base + i, base + (i + 1) % 3).unwrap();
                for x in 0..3 {
                    g.insert_edge(base + i, x).unwrap();
                }
            }
        }
        let sep = lift_three_cut(&g, &BTreeSet::from([0, 1, 2])).unwrap();
        assert_eq!(sep.b_only(), BTreeSet::from([3, 4, 5]));
        assert!(sep.check(&g).is_ok());
    }

    #[test]
    fn lift_three_cut_needs_three_components() {
        let g = complete(5);
        assert!(lift_three_cut(&g, &BTreeSet::from([0, 1, 2])).is_err());
        let g = complete_bipartite(3, 2);
        assert!(lift_three_cut(&g, &BTreeSet::from([0, 1, 2])).is_err());
    }

    #[test]
    fn select_separation2_prefers_the_nonplanar_side() {
        // V8 minus edge 0-1, with 0 and 1 joined by a long path.
        let mut g = v8();
        g.remove_edge(0, 1);
        for (u, v) in [(0, 10), (10, 11), (11, 12), (12, 1)] {
            g.insert_edge(u, v).unwrap();
        }
        let sep = select_separation2(&g).unwrap();
        assert_eq!(sep.a(), &(0..8).collect());
        assert_eq!(sep.separator(), BTreeSet::from([0, 1]));
        assert!(check_order2(&g, &sep).is_ok());
    }

    #[test]
    fn select_separation2_moves_a_degree_two_vertex() {
        let mut g = v8();
        g.remove_edge(0, 1);
        for (u, v) in [(0, 10), (10, 11), (11, 1), (0, 20), (20, 1)] {
            g.insert_edge(u, v).unwrap();
        }
        let sep = select_separation2(&g).unwrap();
        assert!(sep.a().contains(&20));
        assert_eq!(sep.b_only(), BTreeSet::from([10, 11]));
        assert!(check_order2(&g, &sep).is_ok());
    }

    #[test]
    fn internally_3_connected_is_not_applicable() {
        assert!(select_separation2(&v8()).is_err());
    }
}
