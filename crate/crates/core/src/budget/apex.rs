use std::collections::BTreeSet;

use crate::dynamic::{solve_exact, verify_dynamic, Coloring};
use crate::graph::{Graph, Vertex};
use crate::minor::is_planar;

use super::BudgetError;

/// Dynamic coloring with at most `|X| + 4` colors of a graph that becomes
/// planar after deleting `X`.
///
/// The apex set is first shrunk greedily, so the final count may be lower.
/// Disconnected graphs are colored component by component.
pub fn color_apex(g: &Graph, apex: &BTreeSet<Vertex>) -> Result<Coloring, BudgetError> {
    if apex.is_empty() {
        return Err(BudgetError::EmptyApexSet);
    }
    if let Some(&v) = apex.iter().find(|&&v| !g.has_vertex(v)) {
        return Err(BudgetError::UnknownVertex(v));
    }
    if !is_planar(&g.without(apex)) {
        return Err(BudgetError::NotApex);
    }
    let palette = apex.len() + 4;
    let mut out = Coloring::new(palette);
    for comp in g.components() {
        let h = g.induced(&comp);
        let y: BTreeSet<Vertex> = apex.intersection(&comp).copied().collect();
        let c = rec(&h, y, palette)?;
        for (v, col) in c.iter() {
            out.set(v, col).expect("within palette");
        }
    }
    if !verify_dynamic(g, &out).ok {
        return Err(BudgetError::Internal("apex coloring failed verification".into()));
    }
    Ok(out)
}

/// Drop apex vertices that are not needed for planarity.
fn shrink(h: &Graph, mut y: BTreeSet<Vertex>) -> BTreeSet<Vertex> {
    loop {
        let drop = y.iter().copied().find(|&v| {
            let mut rest = y.clone();
            rest.remove(&v);
            is_planar(&h.without(&rest))
        });
        match drop {
            Some(v) => {
                y.remove(&v);
            }
            None => return y,
        }
    }
}

/// `h` connected, `h − y` planar, `budget ≥ |y| + 4`.
fn rec(h: &Graph, y: BTreeSet<Vertex>, budget: usize) -> Result<Coloring, BudgetError> {
    let y = shrink(h, y);
    let Some(&v) = y.iter().next() else {
        return planar_base(h, budget);
    };
    let hv = h.without_vertex(v);
    let mut c = Coloring::new(budget);
    for comp in hv.components() {
        let part = hv.induced(&comp);
        let yi: BTreeSet<Vertex> = y.intersection(&comp).copied().collect();
        let ci = match rec(&part, yi, budget - 1) {
            Ok(ci) => ci,
            // A five-cycle hanging off a single apex vertex: the induction
            // has no room for it, so search the whole piece directly.
            Err(BudgetError::PlanarBaseTooSmall) => return exact(h, budget),
            Err(e) => return Err(e),
        };
        for (u, col) in ci.iter() {
            c.set(u, col).expect("within palette");
        }
    }
    extend(h, v, c, budget)
}

fn planar_base(h: &Graph, budget: usize) -> Result<Coloring, BudgetError> {
    let k = if h.is_c5() { 5 } else { 4.min(budget) };
    if k > budget {
        return Err(BudgetError::PlanarBaseTooSmall);
    }
    let c = solve_exact(h, k, &Coloring::new(k))
        .ok_or_else(|| BudgetError::Internal("planar piece without a dynamic 4-coloring".into()))?;
    c.with_k(budget).map_err(|e| BudgetError::Internal(e.to_string()))
}

fn exact(h: &Graph, budget: usize) -> Result<Coloring, BudgetError> {
    solve_exact(h, budget, &Coloring::new(budget))
        .ok_or_else(|| BudgetError::Internal("no dynamic coloring within the apex budget".into()))
}

/// Give `v` a color, given a dynamic coloring of `h − v` in `1..budget`.
fn extend(h: &Graph, v: Vertex, mut c: Coloring, budget: usize) -> Result<Coloring, BudgetError> {
    let top = budget;
    let nbrs: Vec<Vertex> = h.neighbors(v).iter().copied().collect();
    let Some(alpha) = nbrs.first().and_then(|&u| c.get(u)) else {
        c.set(v, 1).expect("within palette");
        return Ok(c);
    };
    if nbrs.len() < 2 || nbrs.iter().any(|&u| c.get(u) != Some(alpha)) {
        c.set(v, top).expect("within palette");
        return Ok(c);
    }
    // Smallest color of 1..top outside `avoid`.
    let pick = |avoid: &[Option<usize>]| (1..top).find(|d| !avoid.contains(&Some(*d)));
    if let Some(&w) = nbrs.iter().find(|&&w| h.degree(w) <= 2) {
        let w1 = h.neighbors(w).iter().copied().find(|&x| x != v);
        let w2 = w1.and_then(|w1| h.neighbors(w1).iter().copied().find(|&x| x != w));
        let d = pick(&[Some(alpha), w1.and_then(|x| c.get(x)), w2.and_then(|x| c.get(x))])
            .ok_or_else(|| BudgetError::Internal("no color left for a low-degree neighbor".into()))?;
        c.set(v, top).expect("within palette");
        c.set(w, d).expect("within palette");
    } else {
        let w = nbrs[0];
        let beta = pick(&[Some(alpha)]).expect("at least three colors below the top one");
        c.set(w, top).expect("within palette");
        c.set(v, beta).expect("within palette");
    }
    let colors: BTreeSet<usize> = nbrs.iter().filter_map(|&u| c.get(u)).collect();
    debug_assert!(colors.len() >= 2, "apex vertex {v} left unhappy");
    Ok(c)
}
