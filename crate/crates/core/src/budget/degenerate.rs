use crate::dynamic::{verify_dynamic, Coloring};
use crate::graph::{Graph, Vertex};

use super::BudgetError;

/// How a vertex left the graph, with the vertices its color must avoid.
struct Elimination {
    v: Vertex,
    avoid: Vec<Vertex>,
}

/// Dynamic coloring with at most `k + 3` colors of a graph whose topological
/// minors all have a vertex of degree at most `k`.
///
/// Repeatedly removes a vertex `v` of minimum degree (smallest identifier on
/// ties): a leaf is dropped; otherwise its two smallest neighbors `v1, v2`
/// are joined by an edge (for degree 2 this is the contraction of `vv1`).
/// Colors are then assigned in reverse order, `v` taking the smallest color
/// not used on its neighbors nor on the chosen second neighbors `w1, w2`.
/// Disconnected graphs are fine. Only the one consequence of the hypothesis
/// that the procedure relies on is checked: every intermediate graph has
/// minimum degree at most `k`.
pub fn color_degenerate(g: &Graph, k: usize) -> Result<Coloring, BudgetError> {
    if k == 0 {
        return Err(BudgetError::InvalidK(k));
    }
    let palette = k + 3;
    let mut h = g.clone();
    let mut order: Vec<Elimination> = Vec::with_capacity(g.vertex_count());
    while let Some(v) = h.min_degree_vertex() {
        let d = h.degree(v);
        if d > k {
            return Err(BudgetError::DegeneracyViolation { k, min_degree: d, witness: h });
        }
        let nbrs: Vec<Vertex> = h.neighbors(v).iter().copied().collect();
        // A neighbor of `x` other than `v`.
        let second = |h: &Graph, x: Vertex| h.neighbors(x).iter().copied().find(|&w| w != v);
        let mut avoid = nbrs.clone();
        match d {
            0 => {}
            1 => avoid.extend(second(&h, nbrs[0])),
            _ => {
                avoid.extend(second(&h, nbrs[0]));
                avoid.extend(second(&h, nbrs[1]));
            }
        }
        h.remove_vertex(v);
        if d >= 2 {
            h.insert_edge(nbrs[0], nbrs[1]).expect("distinct neighbors");
        }
        order.push(Elimination { v, avoid });
    }
    let mut c = Coloring::new(palette);
    for e in order.iter().rev() {
        let used: Vec<usize> = e.avoid.iter().filter_map(|&u| c.get(u)).collect();
        let f = (1..=palette)
            .find(|col| !used.contains(col))
            .ok_or_else(|| BudgetError::Internal(format!("no free color for vertex {}", e.v)))?;
        c.set(e.v, f).expect("color within palette");
    }
    if !verify_dynamic(g, &c).ok {
        return Err(BudgetError::Internal("degenerate coloring failed verification".into()));
    }
    Ok(c)
}
