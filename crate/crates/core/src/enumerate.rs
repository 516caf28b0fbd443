//! Exhaustive enumeration of small connected graphs up to isomorphism.

use std::collections::HashSet;

use crate::graph::Graph;
use crate::io::emit_graph6;

/// Largest vertex count handled by [`canonical_form`].
pub const MAX_CANON: usize = 16;

/// Canonical labelling certificate: the upper triangle of the adjacency
/// matrix under the best labelling found by individualization-refinement.
/// Two graphs on `0..n` are isomorphic iff their certificates agree.
pub fn certificate(g: &Graph) -> (usize, u128) {
    let (adj, _) = g.to_adjacency();
    let n = adj.len();
    assert!(n <= MAX_CANON, "canonical form limited to {MAX_CANON} vertices");
    let mut mat = vec![0u32; n];
    for (v, nb) in adj.iter().enumerate() {
        for &w in nb {
            mat[v] |= 1 << w;
        }
    }
    let cells = refine(&mat, vec![(0..n).collect()]);
    let mut best = None;
    search(&mat, cells, &mut best);
    (n, best.map_or(0, |(c, _)| c))
}

/// The graph relabelled canonically on `0..n`.
pub fn canonical_form(g: &Graph) -> Graph {
    let (adj, _) = g.to_adjacency();
    let n = adj.len();
    let mut mat = vec![0u32; n];
    for (v, nb) in adj.iter().enumerate() {
        for &w in nb {
            mat[v] |= 1 << w;
        }
    }
    let mut best = None;
    search(&mat, refine(&mat, vec![(0..n).collect()]), &mut best);
    let order = best.map(|(_, o)| o).unwrap_or_default();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut h = Graph::empty(n);
    for (v, nb) in adj.iter().enumerate() {
        for &w in nb {
            if v < w {
                h.insert_edge(pos[v], pos[w]).unwrap();
            }
        }
    }
    h
}

type Cells = Vec<Vec<usize>>;

/// Equitable refinement of an ordered partition. Cells are split by the
/// number of neighbors in every cell; the split order depends only on those
/// counts, so the result is labelling-invariant.
fn refine(mat: &[u32], mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<u32> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (mat[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(mat: &[u32], cells: Cells, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(i) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let cert = encode(mat, &order);
        if best.as_ref().is_none_or(|(b, _)| cert > *b) {
            *best = Some((cert, order));
        }
        return;
    };
    for &v in &cells[i] {
        let mut split = cells.clone();
        let rest: Vec<usize> = split[i].iter().copied().filter(|&u| u != v).collect();
        split[i] = vec![v];
        split.insert(i + 1, rest);
        search(mat, refine(mat, split), best);
    }
}

fn encode(mat: &[u32], order: &[usize]) -> u128 {
    let mut cert = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            cert = cert << 1 | u128::from(mat[order[i]] >> order[j] & 1);
        }
    }
    cert
}

/// All connected graphs on `n` vertices up to isomorphism, optionally with
/// maximum degree at most `max_degree`, in canonical labelling, sorted by
/// graph6 string.
pub fn connected_graphs(n: usize, max_degree: Option<usize>) -> Vec<Graph> {
    let mut level = if n == 0 { Vec::new() } else { vec![Graph::empty(1)] };
    for m in 1..n {
        level = grow(&level, m, max_degree);
    }
    let mut out: Vec<(String, Graph)> =
        level.into_iter().map(|g| (emit_graph6(&g).expect("n ≤ 62"), g)).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, g)| g).collect()
}

/// Every connected graph with `m + 1` vertices has a vertex whose removal
/// leaves a connected graph, and bounded degree is hereditary, so adding a
/// vertex to each graph of the previous level in every way reaches all.
fn grow(level: &[Graph], m: usize, max_degree: Option<usize>) -> Vec<Graph> {
    let cap = max_degree.unwrap_or(usize::MAX);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in level {
        let open: Vec<usize> = (0..m).filter(|&v| g.degree(v) < cap).collect();
        for mask in 1u32..(1 << open.len()) {
            if mask.count_ones() as usize > cap {
                continue;
            }
            let mut h = g.clone();
            h.add_vertex(m);
            for (i, &v) in open.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    h.insert_edge(v, m).unwrap();
                }
            }
            let h = canonical_form(&h);
            if seen.insert(h.clone()) {
                out.push(h);
            }
        }
    }
    out
}

/// Connected graphs on `lo..=hi` vertices, concatenated by size.
pub fn connected_graphs_between(lo: usize, hi: usize, max_degree: Option<usize>) -> Vec<Graph> {
    (lo.max(1)..=hi).flat_map(|n| connected_graphs(n, max_degree)).collect()
}
