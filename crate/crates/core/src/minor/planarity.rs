//! Planarity by path addition (Demoucron, Malgrange and Pertuiset).
//!
//! Each block is embedded starting from a cycle. At every step the
//! fragments of the block relative to the embedded part are computed, each
//! fragment's admissible faces are the faces containing all of its
//! attachment vertices, and a path through a fragment is drawn into one
//! admissible face. A fragment with no admissible face certifies
//! nonplanarity; a fragment with exactly one is always served first.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Whether `g` has a plane embedding.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n <= 4 {
        return true;
    }
    if g.edge_count() > 3 * n - 6 {
        return false;
    }
    g.blocks().into_iter().filter(|b| b.len() >= 5).all(|b| {
        let (adj, _) = g.induced(&b).to_adjacency();
        block_is_planar(&adj)
    })
}

enum Fragment {
    Edge(usize, usize),
    Component { vertices: Vec<usize>, attachments: Vec<usize> },
}

impl Fragment {
    fn attachments(&self) -> Vec<usize> {
        match self {
            Fragment::Edge(u, v) => vec![*u, *v],
            Fragment::Component { attachments, .. } => attachments.clone(),
        }
    }
}

/// Path addition on a 2-connected graph given as dense adjacency lists.
fn block_is_planar(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if n <= 4 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let cycle = find_cycle(adj).expect("a 2-connected block has a cycle");
    let mut placed = vec![false; n];
    let mut edge_placed = vec![vec![false; n]; n];
    for (i, &v) in cycle.iter().enumerate() {
        let w = cycle[(i + 1) % cycle.len()];
        placed[v] = true;
        edge_placed[v][w] = true;
        edge_placed[w][v] = true;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    loop {
        let fragments = fragments(adj, &placed, &edge_placed);
        if fragments.is_empty() {
            return true;
        }
        let mut face_sets: Vec<Vec<bool>> = Vec::with_capacity(faces.len());
        for f in &faces {
            let mut s = vec![false; n];
            for &v in f {
                s[v] = true;
            }
            face_sets.push(s);
        }
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let att = frag.attachments();
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| att.iter().all(|&a| face_sets[f][a]))
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("at least one fragment");
        let path = fragment_path(adj, &fragments[fi], &placed);
        for w in path.windows(2) {
            edge_placed[w[0]][w[1]] = true;
            edge_placed[w[1]][w[0]] = true;
        }
        for &v in &path {
            placed[v] = true;
        }
        let (f1, f2) = split_face(&faces[face], &path);
        faces[face] = f1;
        faces.push(f2);
    }
}

fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some(top) = stack.last_mut() {
        let (v, i) = *top;
        if i == adj[v].len() {
            stack.pop();
            continue;
        }
        top.1 += 1;
        let w = adj[v][i];
        if depth[w] == usize::MAX {
            depth[w] = depth[v] + 1;
            parent[w] = v;
            stack.push((w, 0));
        } else if w != parent[v] && depth[w] < depth[v] {
            let mut cycle = vec![v];
            let mut cur = v;
            while cur != w {
                cur = parent[cur];
                cycle.push(cur);
            }
            return Some(cycle);
        }
    }
    None
}

fn fragments(adj: &[Vec<usize>], placed: &[bool], edge_placed: &[Vec<bool>]) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !placed[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && placed[v] && !edge_placed[u][v] {
                out.push(Fragment::Edge(u, v));
            }
        }
    }
    let mut seen = vec![false; n];
    for start in 0..n {
        if placed[start] || seen[start] {
            continue;
        }
        let mut vertices = vec![start];
        let mut attach = vec![false; n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if placed[w] {
                    attach[w] = true;
                } else if !seen[w] {
                    seen[w] = true;
                    vertices.push(w);
                    queue.push_back(w);
                }
            }
        }
        let attachments = (0..n).filter(|&a| attach[a]).collect();
        out.push(Fragment::Component { vertices, attachments });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], frag: &Fragment, placed: &[bool]) -> Vec<usize> {
    match frag {
        Fragment::Edge(u, v) => vec![*u, *v],
        Fragment::Component { vertices, attachments } => {
            let n = adj.len();
            let a = attachments[0];
            let mut inside = vec![false; n];
            for &v in vertices {
                inside[v] = true;
            }
            let mut parent = vec![usize::MAX; n];
            let mut queue = VecDeque::new();
            for &w in &adj[a] {
                if inside[w] && parent[w] == usize::MAX {
                    parent[w] = a;
                    queue.push_back(w);
                }
            }
            while let Some(v) = queue.pop_front() {
                if let Some(&b) = adj[v].iter().find(|&&b| placed[b] && b != a) {
                    let mut path = vec![b, v];
                    let mut cur = v;
                    while parent[cur] != a {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
                for &w in &adj[v] {
                    if inside[w] && parent[w] == usize::MAX {
                        parent[w] = v;
                        queue.push_back(w);
                    }
                }
            }
            unreachable!("fragment of a 2-connected block has two attachments")
        }
    }
}

/// Splits a face along a path whose ends lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let len = face.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let i = face.iter().position(|&v| v == a).unwrap();
    let j = face.iter().position(|&v| v == b).unwrap();
    let walk = |from: usize, to: usize| {
        let mut seg = vec![face[from]];
        let mut k = from;
        while k != to {
            k = (k + 1) % len;
            seg.push(face[k]);
        }
        seg
    };
    let interior = &path[1..path.len() - 1];
    let mut first = walk(i, j);
    first.extend(interior.iter().rev());
    let mut second = walk(j, i);
    second.extend(interior.iter());
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.insert_edge(i, j).unwrap();
            }
        }
        g
    }

    fn k33() -> Graph {
        let mut g = Graph::empty(6);
        for i in 0..3 {
            for j in 3..6 {
                g.insert_edge(i, j).unwrap();
            }
        }
        g
    }

    #[test]
    fn small_complete_graphs() {
        assert!(is_planar(&complete(4)));
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&k33()));
        assert!(is_planar(&complete(5).without_vertex(0)));
    }

    #[test]
    fn k33_minus_edge_is_planar() {
        let mut g = k33();
        g.remove_edge(0, 3);
        assert!(is_planar(&g));
    }

    #[test]
    fn subdivided_k33_with_pendant_blocks() {
        let mut g = Graph::new();
        let mut next = 6;
        for i in 0..3 {
            for j in 3..6 {
                g.insert_edge(i, next).unwrap();
                g.insert_edge(next, j).unwrap();
                next += 1;
            }
        }
        g.insert_edge(0, 100).unwrap();
        g.insert_edge(100, 101).unwrap();
        g.insert_edge(101, 0).unwrap();
        assert!(!is_planar(&g));
    }

    #[test]
    fn octahedron_and_icosahedron_like() {
        // Octahedron = K6 minus a perfect matching: planar.
        let mut oct = complete(6);
        oct.remove_edge(0, 1);
        oct.remove_edge(2, 3);
        oct.remove_edge(4, 5);
        assert!(is_planar(&oct));
        // K6 minus one edge contains K5: nonplanar.
        let mut k6 = complete(6);
        k6.remove_edge(0, 1);
        assert!(!is_planar(&k6));
    }

    #[test]
    fn split_face_orientation() {
        let (f1, f2) = split_face(&[0, 1, 2, 3], &[1, 9, 3]);
        assert_eq!(f1, vec![1, 2, 3, 9]);
        assert_eq!(f2, vec![3, 0, 1, 9]);
    }
}
