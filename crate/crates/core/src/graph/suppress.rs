use std::collections::{BTreeMap, BTreeSet};

use super::{Graph, GraphError, Vertex};

/// Result of suppressing every degree-2 vertex of a graph.
///
/// Branch vertices (degree ≥ 3) keep their identifiers, so `branch_map` is
/// the identity on the suppressed vertex set. `path_map` sends each
/// suppressed edge `(u, v)` with `u ≤ v` to the original paths it stands for,
/// each listed from `u` to `v` inclusive. More than one path, or a key with
/// `u == v`, records a parallel edge or loop that the simple suppressed graph
/// could not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuppressionMap {
    pub original: Graph,
    pub suppressed: Graph,
    pub branch_map: BTreeMap<Vertex, Vertex>,
    pub path_map: BTreeMap<(Vertex, Vertex), Vec<Vec<Vertex>>>,
}

impl SuppressionMap {
    /// Rebuilds the original graph by laying every recorded path back down.
    pub fn expand(&self) -> Graph {
        let mut g = Graph::new();
        for &v in self.branch_map.values() {
            g.add_vertex(v);
        }
        for path in self.path_map.values().flatten() {
            for w in path.windows(2) {
                g.insert_edge(w[0], w[1]).expect("paths never repeat a vertex consecutively");
            }
        }
        g
    }

    /// Original vertices of degree 2 that were suppressed.
    pub fn subdivision_vertices(&self) -> BTreeSet<Vertex> {
        self.original
            .vertices()
            .filter(|v| !self.branch_map.contains_key(v))
            .collect()
    }
}

/// Suppresses all degree-2 vertices of a connected graph with minimum
/// degree at least 2 that is not itself a cycle.
pub fn suppress_degree_two(g: &Graph) -> Result<SuppressionMap, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) < 2) {
        return Err(GraphError::LowDegree { vertex: v, degree: g.degree(v) });
    }
    let branch: BTreeSet<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    if branch.is_empty() {
        return Err(GraphError::CycleInput);
    }

    let mut suppressed = Graph::new();
    for &b in &branch {
        suppressed.add_vertex(b);
    }
    let mut path_map: BTreeMap<(Vertex, Vertex), Vec<Vec<Vertex>>> = BTreeMap::new();
    for &start in &branch {
        for &first in g.neighbors(start) {
            let mut path = vec![start, first];
            let mut prev = start;
            let mut cur = first;
            while !branch.contains(&cur) {
                let next = *g
                    .neighbors(cur)
                    .iter()
                    .find(|&&w| w != prev)
                    .expect("degree-2 vertex has a second neighbor");
                prev = cur;
                cur = next;
                path.push(cur);
            }
            let end = cur;
            // Each path is walked once from each end; keep one orientation.
            let keep = match start.cmp(&end) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => path[1] < path[path.len() - 2],
            };
            if !keep {
                continue;
            }
            if start != end {
                suppressed.insert_edge(start, end)?;
            }
            path_map.entry((start, end)).or_default().push(path);
        }
    }
    let branch_map = branch.iter().map(|&b| (b, b)).collect();
    Ok(SuppressionMap { original: g.clone(), suppressed, branch_map, path_map })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn subdivide_all(g: &Graph) -> Graph {
        let mut out = Graph::new();
        let mut next = g.vertices().max().map_or(0, |m| m + 1);
        for v in g.vertices() {
            out.add_vertex(v);
        }
        for (u, v) in g.edges() {
            out.insert_edge(u, next).unwrap();
            out.insert_edge(next, v).unwrap();
            next += 1;
        }
        out
    }

    #[test]
    fn subdivided_k4_suppresses_to_k4() {
        let s = subdivide_all(&k4());
        let map = suppress_degree_two(&s).unwrap();
        assert_eq!(map.suppressed, k4());
        assert_eq!(map.expand(), s);
        assert_eq!(map.subdivision_vertices().len(), 6);
        assert!(map.path_map.values().all(|p| p.len() == 1 && p[0].len() == 3));
    }

    #[test]
    fn cycles_are_rejected() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(suppress_degree_two(&c6), Err(GraphError::CycleInput));
    }

    #[test]
    fn low_degree_is_rejected() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(matches!(
            suppress_degree_two(&p3),
            Err(GraphError::LowDegree { vertex: 0, degree: 1 })
        ));
    }

    #[test]
    fn theta_graph_keeps_parallel_paths() {
        // Two branch vertices joined by three paths.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1)]);
        let map = suppress_degree_two(&g).unwrap();
        assert_eq!(map.suppressed.edge_count(), 1);
        assert_eq!(map.path_map[&(0, 1)].len(), 3);
        assert_eq!(map.expand(), g);
    }

    #[test]
    fn pendant_cycle_is_recorded_as_loop() {
        // Triangle 0-1-2 with a 4-cycle hanging at vertex 0 and a chord
        // keeping every branch vertex at degree 3.
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 0), (1, 6), (6, 2)],
        );
        let map = suppress_degree_two(&g).unwrap();
        assert!(map.path_map.contains_key(&(0, 0)));
        assert_eq!(map.expand(), g);
    }
}
