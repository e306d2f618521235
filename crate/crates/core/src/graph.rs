//! Immutable undirected simple graphs in compressed adjacency form.

use std::collections::VecDeque;

use crate::error::{NcpError, Result};

/// Undirected simple graph stored as sorted adjacency rows.
///
/// Construction drops self-loops and collapses duplicate or reversed edges,
/// so every `Graph` is simple and symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    total_volume: u64,
}

impl Graph {
    /// Builds a graph on `n` nodes from an arbitrary edge list.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Graph
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for {n} nodes");
            if u != v {
                pairs.push((u, v));
                pairs.push((v, u));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &pairs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets: Vec<usize> = pairs.into_iter().map(|(_, v)| v).collect();
        let total_volume = targets.len() as u64;
        Graph {
            offsets,
            targets,
            total_volume,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
            total_volume: 0,
        }
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    /// Sum of all degrees, i.e. twice the edge count.
    #[inline]
    pub fn total_volume(&self) -> u64 {
        self.total_volume
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.node_count()).map(move |v| self.degree(v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.node_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Sum of degrees over `nodes`.
    pub fn volume(&self, nodes: &[usize]) -> u64 {
        nodes.iter().map(|&v| self.degree(v) as u64).sum()
    }

    /// Hop distances from `source`; unreachable nodes get `usize::MAX`.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.node_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, listed in order of their smallest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return false;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Subgraph induced by `nodes`. Returns the subgraph and the map from its
    /// node indices back to indices of `self` (the order of `nodes`).
    pub fn induced_subgraph(&self, nodes: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.node_count()];
        for (i, &v) in nodes.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &u) in nodes.iter().enumerate() {
            for &v in self.neighbors(u) {
                let j = local[v];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        (Graph::from_edges(nodes.len(), edges), nodes.to_vec())
    }
}

/// Restricts `g` to its largest connected component.
///
/// Ties on node count go to the component holding the smallest node index.
/// Returns the component and the map from its indices to indices of `g`.
pub fn largest_connected_component(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    if g.node_count() == 0 {
        return Err(NcpError::EmptyGraph);
    }
    let comps = g.components();
    let mut best = 0;
    for (i, c) in comps.iter().enumerate() {
        if c.len() > comps[best].len() {
            best = i;
        }
    }
    if comps[best].len() == g.node_count() {
        return Ok((g.clone(), (0..g.node_count()).collect()));
    }
    Ok(g.induced_subgraph(&comps[best]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedups_and_drops_loops() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 0), (1, 2), (1, 2)]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.total_volume(), 4);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn lcc_prefers_larger_piece() {
        // triangle {0,1,2} plus isolated edge {3,4}
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4)]);
        let (lcc, map) = largest_connected_component(&g).unwrap();
        assert_eq!(lcc.node_count(), 3);
        assert_eq!(lcc.edge_count(), 3);
        assert_eq!(map, vec![0, 1, 2]);
    }

    #[test]
    fn lcc_of_connected_graph_is_identity() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let (lcc, map) = largest_connected_component(&g).unwrap();
        assert_eq!(lcc, g);
        assert_eq!(map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn lcc_tie_goes_to_smallest_min_id() {
        // path {0,3,5} and triangle {1,2,4}: equal sizes, path holds node 0
        let g = Graph::from_edges(6, [(0, 3), (3, 5), (1, 2), (2, 4), (4, 1)]);
        let (lcc, map) = largest_connected_component(&g).unwrap();
        assert_eq!(map, vec![0, 3, 5]);
        assert_eq!(lcc.edge_count(), 2);
        // swapping roles: triangle holds node 0
        let g = Graph::from_edges(6, [(0, 3), (3, 5), (5, 0), (1, 2), (2, 4)]);
        let (lcc, map) = largest_connected_component(&g).unwrap();
        assert_eq!(map, vec![0, 3, 5]);
        assert_eq!(lcc.edge_count(), 3);
    }

    #[test]
    fn lcc_of_empty_graph_errors() {
        assert!(matches!(
            largest_connected_component(&Graph::empty(0)),
            Err(NcpError::EmptyGraph)
        ));
    }

    #[test]
    fn induced_subgraph_keeps_internal_edges() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        let (h, map) = g.induced_subgraph(&[1, 2, 3]);
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
