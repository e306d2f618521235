use std::collections::HashSet;

use rand::Rng;

use super::seeded_rng;
use crate::graph::Graph;

/// `100 * E` swap attempts.
pub fn default_swap_attempts(g: &Graph) -> usize {
    100 * g.edge_count()
}

#[inline]
fn canon(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Degree-preserving randomization by double-edge swaps.
///
/// Each attempt picks two distinct edges `(a,b)`, `(c,d)` uniformly and, on a
/// fair coin, proposes `(a,d),(c,b)` or `(a,c),(b,d)`. Proposals that would
/// create a self-loop or a repeated edge are rejected. Graphs with fewer
/// than two edges are returned unchanged.
pub fn rewire(g: &Graph, attempts: usize, seed: u64) -> Graph {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() < 2 {
        return g.clone();
    }
    let mut present: HashSet<(usize, usize)> = edges.iter().copied().collect();
    let mut rng = seeded_rng(seed);
    let m = edges.len();
    for _ in 0..attempts {
        let i = rng.gen_range(0..m);
        let j = rng.gen_range(0..m);
        if i == j {
            continue;
        }
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        let (e1, e2) = if rng.gen::<bool>() {
            ((a, d), (c, b))
        } else {
            ((a, c), (b, d))
        };
        if e1.0 == e1.1 || e2.0 == e2.1 {
            continue;
        }
        let (e1, e2) = (canon(e1.0, e1.1), canon(e2.0, e2.1));
        if e1 == e2 || present.contains(&e1) || present.contains(&e2) {
            continue;
        }
        present.remove(&edges[i]);
        present.remove(&edges[j]);
        present.insert(e1);
        present.insert(e2);
        edges[i] = e1;
        edges[j] = e2;
    }
    Graph::from_edges(g.node_count(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_clique, gen_grid};

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d: Vec<usize> = g.degrees().collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn triangle_is_fixed() {
        let t = gen_clique(3);
        assert_eq!(rewire(&t, 1000, 4), t);
    }

    #[test]
    fn preserves_degrees_and_simplicity() {
        let g = gen_grid(&[12, 12]);
        let r = rewire(&g, default_swap_attempts(&g), 1);
        assert_eq!(r.node_count(), g.node_count());
        assert_eq!(r.edge_count(), g.edge_count());
        for v in 0..g.node_count() {
            assert_eq!(r.degree(v), g.degree(v));
        }
        assert_ne!(r, g);
        assert_eq!(sorted_degrees(&r), sorted_degrees(&g));
    }

    #[test]
    fn tiny_graphs_unchanged() {
        let g = gen_grid(&[2]);
        assert_eq!(rewire(&g, 100, 0), g);
    }
}
