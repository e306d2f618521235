//! Whole-graph summary statistics.

use std::io::Write;

use rand::seq::index::sample;

use crate::error::{domain, Result};
use crate::generators::seeded_rng;
use crate::graph::Graph;
use crate::whiskers::decompose_whiskers;

/// Cap on rounds of the farthest-node diameter heuristic.
pub const DIAMETER_ROUNDS: usize = 100;

#[derive(Clone, Debug, PartialEq)]
pub struct GraphStats {
    pub nodes: usize,
    pub edges: usize,
    /// Fraction of nodes in the largest 2-edge-connected component.
    pub core_node_frac: f64,
    /// Fraction of edges in the largest 2-edge-connected component.
    pub core_edge_frac: f64,
    /// `2E / N`.
    pub avg_degree: f64,
    /// `sum d^2 / sum d`.
    pub second_order_degree: f64,
    pub clustering: f64,
    pub diameter: usize,
    pub avg_path_length: f64,
}

impl GraphStats {
    pub const CSV_HEADER: &'static str =
        "network,N,E,N_b_frac,E_b_frac,d_bar,d_tilde,C_bar,D,D_bar";

    pub fn write_csv<W: Write>(&self, name: &str, mut out: W) -> Result<()> {
        writeln!(out, "{}", Self::CSV_HEADER)?;
        writeln!(
            out,
            "{name},{},{},{},{},{},{},{},{},{}",
            self.nodes,
            self.edges,
            self.core_node_frac,
            self.core_edge_frac,
            self.avg_degree,
            self.second_order_degree,
            self.clustering,
            self.diameter,
            self.avg_path_length
        )?;
        Ok(())
    }
}

/// Average of the per-node Watts-Strogatz clustering coefficients; nodes of
/// degree below 2 count as 0.
pub fn average_clustering(g: &Graph) -> f64 {
    let n = g.node_count();
    if n == 0 {
        return 0.0;
    }
    let mut mark = vec![false; n];
    let mut sum = 0.0;
    for u in 0..n {
        let nbrs = g.neighbors(u);
        let d = nbrs.len();
        if d < 2 {
            continue;
        }
        for &v in nbrs {
            mark[v] = true;
        }
        let mut links = 0u64;
        for &v in nbrs {
            links += g.neighbors(v).iter().filter(|&&w| mark[w]).count() as u64;
        }
        for &v in nbrs {
            mark[v] = false;
        }
        // each triangle edge seen from both ends
        sum += links as f64 / (d * (d - 1)) as f64;
    }
    sum / n as f64
}

fn eccentricity(g: &Graph, source: usize) -> (usize, usize) {
    let dist = g.bfs_distances(source);
    let mut far = source;
    for (v, &d) in dist.iter().enumerate() {
        if d > dist[far] {
            far = v;
        }
    }
    (dist[far], far)
}

/// Farthest-node diameter estimate: from a random start, hop to the farthest
/// node (smallest id on ties) until the eccentricity stops growing.
pub fn estimate_diameter(g: &Graph, start: usize) -> usize {
    let (mut best, mut far) = eccentricity(g, start);
    for _ in 1..DIAMETER_ROUNDS {
        let (ecc, next) = eccentricity(g, far);
        if ecc <= best {
            break;
        }
        best = ecc;
        far = next;
    }
    best
}

/// Mean distance from `sources` to every other node.
pub fn average_path_length(g: &Graph, sources: &[usize]) -> f64 {
    let mut total = 0u64;
    let mut pairs = 0u64;
    for &s in sources {
        for (v, d) in g.bfs_distances(s).into_iter().enumerate() {
            if v != s && d != usize::MAX {
                total += d as u64;
                pairs += 1;
            }
        }
    }
    if pairs == 0 {
        0.0
    } else {
        total as f64 / pairs as f64
    }
}

/// Computes the statistics of a connected graph. Distance estimates use
/// `path_samples` random BFS sources drawn from `seed`.
pub fn graph_stats(g: &Graph, seed: u64, path_samples: usize) -> Result<GraphStats> {
    let n = g.node_count();
    if n == 0 || !g.is_connected() {
        return domain("statistics need a connected graph; take the largest component first");
    }
    let ws = decompose_whiskers(g)?;
    let total = g.total_volume() as f64;
    let squares: f64 = g.degrees().map(|d| (d * d) as f64).sum();
    let mut rng = seeded_rng(seed);
    let sources = sample(&mut rng, n, path_samples.clamp(1, n)).into_vec();
    Ok(GraphStats {
        nodes: n,
        edges: g.edge_count(),
        core_node_frac: ws.core_node_fraction(),
        core_edge_frac: ws.core_edge_fraction(),
        avg_degree: total / n as f64,
        second_order_degree: if total > 0.0 { squares / total } else { 0.0 },
        clustering: average_clustering(g),
        diameter: estimate_diameter(g, sources[0]),
        avg_path_length: average_path_length(g, &sources),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_clique, gen_grid, gen_preferential_attachment};

    #[test]
    fn clique() {
        let s = graph_stats(&gen_clique(4), 1, 10).unwrap();
        assert_eq!((s.nodes, s.edges), (4, 6));
        assert_eq!(s.avg_degree, 3.0);
        assert_eq!(s.second_order_degree, 3.0);
        assert_eq!(s.clustering, 1.0);
        assert_eq!(s.diameter, 1);
        assert_eq!(s.avg_path_length, 1.0);
        assert_eq!(s.core_node_frac, 1.0);
    }

    #[test]
    fn path() {
        let g = gen_grid(&[4]);
        for seed in 0..8 {
            let s = graph_stats(&g, seed, 4).unwrap();
            assert_eq!(s.diameter, 3);
            assert_eq!(s.clustering, 0.0);
            assert!((s.avg_path_length - 20.0 / 12.0).abs() < 1e-12);
        }
    }

    #[test]
    fn invariants_on_random_graph() {
        let g = gen_preferential_attachment(300, 2, 5).unwrap();
        let s = graph_stats(&g, 3, 50).unwrap();
        assert!(s.second_order_degree > s.avg_degree);
        assert!((0.0..=1.0).contains(&s.clustering));
        assert!(s.diameter as f64 >= s.avg_path_length && s.avg_path_length >= 1.0);
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert!(graph_stats(&g, 0, 1).is_err());
    }

    #[test]
    fn csv_row() {
        let mut buf = Vec::new();
        graph_stats(&gen_clique(4), 0, 4)
            .unwrap()
            .write_csv("k4", &mut buf)
            .unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().nth(1).unwrap(), "k4,4,6,1,1,3,3,1,1,1");
    }
}
