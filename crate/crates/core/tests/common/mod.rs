#![allow(dead_code)]

use ncp_core::generators::seeded_rng;
use ncp_core::{
    bag_of_whiskers, decompose_whiskers, ncp_flow, ncp_local_spectral, FlowNcpConfig, Graph,
    NcpProfile, SpectralNcpConfig,
};
use rand::Rng;

/// Zachary's karate club, nodes renumbered from 0.
pub const KARATE_EDGES: &[(usize, usize)] = &[
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (0, 6),
    (0, 7),
    (0, 8),
    (0, 10),
    (0, 11),
    (0, 12),
    (0, 13),
    (0, 17),
    (0, 19),
    (0, 21),
    (0, 31),
    (1, 2),
    (1, 3),
    (1, 7),
    (1, 13),
    (1, 17),
    (1, 19),
    (1, 21),
    (1, 30),
    (2, 3),
    (2, 7),
    (2, 8),
    (2, 9),
    (2, 13),
    (2, 27),
    (2, 28),
    (2, 32),
    (3, 7),
    (3, 12),
    (3, 13),
    (4, 6),
    (4, 10),
    (5, 6),
    (5, 10),
    (5, 16),
    (6, 16),
    (8, 30),
    (8, 32),
    (8, 33),
    (9, 33),
    (13, 33),
    (14, 32),
    (14, 33),
    (15, 32),
    (15, 33),
    (18, 32),
    (18, 33),
    (19, 33),
    (20, 32),
    (20, 33),
    (22, 32),
    (22, 33),
    (23, 25),
    (23, 27),
    (23, 29),
    (23, 32),
    (23, 33),
    (24, 25),
    (24, 27),
    (24, 31),
    (25, 31),
    (26, 29),
    (26, 33),
    (27, 33),
    (28, 31),
    (28, 33),
    (29, 32),
    (29, 33),
    (30, 32),
    (30, 33),
    (31, 32),
    (31, 33),
    (32, 33),
];

pub fn karate() -> Graph {
    Graph::from_edges(34, KARATE_EDGES.iter().copied())
}

/// Random connected graph: a random spanning tree plus each other pair
/// with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = seeded_rng(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Mixed-density corpus of connected graphs with 4 to 14 nodes.
pub fn small_corpus(count: usize) -> Vec<Graph> {
    let densities = [0.05, 0.15, 0.3, 0.5, 0.8];
    (0..count)
        .map(|i| {
            let n = 4 + i % 11;
            random_connected(n, densities[i % densities.len()], 1000 + i as u64)
        })
        .collect()
}

/// Lower envelope of the spectral, flow and whisker engines.
pub fn envelope(g: &Graph, seed: u64) -> NcpProfile {
    let cfg = SpectralNcpConfig {
        rng_seed: seed,
        ..Default::default()
    };
    let mut p = ncp_local_spectral(g, &cfg).expect("spectral engine");
    p.merge(&ncp_flow(g, &FlowNcpConfig::default()));
    if let Ok(ws) = decompose_whiskers(g) {
        p.merge(&bag_of_whiskers(&ws).profile);
    }
    p
}

/// Least-squares slope and R^2 of `y` on `x`.
pub fn regression(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for &(x, y) in points {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    let r2 = if syy == 0.0 {
        1.0
    } else {
        sxy * sxy / (sxx * syy)
    };
    (sxy / sxx, r2)
}

/// Log-log slope of a profile over `lo <= k <= hi`.
pub fn loglog_slope(p: &NcpProfile, lo: usize, hi: usize) -> f64 {
    let pts: Vec<(f64, f64)> = p
        .iter()
        .filter(|(k, _)| (lo..=hi).contains(k))
        .map(|(k, pt)| ((k as f64).ln(), pt.phi.ln()))
        .collect();
    regression(&pts).0
}

/// Profile value at the recorded size nearest to `k`.
pub fn phi_near(p: &NcpProfile, k: usize) -> f64 {
    p.iter()
        .min_by_key(|(kk, _)| kk.abs_diff(k))
        .map(|(_, pt)| pt.phi)
        .expect("nonempty profile")
}
