mod common;

use common::phi_near;
use ncp_core::generators::{
    default_swap_attempts, gen_chung_lu, gen_copying, gen_forest_fire, gen_grid,
    gen_preferential_attachment, rewire, ForestFireParams,
};
use ncp_core::{
    bag_of_whiskers, decompose_whiskers, largest_connected_component, ncp_flow, FlowNcpConfig,
    Graph,
};

#[test]
fn equal_weights_reduce_to_erdos_renyi() {
    let (n, w, runs) = (1000usize, 8.0, 50);
    let weights = vec![w; n];
    let p = w / n as f64;
    let pairs = (n * (n - 1) / 2) as f64;
    let mean: f64 = (0..runs)
        .map(|s| 2.0 * gen_chung_lu(&weights, s).unwrap().edge_count() as f64 / n as f64)
        .sum::<f64>()
        / runs as f64;
    let expect = w * (n - 1) as f64 / n as f64;
    let sigma = (4.0 * pairs * p * (1.0 - p)).sqrt() / n as f64 / (runs as f64).sqrt();
    assert!(
        (mean - expect).abs() <= 3.0 * sigma,
        "mean degree {mean}, expected {expect} +- {sigma}"
    );
}

#[test]
fn chung_lu_node_degrees_match_weights() {
    let (n, runs) = (500usize, 200u64);
    let weights: Vec<f64> = (0..n)
        .map(|i| 15.0 * ((i + 10) as f64 / 10.0).powf(-0.6))
        .collect();
    let total: f64 = weights.iter().sum();
    let mut sums = vec![0.0; n];
    for s in 0..runs {
        let g = gen_chung_lu(&weights, s).unwrap();
        for (v, d) in g.degrees().enumerate() {
            sums[v] += d as f64;
        }
    }
    for i in 0..n {
        let (mut mu, mut var) = (0.0, 0.0);
        for j in 0..n {
            if j != i {
                let q = (weights[i] * weights[j] / total).min(1.0);
                mu += q;
                var += q * (1.0 - q);
            }
        }
        let mean = sums[i] / runs as f64;
        let sigma = (var / runs as f64).sqrt();
        assert!(
            (mean - mu).abs() <= 4.0 * sigma,
            "node {i}: {mean} vs {mu} +- {sigma}"
        );
    }
}

#[test]
fn pure_uniform_copying_is_light_tailed() {
    let n = 20_000;
    let g = gen_copying(n, 2, 1.0, 5).unwrap();
    let max_uniform = g.degrees().max().unwrap();
    let bound = 3.0 * 2.0 * (n as f64).ln();
    assert!(
        (max_uniform as f64) <= bound,
        "max degree {max_uniform} > {bound}"
    );
    let pa = gen_preferential_attachment(n, 2, 5).unwrap();
    assert!(pa.degrees().max().unwrap() > 4 * max_uniform);
}

#[test]
fn copying_with_one_link_is_a_tree() {
    for beta in [0.0, 0.3, 1.0] {
        let g = gen_copying(500, 1, beta, 9).unwrap();
        assert_eq!(g.edge_count(), 499);
        assert!(g.is_connected());
    }
}

#[test]
fn preferential_attachment_profile_is_shallower_than_a_grid() {
    let pa = gen_preferential_attachment(10_000, 2, 1).unwrap();
    let grid = gen_grid(&[100, 100]);
    let p = ncp_flow(&pa, &FlowNcpConfig::default());
    let q = ncp_flow(&grid, &FlowNcpConfig::default());
    let deepest = p
        .iter()
        .filter(|&(k, _)| k <= 100)
        .map(|(_, pt)| pt.phi)
        .fold(f64::INFINITY, f64::min);
    let grid_at_100 = phi_near(&q, 100);
    assert!(
        deepest > grid_at_100,
        "PA min {deepest} vs grid {grid_at_100}"
    );
}

#[test]
fn copying_model_has_no_deep_dip() {
    let g = gen_copying(50_000, 2, 0.05, 2).unwrap();
    let (g, _) = largest_connected_component(&g).unwrap();
    let mut p = ncp_flow(&g, &FlowNcpConfig::default());
    p.merge(&bag_of_whiskers(&decompose_whiskers(&g).unwrap()).profile);
    let (k, pt) = p.global_min().unwrap();
    // within half a decade of the large-scale level, where a forest fire
    // graph of this size dips by more than a full decade
    let far = phi_near(&p, g.node_count() / 5);
    let depth = (far / pt.phi).log10();
    assert!(
        k <= 10 || depth < 0.5,
        "minimum {} at k = {k}, depth {depth:.2} decades",
        pt.phi
    );
}

fn forest_fire(seed: u64) -> Graph {
    let p = ForestFireParams {
        n: 5000,
        p_forward: 0.35,
        p_backward: 0.3,
    };
    largest_connected_component(&gen_forest_fire(&p, seed).unwrap())
        .unwrap()
        .0
}

#[test]
fn rewiring_shrinks_whiskers() {
    for seed in 0..3 {
        let g = forest_fire(seed);
        let r = rewire(&g, default_swap_attempts(&g), seed);
        let (r, _) = largest_connected_component(&r).unwrap();
        let before = decompose_whiskers(&g)
            .unwrap()
            .largest()
            .map_or(0, |w| w.size());
        let after = decompose_whiskers(&r)
            .unwrap()
            .largest()
            .map_or(0, |w| w.size());
        assert!(after <= before, "seed {seed}: {after} > {before}");
    }
}

#[test]
fn core_profile_sits_above_the_whiskered_one() {
    let g = forest_fire(4);
    let ws = decompose_whiskers(&g).unwrap();
    assert!(!ws.whiskers.is_empty());
    let (core, _) = g.induced_subgraph(&ws.core);
    let (core, _) = largest_connected_component(&core).unwrap();
    let mut full = ncp_flow(&g, &FlowNcpConfig::default());
    full.merge(&bag_of_whiskers(&ws).profile);
    let inner = ncp_flow(&core, &FlowNcpConfig::default());
    let (_, a) = full.global_min().unwrap();
    let (_, b) = inner.global_min().unwrap();
    assert!(b.phi > a.phi, "core minimum {} vs full {}", b.phi, a.phi);
    assert!(decompose_whiskers(&core).unwrap().whiskers.is_empty());
}
