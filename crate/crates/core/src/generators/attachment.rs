use rand::Rng;

use super::seeded_rng;
use crate::error::{parameter, Result};
use crate::graph::Graph;

fn check_sizes(n: usize, m: usize) -> Result<()> {
    if m == 0 || n <= m {
        return parameter(format!("need n > m >= 1, got n = {n}, m = {m}"));
    }
    Ok(())
}

fn seed_clique(m: usize, edges: &mut Vec<(usize, usize)>) {
    for u in 0..=m {
        for v in u + 1..=m {
            edges.push((u, v));
        }
    }
}

/// Barabási-Albert graph grown from an `(m+1)`-clique. Each arrival draws
/// targets proportionally to degree and redraws repeats until it has `m`
/// distinct ones.
pub fn gen_preferential_attachment(n: usize, m: usize, seed: u64) -> Result<Graph> {
    check_sizes(n, m)?;
    let mut rng = seeded_rng(seed);
    let mut edges = Vec::new();
    seed_clique(m, &mut edges);
    // every edge endpoint once: uniform draws from here are degree-biased
    let mut ends: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut targets = Vec::with_capacity(m);
    for v in m + 1..n {
        targets.clear();
        while targets.len() < m {
            let t = ends[rng.gen_range(0..ends.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((v, t));
            ends.push(v);
            ends.push(t);
        }
    }
    Ok(Graph::from_edges(n, edges))
}

/// Copying model grown from an `(m+1)`-clique. Each arrival picks a uniform
/// ambassador `u`; each of its `m` links goes to a uniform existing node with
/// probability `copy_beta` and otherwise to a uniform neighbor of `u`.
/// Repeated targets are redrawn.
pub fn gen_copying(n: usize, m: usize, copy_beta: f64, seed: u64) -> Result<Graph> {
    check_sizes(n, m)?;
    if !(0.0..=1.0).contains(&copy_beta) {
        return parameter(format!("copy_beta must lie in [0, 1], got {copy_beta}"));
    }
    let mut rng = seeded_rng(seed);
    let mut edges = Vec::new();
    seed_clique(m, &mut edges);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut targets = Vec::with_capacity(m);
    for v in m + 1..n {
        let u = rng.gen_range(0..v);
        targets.clear();
        while targets.len() < m {
            let t = if rng.gen::<f64>() < copy_beta {
                rng.gen_range(0..v)
            } else {
                adj[u][rng.gen_range(0..adj[u].len())]
            };
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((v, t));
            adj[v].push(t);
            adj[t].push(v);
        }
    }
    Ok(Graph::from_edges(n, edges))
}
