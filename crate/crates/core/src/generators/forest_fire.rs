use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::{Distribution, Geometric};

use super::seeded_rng;
use crate::error::{parameter, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ForestFireParams {
    pub n: usize,
    /// Forward burning probability; out-link counts have mean `p/(1-p)`.
    pub p_forward: f64,
    /// Backward burning probability; in-link counts have mean `p/(1-p)`.
    pub p_backward: f64,
}

/// Number of links to burn: geometric on {0, 1, 2, ...} with mean `p/(1-p)`.
fn burn_count(p: f64) -> Geometric {
    Geometric::new(1.0 - p).expect("probability validated")
}

/// Forest Fire graph. Generation keeps directed out/in link lists; the
/// returned graph is their undirected simplification.
pub fn gen_forest_fire(p: &ForestFireParams, seed: u64) -> Result<Graph> {
    if p.n == 0 {
        return parameter("forest fire needs n >= 1");
    }
    for (name, prob) in [("p_forward", p.p_forward), ("p_backward", p.p_backward)] {
        if !(0.0..1.0).contains(&prob) {
            return parameter(format!("{name} must lie in [0, 1), got {prob}"));
        }
    }
    let fwd = burn_count(p.p_forward);
    let bwd = burn_count(p.p_backward);
    let mut rng = seeded_rng(seed);

    let mut out_links: Vec<Vec<usize>> = vec![Vec::new(); p.n];
    let mut in_links: Vec<Vec<usize>> = vec![Vec::new(); p.n];
    // stamp[u] == v marks u as visited by the fire of node v
    let mut stamp = vec![usize::MAX; p.n];
    let mut queue = VecDeque::new();
    let mut candidates = Vec::new();

    for v in 1..p.n {
        let ambassador = rng.gen_range(0..v);
        stamp[v] = v;
        stamp[ambassador] = v;
        let mut burned = vec![ambassador];
        queue.push_back(ambassador);
        while let Some(u) = queue.pop_front() {
            let x = fwd.sample(&mut rng) as usize;
            let y = bwd.sample(&mut rng) as usize;
            for (links, want) in [(&out_links[u], x), (&in_links[u], y)] {
                if want == 0 {
                    continue;
                }
                candidates.clear();
                candidates.extend(links.iter().copied().filter(|&z| stamp[z] != v));
                let take = want.min(candidates.len());
                let (chosen, _) = candidates.partial_shuffle(&mut rng, take);
                for &z in chosen.iter() {
                    stamp[z] = v;
                    burned.push(z);
                    queue.push_back(z);
                }
            }
        }
        for &z in &burned {
            in_links[z].push(v);
        }
        out_links[v] = burned;
    }

    let edges = out_links
        .iter()
        .enumerate()
        .flat_map(|(v, outs)| outs.iter().map(move |&z| (v, z)));
    Ok(Graph::from_edges(p.n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_node() {
        let g = gen_forest_fire(
            &ForestFireParams {
                n: 1,
                p_forward: 0.3,
                p_backward: 0.3,
            },
            1,
        )
        .unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn no_burning_gives_recursive_tree() {
        let p = ForestFireParams {
            n: 500,
            p_forward: 0.0,
            p_backward: 0.0,
        };
        let g = gen_forest_fire(&p, 7).unwrap();
        assert_eq!(g.edge_count(), 499);
        assert!(g.is_connected());
    }

    #[test]
    fn deterministic_and_connected() {
        let p = ForestFireParams {
            n: 2000,
            p_forward: 0.35,
            p_backward: 0.3,
        };
        let a = gen_forest_fire(&p, 11).unwrap();
        let b = gen_forest_fire(&p, 11).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
        assert!(a.edge_count() > 2000);
        let c = gen_forest_fire(&p, 12).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn rejects_bad_probabilities() {
        let p = ForestFireParams {
            n: 10,
            p_forward: 1.0,
            p_backward: 0.1,
        };
        assert!(gen_forest_fire(&p, 0).is_err());
    }
}
