//! Local spectral partitioning: approximate personalized PageRank by push,
//! then a degree-normalized sweep.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rayon::prelude::*;

use crate::cut::{prefix_counts, sweep_cut, Cut};
use crate::error::{parameter, NcpError, Result};
use crate::generators::seeded_rng;
use crate::graph::Graph;
use crate::profile::{Method, NcpProfile};

pub const DEFAULT_ALPHA: f64 = 0.1;
pub const DEFAULT_GRID_LEN: usize = 100;
/// Target number of times each node is covered by some push support, per ε.
pub const DEFAULT_VISITS: f64 = 10.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalSpectralParams {
    /// Teleport probability.
    pub alpha: f64,
    /// Push threshold: pushes stop once every residual is below `epsilon * d(u)`.
    pub epsilon: f64,
    pub seed: usize,
}

impl LocalSpectralParams {
    pub fn new(seed: usize, epsilon: f64) -> LocalSpectralParams {
        LocalSpectralParams {
            alpha: DEFAULT_ALPHA,
            epsilon,
            seed,
        }
    }

    fn validate(&self, g: &Graph) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return parameter(format!("alpha must lie in (0, 1), got {}", self.alpha));
        }
        if !(self.epsilon > 0.0) || !self.epsilon.is_finite() {
            return parameter(format!("epsilon must be positive, got {}", self.epsilon));
        }
        if self.seed >= g.node_count() {
            return parameter(format!("seed node {} out of range", self.seed));
        }
        Ok(())
    }
}

/// Dense scratch space reused across push runs on one graph.
pub(crate) struct PushWorkspace {
    p: Vec<f64>,
    r: Vec<f64>,
    queued: Vec<bool>,
    touched: Vec<usize>,
    queue: VecDeque<usize>,
    marker: Vec<bool>,
}

impl PushWorkspace {
    pub(crate) fn new(n: usize) -> PushWorkspace {
        PushWorkspace {
            p: vec![0.0; n],
            r: vec![0.0; n],
            queued: vec![false; n],
            touched: Vec::new(),
            queue: VecDeque::new(),
            marker: vec![false; n],
        }
    }

    fn touch(&mut self, v: usize) {
        if self.p[v] == 0.0 && self.r[v] == 0.0 {
            self.touched.push(v);
        }
    }

    /// Runs the push loop and returns the support sorted by `p(u) / d(u)`
    /// descending, node id ascending on ties. Leaves the workspace clean.
    fn run(&mut self, g: &Graph, prm: &LocalSpectralParams) -> Vec<(usize, f64)> {
        let (alpha, eps) = (prm.alpha, prm.epsilon);
        let s = prm.seed;
        if g.degree(s) == 0 {
            return vec![(s, 1.0)];
        }
        self.touch(s);
        self.r[s] = 1.0;
        if 1.0 >= eps * g.degree(s) as f64 {
            self.queue.push_back(s);
            self.queued[s] = true;
        }
        while let Some(u) = self.queue.pop_front() {
            self.queued[u] = false;
            let d = g.degree(u) as f64;
            let ru = self.r[u];
            if ru < eps * d {
                continue;
            }
            self.p[u] += alpha * ru;
            self.r[u] = (1.0 - alpha) * ru / 2.0;
            let share = (1.0 - alpha) * ru / (2.0 * d);
            for &v in g.neighbors(u) {
                self.touch(v);
                self.r[v] += share;
                if !self.queued[v] && self.r[v] >= eps * g.degree(v) as f64 {
                    self.queued[v] = true;
                    self.queue.push_back(v);
                }
            }
            if !self.queued[u] && self.r[u] >= eps * d {
                self.queued[u] = true;
                self.queue.push_back(u);
            }
        }
        let mut support: Vec<(usize, f64)> = self
            .touched
            .iter()
            .filter(|&&v| self.p[v] > 0.0)
            .map(|&v| (v, self.p[v]))
            .collect();
        for &v in &self.touched {
            self.p[v] = 0.0;
            self.r[v] = 0.0;
        }
        self.touched.clear();
        support.sort_by(|&(a, pa), &(b, pb)| {
            let sa = pa / g.degree(a) as f64;
            let sb = pb / g.degree(b) as f64;
            sb.total_cmp(&sa).then(a.cmp(&b))
        });
        support
    }
}

/// Approximate personalized PageRank vector of `p.seed`, as `(node, score)`
/// pairs ordered by degree-normalized score, highest first.
///
/// Uses the lazy-walk push rule with a FIFO queue; on return every residual
/// is below `epsilon * d(u)`.
pub fn approximate_pagerank(g: &Graph, p: &LocalSpectralParams) -> Result<Vec<(usize, f64)>> {
    p.validate(g)?;
    Ok(PushWorkspace::new(g.node_count()).run(g, p))
}

/// Best sweep cut of the push vector over prefixes holding at most half the
/// total volume.
pub fn local_spectral_cut(g: &Graph, p: &LocalSpectralParams) -> Result<Cut> {
    let support = approximate_pagerank(g, p)?;
    if support.is_empty() {
        return Err(NcpError::EmptySupport);
    }
    let half = g.total_volume() / 2;
    let mut order = Vec::new();
    let mut volume = 0u64;
    for &(v, _) in &support {
        volume += g.degree(v) as u64;
        if volume > half {
            break;
        }
        order.push(v);
    }
    if order.is_empty() {
        return Err(NcpError::EmptySupport);
    }
    Ok(sweep_cut(g, &order)?.best)
}

/// `count` geometrically spaced values from 1e-1 down to
/// `min(1e-7, 1 / (10 * total_volume))`.
pub fn default_eps_grid(total_volume: u64, count: usize) -> Vec<f64> {
    let hi: f64 = 1e-1;
    let lo = 1e-7f64.min(1.0 / (10.0 * total_volume.max(1) as f64));
    if count <= 1 {
        return vec![hi];
    }
    let step = (lo.ln() - hi.ln()) / (count - 1) as f64;
    (0..count)
        .map(|i| (hi.ln() + step * i as f64).exp())
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralNcpConfig {
    pub alpha: f64,
    /// Defaults to [`default_eps_grid`] with [`DEFAULT_GRID_LEN`] values.
    pub eps_grid: Option<Vec<f64>>,
    /// Seeds are drawn per ε until the push supports add up to this many
    /// times the node count, or every node has been a seed.
    pub visits_per_node: f64,
    pub rng_seed: u64,
}

impl Default for SpectralNcpConfig {
    fn default() -> Self {
        SpectralNcpConfig {
            alpha: DEFAULT_ALPHA,
            eps_grid: None,
            visits_per_node: DEFAULT_VISITS,
            rng_seed: 0,
        }
    }
}

fn run_epsilon(g: &Graph, cfg: &SpectralNcpConfig, eps: f64, stream: u64) -> NcpProfile {
    let n = g.node_count();
    let total = g.total_volume();
    let mut rng = seeded_rng(cfg.rng_seed);
    rng.set_stream(stream);
    let mut seeds: Vec<usize> = (0..n).collect();
    seeds.shuffle(&mut rng);
    let budget = cfg.visits_per_node * n as f64;
    let mut ws = PushWorkspace::new(n);
    let mut profile = NcpProfile::new();
    let mut covered = 0usize;
    let mut order = Vec::new();
    for &seed in &seeds {
        if covered as f64 >= budget {
            break;
        }
        let prm = LocalSpectralParams {
            alpha: cfg.alpha,
            epsilon: eps,
            seed,
        };
        let support = ws.run(g, &prm);
        covered += support.len().max(1);
        order.clear();
        let mut volume = 0u64;
        for &(v, _) in &support {
            volume += g.degree(v) as u64;
            if 2 * volume > total {
                break;
            }
            order.push(v);
        }
        if order.is_empty() {
            continue;
        }
        let counts = prefix_counts(g, &order, &mut ws.marker).expect("support has distinct nodes");
        profile.offer_prefixes(&order, &counts, total, Method::Spectral);
    }
    profile
}

/// Local spectral NCP: push runs over the ε grid and sampled seeds, with
/// every sweep prefix folded into the lower envelope.
///
/// Each ε runs independently on its own random stream, so the result does
/// not depend on thread scheduling.
pub fn ncp_local_spectral(g: &Graph, cfg: &SpectralNcpConfig) -> Result<NcpProfile> {
    if !(cfg.alpha > 0.0 && cfg.alpha < 1.0) {
        return parameter(format!("alpha must lie in (0, 1), got {}", cfg.alpha));
    }
    let grid = cfg
        .eps_grid
        .clone()
        .unwrap_or_else(|| default_eps_grid(g.total_volume(), DEFAULT_GRID_LEN));
    if let Some(bad) = grid.iter().find(|e| !(**e > 0.0)) {
        return parameter(format!("epsilon grid holds a non-positive value {bad}"));
    }
    let mut out = NcpProfile::new();
    if g.node_count() < 2 || g.total_volume() == 0 {
        return Ok(out);
    }
    let parts: Vec<NcpProfile> = grid
        .par_iter()
        .enumerate()
        .map(|(i, &eps)| run_epsilon(g, cfg, eps, i as u64))
        .collect();
    for p in &parts {
        out.merge(p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::conductance;
    use crate::generators::{gen_barbell, gen_clique};

    /// Exact lazy personalized PageRank, `p = alpha s + (1 - alpha) p W`
    /// with `W = (I + D^-1 A) / 2`, by Gaussian elimination.
    fn exact_pagerank(g: &Graph, seed: usize, alpha: f64) -> Vec<f64> {
        let n = g.node_count();
        // (I - (1-alpha) W^T) p = alpha e_seed
        let mut m = vec![vec![0.0; n + 1]; n];
        for i in 0..n {
            m[i][i] += 1.0 - (1.0 - alpha) / 2.0;
            for &j in g.neighbors(i) {
                m[i][j] -= (1.0 - alpha) / (2.0 * g.degree(j) as f64);
            }
        }
        m[seed][n] = alpha;
        for c in 0..n {
            let piv = (c..n)
                .max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs()))
                .unwrap();
            m.swap(c, piv);
            for r in 0..n {
                if r != c {
                    let f = m[r][c] / m[c][c];
                    for k in c..=n {
                        m[r][k] -= f * m[c][k];
                    }
                }
            }
        }
        (0..n).map(|i| m[i][n] / m[i][i]).collect()
    }

    #[test]
    fn isolated_seed_keeps_all_mass() {
        let mut e: Vec<_> = gen_clique(3).edges().collect();
        e.push((0, 1));
        let g = Graph::from_edges(4, e);
        let v = approximate_pagerank(&g, &LocalSpectralParams::new(3, 1e-4)).unwrap();
        assert_eq!(v, vec![(3, 1.0)]);
    }

    #[test]
    fn large_epsilon_is_seed_only() {
        let g = gen_barbell(3);
        for eps in [1.0, 2.0, 10.0] {
            let v = approximate_pagerank(&g, &LocalSpectralParams::new(0, eps)).unwrap();
            assert!(v.iter().all(|&(u, _)| u == 0), "{v:?}");
        }
        let r = local_spectral_cut(&g, &LocalSpectralParams::new(0, 10.0));
        assert!(matches!(r, Err(NcpError::EmptySupport)));
    }

    #[test]
    fn barbell_scores_follow_exact_pagerank() {
        let g = gen_barbell(3);
        let exact = exact_pagerank(&g, 0, DEFAULT_ALPHA);
        let left_min = (0..3)
            .map(|v| exact[v] / g.degree(v) as f64)
            .fold(f64::MAX, f64::min);
        let right_max = (3..6)
            .map(|v| exact[v] / g.degree(v) as f64)
            .fold(0.0, f64::max);
        assert!(left_min > right_max);
        let approx = approximate_pagerank(&g, &LocalSpectralParams::new(0, 1e-8)).unwrap();
        for &(v, p) in &approx {
            assert!((p - exact[v]).abs() < 1e-6, "node {v}: {p} vs {}", exact[v]);
        }
        let top: Vec<usize> = approx.iter().take(3).map(|&(v, _)| v).collect();
        let mut top = top;
        top.sort_unstable();
        assert_eq!(top, vec![0, 1, 2]);
    }

    #[test]
    fn barbell_cut_is_triangle() {
        let g = gen_barbell(3);
        let c = local_spectral_cut(&g, &LocalSpectralParams::new(0, 1e-6)).unwrap();
        let mut m = c.members.clone();
        m.sort_unstable();
        assert_eq!(m, vec![0, 1, 2]);
        assert_eq!(c.phi, 1.0 / 7.0);
    }

    #[test]
    fn clique_has_no_good_cut() {
        let g = gen_clique(5);
        for s in 0..5 {
            let c = local_spectral_cut(&g, &LocalSpectralParams::new(s, 1e-5)).unwrap();
            assert!(c.phi >= 0.6);
        }
    }

    #[test]
    fn pendant_path_seed_finds_path() {
        // K6 on 0..6, path 5-6-7-8-9
        let mut e: Vec<_> = gen_clique(6).edges().collect();
        e.extend([(5, 6), (6, 7), (7, 8), (8, 9)]);
        let g = Graph::from_edges(10, e);
        let exact = exact_pagerank(&g, 9, DEFAULT_ALPHA);
        let c = local_spectral_cut(&g, &LocalSpectralParams::new(9, 1e-7)).unwrap();
        assert!(c.members.iter().all(|&v| v >= 6), "{:?}", c.members);
        // the sweep follows the exact ordering on the path
        let mut by_exact: Vec<usize> = (6..10).collect();
        by_exact.sort_by(|&a, &b| {
            (exact[b] / g.degree(b) as f64).total_cmp(&(exact[a] / g.degree(a) as f64))
        });
        assert_eq!(by_exact[0], 9);
        assert_eq!(conductance(&g, &c.members).unwrap().phi, c.phi);
    }

    #[test]
    fn eps_grid_shape() {
        let grid = default_eps_grid(1000, 100);
        assert_eq!(grid.len(), 100);
        assert!((grid[0] - 0.1).abs() < 1e-15);
        assert!((grid[99] - 1e-7).abs() < 1e-18);
        assert!(grid.windows(2).all(|w| w[1] < w[0]));
        let big = default_eps_grid(10_000_000, 5);
        assert!((big[4] - 1e-8).abs() < 1e-20);
    }

    #[test]
    fn profile_points_match_conductance() {
        let g = gen_barbell(4);
        let p = ncp_local_spectral(&g, &SpectralNcpConfig::default()).unwrap();
        assert_eq!(p.phi(4), Some(1.0 / 13.0));
        for (k, pt) in p.iter() {
            assert_eq!(pt.witness.members().len(), k);
            assert_eq!(conductance(&g, pt.witness.members()).unwrap().phi, pt.phi);
        }
    }

    #[test]
    fn deterministic() {
        let g = crate::generators::gen_preferential_attachment(200, 2, 9).unwrap();
        let cfg = SpectralNcpConfig {
            rng_seed: 4,
            ..Default::default()
        };
        let a = ncp_local_spectral(&g, &cfg).unwrap().series();
        let b = ncp_local_spectral(&g, &cfg).unwrap().series();
        assert_eq!(a, b);
    }
}
