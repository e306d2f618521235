use rand::Rng;

use super::seeded_rng;
use crate::error::{parameter, Result};
use crate::graph::Graph;

/// Power-law expected-degree sequence `w_i = c * i^(-1/(beta-1))` for
/// `i0 <= i < n + i0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChungLuParams {
    pub n: usize,
    /// Power-law exponent, in (2, 3).
    pub beta: f64,
    /// Target average expected degree.
    pub avg_degree: f64,
    /// Maximum expected degree.
    pub max_degree: f64,
}

impl ChungLuParams {
    pub fn alpha(&self) -> f64 {
        (self.beta - 2.0) / (self.beta - 1.0)
    }

    pub fn scale(&self) -> f64 {
        self.alpha() * self.avg_degree * (self.n as f64).powf(1.0 / (self.beta - 1.0))
    }

    pub fn first_index(&self) -> f64 {
        self.n as f64 * (self.alpha() * self.avg_degree / self.max_degree).powf(self.beta - 1.0)
    }

    /// Expected degrees, largest first.
    pub fn weights(&self) -> Vec<f64> {
        let c = self.scale();
        let i0 = self.first_index();
        let exp = -1.0 / (self.beta - 1.0);
        (0..self.n).map(|j| c * (i0 + j as f64).powf(exp)).collect()
    }

    pub fn validate(&self) -> Result<Vec<f64>> {
        if self.n < 2 {
            return parameter("Chung-Lu graph needs n >= 2");
        }
        if !(self.beta > 2.0 && self.beta < 3.0) {
            return parameter(format!("beta must lie in (2, 3), got {}", self.beta));
        }
        if !(self.avg_degree > 0.0 && self.max_degree > 0.0) {
            return parameter("expected degrees must be positive");
        }
        let w = self.weights();
        let total: f64 = w.iter().sum();
        let (idx, wmax) =
            w.iter().copied().enumerate().fold(
                (0, f64::MIN),
                |acc, (i, x)| if x > acc.1 { (i, x) } else { acc },
            );
        if wmax * wmax >= total {
            return parameter(format!(
                "w_{idx} = {wmax} violates max w_i^2 < sum w_k = {total}"
            ));
        }
        Ok(w)
    }
}

/// Random graph with independent edges `P(ij) = min(1, w_i w_j / sum w)`.
///
/// Pairs are visited in order of decreasing weight and skipped with
/// geometric jumps, so the cost is linear in nodes plus edges while the
/// edge distribution stays exactly that of independent pair trials.
pub fn gen_chung_lu(weights: &[f64], seed: u64) -> Result<Graph> {
    let n = weights.len();
    if weights.iter().any(|w| !(w.is_finite() && *w >= 0.0)) {
        return parameter("expected degrees must be finite and nonnegative");
    }
    let total: f64 = weights.iter().sum();
    if n < 2 || total <= 0.0 {
        return Ok(Graph::empty(n));
    }
    let rho = 1.0 / total;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| weights[b].total_cmp(&weights[a]).then(a.cmp(&b)));
    let w: Vec<f64> = order.iter().map(|&i| weights[i]).collect();
    if w[0] * w[1] * rho > 1.0 {
        log::warn!("some Chung-Lu pair probabilities exceed 1 and are clipped");
    }

    let mut rng = seeded_rng(seed);
    let mut edges = Vec::new();
    for u in 0..n - 1 {
        let mut v = u + 1;
        let mut p = (w[u] * w[v] * rho).min(1.0);
        while v < n && p > 0.0 {
            if p < 1.0 {
                let r: f64 = rng.gen();
                let skip = (r.ln() / (1.0 - p).ln()).floor();
                if skip >= (n - v) as f64 {
                    break;
                }
                v += skip as usize;
            }
            if v < n {
                let q = (w[u] * w[v] * rho).min(1.0);
                let r: f64 = rng.gen();
                if r < q / p {
                    edges.push((order[u], order[v]));
                }
                p = q;
                v += 1;
            }
        }
    }
    Ok(Graph::from_edges(n, edges))
}

/// Power-law Chung-Lu graph. Returns the raw graph; callers usually take its
/// largest component.
pub fn gen_chung_lu_powerlaw(p: &ChungLuParams, seed: u64) -> Result<Graph> {
    let w = p.validate()?;
    gen_chung_lu(&w, seed)
}
