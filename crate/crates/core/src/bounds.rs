//! Spectral lower bound on the conductance of every cut.

use crate::error::{domain, NcpError, Result};
use crate::graph::Graph;
use crate::spectral::fiedler;

pub const DEFAULT_BOUND_TOL: f64 = 1e-8;
pub const DEFAULT_BOUND_ITER: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct SpectralBound {
    /// Second-smallest eigenvalue of the normalized Laplacian, i.e. the
    /// minimum of `x'Lx / x'Dx` over `x` orthogonal to the degree vector.
    pub lambda: f64,
    /// `lambda / 2`.
    pub bound: f64,
    pub residual: f64,
    /// Minimizing `x`, scaled so that `x'Dx = 1`.
    pub vector: Vec<f64>,
}

/// `lambda_G / 2`, a lower bound on the conductance of any cut of `g`.
pub fn spectral_lower_bound(g: &Graph, tol: f64, max_iter: usize) -> Result<SpectralBound> {
    if g.node_count() < 2 || !g.is_connected() {
        return domain("spectral bound needs a connected graph with at least two nodes");
    }
    let run = fiedler(g, tol, max_iter);
    if !run.converged {
        return Err(NcpError::NoConvergence {
            iterations: run.iterations,
            residual: run.residual,
        });
    }
    let lambda = run.lambda.clamp(0.0, 2.0);
    let vector = run
        .vector
        .iter()
        .enumerate()
        .map(|(v, x)| x / (g.degree(v) as f64).sqrt())
        .collect();
    Ok(SpectralBound {
        lambda,
        bound: (lambda / 2.0).min(1.0),
        residual: run.residual,
        vector,
    })
}
