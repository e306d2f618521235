use crate::cut::sweep_cut;
use crate::error::{domain, NcpError, Result};
use crate::graph::Graph;
use crate::spectral::fiedler;

pub const DEFAULT_BISECT_TOL: f64 = 1e-8;
const MAX_ITER: usize = 100_000;

/// Nodes ordered by the approximate Fiedler vector `D^-1/2 x`, descending,
/// node id ascending on ties. Returns the ordering and whether the eigenvector
/// met `tol` within `max_iter` steps.
pub fn spectral_order(g: &Graph, tol: f64, max_iter: usize) -> (Vec<usize>, bool) {
    let run = fiedler(g, tol, max_iter);
    let score: Vec<f64> = run
        .vector
        .iter()
        .enumerate()
        .map(|(v, x)| x / (g.degree(v) as f64).sqrt())
        .collect();
    let mut order: Vec<usize> = (0..g.node_count()).collect();
    order.sort_by(|&a, &b| score[b].total_cmp(&score[a]).then(a.cmp(&b)));
    (order, run.converged)
}

/// Spectral bisection: sweep over the Fiedler ordering, split at the
/// best-conductance prefix. The smaller-volume side comes first.
pub fn spectral_bisect(g: &Graph, tol: f64) -> Result<(Vec<usize>, Vec<usize>)> {
    if g.node_count() < 2 || !g.is_connected() {
        return domain("spectral bisection needs a connected graph with at least two nodes");
    }
    let run = fiedler(g, tol, MAX_ITER);
    if !run.converged {
        return Err(NcpError::NoConvergence {
            iterations: run.iterations,
            residual: run.residual,
        });
    }
    let (order, _) = spectral_order(g, tol, MAX_ITER);
    split_at_best(g, &order)
}

pub(crate) fn split_at_best(g: &Graph, order: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    let sweep = sweep_cut(g, order)?;
    let k = sweep.best.len();
    let (a, b) = (order[..k].to_vec(), order[k..].to_vec());
    if 2 * sweep.best.volume <= g.total_volume() {
        Ok((a, b))
    } else {
        Ok((b, a))
    }
}
