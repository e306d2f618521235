use rayon::prelude::*;

use super::bisect::spectral_order;
use super::mqi::mqi_trace;
use crate::cut::prefix_counts;
use crate::graph::Graph;
use crate::profile::{Method, NcpProfile};

pub const DEFAULT_DEPTH_CAP: usize = 40;

#[derive(Clone, Debug, PartialEq)]
pub struct FlowNcpConfig {
    pub depth_cap: usize,
    /// Pieces this small are not split further.
    pub min_piece: usize,
    /// Power-iteration budget per piece. The ordering is used even when the
    /// eigenvector has not converged; it only has to seed MQI.
    pub power_iterations: usize,
    /// Each side of a split keeps at least this fraction of the piece's
    /// internal volume, when such a split exists.
    pub balance: f64,
}

impl Default for FlowNcpConfig {
    fn default() -> Self {
        FlowNcpConfig {
            depth_cap: DEFAULT_DEPTH_CAP,
            min_piece: 3,
            power_iterations: 200,
            balance: 0.25,
        }
    }
}

/// Flow NCP: recursive spectral bisection, with each piece of the tree
/// scored in the full graph and refined by MQI.
///
/// A disconnected piece splits into its components. Every prefix of each
/// piece's spectral ordering, read from both ends, is folded in as well.
pub fn ncp_flow(g: &Graph, cfg: &FlowNcpConfig) -> NcpProfile {
    if g.node_count() < 2 || g.total_volume() == 0 {
        return NcpProfile::new();
    }
    let all: Vec<usize> = (0..g.node_count()).collect();
    piece_profile(g, &all, 0, cfg)
}

fn fold_order(g: &Graph, order: &[usize], marker: &mut [bool], out: &mut NcpProfile) {
    let counts = prefix_counts(g, order, marker).expect("orders hold distinct nodes");
    out.offer_prefixes(order, &counts, g.total_volume(), Method::Flow);
}

/// Best prefix of `order` in `h` whose two sides each hold at least
/// `balance` of the volume, or the best prefix overall if none does.
fn balanced_split(h: &Graph, order: &[usize], balance: f64) -> usize {
    let total = h.total_volume();
    let mut marker = vec![false; h.node_count()];
    let counts = prefix_counts(h, order, &mut marker).expect("distinct nodes");
    let floor = (balance * total as f64).ceil() as u64;
    let mut best: Option<(usize, f64)> = None;
    let mut fallback: Option<(usize, f64)> = None;
    for (i, &(cut, vol)) in counts[..counts.len() - 1].iter().enumerate() {
        let small = vol.min(total - vol);
        if small == 0 {
            continue;
        }
        let phi = cut as f64 / small as f64;
        if fallback.is_none_or(|(_, b)| phi < b) {
            fallback = Some((i + 1, phi));
        }
        if small >= floor && best.is_none_or(|(_, b)| phi < b) {
            best = Some((i + 1, phi));
        }
    }
    best.or(fallback).map_or(1, |(k, _)| k)
}

fn offer_child(g: &Graph, child: &[usize], out: &mut NcpProfile) {
    let total = g.total_volume();
    let volume = g.volume(child);
    if volume == 0 || 2 * volume > total {
        return;
    }
    match mqi_trace(g, child) {
        Ok(trace) => {
            for c in &trace {
                out.offer_cut(c, Method::Flow);
            }
        }
        Err(e) => log::debug!("skipping piece of {} nodes: {e}", child.len()),
    }
}

fn piece_profile(g: &Graph, piece: &[usize], depth: usize, cfg: &FlowNcpConfig) -> NcpProfile {
    let mut out = NcpProfile::new();
    if piece.len() <= cfg.min_piece.max(1) || depth >= cfg.depth_cap {
        return out;
    }
    let (h, map) = g.induced_subgraph(piece);
    let comps = h.components();
    let children: Vec<Vec<usize>> = if comps.len() > 1 {
        comps
            .into_iter()
            .map(|c| c.into_iter().map(|v| map[v]).collect())
            .collect()
    } else {
        let (local, _) = spectral_order(&h, 0.0, cfg.power_iterations);
        let mut order: Vec<usize> = local.iter().map(|&v| map[v]).collect();
        let mut marker = vec![false; g.node_count()];
        fold_order(g, &order, &mut marker, &mut out);
        let k = balanced_split(&h, &local, cfg.balance);
        let left = order[..k].to_vec();
        order.reverse();
        fold_order(g, &order, &mut marker, &mut out);
        let right = order[..piece.len() - k].to_vec();
        vec![left, right]
    };
    for child in &children {
        offer_child(g, child, &mut out);
    }
    let below: Vec<NcpProfile> = children
        .par_iter()
        .map(|c| piece_profile(g, c, depth + 1, cfg))
        .collect();
    for p in &below {
        out.merge(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::conductance;
    use crate::generators::{gen_barbell, gen_clique};

    #[test]
    fn barbell_has_bridge_point() {
        let g = gen_barbell(3);
        let p = ncp_flow(&g, &FlowNcpConfig::default());
        assert_eq!(p.phi(3), Some(1.0 / 7.0));
    }

    #[test]
    fn big_barbell_global_min_is_bridge() {
        let g = gen_barbell(8);
        let p = ncp_flow(&g, &FlowNcpConfig::default());
        let (k, pt) = p.global_min().unwrap();
        assert_eq!(k, 8);
        assert_eq!(pt.cut_edges, 1);
        assert_eq!(pt.phi, 1.0 / 57.0);
    }

    #[test]
    fn points_rescore_exactly() {
        let mut e: Vec<_> = gen_clique(6).edges().collect();
        e.extend([(5, 6), (6, 7), (7, 8), (8, 9), (9, 6), (2, 10), (10, 11)]);
        let g = Graph::from_edges(12, e);
        let p = ncp_flow(&g, &FlowNcpConfig::default());
        assert!(!p.is_empty());
        for (k, pt) in p.iter() {
            let c = conductance(&g, pt.witness.members()).unwrap();
            assert_eq!((c.len(), c.phi), (k, pt.phi));
        }
    }
}
