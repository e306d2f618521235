//! Conductance of node sets and sweep cuts over node orderings.

use crate::error::{domain, Result};
use crate::graph::Graph;

/// `cut / min(volume, total - volume)`.
///
/// Every conductance value in the crate goes through this function, so two
/// cuts with the same counts always compare bit-equal.
#[inline]
pub fn conductance_ratio(cut: u64, volume: u64, total: u64) -> f64 {
    let den = volume.min(total - volume);
    cut as f64 / den as f64
}

/// A node set with its boundary and volume counts.
///
/// `volume == cut_edges + 2 * internal_edges` holds for every value built by
/// this crate.
#[derive(Clone, Debug, PartialEq)]
pub struct Cut {
    pub members: Vec<usize>,
    pub cut_edges: u64,
    pub internal_edges: u64,
    pub volume: u64,
    pub phi: f64,
}

impl Cut {
    pub(crate) fn from_counts(members: Vec<usize>, cut_edges: u64, volume: u64, total: u64) -> Cut {
        debug_assert!(volume >= cut_edges && (volume - cut_edges).is_multiple_of(2));
        Cut {
            members,
            cut_edges,
            internal_edges: (volume - cut_edges) / 2,
            volume,
            phi: conductance_ratio(cut_edges, volume, total),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Conductance of `set` in `g`.
///
/// Errors on an empty set, the full node set, out-of-range or repeated ids,
/// and on sets where either side has zero volume.
pub fn conductance(g: &Graph, set: &[usize]) -> Result<Cut> {
    let n = g.node_count();
    if set.is_empty() {
        return domain("conductance of the empty set is undefined");
    }
    let mut in_set = vec![false; n];
    for &v in set {
        if v >= n {
            return domain(format!("node {v} out of range for {n} nodes"));
        }
        if in_set[v] {
            return domain(format!("node {v} listed twice"));
        }
        in_set[v] = true;
    }
    if set.len() == n {
        return domain("conductance of the full node set is undefined");
    }
    let mut cut = 0u64;
    let mut volume = 0u64;
    for &u in set {
        volume += g.degree(u) as u64;
        cut += g.neighbors(u).iter().filter(|&&v| !in_set[v]).count() as u64;
    }
    if volume == 0 || volume == g.total_volume() {
        return domain("one side of the cut has zero volume");
    }
    Ok(Cut::from_counts(
        set.to_vec(),
        cut,
        volume,
        g.total_volume(),
    ))
}

/// One prefix of a sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepPoint {
    pub size: usize,
    pub cut_edges: u64,
    pub volume: u64,
    /// NaN when the prefix leaves a zero-volume side.
    pub phi: f64,
}

#[derive(Clone, Debug)]
pub struct Sweep {
    pub best: Cut,
    pub series: Vec<SweepPoint>,
}

/// Running `(cut, volume)` of every prefix of `ranking`.
///
/// `in_set` must be all-false on entry and is restored before returning.
pub(crate) fn prefix_counts(
    g: &Graph,
    ranking: &[usize],
    in_set: &mut [bool],
) -> Result<Vec<(u64, u64)>> {
    let mut out = Vec::with_capacity(ranking.len());
    let mut cut: i64 = 0;
    let mut volume: u64 = 0;
    for (i, &v) in ranking.iter().enumerate() {
        let failure = if v >= g.node_count() {
            Some(format!("node {v} out of range"))
        } else if in_set[v] {
            Some(format!("node {v} appears twice in the ranking"))
        } else {
            None
        };
        if let Some(msg) = failure {
            for &u in &ranking[..i] {
                in_set[u] = false;
            }
            return domain(msg);
        }
        let d = g.degree(v) as i64;
        let inside = g.neighbors(v).iter().filter(|&&u| in_set[u]).count() as i64;
        cut += d - 2 * inside;
        volume += d as u64;
        in_set[v] = true;
        out.push((cut as u64, volume));
    }
    for &v in ranking {
        in_set[v] = false;
    }
    Ok(out)
}

/// Sweeps the prefixes of `ranking` and returns the lowest-conductance one
/// (ties go to the shorter prefix) together with the whole series.
///
/// `ranking` may cover only part of the graph.
pub fn sweep_cut(g: &Graph, ranking: &[usize]) -> Result<Sweep> {
    let total = g.total_volume();
    let mut in_set = vec![false; g.node_count()];
    let counts = prefix_counts(g, ranking, &mut in_set)?;
    let mut series: Vec<SweepPoint> = Vec::with_capacity(counts.len());
    let mut best: Option<usize> = None;
    for (i, &(cut, volume)) in counts.iter().enumerate() {
        let defined = volume > 0 && volume < total && i + 1 < g.node_count();
        let phi = if defined {
            conductance_ratio(cut, volume, total)
        } else {
            f64::NAN
        };
        if defined && best.is_none_or(|b| phi < series[b].phi) {
            best = Some(i);
        }
        series.push(SweepPoint {
            size: i + 1,
            cut_edges: cut,
            volume,
            phi,
        });
    }
    let Some(b) = best else {
        return domain("no prefix of the ranking has a defined conductance");
    };
    let p = series[b];
    Ok(Sweep {
        best: Cut::from_counts(ranking[..p.size].to_vec(), p.cut_edges, p.volume, total),
        series,
    })
}
