//! Exhaustive subset enumeration for small graphs.

use crate::cut::conductance_ratio;
use crate::error::{NcpError, Result};
use crate::graph::Graph;
use crate::profile::{Method, NcpProfile, ProfilePoint, Witness};

/// Largest graph [`brute_force_ncp`] accepts.
pub const ORACLE_CAP: usize = 20;
/// Largest side [`brute_force_within`] accepts.
pub const SUBSET_CAP: usize = 24;

/// Visits every nonempty subset of `universe` in Gray-code order, passing
/// the membership mask and the running size, cut and volume in `g`.
fn enumerate<F: FnMut(u32, usize, u64, u64)>(g: &Graph, universe: &[usize], mut visit: F) {
    let mut in_set = vec![false; g.node_count()];
    let (mut size, mut cut, mut volume) = (0usize, 0i64, 0u64);
    let mut mask = 0u32;
    for step in 1u64..1 << universe.len() {
        let bit = step.trailing_zeros() as usize;
        let v = universe[bit];
        let d = g.degree(v) as i64;
        let inside = g.neighbors(v).iter().filter(|&&u| in_set[u]).count() as i64;
        if in_set[v] {
            in_set[v] = false;
            size -= 1;
            volume -= d as u64;
            cut -= d - 2 * inside;
        } else {
            in_set[v] = true;
            size += 1;
            volume += d as u64;
            cut += d - 2 * inside;
        }
        mask ^= 1 << bit;
        visit(mask, size, cut as u64, volume);
    }
}

fn members(universe: &[usize], mask: u32) -> Vec<usize> {
    (0..universe.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| universe[i])
        .collect()
}

/// Exact `Phi(k)` for `1 <= k <= N/2`, over connected and disconnected sets
/// alike.
pub fn brute_force_ncp(g: &Graph) -> Result<NcpProfile> {
    let n = g.node_count();
    if n > ORACLE_CAP {
        return Err(NcpError::OracleCap {
            nodes: n,
            cap: ORACLE_CAP,
        });
    }
    let total = g.total_volume();
    let mut out = NcpProfile::new();
    if n < 2 || total == 0 {
        return Ok(out);
    }
    // the last node stays outside; each set also stands for its complement
    let universe: Vec<usize> = (0..n - 1).collect();
    let mut best: Vec<Option<(f64, u64, u64, u32, bool)>> = vec![None; n / 2 + 1];
    enumerate(g, &universe, |mask, size, cut, volume| {
        if volume == 0 || volume == total {
            return;
        }
        let phi = conductance_ratio(cut, volume, total);
        for (k, complement) in [(size, false), (n - size, true)] {
            if k <= n / 2 && best[k].is_none_or(|b| phi < b.0) {
                let vol = if complement { total - volume } else { volume };
                best[k] = Some((phi, cut, vol, mask, complement));
            }
        }
    });
    for (phi, cut, volume, mask, complement) in best.into_iter().flatten() {
        let mut set = members(&universe, mask);
        if complement {
            let mut inside = vec![false; n];
            set.iter().for_each(|&v| inside[v] = true);
            set = (0..n).filter(|&v| !inside[v]).collect();
        }
        out.offer(ProfilePoint {
            phi,
            cut_edges: cut,
            volume,
            method: Method::Oracle,
            witness: Witness::owned(set),
        });
    }
    Ok(out)
}

/// Exact best conductance at every size among the nonempty subsets of
/// `side`, measured in the whole graph.
pub fn brute_force_within(g: &Graph, side: &[usize]) -> Result<NcpProfile> {
    if side.len() > SUBSET_CAP {
        return Err(NcpError::OracleCap {
            nodes: side.len(),
            cap: SUBSET_CAP,
        });
    }
    let total = g.total_volume();
    let mut best: Vec<Option<(f64, u64, u64, u32)>> = vec![None; side.len() + 1];
    enumerate(g, side, |mask, size, cut, volume| {
        if volume == 0 || volume == total {
            return;
        }
        let phi = conductance_ratio(cut, volume, total);
        if best[size].is_none_or(|b| phi < b.0) {
            best[size] = Some((phi, cut, volume, mask));
        }
    });
    let mut out = NcpProfile::new();
    for (phi, cut, volume, mask) in best.into_iter().flatten() {
        out.offer(ProfilePoint {
            phi,
            cut_edges: cut,
            volume,
            method: Method::Oracle,
            witness: Witness::owned(members(side, mask)),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::conductance;
    use crate::generators::{gen_barbell, gen_clique, gen_grid};

    #[test]
    fn barbell() {
        let p = brute_force_ncp(&gen_barbell(3)).unwrap();
        assert_eq!(p.phi(3), Some(1.0 / 7.0));
    }

    #[test]
    fn k4() {
        let p = brute_force_ncp(&gen_clique(4)).unwrap();
        assert_eq!(p.series(), vec![(1, 1.0), (2, 2.0 / 3.0)]);
    }

    #[test]
    fn path4() {
        let p = brute_force_ncp(&gen_grid(&[4])).unwrap();
        assert_eq!(p.phi(2), Some(1.0 / 3.0));
    }

    #[test]
    fn cap() {
        assert!(matches!(
            brute_force_ncp(&gen_grid(&[21])),
            Err(NcpError::OracleCap { nodes: 21, cap: 20 })
        ));
    }

    #[test]
    fn witnesses_rescore() {
        let g = gen_grid(&[3, 3]);
        let p = brute_force_ncp(&g).unwrap();
        assert_eq!(p.len(), 4);
        for (k, pt) in p.iter() {
            let c = conductance(&g, pt.witness.members()).unwrap();
            assert_eq!((c.len(), c.phi), (k, pt.phi));
        }
    }

    #[test]
    fn within_side() {
        let g = gen_barbell(3);
        let p = brute_force_within(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(p.global_min().unwrap().1.phi, 1.0 / 7.0);
        assert_eq!(p.len(), 4);
    }
}
