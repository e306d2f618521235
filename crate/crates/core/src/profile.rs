//! Network community profiles: best conductance per set size.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::sync::Arc;

use crate::cut::{conductance_ratio, Cut};
use crate::error::Result;
use crate::graph::Graph;

/// Which engine produced a profile point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Spectral,
    Flow,
    Whiskers,
    Oracle,
    Groups,
    Rewired,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Spectral => "spectral",
            Method::Flow => "flow",
            Method::Whiskers => "whiskers",
            Method::Oracle => "oracle",
            Method::Groups => "groups",
            Method::Rewired => "rewired",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Method> {
        Some(match tag {
            "spectral" => Method::Spectral,
            "flow" => Method::Flow,
            "whiskers" => Method::Whiskers,
            "oracle" => Method::Oracle,
            "groups" => Method::Groups,
            "rewired" => Method::Rewired,
            _ => return None,
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A witness set stored as a prefix of a shared ordering, so that every
/// prefix of a sweep can be recorded without copying.
#[derive(Clone, Debug)]
pub struct Witness {
    nodes: Arc<[usize]>,
    len: usize,
}

impl Witness {
    pub fn prefix(nodes: Arc<[usize]>, len: usize) -> Witness {
        assert!(len <= nodes.len());
        Witness { nodes, len }
    }

    pub fn owned(nodes: Vec<usize>) -> Witness {
        let len = nodes.len();
        Witness {
            nodes: nodes.into(),
            len,
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.nodes[..self.len]
    }
}

#[derive(Clone, Debug)]
pub struct ProfilePoint {
    pub phi: f64,
    pub cut_edges: u64,
    pub volume: u64,
    pub method: Method,
    pub witness: Witness,
}

impl ProfilePoint {
    pub fn size(&self) -> usize {
        self.witness.len
    }
}

/// Sparse map from set size `k` to the best cut seen at that size.
///
/// Offers only replace a point when they are strictly better, so folding the
/// same candidates in the same order always gives the same profile.
#[derive(Clone, Debug, Default)]
pub struct NcpProfile {
    points: BTreeMap<usize, ProfilePoint>,
}

impl NcpProfile {
    pub fn new() -> NcpProfile {
        NcpProfile::default()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, k: usize) -> Option<&ProfilePoint> {
        self.points.get(&k)
    }

    pub fn phi(&self, k: usize) -> Option<f64> {
        self.points.get(&k).map(|p| p.phi)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &ProfilePoint)> + '_ {
        self.points.iter().map(|(&k, p)| (k, p))
    }

    /// `(k, phi)` pairs in increasing `k`.
    pub fn series(&self) -> Vec<(usize, f64)> {
        self.points.iter().map(|(&k, p)| (k, p.phi)).collect()
    }

    /// Lowest point; ties go to the smaller `k`.
    pub fn global_min(&self) -> Option<(usize, &ProfilePoint)> {
        let mut best: Option<(usize, &ProfilePoint)> = None;
        for (&k, p) in &self.points {
            if best.is_none_or(|(_, b)| p.phi < b.phi) {
                best = Some((k, p));
            }
        }
        best
    }

    /// Records a candidate; returns whether it became the point at its size.
    pub fn offer(&mut self, point: ProfilePoint) -> bool {
        let k = point.size();
        if k == 0 || point.phi.is_nan() {
            return false;
        }
        match self.points.get(&k) {
            Some(cur) if cur.phi <= point.phi => false,
            _ => {
                self.points.insert(k, point);
                true
            }
        }
    }

    pub fn offer_cut(&mut self, cut: &Cut, method: Method) -> bool {
        self.offer(ProfilePoint {
            phi: cut.phi,
            cut_edges: cut.cut_edges,
            volume: cut.volume,
            method,
            witness: Witness::owned(cut.members.clone()),
        })
    }

    /// Offers every prefix of `order` given its running `(cut, volume)`
    /// counts, skipping prefixes whose volume exceeds half the total.
    ///
    /// Accepted prefixes share one copy of `order`, cut at the longest
    /// prefix that was accepted.
    pub(crate) fn offer_prefixes(
        &mut self,
        order: &[usize],
        counts: &[(u64, u64)],
        total: u64,
        method: Method,
    ) {
        let mut accepted = Vec::new();
        for (i, &(cut, volume)) in counts.iter().enumerate() {
            if volume == 0 || 2 * volume > total {
                continue;
            }
            let phi = conductance_ratio(cut, volume, total);
            if self.points.get(&(i + 1)).is_none_or(|cur| phi < cur.phi) {
                accepted.push((i + 1, phi, cut, volume));
            }
        }
        let Some(&(longest, ..)) = accepted.last() else {
            return;
        };
        let shared: Arc<[usize]> = order[..longest].into();
        for (k, phi, cut_edges, volume) in accepted {
            self.points.insert(
                k,
                ProfilePoint {
                    phi,
                    cut_edges,
                    volume,
                    method,
                    witness: Witness::prefix(shared.clone(), k),
                },
            );
        }
    }

    /// Pointwise-min merge. Never raises any value of `self`.
    pub fn merge(&mut self, other: &NcpProfile) {
        for p in other.points.values() {
            self.offer(p.clone());
        }
    }

    /// Same points, all relabelled with `method`.
    pub fn retagged(&self, method: Method) -> NcpProfile {
        let mut out = self.clone();
        for p in out.points.values_mut() {
            p.method = method;
        }
        out
    }

    /// Writes `k,phi,method,witness_id,connected` rows. Witness ids are the
    /// row index; `connected` says whether the witness induces a connected
    /// subgraph of `g`. An optional lower-bound line is appended as a `*` row.
    pub fn write_csv<W: Write>(
        &self,
        g: &Graph,
        lower_bound: Option<f64>,
        comment: Option<&str>,
        mut out: W,
    ) -> Result<()> {
        if let Some(c) = comment {
            writeln!(out, "# {c}")?;
        }
        writeln!(out, "k,phi,method,witness_id,connected")?;
        let mut marker = vec![false; g.node_count()];
        for (id, (k, p)) in self.points.iter().enumerate() {
            let connected = is_connected_set(g, p.witness.members(), &mut marker);
            writeln!(out, "{k},{},{},{id},{connected}", p.phi, p.method)?;
        }
        if let Some(b) = lower_bound {
            writeln!(out, "*,{b},spectral_lb,,")?;
        }
        Ok(())
    }

    /// Writes each witness as one-node-id-per-line text, via `sink(witness_id, body)`.
    pub fn for_each_witness<F>(&self, ids: Option<&[u64]>, mut sink: F) -> Result<()>
    where
        F: FnMut(usize, String) -> Result<()>,
    {
        for (id, p) in self.points.values().enumerate() {
            let mut body = String::new();
            for &v in p.witness.members() {
                match ids {
                    Some(ids) => body.push_str(&ids[v].to_string()),
                    None => body.push_str(&v.to_string()),
                }
                body.push('\n');
            }
            sink(id, body)?;
        }
        Ok(())
    }
}

/// Whether `set` induces a connected subgraph. `marker` must be all-false and
/// is restored.
pub(crate) fn is_connected_set(g: &Graph, set: &[usize], marker: &mut [bool]) -> bool {
    if set.is_empty() {
        return false;
    }
    for &v in set {
        marker[v] = true;
    }
    // marker true = in set, not yet reached
    let mut stack = vec![set[0]];
    marker[set[0]] = false;
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if marker[v] {
                marker[v] = false;
                reached += 1;
                stack.push(v);
            }
        }
    }
    for &v in set {
        marker[v] = false;
    }
    reached == set.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::conductance;
    use crate::generators::gen_barbell;

    fn point(nodes: Vec<usize>, phi: f64, method: Method) -> ProfilePoint {
        ProfilePoint {
            phi,
            cut_edges: 0,
            volume: 0,
            method,
            witness: Witness::owned(nodes),
        }
    }

    #[test]
    fn offer_keeps_strict_minimum() {
        let mut p = NcpProfile::new();
        assert!(p.offer(point(vec![0, 1], 0.5, Method::Flow)));
        assert!(!p.offer(point(vec![2, 3], 0.5, Method::Spectral)));
        assert_eq!(p.get(2).unwrap().method, Method::Flow);
        assert!(p.offer(point(vec![4, 5], 0.25, Method::Spectral)));
        assert_eq!(p.phi(2), Some(0.25));
    }

    #[test]
    fn merge_is_pointwise_min() {
        let mut a = NcpProfile::new();
        a.offer(point(vec![0], 0.9, Method::Flow));
        a.offer(point(vec![0, 1], 0.3, Method::Flow));
        let mut b = NcpProfile::new();
        b.offer(point(vec![1], 0.7, Method::Spectral));
        b.offer(point(vec![0, 1], 0.6, Method::Spectral));
        b.offer(point(vec![0, 1, 2], 0.2, Method::Spectral));
        a.merge(&b);
        assert_eq!(a.series(), vec![(1, 0.7), (2, 0.3), (3, 0.2)]);
        assert_eq!(a.global_min().unwrap().0, 3);
    }

    #[test]
    fn csv_layout() {
        let g = gen_barbell(3);
        let mut p = NcpProfile::new();
        p.offer_cut(&conductance(&g, &[0, 1, 2]).unwrap(), Method::Flow);
        p.offer_cut(&conductance(&g, &[0, 5]).unwrap(), Method::Spectral);
        let mut buf = Vec::new();
        p.write_csv(&g, Some(0.1), None, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "k,phi,method,witness_id,connected");
        assert_eq!(lines[1], "2,1,spectral,0,false");
        assert_eq!(lines[2], format!("3,{},flow,1,true", 1.0 / 7.0));
        assert_eq!(lines[3], "*,0.1,spectral_lb,,");
    }
}
