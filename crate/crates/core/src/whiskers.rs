//! Bridges, the 2-edge-connected core, 1-whiskers, and the Bag-of-Whiskers
//! profile.

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::Arc;

use crate::cut::{conductance_ratio, Cut};
use crate::error::{domain, Result};
use crate::graph::Graph;
use crate::profile::{Method, NcpProfile, ProfilePoint, Witness};

/// Bridges of `g` as `(u, v)` with `u < v`, sorted.
///
/// Iterative low-link DFS, linear in the graph size.
pub fn find_bridges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.node_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut bridges = Vec::new();
    let mut clock = 0;
    // (node, parent, next neighbor position)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
            let nbrs = g.neighbors(u);
            if *pos < nbrs.len() {
                let v = nbrs[*pos];
                *pos += 1;
                if v == parent {
                    continue;
                }
                if disc[v] == usize::MAX {
                    disc[v] = clock;
                    low[v] = clock;
                    clock += 1;
                    stack.push((v, u, 0));
                } else {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] > disc[parent] {
                        bridges.push(if u < parent { (u, parent) } else { (parent, u) });
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

/// A 1-whisker: a maximal piece hanging off the core by a single bridge.
#[derive(Clone, Debug, PartialEq)]
pub struct Whisker {
    pub nodes: Vec<usize>,
    /// Degree sum of the whisker nodes in the full graph, bridge endpoint
    /// included, so the whisker's conductance is `1 / volume`.
    pub volume: u64,
    /// `(core endpoint, whisker endpoint)`.
    pub bridge: (usize, usize),
}

impl Whisker {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }
}

#[derive(Clone, Debug)]
pub struct WhiskerSet {
    /// Ordered by smallest member node.
    pub whiskers: Vec<Whisker>,
    /// Nodes of the largest 2-edge-connected component, sorted.
    pub core: Vec<usize>,
    pub core_edges: usize,
    pub node_count: usize,
    pub edge_count: usize,
    pub total_volume: u64,
}

impl WhiskerSet {
    /// `N_b / N`.
    pub fn core_node_fraction(&self) -> f64 {
        self.core.len() as f64 / self.node_count as f64
    }

    /// `E_b / E`.
    pub fn core_edge_fraction(&self) -> f64 {
        if self.edge_count == 0 {
            return 0.0;
        }
        self.core_edges as f64 / self.edge_count as f64
    }

    pub fn largest(&self) -> Option<&Whisker> {
        let mut best: Option<&Whisker> = None;
        for w in &self.whiskers {
            if best.is_none_or(|b| (w.size(), w.volume) > (b.size(), b.volume)) {
                best = Some(w);
            }
        }
        best
    }

    /// `whisker_id,size,internal_volume,bridge_u,bridge_v` rows, with
    /// `bridge_u` on the core side.
    pub fn write_csv<W: Write>(&self, ids: Option<&[u64]>, mut out: W) -> Result<()> {
        let name = |v: usize| ids.map_or(v as u64, |ids| ids[v]);
        writeln!(out, "whisker_id,size,internal_volume,bridge_u,bridge_v")?;
        for (i, w) in self.whiskers.iter().enumerate() {
            writeln!(
                out,
                "{i},{},{},{},{}",
                w.size(),
                w.volume,
                name(w.bridge.0),
                name(w.bridge.1)
            )?;
        }
        Ok(())
    }
}

/// Splits a connected graph into its largest 2-edge-connected component and
/// the 1-whiskers hanging off it.
///
/// The core is the 2-edge-connected component with the most nodes, then the
/// most edges, then the smallest node id. Whiskers are the components left
/// after deleting every edge incident to the core.
pub fn decompose_whiskers(g: &Graph) -> Result<WhiskerSet> {
    let n = g.node_count();
    if n == 0 || !g.is_connected() {
        return domain("whisker decomposition needs a connected graph");
    }
    let bridges = find_bridges(g);
    let is_bridge = |u: usize, v: usize| {
        let e = if u < v { (u, v) } else { (v, u) };
        bridges.binary_search(&e).is_ok()
    };

    // 2-edge-connected components: connectivity without bridges
    let mut label = vec![usize::MAX; n];
    let mut sizes: Vec<(usize, usize, usize)> = Vec::new(); // (nodes, edges, min id)
    let mut stack = Vec::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        label[s] = id;
        stack.push(s);
        let (mut nodes, mut twice_edges) = (0usize, 0usize);
        while let Some(u) = stack.pop() {
            nodes += 1;
            for &v in g.neighbors(u) {
                if is_bridge(u, v) {
                    continue;
                }
                twice_edges += 1;
                if label[v] == usize::MAX {
                    label[v] = id;
                    stack.push(v);
                }
            }
        }
        sizes.push((nodes, twice_edges / 2, s));
    }
    let mut core_id = 0;
    for (i, &(nodes, edges, _)) in sizes.iter().enumerate() {
        let (bn, be, _) = sizes[core_id];
        if nodes > bn || (nodes == bn && edges > be) {
            core_id = i;
        }
    }
    let in_core: Vec<bool> = label.iter().map(|&l| l == core_id).collect();
    let core: Vec<usize> = (0..n).filter(|&v| in_core[v]).collect();

    let mut seen = in_core.clone();
    let mut whiskers = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut nodes = Vec::new();
        let mut bridge = None;
        while let Some(u) = stack.pop() {
            nodes.push(u);
            for &v in g.neighbors(u) {
                if in_core[v] {
                    bridge = Some((v, u));
                } else if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        nodes.sort_unstable();
        let volume = g.volume(&nodes);
        whiskers.push(Whisker {
            nodes,
            volume,
            bridge: bridge.expect("every whisker touches the core"),
        });
    }

    Ok(WhiskerSet {
        whiskers,
        core,
        core_edges: sizes[core_id].1,
        node_count: n,
        edge_count: g.edge_count(),
        total_volume: g.total_volume(),
    })
}

/// Bag-of-Whiskers profile plus the single largest whisker, which is the
/// usual global-minimum candidate of the whole profile.
#[derive(Clone, Debug)]
pub struct WhiskerProfile {
    pub profile: NcpProfile,
    pub largest: Option<Cut>,
}

#[derive(Clone, Copy)]
struct Bundle {
    kind: usize,
    count: u32,
    size: usize,
    volume: u64,
}

struct Chain {
    bundle: usize,
    prev: Option<Arc<Chain>>,
}

#[derive(Clone)]
struct State {
    pieces: u32,
    volume: u64,
    chain: Option<Arc<Chain>>,
}

/// Keeps the states not dominated by another with no more pieces and at
/// least as much volume. Input sorted by pieces.
fn pareto(mut states: Vec<State>) -> Vec<State> {
    states.sort_by(|a, b| a.pieces.cmp(&b.pieces).then(b.volume.cmp(&a.volume)));
    let mut out: Vec<State> = Vec::with_capacity(states.len());
    for s in states {
        if out.last().is_none_or(|last| s.volume > last.volume) {
            out.push(s);
        }
    }
    out
}

/// For every total node count `k` reachable by a union of whiskers, the union
/// with the lowest conductance `|C| / sum d(w)`.
///
/// Each whisker contributes exactly one cut edge, so the conductance depends
/// only on the number of whiskers and their total volume. The dynamic
/// program keeps, per `k`, the Pareto frontier of (pieces, volume), which
/// makes it exact as long as the union stays on the smaller-volume side.
/// Identical whiskers are grouped and split into power-of-two bundles.
pub fn bag_of_whiskers(ws: &WhiskerSet) -> WhiskerProfile {
    let total = ws.total_volume;
    let mut profile = NcpProfile::new();
    let largest = ws
        .largest()
        .map(|w| Cut::from_counts(w.nodes.clone(), 1, w.volume, total));
    if ws.whiskers.is_empty() {
        return WhiskerProfile { profile, largest };
    }

    // group by (size, volume); members in whisker order
    let mut kinds: BTreeMap<(usize, u64), Vec<usize>> = BTreeMap::new();
    for (i, w) in ws.whiskers.iter().enumerate() {
        kinds.entry((w.size(), w.volume)).or_default().push(i);
    }
    let kinds: Vec<((usize, u64), Vec<usize>)> = kinds.into_iter().collect();
    let mut bundles = Vec::new();
    for (kind, ((size, volume), members)) in kinds.iter().enumerate() {
        let mut left = members.len() as u32;
        let mut chunk = 1u32;
        while left > 0 {
            let c = chunk.min(left);
            bundles.push(Bundle {
                kind,
                count: c,
                size: size * c as usize,
                volume: volume * c as u64,
            });
            left -= c;
            chunk *= 2;
        }
    }

    let mass: usize = ws.whiskers.iter().map(|w| w.size()).sum();
    let max_k = mass.min(ws.node_count.saturating_sub(1));
    let mut frontier: Vec<Vec<State>> = vec![Vec::new(); max_k + 1];
    frontier[0].push(State {
        pieces: 0,
        volume: 0,
        chain: None,
    });
    for (bi, b) in bundles.iter().enumerate() {
        if b.size > max_k {
            continue;
        }
        for k in (b.size..=max_k).rev() {
            if frontier[k - b.size].is_empty() {
                continue;
            }
            let extended: Vec<State> = frontier[k - b.size]
                .iter()
                .map(|s| State {
                    pieces: s.pieces + b.count,
                    volume: s.volume + b.volume,
                    chain: Some(Arc::new(Chain {
                        bundle: bi,
                        prev: s.chain.clone(),
                    })),
                })
                .collect();
            let mut merged = std::mem::take(&mut frontier[k]);
            merged.extend(extended);
            frontier[k] = pareto(merged);
        }
    }

    for (k, states) in frontier.iter().enumerate().skip(1) {
        let best = states.iter().filter(|s| s.volume < total).min_by(|a, b| {
            conductance_ratio(a.pieces as u64, a.volume, total).total_cmp(&conductance_ratio(
                b.pieces as u64,
                b.volume,
                total,
            ))
        });
        let Some(best) = best else { continue };
        let mut per_kind = vec![0usize; kinds.len()];
        let mut link = best.chain.as_ref();
        while let Some(c) = link {
            let b = bundles[c.bundle];
            per_kind[b.kind] += b.count as usize;
            link = c.prev.as_ref();
        }
        let mut nodes = Vec::with_capacity(k);
        for (kind, &take) in per_kind.iter().enumerate() {
            for &wi in &kinds[kind].1[..take] {
                nodes.extend_from_slice(&ws.whiskers[wi].nodes);
            }
        }
        debug_assert_eq!(nodes.len(), k);
        profile.offer(ProfilePoint {
            phi: conductance_ratio(best.pieces as u64, best.volume, total),
            cut_edges: best.pieces as u64,
            volume: best.volume,
            method: Method::Whiskers,
            witness: Witness::owned(nodes),
        });
    }
    WhiskerProfile { profile, largest }
}
