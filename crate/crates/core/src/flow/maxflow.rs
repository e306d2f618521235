use std::collections::VecDeque;

/// Directed network with integer capacities. Arcs are stored in pairs, arc
/// `i ^ 1` being the residual twin of arc `i`.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u64>,
    source: usize,
    sink: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: u64,
    /// Nodes reachable from the source in the final residual network, sorted.
    pub source_side: Vec<usize>,
}

impl FlowNetwork {
    /// # Panics
    /// If `source == sink` or either is out of range.
    pub fn new(nodes: usize, source: usize, sink: usize) -> FlowNetwork {
        assert!(source != sink && source < nodes && sink < nodes);
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            source,
            sink,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn add_arc(&mut self, u: usize, v: usize, cap: u64) {
        self.add_pair(u, v, cap, 0);
    }

    /// Two opposite arcs of capacity `cap` sharing one residual pair.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: u64) {
        self.add_pair(u, v, cap, cap);
    }

    fn add_pair(&mut self, u: usize, v: usize, forward: u64, backward: u64) {
        let id = self.to.len();
        self.adj[u].push(id);
        self.adj[v].push(id + 1);
        self.to.extend([v, u]);
        self.cap.extend([forward, backward]);
    }
}

fn levels(net: &FlowNetwork, cap: &[u64], level: &mut [usize]) -> bool {
    level.fill(usize::MAX);
    level[net.source] = 0;
    let mut queue = VecDeque::from([net.source]);
    while let Some(u) = queue.pop_front() {
        for &a in &net.adj[u] {
            let v = net.to[a];
            if cap[a] > 0 && level[v] == usize::MAX {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    level[net.sink] != usize::MAX
}

/// Dinic's algorithm. The returned source side is the minimum cut closest to
/// the source.
pub fn max_flow(net: &FlowNetwork) -> MaxFlow {
    let n = net.node_count();
    let (s, t) = (net.source, net.sink);
    let mut cap = net.cap.clone();
    let mut level = vec![0usize; n];
    let mut next = vec![0usize; n];
    let mut value = 0u64;
    let mut path: Vec<usize> = Vec::new();
    while levels(net, &cap, &mut level) {
        next.fill(0);
        path.clear();
        let mut u = s;
        loop {
            if u == t {
                let push = path.iter().map(|&a| cap[a]).min().unwrap_or(0);
                for &a in &path {
                    cap[a] -= push;
                    cap[a ^ 1] += push;
                }
                value += push;
                // back up to the tail of the first saturated arc
                let cut = path.iter().position(|&a| cap[a] == 0).unwrap_or(0);
                path.truncate(cut);
                u = path.last().map_or(s, |&a| net.to[a]);
                continue;
            }
            let mut advanced = false;
            while next[u] < net.adj[u].len() {
                let a = net.adj[u][next[u]];
                let v = net.to[a];
                if cap[a] > 0 && level[v] == level[u] + 1 {
                    path.push(a);
                    u = v;
                    advanced = true;
                    break;
                }
                next[u] += 1;
            }
            if advanced {
                continue;
            }
            level[u] = usize::MAX;
            match path.pop() {
                None => break,
                Some(a) => {
                    u = net.to[a ^ 1];
                    next[u] += 1;
                }
            }
        }
    }
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        for &a in &net.adj[u] {
            let v = net.to[a];
            if cap[a] > 0 && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    MaxFlow {
        value,
        source_side: (0..n).filter(|&v| seen[v]).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::seeded_rng;
    use rand::Rng;

    #[test]
    fn single_arc() {
        let mut net = FlowNetwork::new(2, 0, 1);
        net.add_arc(0, 1, 5);
        let f = max_flow(&net);
        assert_eq!(f.value, 5);
        assert_eq!(f.source_side, vec![0]);
    }

    #[test]
    fn diamond() {
        let mut net = FlowNetwork::new(4, 0, 3);
        for (u, v) in [(0, 1), (0, 2), (1, 3), (2, 3)] {
            net.add_arc(u, v, 1);
        }
        assert_eq!(max_flow(&net).value, 2);
    }

    #[test]
    fn no_path() {
        let mut net = FlowNetwork::new(3, 0, 2);
        net.add_arc(0, 1, 4);
        let f = max_flow(&net);
        assert_eq!(f.value, 0);
        assert_eq!(f.source_side, vec![0, 1]);
    }

    fn brute_min_cut(n: usize, arcs: &[(usize, usize, u64)]) -> u64 {
        // source 0, sink n-1; enumerate the side of the middle nodes
        let mut best = u64::MAX;
        for mask in 0u32..1 << (n - 2) {
            let side = |v: usize| v == 0 || (v != n - 1 && mask >> (v - 1) & 1 == 1);
            let c = arcs
                .iter()
                .filter(|&&(u, v, _)| side(u) && !side(v))
                .map(|&(_, _, c)| c)
                .sum();
            best = best.min(c);
        }
        best
    }

    #[test]
    fn random_networks_match_enumeration() {
        let mut rng = seeded_rng(17);
        for _ in 0..300 {
            let n = rng.gen_range(2..=12);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(0.3) {
                        arcs.push((u, v, rng.gen_range(0..10)));
                    }
                }
            }
            let mut net = FlowNetwork::new(n, 0, n - 1);
            for &(u, v, c) in &arcs {
                net.add_arc(u, v, c);
            }
            let f = max_flow(&net);
            assert_eq!(f.value, brute_min_cut(n, &arcs));
            // the reported side is a cut of that capacity
            let side: Vec<bool> = (0..n).map(|v| f.source_side.contains(&v)).collect();
            assert!(side[0] && !side[n - 1]);
            let c: u64 = arcs
                .iter()
                .filter(|&&(u, v, _)| side[u] && !side[v])
                .map(|&(_, _, c)| c)
                .sum();
            assert_eq!(c, f.value);
        }
    }
}
