use super::maxflow::{max_flow, FlowNetwork};
use crate::cut::{conductance, Cut};
use crate::error::{domain, Result};
use crate::graph::Graph;

/// Minimum-conductance nonempty subset of `side`, which must hold at most
/// half the total volume. See [`mqi_trace`].
pub fn mqi(g: &Graph, side: &[usize]) -> Result<Cut> {
    Ok(mqi_trace(g, side)?
        .pop()
        .expect("trace starts with the input"))
}

/// Every improvement MQI makes, starting with `side` itself and ending with
/// the optimum.
///
/// With `a / b` the conductance of the current best set, one max flow on
/// `side` decides whether some `S` has `b * cut(S) < a * vol(S)`: the source
/// feeds each node `a * d(u)`, internal edges carry `b` both ways, and edges
/// leaving `side` become arcs of capacity `b` into the sink. A cut below
/// `a * vol(side)` exposes a better set on the source side. Capacities stay
/// integral, so the comparison is exact.
pub fn mqi_trace(g: &Graph, side: &[usize]) -> Result<Vec<Cut>> {
    let start = conductance(g, side)?;
    if 2 * start.volume > g.total_volume() {
        return domain(format!(
            "MQI side has volume {} above half of {}",
            start.volume,
            g.total_volume()
        ));
    }
    let n = g.node_count();
    let mut local = vec![usize::MAX; n];
    for (i, &v) in side.iter().enumerate() {
        local[v] = i;
    }
    let m = side.len();
    let (s, t) = (m, m + 1);
    let mut trace = vec![start];
    loop {
        let cur = trace.last().unwrap();
        let (a, b) = (cur.cut_edges, cur.volume);
        if a == 0 {
            break;
        }
        let mut net = FlowNetwork::new(m + 2, s, t);
        let mut full = 0u64;
        for (i, &u) in side.iter().enumerate() {
            let d = g.degree(u) as u64;
            full += a * d;
            net.add_arc(s, i, a * d);
            let mut outside = 0u64;
            for &v in g.neighbors(u) {
                let j = local[v];
                if j == usize::MAX {
                    outside += 1;
                } else if i < j {
                    net.add_edge(i, j, b);
                }
            }
            if outside > 0 {
                net.add_arc(i, t, b * outside);
            }
        }
        let f = max_flow(&net);
        if f.value >= full {
            break;
        }
        let better: Vec<usize> = f
            .source_side
            .iter()
            .filter(|&&x| x < m)
            .map(|&x| side[x])
            .collect();
        let cut = conductance(g, &better)?;
        debug_assert!(cut.phi < cur.phi);
        trace.push(cut);
    }
    Ok(trace)
}
