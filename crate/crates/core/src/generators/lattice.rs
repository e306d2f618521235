use crate::graph::Graph;

fn lattice(dims: &[usize], periodic: bool) -> Graph {
    assert!(dims.iter().all(|&d| d > 0), "grid sides must be positive");
    let n: usize = dims.iter().product();
    let mut edges = Vec::new();
    let mut stride = 1;
    for &side in dims {
        for v in 0..n {
            let coord = (v / stride) % side;
            if coord + 1 < side {
                edges.push((v, v + stride));
            } else if periodic && side > 2 {
                edges.push((v, v - coord * stride));
            }
        }
        stride *= side;
    }
    Graph::from_edges(n, edges)
}

/// Non-periodic lattice with the given side lengths (a path for one side).
pub fn gen_grid(dims: &[usize]) -> Graph {
    lattice(dims, false)
}

/// Periodic lattice; sides of length 1 or 2 do not wrap.
pub fn gen_torus(dims: &[usize]) -> Graph {
    lattice(dims, true)
}

pub fn gen_cycle(n: usize) -> Graph {
    gen_torus(&[n])
}

pub fn gen_clique(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Two `m`-cliques on `0..m` and `m..2m` joined by the single edge `(m-1, m)`.
pub fn gen_barbell(m: usize) -> Graph {
    let mut edges = Vec::new();
    for base in [0, m] {
        for u in 0..m {
            for v in u + 1..m {
                edges.push((base + u, base + v));
            }
        }
    }
    edges.push((m - 1, m));
    Graph::from_edges(2 * m, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let p = gen_grid(&[5]);
        assert_eq!((p.node_count(), p.edge_count()), (5, 4));
        let g = gen_grid(&[3, 4]);
        assert_eq!((g.node_count(), g.edge_count()), (12, 17));
        let c = gen_grid(&[3, 3, 3]);
        assert_eq!(c.edge_count(), 54);
        let t = gen_torus(&[4, 5]);
        assert!(t.degrees().all(|d| d == 4));
        assert_eq!(gen_cycle(6).edge_count(), 6);
        assert_eq!(gen_clique(5).edge_count(), 10);
        let b = gen_barbell(3);
        assert_eq!(b.edge_count(), 7);
        assert!(b.has_edge(2, 3));
    }
}
