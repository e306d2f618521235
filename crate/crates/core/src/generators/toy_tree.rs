use crate::error::{parameter, Result};
use crate::graph::Graph;

/// Shape of the top-subtree toy model.
///
/// A top subtree of `top_size` nodes (a root with up to four arms of
/// near-equal length) hangs above a growing tree by exactly four edges, one
/// to each of four level-1 nodes. Every node on level `l` gets
/// `branching[l-1]` children, so `branching` must be nondecreasing. With
/// `close_core` the deepest level is joined into a clique, which stands in
/// for the unbounded lower part of the tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToyTreeParams {
    pub top_size: usize,
    pub branching: Vec<usize>,
    pub close_core: bool,
}

impl ToyTreeParams {
    /// Configuration whose global minimum cut is the top subtree.
    ///
    /// A single top node can only be the global minimum of a star, so
    /// `top_size == 1` yields the star with four leaves.
    pub fn with_top(top_size: usize) -> ToyTreeParams {
        if top_size == 1 {
            ToyTreeParams {
                top_size,
                branching: Vec::new(),
                close_core: false,
            }
        } else {
            ToyTreeParams {
                top_size,
                branching: vec![3, 4],
                close_core: true,
            }
        }
    }

    pub fn levels(&self) -> usize {
        self.branching.len() + 1
    }
}

/// A generated toy tree and the node ids of its top subtree.
#[derive(Clone, Debug)]
pub struct ToyTree {
    pub graph: Graph,
    pub top: Vec<usize>,
}

const ATTACHMENTS: usize = 4;

pub fn gen_toy_tree(p: &ToyTreeParams) -> Result<ToyTree> {
    if p.top_size == 0 {
        return parameter("toy tree needs a nonempty top subtree");
    }
    if p.branching.contains(&0) {
        return parameter("branching factors must be positive");
    }
    if p.branching.windows(2).any(|w| w[0] > w[1]) {
        return parameter("branching must be nondecreasing with depth");
    }

    let mut edges = Vec::new();
    // top subtree: root 0 and arms filled round-robin
    let root = 0;
    let arm_count = (p.top_size - 1).min(ATTACHMENTS);
    let mut arms: Vec<Vec<usize>> = vec![Vec::new(); arm_count];
    for i in 0..p.top_size - 1 {
        arms[i % arm_count].push(1 + i);
    }
    for arm in &arms {
        let mut prev = root;
        for &v in arm {
            edges.push((prev, v));
            prev = v;
        }
    }
    let mut sources: Vec<usize> = arms.iter().map(|a| *a.last().unwrap()).collect();
    while sources.len() < ATTACHMENTS {
        sources.push(root);
    }

    let mut next = p.top_size;
    let mut level: Vec<usize> = (next..next + ATTACHMENTS).collect();
    next += ATTACHMENTS;
    for (src, &dst) in sources.iter().zip(&level) {
        edges.push((*src, dst));
    }
    for &b in &p.branching {
        let mut children = Vec::with_capacity(level.len() * b);
        for &u in &level {
            for _ in 0..b {
                edges.push((u, next));
                children.push(next);
                next += 1;
            }
        }
        level = children;
    }
    if p.close_core {
        for (i, &u) in level.iter().enumerate() {
            for &v in &level[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    Ok(ToyTree {
        graph: Graph::from_edges(next, edges),
        top: (0..p.top_size).collect(),
    })
}
