//! Edge contraction side: κ(T), caterpillar extraction by contraction,
//! the extremal spiders and the closed form for p(m).

use thiserror::Error;

use crate::tree::{Tree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractionError {
    #[error("{name} must be at least {min}, got {value}")]
    ParameterTooSmall {
        name: &'static str,
        value: u64,
        min: u64,
    },
    #[error("target size {k} is outside 1..={kappa}")]
    TargetOutOfRange { k: usize, kappa: usize },
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// Leaves plus diameter minus two: the largest caterpillar reachable by
/// contracting edges.
pub fn kappa(t: &Tree) -> Result<usize, TreeError> {
    if t.edge_count() == 0 {
        return Err(TreeError::Degenerate);
    }
    Ok(t.leaf_count() + t.diameter().length - 2)
}

/// One contraction, recorded both in the source labelling and in the
/// labelling of the tree it was applied to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionStep {
    pub original: (usize, usize),
    pub current: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionPlan {
    pub target_size: usize,
    pub steps: Vec<ContractionStep>,
    pub kept_caterpillar: Tree,
    /// `vertex_map[source_vertex] = vertex of kept_caterpillar`
    pub vertex_map: Vec<usize>,
}

impl ContractionPlan {
    /// Source edges that survive, in source edge order.
    pub fn kept_source_edges(&self, source: &Tree) -> Vec<(usize, usize)> {
        let contracted: Vec<(usize, usize)> = self.steps.iter().map(|s| s.original).collect();
        source
            .edges()
            .iter()
            .copied()
            .filter(|e| !contracted.contains(e))
            .collect()
    }

    /// Replays the steps on `source` and checks the recorded outcome.
    pub fn replay(&self, source: &Tree) -> Result<Tree, TreeError> {
        let mut current = source.clone();
        for step in &self.steps {
            current = current.contract_edge(step.current.0, step.current.1)?.tree;
        }
        Ok(current)
    }
}

/// Keeps every leaf edge and every edge of one diameter path, contracts the
/// rest, then contracts `κ − k` of the kept edges.
///
/// Edges are contracted in DFS discovery order from the first endpoint of the
/// diameter witness returned by [`Tree::diameter`].
pub fn contract_to_caterpillar(t: &Tree, k: usize) -> Result<ContractionPlan, ContractionError> {
    let kappa = kappa(t)?;
    if k == 0 || k > kappa {
        return Err(ContractionError::TargetOutOfRange { k, kappa });
    }
    let diameter = t.diameter();
    let root = diameter.path[0];
    let mut keep = vec![false; t.edge_count()];
    for (i, &(u, v)) in t.edges().iter().enumerate() {
        if t.degree(u) == 1 || t.degree(v) == 1 {
            keep[i] = true;
        }
    }
    for w in diameter.path.windows(2) {
        let i = t
            .edge_index(w[0], w[1])
            .expect("diameter path uses tree edges");
        keep[i] = true;
    }

    let dfs_edges = dfs_edge_order(t, root);
    let mut order: Vec<(usize, usize)> = dfs_edges
        .iter()
        .copied()
        .filter(|&(u, v)| !keep[t.edge_index(u, v).unwrap()])
        .collect();
    order.extend(
        dfs_edges
            .iter()
            .copied()
            .filter(|&(u, v)| keep[t.edge_index(u, v).unwrap()])
            .take(kappa - k),
    );

    let mut current = t.clone();
    let mut vertex_map: Vec<usize> = (0..t.vertex_count()).collect();
    let mut steps = Vec::with_capacity(order.len());
    for (u, v) in order {
        let (a, b) = (vertex_map[u], vertex_map[v]);
        let contraction = current.contract_edge(a, b)?;
        for slot in vertex_map.iter_mut() {
            *slot = contraction.mapping[*slot];
        }
        current = contraction.tree;
        steps.push(ContractionStep {
            original: (u.min(v), u.max(v)),
            current: (a.min(b), a.max(b)),
        });
    }
    debug_assert_eq!(current.edge_count(), k);
    debug_assert!(current.is_caterpillar());
    Ok(ContractionPlan {
        target_size: k,
        steps,
        kept_caterpillar: current,
        vertex_map,
    })
}

fn dfs_edge_order(t: &Tree, root: usize) -> Vec<(usize, usize)> {
    let (_, parent) = t.bfs(root);
    t.preorder(root)
        .into_iter()
        .filter(|&v| v != root)
        .map(|v| (parent[v], v))
        .collect()
}

fn at_least(name: &'static str, value: u64, min: u64) -> Result<(), ContractionError> {
    if value < min {
        Err(ContractionError::ParameterTooSmall { name, value, min })
    } else {
        Ok(())
    }
}

/// Maximum size of a tree with diameter `d` and `l` leaves.
pub fn e_dl(d: u64, l: u64) -> Result<u64, ContractionError> {
    at_least("d", d, 2)?;
    at_least("l", l, 2)?;
    Ok(if d.is_multiple_of(2) {
        d / 2 * l
    } else {
        (d - 1) / 2 * l + 1
    })
}

/// The spider with diameter `d`, `l` leaves and `e_dl(d, l)` edges.
///
/// Even `d`: `l` legs of length `d/2`. Odd `d`: one leg of length `(d+1)/2`
/// and `l − 1` legs of length `(d−1)/2`. The centre is vertex 0 and legs
/// are numbered outward, first leg first.
pub fn spider_rdl(d: u64, l: u64) -> Result<Tree, ContractionError> {
    at_least("d", d, 2)?;
    at_least("l", l, 2)?;
    let d = d as usize;
    let l = l as usize;
    let legs: Vec<usize> = if d.is_multiple_of(2) {
        vec![d / 2; l]
    } else {
        std::iter::once(d.div_ceil(2))
            .chain(std::iter::repeat_n((d - 1) / 2, l - 1))
            .collect()
    };
    Ok(spider(&legs))
}

/// Spider with the given leg lengths, centre 0.
pub fn spider(legs: &[usize]) -> Tree {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::new(next, edges).expect("spider legs form a tree")
}

/// Maximum size of a tree with κ = k. `e_contract(0)` is 0 by convention.
pub fn e_contract(k: u64) -> u64 {
    if k == 0 {
        return 0;
    }
    match k % 4 {
        0 => k * (k + 4) / 8,
        2 => (k + 2) * (k + 2) / 8,
        _ => (k + 1) * (k + 3) / 8,
    }
}

/// The `(d, l)` with even `d` used for `R_k`, `k >= 3`.
#[allow(clippy::manual_div_ceil)]
pub fn rk_parameters(k: u64) -> Option<(u64, u64)> {
    if k < 3 {
        return None;
    }
    Some(match k % 4 {
        0 => (k / 2, (k + 4) / 2),
        2 => ((k + 2) / 2, (k + 2) / 2),
        3 => ((k + 1) / 2, (k + 3) / 2),
        _ => ((k + 3) / 2, (k + 1) / 2),
    })
}

/// A spider with κ = k and `e_contract(k)` edges.
pub fn spider_rk(k: u64) -> Tree {
    assert!(k >= 1, "R_k is defined for k >= 1");
    match rk_parameters(k) {
        None => Tree::path(k as usize),
        Some((d, l)) => spider_rdl(d, l).expect("parameters are at least 2"),
    }
}

/// ⌈√(8m) − 2⌉ in exact integer arithmetic.
pub fn p_formula(m: u64) -> u64 {
    assert!(m >= 1, "p(m) is defined for m >= 1");
    let eight_m = 8 * m as u128;
    let root = eight_m.isqrt();
    let k = if root * root == eight_m {
        root - 2
    } else {
        root - 1
    };
    k as u64
}
