//! Vertex-removal side: maximum induced caterpillars, very hungry
//! caterpillars, the beautiful trees `B_k`, the extremal trees `T_k`, and
//! the closed forms for f, g, e and q.
//!
//! All sequence values are exact. `f` and `e_induced` grow like `3^(k/3)`
//! and `3^(k/6)`; they are returned as `u128` and panic past
//! [`MAX_F_K`] / [`MAX_E_K`], where `u128` would overflow.

use num_bigint::BigUint;
use thiserror::Error;

use crate::tree::{RootedTree, Tree, TreeError};

/// Largest `k` accepted by [`f_formula`] and [`beautiful_bk`].
pub const MAX_F_K: u32 = 230;
/// Largest `k` accepted by [`g_formula`], [`e_induced`] and [`extremal_tk`].
pub const MAX_E_K: u32 = 450;
/// Smallest `m` covered by the six residue-class closed forms for q.
pub const Q_CLOSED_FORM_MIN: u64 = 171;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InducedError {
    #[error("residue {0} is outside 0..=5")]
    ResidueOutOfRange(u32),
    #[error("closed forms for q apply from m = {Q_CLOSED_FORM_MIN}, got {0}")]
    BelowClosedFormRange(u64),
    #[error("invalid beautiful profile: {0}")]
    InvalidProfile(String),
    #[error("witness does not match the tree: {0}")]
    InvalidWitness(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// Child counts `⟨c₀, …, c_h⟩` per depth of a symmetric rooted tree with
/// `c₀ = 1`, `c_h = 0` and `3 ≥ c₁ ≥ … ≥ c_{h−1} ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeautifulProfile {
    counts: Vec<u32>,
}

impl BeautifulProfile {
    pub fn new(counts: Vec<u32>) -> Result<Self, InducedError> {
        let bad = |msg: &str| Err(InducedError::InvalidProfile(format!("{msg}: {counts:?}")));
        if counts.len() < 2 {
            return bad("need at least two entries");
        }
        if counts[0] != 1 {
            return bad("c0 must be 1");
        }
        if *counts.last().unwrap() != 0 {
            return bad("last entry must be 0");
        }
        let inner = &counts[1..counts.len() - 1];
        if inner.first().is_some_and(|&c| c > 3) {
            return bad("c1 must be at most 3");
        }
        if inner.contains(&0) {
            return bad("inner entries must be positive");
        }
        if inner.windows(2).any(|w| w[0] < w[1]) {
            return bad("entries must be non-increasing");
        }
        Ok(BeautifulProfile { counts })
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn height(&self) -> usize {
        self.counts.len() - 1
    }

    /// `Σ_{d<h} Π_{j≤d} c_j`
    pub fn edge_count(&self) -> u128 {
        let mut total = 0u128;
        let mut layer = 1u128;
        for &c in &self.counts[..self.counts.len() - 1] {
            layer *= c as u128;
            total += layer;
        }
        total
    }

    /// Size of every very hungry caterpillar: `Σ c_d`.
    pub fn hungry_size(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }

    /// Builds the tree breadth first; the root is vertex 0.
    pub fn to_rooted_tree(&self) -> RootedTree {
        let mut edges = Vec::new();
        let mut layer = vec![0usize];
        let mut next = 1usize;
        for &c in &self.counts[..self.counts.len() - 1] {
            let mut below = Vec::with_capacity(layer.len() * c as usize);
            for &v in &layer {
                for _ in 0..c {
                    edges.push((v, next));
                    below.push(next);
                    next += 1;
                }
            }
            layer = below;
        }
        let tree = Tree::new(next, edges).expect("profile layers form a tree");
        RootedTree::new(tree, 0).expect("root 0 exists")
    }
}

/// A caterpillar induced by `vertex_set`, with `spine` its non-leaf path
/// (a single vertex when the caterpillar is a star or an edge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarWitness {
    pub vertex_set: Vec<usize>,
    pub spine: Vec<usize>,
    pub size: usize,
}

impl CaterpillarWitness {
    /// The caterpillar formed by `spine` and every edge incident to it.
    pub fn from_spine(t: &Tree, spine: Vec<usize>) -> Self {
        let mut vertex_set: Vec<usize> = spine
            .iter()
            .flat_map(|&v| std::iter::once(v).chain(t.neighbors(v).iter().copied()))
            .collect();
        vertex_set.sort_unstable();
        vertex_set.dedup();
        let size = vertex_set.len() - 1;
        CaterpillarWitness {
            vertex_set,
            spine,
            size,
        }
    }

    /// Checks that `vertex_set` induces a connected caterpillar with `size`
    /// edges, every one of which touches the spine path.
    pub fn check(&self, t: &Tree) -> Result<(), InducedError> {
        let bad = |msg: String| Err(InducedError::InvalidWitness(msg));
        let n = t.vertex_count();
        let mut inside = vec![false; n];
        for &v in &self.vertex_set {
            if v >= n {
                return bad(format!("vertex {v} out of range"));
            }
            inside[v] = true;
        }
        if self.spine.is_empty() {
            return bad("empty spine".into());
        }
        if let Some(&v) = self.spine.iter().find(|&&v| v >= n || !inside[v]) {
            return bad(format!("spine vertex {v} not in the vertex set"));
        }
        if self.spine.windows(2).any(|w| !t.has_edge(w[0], w[1])) {
            return bad("spine is not a path of the tree".into());
        }
        let mut on_spine = vec![false; n];
        for &v in &self.spine {
            if on_spine[v] {
                return bad(format!("spine repeats vertex {v}"));
            }
            on_spine[v] = true;
        }
        let induced: Vec<(usize, usize)> = t
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| inside[u] && inside[v])
            .collect();
        if induced.len() != self.size {
            return bad(format!(
                "vertex set induces {} edges, witness claims {}",
                induced.len(),
                self.size
            ));
        }
        if self.vertex_set.len() != self.size + 1 {
            return bad("induced subgraph is not connected".into());
        }
        if let Some(&(u, v)) = induced.iter().find(|&&(u, v)| !on_spine[u] && !on_spine[v]) {
            return bad(format!("edge ({u}, {v}) does not touch the spine"));
        }
        Ok(())
    }
}

/// Maximum caterpillar contained in `t` as a vertex-induced subgraph.
///
/// Maximizes `Σ_{v∈P} (deg v − 1) + 1` over paths `P` of non-leaf vertices
/// with a two-pass (down/up) DP; among optimal spines the one with the
/// lexicographically smallest endpoint pair is returned.
pub fn max_caterpillar(t: &Tree) -> Result<CaterpillarWitness, TreeError> {
    match t.edge_count() {
        0 => return Err(TreeError::Degenerate),
        1 => return Ok(CaterpillarWitness::from_spine(t, vec![0])),
        _ => {}
    }
    let n = t.vertex_count();
    let inner = |v: usize| t.degree(v) >= 2;
    let weight = |v: usize| (t.degree(v) - 1) as u64;
    let root = (0..n)
        .find(|&v| inner(v))
        .expect("m >= 2 has a non-leaf vertex");

    // Preorder of the subtree induced by non-leaf vertices.
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    parent[root] = root;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in t.neighbors(v) {
            if inner(w) && parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
    }
    let mut kids: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in &order[1..] {
        kids[parent[v]].push(v);
    }
    let children = |v: usize| kids[v].iter().copied();

    let mut down = vec![0u64; n];
    for &v in order.iter().rev() {
        let best_child = children(v).map(|c| down[c]).max().unwrap_or(0);
        down[v] = weight(v) + best_child;
    }
    // up[v]: best path starting at parent(v) that avoids v's subtree.
    let mut up = vec![0u64; n];
    for &v in &order {
        let mut top = [0u64; 2];
        for c in children(v) {
            if down[c] > top[0] {
                top = [down[c], top[0]];
            } else if down[c] > top[1] {
                top[1] = down[c];
            }
        }
        for c in children(v) {
            let sibling = if down[c] == top[0] { top[1] } else { top[0] };
            up[c] = weight(v) + up[v].max(sibling);
        }
    }
    let best_from: Vec<u64> = (0..n)
        .map(|v| {
            if !inner(v) {
                return 0;
            }
            let best_child = children(v).map(|c| down[c]).max().unwrap_or(0);
            weight(v) + up[v].max(best_child)
        })
        .collect();
    let value = *best_from.iter().max().unwrap();
    let start = (0..n).find(|&v| best_from[v] == value).unwrap();

    // Path sums from `start` through non-leaf vertices.
    let mut sum = vec![u64::MAX; n];
    let mut from = vec![usize::MAX; n];
    sum[start] = weight(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in t.neighbors(v) {
            if inner(w) && sum[w] == u64::MAX {
                sum[w] = sum[v] + weight(w);
                from[w] = v;
                stack.push(w);
            }
        }
    }
    let end = (0..n).find(|&v| sum[v] == value).unwrap();
    let mut spine = vec![end];
    let mut cur = end;
    while cur != start {
        cur = from[cur];
        spine.push(cur);
    }
    spine.reverse();
    let witness = CaterpillarWitness::from_spine(t, spine);
    debug_assert_eq!(witness.size as u64, value + 1);
    Ok(witness)
}

/// Largest number of edges incident to a root-to-leaf path.
pub fn very_hungry_max(rt: &RootedTree) -> Result<u64, TreeError> {
    let t = rt.tree();
    if t.edge_count() == 0 {
        return Err(TreeError::Degenerate);
    }
    let root = rt.root();
    let mut best = 0u64;
    let mut stack = vec![(root, usize::MAX, (t.degree(root) - 1) as u64)];
    while let Some((v, from, acc)) = stack.pop() {
        let mut has_child = false;
        for &w in t.neighbors(v) {
            if w != from {
                has_child = true;
                stack.push((w, v, acc + (t.degree(w) - 1) as u64));
            }
        }
        if !has_child && v != root {
            best = best.max(acc + 1);
        }
    }
    Ok(best)
}

fn pow3(e: u32) -> u128 {
    3u128.pow(e)
}

/// Maximum size of a rooted tree whose root has degree one and whose very
/// hungry caterpillars have at most `k` edges.
pub fn f_formula(k: u32) -> u128 {
    assert!(
        (1..=MAX_F_K).contains(&k),
        "f(k) is supported for 1 <= k <= {MAX_F_K}"
    );
    match k {
        1 => 1,
        2 => 2,
        3 => 3,
        4 => 5,
        5 => 7,
        _ => match k % 3 {
            0 => (23 * pow3((k - 6) / 3) - 1) / 2,
            1 => (33 * pow3((k - 7) / 3) - 1) / 2,
            _ => (47 * pow3((k - 8) / 3) - 1) / 2,
        },
    }
}

/// The smallest `c ∈ 1..=min(k−1, 3)` with `f(k) = c·f(k−c) + 1`.
pub fn c_hat(k: u32) -> u32 {
    assert!(k >= 2, "c_hat(k) is defined for k >= 2");
    const SMALL: [u32; 7] = [1, 1, 2, 2, 2, 3, 2];
    if k <= 8 {
        SMALL[(k - 2) as usize]
    } else {
        3
    }
}

/// The profile of `B_k`: `⟨1, ĉ(k), ĉ(k − ĉ(k)), …, 0⟩`.
pub fn bk_profile(k: u32) -> BeautifulProfile {
    assert!(
        (1..=MAX_F_K).contains(&k),
        "B_k is supported for 1 <= k <= {MAX_F_K}"
    );
    let mut counts = vec![1];
    let mut rest = k;
    while rest > 1 {
        let c = c_hat(rest);
        counts.push(c);
        rest -= c;
    }
    counts.push(0);
    BeautifulProfile::new(counts).expect("B_k profiles are beautiful")
}

/// The beautiful tree `B_k` with `f(k)` edges, rooted at vertex 0.
pub fn beautiful_bk(k: u32) -> (RootedTree, BeautifulProfile) {
    let profile = bk_profile(k);
    (profile.to_rooted_tree(), profile)
}

/// `f(y) + (r − 1)·f(x)`
pub fn h_rxy(r: u32, x: u32, y: u32) -> u128 {
    assert!(
        r >= 2 && x >= 1 && y >= 1,
        "h(r, x, y) needs r >= 2, x, y >= 1"
    );
    f_formula(y) + (r as u128 - 1) * f_formula(x)
}

/// `(r, x)` such that `T_k` is `r` copies of `B_x` sharing their root.
pub fn tk_parameters(k: u32) -> (u32, u32) {
    assert!(
        (2..=MAX_E_K).contains(&k),
        "T_k parameters exist for 2 <= k <= {MAX_E_K}"
    );
    const SMALL: [(u32, u32); 13] = [
        (2, 1),
        (3, 1),
        (4, 1),
        (3, 2),
        (4, 2),
        (5, 2),
        (4, 3),
        (3, 4),
        (4, 4),
        (5, 4),
        (6, 4),
        (5, 5),
        (4, 6),
    ];
    if k <= 14 {
        SMALL[(k - 2) as usize]
    } else if k % 2 == 1 {
        (5, (k - 3) / 2)
    } else {
        (6, (k - 4) / 2)
    }
}

/// Upper bound on the size of a tree whose largest caterpillar has `k` edges.
pub fn g_formula(k: u32) -> u128 {
    assert!(
        (2..=MAX_E_K).contains(&k),
        "g(k) is supported for 2 <= k <= {MAX_E_K}"
    );
    const SMALL: [u128; 13] = [2, 3, 4, 6, 8, 10, 12, 15, 20, 25, 30, 35, 44];
    if k <= 14 {
        SMALL[(k - 2) as usize]
    } else if k % 2 == 1 {
        5 * f_formula((k - 3) / 2)
    } else {
        6 * f_formula((k - 4) / 2)
    }
}

/// `T_k`: `r` copies of `B_x` glued at their roots (vertex 0).
pub fn extremal_tk(k: u32) -> Tree {
    if k == 1 {
        return Tree::path(1);
    }
    let (r, x) = tk_parameters(k);
    let (branch, _) = beautiful_bk(x);
    let branch = branch.tree();
    let per_copy = branch.vertex_count() - 1;
    let mut edges = Vec::with_capacity(r as usize * branch.edge_count());
    for copy in 0..r as usize {
        let shift = |v: usize| if v == 0 { 0 } else { v + copy * per_copy };
        edges.extend(branch.edges().iter().map(|&(u, v)| (shift(u), shift(v))));
    }
    Tree::new(1 + r as usize * per_copy, edges).expect("glued copies form a tree")
}

/// Maximum size of a tree whose largest induced caterpillar has exactly
/// `k` edges. `e_induced(0)` is 0 by convention.
pub fn e_induced(k: u32) -> u128 {
    assert!(k <= MAX_E_K, "e(k) is supported for k <= {MAX_E_K}");
    const SMALL: [u128; 15] = [0, 1, 2, 3, 4, 6, 8, 10, 12, 15, 20, 25, 30, 35, 44];
    if k <= 14 {
        return SMALL[k as usize];
    }
    match k % 6 {
        0 => 3 * (11 * pow3((k - 12) / 6) - 1),
        2 => 3 * (47 * pow3((k - 20) / 6) - 1),
        4 => 3 * (23 * pow3((k - 16) / 6) - 1),
        1 => 5 * (47 * pow3((k - 19) / 6) - 1) / 2,
        3 => 5 * (23 * pow3((k - 15) / 6) - 1) / 2,
        _ => 5 * (11 * pow3((k - 11) / 6) - 1) / 2,
    }
}

/// `(lo, hi, q)`: `q(m) = q` for `lo <= m <= hi`, with `q(m) = m` on `[1, 4]`.
const Q_TABLE: [(u64, u64, u64); 17] = [
    (5, 6, 5),
    (7, 8, 6),
    (9, 10, 7),
    (11, 12, 8),
    (13, 15, 9),
    (16, 20, 10),
    (21, 25, 11),
    (26, 30, 12),
    (31, 35, 13),
    (36, 44, 14),
    (45, 55, 15),
    (56, 66, 16),
    (67, 80, 17),
    (81, 96, 18),
    (97, 115, 19),
    (116, 138, 20),
    (139, 170, 21),
];

/// Largest `k` such that every tree with `m` edges contains an induced
/// caterpillar with `k` edges.
pub fn q_formula(m: u64) -> u64 {
    assert!(m >= 1, "q(m) is defined for m >= 1");
    if m <= 4 {
        return m;
    }
    if m < Q_CLOSED_FORM_MIN {
        return Q_TABLE
            .iter()
            .find(|&&(lo, hi, _)| lo <= m && m <= hi)
            .map(|&(_, _, q)| q)
            .expect("table covers 5..=170");
    }
    (0..6)
        .map(|r| q_r(r, m).expect("m is in closed-form range"))
        .max()
        .unwrap()
}

/// Largest `k` with `e_induced(k − 1) < m`.
pub fn q_reference(m: u64) -> u64 {
    assert!(m >= 1, "q(m) is defined for m >= 1");
    let m = m as u128;
    let mut j = 0u32;
    while e_induced(j + 1) < m {
        j += 1;
    }
    (j + 1) as u64
}

/// The closed form `q_r(m)`: the largest `k ≡ r (mod 6)` with
/// `e_induced(k − 1) < m`, valid for `m >= 171`.
///
/// Evaluates `6⌊⌈6·log₃(X) + c⌉/6⌋ + r` with `X = (a·m + b)/d` exactly:
/// `⌈6·log₃ X⌉` is the least `j` with `3^j · d⁶ ≥ (a·m + b)⁶`.
pub fn q_r(r: u32, m: u64) -> Result<u64, InducedError> {
    let (a, b, d, c) = match r {
        0 => (2, 5, 55, 11),
        1 => (1, 3, 33, 11),
        2 => (2, 5, 235, 17),
        3 => (1, 3, 141, 17),
        4 => (2, 5, 115, 11),
        5 => (1, 3, 69, 11),
        _ => return Err(InducedError::ResidueOutOfRange(r)),
    };
    if m < Q_CLOSED_FORM_MIN {
        return Err(InducedError::BelowClosedFormRange(m));
    }
    let numerator = a as u128 * m as u128 + b;
    let j = ceil_six_log3(numerator, d);
    Ok(6 * ((j + c) / 6) + r as u64)
}

/// Least `j >= 0` with `3^j · den⁶ >= num⁶`, for `num > den > 0`.
fn ceil_six_log3(num: u128, den: u128) -> u64 {
    let den6 = den.pow(6);
    if let Some(num6) = num.checked_pow(6) {
        let holds = |j: u32| match pow3_checked(j).and_then(|p| p.checked_mul(den6)) {
            Some(lhs) => lhs >= num6,
            None => true,
        };
        // holds(80) is true: 3^80 · den⁶ overflows u128 for den > 1.
        let (mut lo, mut hi) = (0u32, 80u32);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if holds(mid) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        return lo as u64;
    }
    let num6 = BigUint::from(num).pow(6);
    let den6 = BigUint::from(den6);
    let mut lhs = den6;
    let mut j = 0u64;
    while lhs < num6 {
        lhs *= 3u32;
        j += 1;
    }
    j
}

fn pow3_checked(j: u32) -> Option<u128> {
    3u128.checked_pow(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contraction::spider;

    /// `B_k` assembled recursively: an edge from the root to the shared root
    /// of `ĉ(k)` copies of `B_{k−ĉ(k)}`.
    fn bk_recursive(k: u32) -> Tree {
        fn build(k: u32, edges: &mut Vec<(usize, usize)>, next: &mut usize) -> usize {
            let root = *next;
            *next += 1;
            let below = *next;
            *next += 1;
            edges.push((root, below));
            if k > 1 {
                let c = c_hat(k);
                for _ in 0..c {
                    let sub = build(k - c, edges, next);
                    // Glue the copy's root onto `below` by redirecting its top edge.
                    let last = edges.iter().position(|&(u, _)| u == sub).unwrap();
                    edges[last].0 = below;
                }
            }
            root
        }
        let mut edges = Vec::new();
        let mut next = 0;
        build(k, &mut edges, &mut next);
        // Drop the detached copy roots and renumber densely.
        let mut used: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        used.sort_unstable();
        used.dedup();
        let id = |x: usize| used.binary_search(&x).unwrap();
        Tree::new(used.len(), edges.iter().map(|&(u, v)| (id(u), id(v)))).unwrap()
    }

    #[test]
    fn profile_validation() {
        assert!(BeautifulProfile::new(vec![1, 2, 1, 0]).is_ok());
        assert!(BeautifulProfile::new(vec![1, 0]).is_ok());
        assert!(BeautifulProfile::new(vec![2, 1, 0]).is_err());
        assert!(BeautifulProfile::new(vec![1, 4, 0]).is_err());
        assert!(BeautifulProfile::new(vec![1, 1, 2, 0]).is_err());
        assert!(BeautifulProfile::new(vec![1, 2, 1]).is_err());
        assert!(BeautifulProfile::new(vec![1, 2, 0, 1, 0]).is_err());
        let p = BeautifulProfile::new(vec![1, 3, 2, 1, 0]).unwrap();
        assert_eq!(p.edge_count(), 1 + 3 + 6 + 6);
        assert_eq!(p.hungry_size(), 7);
    }

    #[test]
    fn max_caterpillar_examples() {
        assert_eq!(max_caterpillar(&Tree::star(4)).unwrap().size, 4);
        let (b4, _) = beautiful_bk(4);
        assert_eq!(max_caterpillar(b4.tree()).unwrap().size, 5);
        assert_eq!(max_caterpillar(&extremal_tk(10)).unwrap().size, 10);
        assert_eq!(max_caterpillar(&spider(&[2, 2, 2])).unwrap().size, 5);
        assert_eq!(
            max_caterpillar(&Tree::single_vertex()),
            Err(TreeError::Degenerate)
        );
    }

    #[test]
    fn max_caterpillar_witness_shapes() {
        let single = max_caterpillar(&Tree::path(1)).unwrap();
        assert_eq!(single.spine, vec![0]);
        assert_eq!(single.vertex_set, vec![0, 1]);

        let star = max_caterpillar(&Tree::star(4)).unwrap();
        assert_eq!(star.spine, vec![0]);

        let path = max_caterpillar(&Tree::path(5)).unwrap();
        assert_eq!(path.spine, vec![1, 2, 3, 4]);
        assert_eq!(path.size, 5);
        path.check(&Tree::path(5)).unwrap();

        // Legs 2, 2, 2: mid–center–mid keeps everything but one leaf.
        let r43 = spider(&[2, 2, 2]);
        let w = max_caterpillar(&r43).unwrap();
        assert_eq!(w.spine, vec![1, 0, 3]);
        w.check(&r43).unwrap();
    }

    #[test]
    fn witness_check_rejects_bad_witnesses() {
        let t = Tree::path(4);
        let good = max_caterpillar(&t).unwrap();
        let mut wrong_size = good.clone();
        wrong_size.size += 1;
        assert!(wrong_size.check(&t).is_err());
        let disconnected = CaterpillarWitness {
            vertex_set: vec![0, 1, 3, 4],
            spine: vec![1],
            size: 2,
        };
        assert!(disconnected.check(&t).is_err());
        let off_spine = CaterpillarWitness {
            vertex_set: vec![0, 1, 2, 3],
            spine: vec![1],
            size: 3,
        };
        assert!(off_spine.check(&t).is_err());
    }

    #[test]
    fn very_hungry_examples() {
        for m in 1..6 {
            let rt = RootedTree::new(Tree::path(m), 0).unwrap();
            assert_eq!(very_hungry_max(&rt).unwrap(), m as u64);
        }
        assert_eq!(very_hungry_max(&beautiful_bk(6).0).unwrap(), 6);
        assert_eq!(very_hungry_max(&beautiful_bk(4).0).unwrap(), 4);
    }

    #[test]
    fn f_values() {
        let listed = [1, 2, 3, 5, 7, 11, 16, 23, 34, 49, 70];
        for (i, &f) in listed.iter().enumerate() {
            assert_eq!(f_formula(i as u32 + 1), f);
        }
        assert_eq!(f_formula(12), 103);
        assert!(f_formula(MAX_F_K) > 0);
    }

    #[test]
    fn c_hat_values() {
        let listed = [1, 1, 2, 2, 2, 3, 2, 3, 3, 3];
        for (i, &c) in listed.iter().enumerate() {
            assert_eq!(c_hat(i as u32 + 2), c);
        }
        assert_eq!(c_hat(30), 3);
        for k in 2..=60 {
            let c = c_hat(k);
            assert_eq!(f_formula(k), c as u128 * f_formula(k - c) + 1, "k = {k}");
        }
    }

    #[test]
    fn bk_examples() {
        let (b4, p4) = beautiful_bk(4);
        assert_eq!(p4.counts(), &[1, 2, 1, 0]);
        assert_eq!(b4.tree().edge_count(), 5);
        assert_eq!(beautiful_bk(8).0.tree().edge_count(), 23);
        let (b9, _) = beautiful_bk(9);
        assert_eq!(b9.tree().edge_count(), 34);
        assert!(max_caterpillar(b9.tree()).unwrap().size <= 17);
    }

    #[test]
    fn bk_profile_and_recursive_routes_agree() {
        for k in 1..=12 {
            let (bk, _) = beautiful_bk(k);
            assert_eq!(
                bk.tree().canonical_code(),
                bk_recursive(k).canonical_code(),
                "k = {k}"
            );
        }
    }

    #[test]
    fn h_and_g_values() {
        assert_eq!(h_rxy(4, 4, 4), 20);
        assert_eq!(h_rxy(2, 1, 1), 2);
        assert_eq!(h_rxy(5, 2, 3), 11);
        assert_eq!(g_formula(14), 44);
        assert_eq!(g_formula(21), 170);
        assert_eq!(g_formula(26), 420);
        for k in 2..=14 {
            let (r, x) = tk_parameters(k);
            assert_eq!(g_formula(k), h_rxy(r, x, x), "k = {k}");
        }
    }

    #[test]
    fn tk_examples() {
        assert_eq!(tk_parameters(9), (3, 4));
        assert_eq!(extremal_tk(9).edge_count(), 15);
        assert_eq!(tk_parameters(16), (6, 6));
        assert_eq!(extremal_tk(16).edge_count(), 66);
        assert_eq!(tk_parameters(23), (5, 10));
        assert_eq!(extremal_tk(23).edge_count(), 245);
        assert_eq!(extremal_tk(1), Tree::path(1));
    }

    #[test]
    fn tk_minus_a_branch() {
        let t10 = extremal_tk(10);
        // Vertices 1..=5 form the first copy of B_4.
        let parts = t10.remove_vertices(&[1, 2, 3, 4, 5]);
        let largest = parts.iter().map(|c| c.tree.edge_count()).max().unwrap();
        assert_eq!(largest, 15);
    }

    #[test]
    fn e_values() {
        let listed = [
            1, 2, 3, 4, 6, 8, 10, 12, 15, 20, 25, 30, 35, 44, 55, 66, 80, 96, 115, 138, 170,
        ];
        for (i, &e) in listed.iter().enumerate() {
            assert_eq!(e_induced(i as u32 + 1), e);
        }
        assert_eq!(e_induced(27), 515);
        for k in 2..=100 {
            assert_eq!(e_induced(k), g_formula(k), "k = {k}");
        }
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_formula(30), 12);
        assert_eq!(q_formula(171), 22);
        assert_eq!(q_formula(3), 3);
        assert_eq!(q_formula(170), 21);
        assert_eq!(q_r(4, 171), Ok(22));
        assert_eq!(q_r(0, 171), Ok(18));
        assert_eq!(q_r(5, 250), Ok(23));
        assert_eq!(q_r(6, 250), Err(InducedError::ResidueOutOfRange(6)));
        assert_eq!(q_r(1, 170), Err(InducedError::BelowClosedFormRange(170)));
    }

    #[test]
    fn q_table_matches_reference() {
        for m in 1..=170 {
            assert_eq!(q_formula(m), q_reference(m), "m = {m}");
        }
    }

    #[test]
    fn q_closed_forms_beyond_u128_fast_path() {
        for m in [10u64.pow(7), 10u64.pow(12), u64::MAX / 3, u64::MAX] {
            assert_eq!(q_formula(m), q_reference(m), "m = {m}");
        }
    }
}
