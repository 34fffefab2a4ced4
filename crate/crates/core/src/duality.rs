//! Trees versus families of disjoint chords with endpoints in convex
//! position.
//!
//! Endpoints are labelled `0..2n` in cyclic boundary order, and every
//! crossing question is answered by cyclic interleaving of labels. Exact
//! coordinates ([`realize_coordinates`]) exist only for drawing.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::contraction::{contract_to_caterpillar, kappa, ContractionError, ContractionPlan};
use crate::induced::{CaterpillarWitness, InducedError};
use crate::tree::{Tree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("a family needs at least one segment")]
    Empty,
    #[error("expected {expected} segments, got {actual}")]
    WrongCount { expected: usize, actual: usize },
    #[error("label {label} is outside 0..{bound}")]
    LabelOutOfRange { label: usize, bound: usize },
    #[error("segment ({0}, {0}) has coincident endpoints")]
    DegenerateSegment(usize),
    #[error("label {0} is used by two segments")]
    DuplicateLabel(usize),
    #[error("segments ({}, {}) and ({}, {}) cross", .0.0, .0.1, .1.0, .1.1)]
    Crossing((usize, usize), (usize, usize)),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Witness(#[from] InducedError),
    #[error(transparent)]
    Contraction(#[from] ContractionError),
}

/// `n` pairwise disjoint chords on `2n` points in convex position.
///
/// Pairs are stored as `(a, b)` with `a < b`, sorted by `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentFamily {
    pairs: Vec<(usize, usize)>,
    partner: Vec<usize>,
    pair_of: Vec<usize>,
}

impl SegmentFamily {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, FamilyError> {
        if n == 0 {
            return Err(FamilyError::Empty);
        }
        if pairs.len() != n {
            return Err(FamilyError::WrongCount {
                expected: n,
                actual: pairs.len(),
            });
        }
        let bound = 2 * n;
        let mut partner = vec![usize::MAX; bound];
        for &(a, b) in pairs {
            for label in [a, b] {
                if label >= bound {
                    return Err(FamilyError::LabelOutOfRange { label, bound });
                }
            }
            if a == b {
                return Err(FamilyError::DegenerateSegment(a));
            }
            for label in [a, b] {
                if partner[label] != usize::MAX {
                    return Err(FamilyError::DuplicateLabel(label));
                }
            }
            partner[a] = b;
            partner[b] = a;
        }
        // n pairs over 2n labels with no repeats cover every label.
        let mut open: Vec<usize> = Vec::new();
        for label in 0..bound {
            let other = partner[label];
            if other > label {
                open.push(label);
            } else {
                let top = open.pop().expect("closing label has an opener");
                if top != other {
                    return Err(FamilyError::Crossing((other, label), (top, partner[top])));
                }
            }
        }
        let mut sorted: Vec<(usize, usize)> =
            pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        sorted.sort_unstable();
        let mut pair_of = vec![0; bound];
        for (i, &(a, b)) in sorted.iter().enumerate() {
            pair_of[a] = i;
            pair_of[b] = i;
        }
        Ok(SegmentFamily {
            pairs: sorted,
            partner,
            pair_of,
        })
    }

    /// Number of segments.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn label_count(&self) -> usize {
        2 * self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn partner(&self, label: usize) -> usize {
        self.partner[label]
    }

    /// Index into [`SegmentFamily::pairs`] of the segment ending at `label`.
    pub fn pair_of(&self, label: usize) -> usize {
        self.pair_of[label]
    }

    pub fn is_segment(&self, a: usize, b: usize) -> bool {
        a < self.label_count() && self.partner[a] == b
    }

    /// The subfamily on `indices`, relabelled densely; `labels[new] = old`.
    pub fn subfamily(&self, indices: &[usize]) -> Result<(SegmentFamily, Vec<usize>), FamilyError> {
        let mut labels: Vec<usize> = indices
            .iter()
            .flat_map(|&i| [self.pairs[i].0, self.pairs[i].1])
            .collect();
        labels.sort_unstable();
        let new = |x: usize| labels.binary_search(&x).expect("label was collected");
        let pairs: Vec<(usize, usize)> = indices
            .iter()
            .map(|&i| (new(self.pairs[i].0), new(self.pairs[i].1)))
            .collect();
        let family = SegmentFamily::new(pairs.len(), &pairs)?;
        Ok((family, labels))
    }
}

/// Whether chords `{a, b}` and `{c, d}` of a convex point set cross:
/// their endpoints interleave in cyclic order and they share no endpoint.
pub fn chords_cross(a: usize, b: usize, c: usize, d: usize) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let (lo, hi) = (a.min(b), a.max(b));
    let inside = |x: usize| lo < x && x < hi;
    inside(c) != inside(d)
}

/// `T(S)` together with the cell structure it was read from.
///
/// Tree edge `i` is family segment `i`. Cells are numbered by the smallest
/// boundary arc they contain, where arc `i` joins labels `i` and `i + 1`
/// (arc `2n − 1` wraps to label 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTree {
    pub tree: Tree,
    /// `cell_of_arc[i]`: the cell containing boundary arc `i`.
    pub cell_of_arc: Vec<usize>,
    /// `(outer, inner)` cells on either side of segment `i`.
    pub segment_cells: Vec<(usize, usize)>,
}

impl DualTree {
    /// Segments on the boundary of `cell`, ascending.
    pub fn segments_of_cell(&self, cell: usize) -> Vec<usize> {
        self.segment_cells
            .iter()
            .enumerate()
            .filter(|(_, &(o, i))| o == cell || i == cell)
            .map(|(s, _)| s)
            .collect()
    }
}

/// Builds `T(S)`: one vertex per cell, one edge per chord.
pub fn segments_to_tree(s: &SegmentFamily) -> DualTree {
    let bound = s.label_count();
    // Region keys: chord j owns the region just inside it (smallest arc a_j);
    // `usize::MAX` stands for the outer region.
    const OUTER: usize = usize::MAX;
    let mut parent_of = vec![OUTER; s.len()];
    let mut arc_region = vec![OUTER; bound];
    let mut open: Vec<usize> = Vec::new();
    for (label, region) in arc_region.iter_mut().enumerate() {
        let j = s.pair_of(label);
        if s.pairs()[j].0 == label {
            parent_of[j] = open.last().copied().unwrap_or(OUTER);
            open.push(j);
        } else {
            open.pop();
        }
        *region = open.last().copied().unwrap_or(OUTER);
    }
    let outer_key = s.partner(0);
    let key = |region: usize| {
        if region == OUTER {
            outer_key
        } else {
            s.pairs()[region].0
        }
    };
    let mut keys: Vec<usize> = (0..s.len()).map(|j| s.pairs()[j].0).collect();
    keys.push(outer_key);
    keys.sort_unstable();
    let cell = |region: usize| keys.binary_search(&key(region)).expect("key registered");

    let segment_cells: Vec<(usize, usize)> = (0..s.len())
        .map(|j| (cell(parent_of[j]), cell(j)))
        .collect();
    let tree = Tree::new(s.len() + 1, segment_cells.iter().copied())
        .expect("cells of disjoint chords form a tree");
    DualTree {
        tree,
        cell_of_arc: arc_region.into_iter().map(cell).collect(),
        segment_cells,
    }
}

/// A family whose dual tree is `t`, by an Euler tour from `root`.
///
/// Each tree edge becomes the chord joining the boundary positions where the
/// tour enters and leaves the child subtree; children are visited in
/// ascending id order. Also returns `segment_of_edge[i]` for tree edge `i`.
pub fn tree_to_segments_mapped(
    t: &Tree,
    root: usize,
) -> Result<(SegmentFamily, Vec<usize>), DualityError> {
    if t.edge_count() == 0 {
        return Err(TreeError::Degenerate.into());
    }
    if root >= t.vertex_count() {
        return Err(TreeError::VertexOutOfRange {
            vertex: root,
            vertex_count: t.vertex_count(),
        }
        .into());
    }
    let mut pairs = Vec::with_capacity(t.edge_count());
    let mut edge_pair = vec![(0usize, 0usize); t.edge_count()];
    let mut position = 0usize;
    // (vertex, parent, next neighbour index, opening position)
    let mut stack = vec![(root, usize::MAX, 0usize, 0usize)];
    while let Some(frame) = stack.last_mut() {
        let (v, from, idx, _) = *frame;
        if idx < t.degree(v) {
            frame.2 += 1;
            let w = t.neighbors(v)[idx];
            if w != from {
                stack.push((w, v, 0, position));
                position += 1;
            }
        } else {
            let (_, _, _, opened) = stack.pop().unwrap();
            if from != usize::MAX {
                let pair = (opened, position);
                position += 1;
                pairs.push(pair);
                edge_pair[t.edge_index(v, from).expect("tree edge")] = pair;
            }
        }
    }
    let family = SegmentFamily::new(pairs.len(), &pairs)?;
    let mapping = edge_pair.iter().map(|&(a, _)| family.pair_of(a)).collect();
    Ok((family, mapping))
}

pub fn tree_to_segments(t: &Tree, root: usize) -> Result<SegmentFamily, DualityError> {
    tree_to_segments_mapped(t, root).map(|(family, _)| family)
}

/// Which alternating-path notion a path is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathMode {
    /// A simple alternating path among the family.
    #[serde(alias = "among")]
    Simple,
    /// Additionally crosses no family segment outside the path.
    Compatible,
}

impl fmt::Display for PathMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathMode::Simple => "simple",
            PathMode::Compatible => "compatible",
        })
    }
}

/// A polygonal chain `e₀ e₁ … e_{2k−1}` whose edges `(e₀, e₁)`,
/// `(e₂, e₃)`, … are family segments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingPath {
    pub endpoints: Vec<usize>,
}

impl AlternatingPath {
    pub fn new(endpoints: Vec<usize>) -> Self {
        AlternatingPath { endpoints }
    }

    /// Number of family segments on the path.
    pub fn segment_count(&self) -> usize {
        self.endpoints.len() / 2
    }

    /// Consecutive endpoint pairs; even positions are family segments.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.endpoints.windows(2).map(|w| (w[0], w[1]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathIssue {
    Empty,
    OddLength(usize),
    LabelOutOfRange(usize),
    DuplicateEndpoint(usize),
    NotASegment {
        position: usize,
        a: usize,
        b: usize,
    },
    SelfCrossing {
        first: (usize, usize),
        second: (usize, usize),
    },
    CrossesUnused {
        edge: (usize, usize),
        segment: (usize, usize),
    },
}

impl fmt::Display for PathIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathIssue::Empty => write!(f, "empty path"),
            PathIssue::OddLength(len) => write!(f, "odd number of endpoints ({len})"),
            PathIssue::LabelOutOfRange(l) => write!(f, "label {l} out of range"),
            PathIssue::DuplicateEndpoint(l) => write!(f, "duplicate endpoint {l}"),
            PathIssue::NotASegment { position, a, b } => {
                write!(f, "edge {position} ({a}, {b}) is not a family segment")
            }
            PathIssue::SelfCrossing { first, second } => write!(
                f,
                "path edges ({}, {}) and ({}, {}) cross",
                first.0, first.1, second.0, second.1
            ),
            PathIssue::CrossesUnused { edge, segment } => write!(
                f,
                "path edge ({}, {}) crosses unused segment ({}, {})",
                edge.0, edge.1, segment.0, segment.1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathReport {
    pub mode: PathMode,
    pub segments_used: usize,
    pub issues: Vec<PathIssue>,
}

impl PathReport {
    pub fn passed(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Checks alternation, distinct endpoints and simplicity; in compatible mode
/// also that no path edge crosses an unused family segment.
pub fn validate_path(s: &SegmentFamily, p: &AlternatingPath, mode: PathMode) -> PathReport {
    let mut issues = Vec::new();
    let ends = &p.endpoints;
    let bound = s.label_count();
    if ends.is_empty() {
        issues.push(PathIssue::Empty);
    }
    if ends.len() % 2 == 1 {
        issues.push(PathIssue::OddLength(ends.len()));
    }
    let mut seen = vec![false; bound];
    for &l in ends {
        if l >= bound {
            issues.push(PathIssue::LabelOutOfRange(l));
        } else if seen[l] {
            issues.push(PathIssue::DuplicateEndpoint(l));
        } else {
            seen[l] = true;
        }
    }
    if !issues.is_empty() {
        return PathReport {
            mode,
            segments_used: p.segment_count(),
            issues,
        };
    }
    let edges: Vec<(usize, usize)> = p.edges().collect();
    for (i, &(a, b)) in edges.iter().enumerate().step_by(2) {
        if !s.is_segment(a, b) {
            issues.push(PathIssue::NotASegment { position: i, a, b });
        }
    }
    for i in 0..edges.len() {
        for j in i + 2..edges.len() {
            let (x, y) = (edges[i], edges[j]);
            if chords_cross(x.0, x.1, y.0, y.1) {
                issues.push(PathIssue::SelfCrossing {
                    first: x,
                    second: y,
                });
            }
        }
    }
    if mode == PathMode::Compatible {
        for &(c, d) in s.pairs() {
            if seen[c] && seen[d] {
                continue;
            }
            for &(a, b) in &edges {
                if chords_cross(a, b, c, d) {
                    issues.push(PathIssue::CrossesUnused {
                        edge: (a, b),
                        segment: (c, d),
                    });
                }
            }
        }
    }
    PathReport {
        mode,
        segments_used: p.segment_count(),
        issues,
    }
}

/// A compatible path through the `w.size` segments of a caterpillar in
/// `T(S)`.
///
/// Walks the spine cells in order. Inside a cell the chosen chords are
/// visited in boundary order starting next to the entry chord; chords on
/// the far side of the exit chord are picked up on the way back, which
/// costs one diagonal of the (convex) cell and crosses nothing.
pub fn compatible_path(
    s: &SegmentFamily,
    w: &CaterpillarWitness,
) -> Result<AlternatingPath, DualityError> {
    let dual = segments_to_tree(s);
    w.check(&dual.tree)?;
    let t = &dual.tree;
    let mut inside = vec![false; t.vertex_count()];
    for &v in &w.vertex_set {
        inside[v] = true;
    }
    let used_segments = |cell: usize| -> Vec<usize> {
        t.neighbors(cell)
            .iter()
            .filter(|&&x| inside[x])
            .map(|&x| {
                t.edge_index(cell, x)
                    .expect("adjacent cells share a segment")
            })
            .collect()
    };
    let link = |a: usize, b: usize| t.edge_index(a, b).expect("spine steps are tree edges");

    let spine = &w.spine;
    let first_exit = spine.get(1).map(|&next| link(spine[0], next));
    let mut endpoints: Vec<usize> = Vec::with_capacity(2 * w.size);

    // Opening segment and the endpoint the walk stands on afterwards.
    let first_cell = used_segments(spine[0]);
    let (mut entry, mut at, start) = match first_exit {
        Some(exit) if first_cell.len() == 1 => {
            let (a, b) = s.pairs()[exit];
            endpoints.extend([a, b]);
            (exit, b, 1)
        }
        _ => {
            let ring = cell_ring(s, &first_cell);
            let (p, q) = match first_exit {
                Some(exit) => {
                    let j = ring_position_of_segment(s, &ring, exit);
                    (ring[(j + 2) % ring.len()], ring[(j + 3) % ring.len()])
                }
                None => {
                    let p = ring[0];
                    let q = if ring.len() == 2 || s.partner(p) == ring[1] {
                        ring[1]
                    } else {
                        ring[ring.len() - 1]
                    };
                    (p, q)
                }
            };
            endpoints.extend([p, q]);
            (s.pair_of(p), q, 0)
        }
    };

    for i in start..spine.len() {
        let cell = spine[i];
        let exit = spine.get(i + 1).map(|&next| link(cell, next));
        let ring = cell_ring(s, &used_segments(cell));
        let arrivals = walk_cell(s, &ring, entry, at, exit);
        endpoints.extend(&arrivals);
        if let Some(x) = exit {
            entry = x;
            at = *endpoints.last().unwrap();
        }
    }
    debug_assert_eq!(endpoints.len(), 2 * w.size);
    Ok(AlternatingPath::new(endpoints))
}

/// Endpoints of `segments`, ascending: the cyclic boundary order of a cell.
fn cell_ring(s: &SegmentFamily, segments: &[usize]) -> Vec<usize> {
    let mut ring: Vec<usize> = segments
        .iter()
        .flat_map(|&j| [s.pairs()[j].0, s.pairs()[j].1])
        .collect();
    ring.sort_unstable();
    ring
}

/// Position `j` such that `ring[j]` and `ring[j + 1]` (cyclically) are the
/// endpoints of `segment`.
fn ring_position_of_segment(s: &SegmentFamily, ring: &[usize], segment: usize) -> usize {
    let len = ring.len();
    (0..len)
        .find(|&j| s.pair_of(ring[j]) == segment && s.pair_of(ring[(j + 1) % len]) == segment)
        .expect("a cell's segments occupy adjacent ring positions")
}

/// Endpoints visited in one cell after arriving at `at` on `entry`.
fn walk_cell(
    s: &SegmentFamily,
    ring: &[usize],
    entry: usize,
    at: usize,
    exit: Option<usize>,
) -> Vec<usize> {
    let len = ring.len();
    if len == 2 {
        return Vec::new();
    }
    let here = ring
        .iter()
        .position(|&l| l == at)
        .expect("arrival lies on the cell");
    let other = s.partner(at);
    let step_forward = ring[(here + 1) % len] != other;
    let mut order: Vec<(usize, usize)> = Vec::new();
    let mut pos = here;
    for _ in 0..(len - 2) / 2 {
        pos = if step_forward {
            (pos + 2) % len
        } else {
            (pos + len - 2) % len
        };
        let near = if step_forward {
            ring[(pos + len - 1) % len]
        } else {
            ring[(pos + 1) % len]
        };
        order.push((near, s.partner(near)));
    }
    debug_assert!(order.iter().all(|&(a, _)| s.pair_of(a) != entry));

    let split = match exit {
        Some(x) => order
            .iter()
            .position(|&(a, _)| s.pair_of(a) == x)
            .expect("exit borders the cell"),
        None => order.len() - 1,
    };
    let mut out = Vec::with_capacity(len - 2);
    for &(near, far) in &order[..split] {
        out.extend([near, far]);
    }
    let back_side = &order[split + 1..];
    let (x_near, x_far) = order[split];
    if back_side.is_empty() {
        out.extend([x_near, x_far]);
    } else {
        for &(near, far) in back_side.iter().rev() {
            out.extend([far, near]);
        }
        out.extend([x_far, x_near]);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmongPath {
    pub path: AlternatingPath,
    pub plan: ContractionPlan,
    /// Family segments kept, i.e. not deleted by the contraction.
    pub kept_segments: Vec<usize>,
}

/// An alternating path among `S` through `κ(T(S))` segments.
///
/// Contracting an edge of `T(S)` is deleting its segment, so the kept
/// subfamily `S′` has a caterpillar as its dual tree and admits a
/// compatible path through all of its segments.
pub fn among_path(s: &SegmentFamily) -> Result<AmongPath, DualityError> {
    let dual = segments_to_tree(s);
    let k = kappa(&dual.tree)?;
    let plan = contract_to_caterpillar(&dual.tree, k)?;
    let kept_segments: Vec<usize> = plan
        .kept_source_edges(&dual.tree)
        .into_iter()
        .map(|(u, v)| dual.tree.edge_index(u, v).expect("kept edge exists"))
        .collect();
    let (sub, labels) = s.subfamily(&kept_segments)?;
    let sub_tree = segments_to_tree(&sub).tree;
    debug_assert_eq!(
        sub_tree.canonical_code(),
        plan.kept_caterpillar.canonical_code()
    );
    let spine = sub_tree
        .caterpillar_spine()
        .expect("deleting the contracted segments leaves a caterpillar");
    let witness = CaterpillarWitness::from_spine(&sub_tree, spine);
    let local = compatible_path(&sub, &witness)?;
    let path = AlternatingPath::new(local.endpoints.iter().map(|&l| labels[l]).collect());
    Ok(AmongPath {
        path,
        plan,
        kept_segments,
    })
}

/// Exact integer points on the parabola `y = x²`, one per label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricRealization {
    pub points: Vec<(i64, i64)>,
}

impl GeometricRealization {
    /// Twice the signed area of triangle `(i, j, l)`.
    pub fn orientation(&self, i: usize, j: usize, l: usize) -> i128 {
        let (a, b, c) = (self.points[i], self.points[j], self.points[l]);
        (b.0 - a.0) as i128 * (c.1 - a.1) as i128 - (b.1 - a.1) as i128 * (c.0 - a.0) as i128
    }
}

pub fn realize_coordinates(s: &SegmentFamily) -> GeometricRealization {
    GeometricRealization {
        points: (0..s.label_count() as i64).map(|i| (i, i * i)).collect(),
    }
}
