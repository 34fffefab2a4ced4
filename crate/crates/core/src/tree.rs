//! Unrooted and rooted trees with dense vertex ids.
//!
//! A [`Tree`] is immutable once built. Every operation that changes the
//! vertex set hands back an explicit old→new (or new→old) id mapping so
//! witnesses can be carried across transformations.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("vertex {vertex} out of range for a tree on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) closes a cycle")]
    Cycle(usize, usize),
    #[error("a tree on {vertex_count} vertices needs {expected} edges, got {actual}")]
    EdgeCount {
        vertex_count: usize,
        expected: usize,
        actual: usize,
    },
    #[error("({0}, {1}) is not an edge of the tree")]
    MissingEdge(usize, usize),
    #[error("operation requires a tree with at least one edge")]
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: edge ({u}, {v}) closes a cycle")]
    Cycle { line: usize, u: usize, v: usize },
    #[error("line {line}: edge ({u}, {v}) is disconnected from the edge on line {first_line}")]
    Disconnected {
        line: usize,
        first_line: usize,
        u: usize,
        v: usize,
    },
    #[error("line {line}: vertex id {id} outside the contiguous range 0..={max}")]
    NonContiguous { line: usize, id: usize, max: usize },
}

/// An unrooted tree on `vertex_count` vertices labelled `0..vertex_count`.
///
/// Edges are stored normalized as `(min, max)` in insertion order; adjacency
/// lists are sorted ascending and cached, so degree queries are O(1).
#[derive(Clone, PartialEq, Eq)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tree")
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges)
            .finish()
    }
}

impl Tree {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, TreeError> {
        assert!(vertex_count >= 1, "a tree has at least one vertex");
        let mut dsu = Dsu::new(vertex_count);
        let mut adj = vec![Vec::new(); vertex_count];
        let mut normalized = Vec::with_capacity(vertex_count - 1);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(TreeError::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            if !dsu.union(u, v) {
                return Err(TreeError::Cycle(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
            normalized.push((u.min(v), u.max(v)));
        }
        if normalized.len() != vertex_count - 1 {
            return Err(TreeError::EdgeCount {
                vertex_count,
                expected: vertex_count - 1,
                actual: normalized.len(),
            });
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Tree {
            edges: normalized,
            adj,
        })
    }

    pub fn single_vertex() -> Self {
        Tree {
            edges: Vec::new(),
            adj: vec![Vec::new()],
        }
    }

    /// The path 0–1–…–m.
    pub fn path(edge_count: usize) -> Self {
        Tree::new(edge_count + 1, (0..edge_count).map(|i| (i, i + 1))).expect("path is a tree")
    }

    /// The star with centre 0 and leaves 1..=m.
    pub fn star(edge_count: usize) -> Self {
        Tree::new(edge_count + 1, (1..=edge_count).map(|i| (0, i))).expect("star is a tree")
    }

    /// Decodes a Prüfer sequence over `0..seq.len() + 2`.
    pub fn from_prufer(seq: &[usize]) -> Self {
        let n = seq.len() + 2;
        let mut degree = vec![1usize; n];
        for &x in seq {
            assert!(x < n, "Prüfer entry {x} out of range");
            degree[x] += 1;
        }
        let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
            .filter(|&v| degree[v] == 1)
            .map(std::cmp::Reverse)
            .collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &x in seq {
            let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf is always available");
            edges.push((leaf, x));
            degree[x] -= 1;
            if degree[x] == 1 {
                leaves.push(std::cmp::Reverse(x));
            }
        }
        let std::cmp::Reverse(a) = leaves.pop().expect("two leaves remain");
        let std::cmp::Reverse(b) = leaves.pop().expect("two leaves remain");
        edges.push((a, b));
        Tree::new(n, edges).expect("Prüfer decoding yields a tree")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of edge `{u, v}` in [`Tree::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.iter().position(|&e| e == key)
    }

    /// The tree with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Tree {
        assert_eq!(perm.len(), self.vertex_count());
        Tree::new(
            self.vertex_count(),
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
        .expect("relabeling by a permutation preserves tree structure")
    }

    /// Serializes to the edge-list text format, one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// BFS distances and parents from `source`; the parent of `source` is itself.
    pub fn bfs(&self, source: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.vertex_count();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        parent[source] = source;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    /// The unique path from `from` to `to`, both inclusive.
    pub fn path_between(&self, from: usize, to: usize) -> Vec<usize> {
        let (_, parent) = self.bfs(to);
        let mut path = vec![from];
        let mut cur = from;
        while cur != to {
            cur = parent[cur];
            path.push(cur);
        }
        path
    }

    pub fn leaves(&self) -> Result<Vec<usize>, TreeError> {
        if self.edge_count() == 0 {
            return Err(TreeError::Degenerate);
        }
        Ok((0..self.vertex_count())
            .filter(|&v| self.degree(v) == 1)
            .collect())
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.vertex_count())
            .filter(|&v| self.degree(v) == 1)
            .count()
    }

    /// Longest path length with a witness.
    ///
    /// Among all longest paths, the witness has the lexicographically
    /// smallest endpoint pair `(u, v)` with `u <= v`, and runs from `u` to `v`.
    pub fn diameter(&self) -> Diameter {
        if self.edge_count() == 0 {
            return Diameter {
                length: 0,
                path: vec![0],
            };
        }
        let (d0, _) = self.bfs(0);
        let a = argmax_first(&d0);
        let (da, _) = self.bfs(a);
        let b = argmax_first(&da);
        let (db, _) = self.bfs(b);
        let length = da[b];
        // A vertex is an endpoint of some longest path iff its eccentricity
        // equals the diameter, and eccentricity is max(dist to a, dist to b).
        let u = (0..self.vertex_count())
            .find(|&v| da[v].max(db[v]) == length)
            .expect("diameter endpoints exist");
        let (du, parent) = self.bfs(u);
        let v = (0..self.vertex_count())
            .find(|&w| du[w] == length)
            .expect("farthest vertex exists");
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        Diameter { length, path }
    }

    /// Merges the endpoints of edge `{u, v}`.
    ///
    /// The merged vertex takes the smaller id; ids above the larger endpoint
    /// shift down by one. `mapping[old] = new`.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Contraction, TreeError> {
        if !self.has_edge(u, v) {
            return Err(TreeError::MissingEdge(u, v));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let mapping: Vec<usize> = (0..self.vertex_count())
            .map(|w| match w.cmp(&gone) {
                std::cmp::Ordering::Less => w,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => w - 1,
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|&&e| e != (keep, gone))
            .map(|&(a, b)| (mapping[a], mapping[b]));
        let tree = Tree::new(self.vertex_count() - 1, edges)?;
        Ok(Contraction { tree, mapping })
    }

    /// Components of the subgraph induced on the vertices not in `removed`.
    ///
    /// Components are ordered by their smallest original vertex; inside a
    /// component, new ids follow the original id order.
    pub fn remove_vertices(&self, removed: &[usize]) -> Vec<Component> {
        let n = self.vertex_count();
        let mut gone = vec![false; n];
        for &v in removed {
            gone[v] = true;
        }
        let mut comp = vec![usize::MAX; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if gone[start] || comp[start] != usize::MAX {
                continue;
            }
            let id = members.len();
            let mut list = vec![start];
            comp[start] = id;
            let mut head = 0;
            while head < list.len() {
                let x = list[head];
                head += 1;
                for &y in &self.adj[x] {
                    if !gone[y] && comp[y] == usize::MAX {
                        comp[y] = id;
                        list.push(y);
                    }
                }
            }
            list.sort_unstable();
            members.push(list);
        }
        members
            .into_iter()
            .map(|vertices| {
                let mut local = vec![usize::MAX; n];
                for (i, &v) in vertices.iter().enumerate() {
                    local[v] = i;
                }
                let edges = self
                    .edges
                    .iter()
                    .filter(|&&(a, b)| local[a] != usize::MAX && local[b] != usize::MAX)
                    .map(|&(a, b)| (local[a], local[b]));
                let tree = Tree::new(vertices.len(), edges).expect("induced component is a tree");
                Component { tree, vertices }
            })
            .collect()
    }

    /// The spine of the tree if it is a caterpillar.
    ///
    /// The spine lists the non-leaf vertices in path order, starting from the
    /// end with the smaller id. Trees with at most one edge have no non-leaf
    /// vertex; their spine is `[0]`.
    pub fn caterpillar_spine(&self) -> Option<Vec<usize>> {
        let inner: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| self.degree(v) >= 2)
            .collect();
        if inner.is_empty() {
            return Some(vec![0]);
        }
        let inner_degree = |v: usize| self.adj[v].iter().filter(|&&w| self.degree(w) >= 2).count();
        if inner.iter().any(|&v| inner_degree(v) > 2) {
            return None;
        }
        // Deleting leaves keeps a tree connected, so the inner vertices form a path.
        let start = *inner
            .iter()
            .find(|&&v| inner_degree(v) <= 1)
            .expect("a path has an end");
        let mut spine = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self.adj[cur]
                .iter()
                .copied()
                .find(|&w| w != prev && self.degree(w) >= 2);
            match next {
                Some(w) => {
                    spine.push(w);
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        Some(spine)
    }

    pub fn is_caterpillar(&self) -> bool {
        self.caterpillar_spine().is_some()
    }

    /// At most one vertex of degree greater than two.
    pub fn is_spider(&self) -> bool {
        (0..self.vertex_count())
            .filter(|&v| self.degree(v) > 2)
            .count()
            <= 1
    }

    /// One or two centroids, ascending.
    pub fn centroids(&self) -> Vec<usize> {
        let n = self.vertex_count();
        if n == 1 {
            return vec![0];
        }
        let order = self.preorder(0);
        let (_, parent) = self.bfs(0);
        let mut size = vec![1usize; n];
        for &v in order.iter().rev() {
            if v != 0 {
                size[parent[v]] += size[v];
            }
        }
        let mut out = Vec::new();
        for v in 0..n {
            let mut heaviest = n - size[v];
            for &w in &self.adj[v] {
                if parent[w] == v {
                    heaviest = heaviest.max(size[w]);
                }
            }
            if 2 * heaviest <= n {
                out.push(v);
            }
        }
        out
    }

    /// DFS preorder from `root`, visiting neighbours in ascending id order.
    pub fn preorder(&self, root: usize) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.vertex_count());
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in self.adj[v].iter().rev() {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        order
    }

    /// Isomorphism-invariant code: AHU encoding rooted at the centroid,
    /// taking the smaller of the two codes for bicentroidal trees.
    pub fn canonical_code(&self) -> CanonicalCode {
        self.centroids()
            .into_iter()
            .map(|c| rooted_code(self, c))
            .min()
            .expect("every tree has a centroid")
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

impl FromStr for Tree {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_tree(s)
    }
}

fn argmax_first(values: &[usize]) -> usize {
    let mut best = 0;
    for (i, &x) in values.iter().enumerate() {
        if x > values[best] {
            best = i;
        }
    }
    best
}

fn rooted_code(tree: &Tree, root: usize) -> CanonicalCode {
    let n = tree.vertex_count();
    let order = tree.preorder(root);
    let (_, parent) = tree.bfs(root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut children: Vec<Vec<u8>> = tree.adj[v]
            .iter()
            .filter(|&&w| parent[w] == v)
            .map(|&w| std::mem::take(&mut codes[w]))
            .collect();
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        codes[v] = code;
    }
    CanonicalCode(std::mem::take(&mut codes[root]))
}

/// Parses the edge-list text format: one `u v` pair per line, blank lines and
/// `#` comments ignored. Empty input yields the single-vertex tree.
pub fn parse_tree(text: &str) -> Result<Tree, ParseError> {
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(ParseError::Malformed {
                line,
                message: format!("expected two vertex ids, found {} fields", fields.len()),
            });
        }
        let mut ids = [0usize; 2];
        for (slot, field) in ids.iter_mut().zip(&fields) {
            *slot = field.parse().map_err(|_| ParseError::Malformed {
                line,
                message: format!("{field:?} is not a non-negative integer"),
            })?;
        }
        if ids[0] == ids[1] {
            return Err(ParseError::SelfLoop {
                line,
                vertex: ids[0],
            });
        }
        edges.push((ids[0], ids[1]));
        lines.push(line);
    }
    if edges.is_empty() {
        return Ok(Tree::single_vertex());
    }

    // Compress ids first so cycle detection works before the range is known.
    let mut ids: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    ids.sort_unstable();
    ids.dedup();
    let index = |x: usize| ids.binary_search(&x).expect("id was collected");
    let mut dsu = Dsu::new(ids.len());
    for (&(u, v), &line) in edges.iter().zip(&lines) {
        if !dsu.union(index(u), index(v)) {
            return Err(ParseError::Cycle { line, u, v });
        }
    }
    let first_root = dsu.find(index(edges[0].0));
    if let Some(pos) = edges
        .iter()
        .position(|&(u, _)| dsu.find(index(u)) != first_root)
    {
        let (u, v) = edges[pos];
        return Err(ParseError::Disconnected {
            line: lines[pos],
            first_line: lines[0],
            u,
            v,
        });
    }
    let max = edges.len();
    if let Some(pos) = edges.iter().position(|&(u, v)| u > max || v > max) {
        let (u, v) = edges[pos];
        return Err(ParseError::NonContiguous {
            line: lines[pos],
            id: u.max(v),
            max,
        });
    }
    Ok(Tree::new(max + 1, edges).expect("validated above"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diameter {
    pub length: usize,
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub tree: Tree,
    /// `mapping[old_id] = new_id`
    pub mapping: Vec<usize>,
}

/// A connected piece left after vertex removal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub tree: Tree,
    /// `vertices[new_id] = old_id`
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    tree: Tree,
    root: usize,
}

impl RootedTree {
    pub fn new(tree: Tree, root: usize) -> Result<Self, TreeError> {
        if root >= tree.vertex_count() {
            return Err(TreeError::VertexOutOfRange {
                vertex: root,
                vertex_count: tree.vertex_count(),
            });
        }
        Ok(RootedTree { tree, root })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn into_tree(self) -> Tree {
        self.tree
    }

    /// AHU code of the tree rooted at `root` (rooted isomorphism).
    pub fn canonical_code(&self) -> CanonicalCode {
        rooted_code(&self.tree, self.root)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h_tree() -> Tree {
        // Two degree-3 vertices joined by a path of length 3.
        Tree::new(8, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (5, 7)]).unwrap()
    }

    fn spider(legs: &[usize]) -> Tree {
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
        Tree::new(next, edges).unwrap()
    }

    #[test]
    fn parses_single_edge_and_star() {
        let t = parse_tree("0 1").unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (2, 1));
        let s = parse_tree("0 1\n0 2\n0 3").unwrap();
        assert_eq!(s.edge_count(), 3);
        assert_eq!(s.degree(0), 3);
    }

    #[test]
    fn parse_skips_comments_and_blank_lines() {
        let t = parse_tree("# header\n\n0 1\n  # more\n1 2\n").unwrap();
        assert_eq!(t, Tree::path(2));
    }

    #[test]
    fn parse_rejects_cycle_with_line_number() {
        let err = parse_tree("0 1\n1 2\n2 0").unwrap_err();
        assert_eq!(
            err,
            ParseError::Cycle {
                line: 3,
                u: 2,
                v: 0
            }
        );
        assert!(err.to_string().contains("cycle"));
    }

    #[test]
    fn parse_reports_malformed_lines() {
        assert!(matches!(
            parse_tree("0 1\n1 x"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_tree("0 1 2"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_tree("0 -1"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
        assert_eq!(
            parse_tree("3 3"),
            Err(ParseError::SelfLoop { line: 1, vertex: 3 })
        );
    }

    #[test]
    fn parse_rejects_gaps_and_disconnection() {
        assert_eq!(
            parse_tree("0 1\n1 5"),
            Err(ParseError::NonContiguous {
                line: 2,
                id: 5,
                max: 2
            })
        );
        assert_eq!(
            parse_tree("0 1\n2 3\n1 4"),
            Err(ParseError::Disconnected {
                line: 2,
                first_line: 1,
                u: 2,
                v: 3
            })
        );
    }

    #[test]
    fn leaves_of_star_and_path() {
        assert_eq!(Tree::star(4).leaves().unwrap().len(), 4);
        assert_eq!(Tree::path(5).leaves().unwrap(), vec![0, 5]);
        assert_eq!(spider(&[2, 2, 2]).leaves().unwrap().len(), 3);
        assert_eq!(Tree::single_vertex().leaves(), Err(TreeError::Degenerate));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(Tree::path(5).diameter().length, 5);
        assert_eq!(Tree::star(4).diameter().length, 2);
        let r65 = spider(&[3, 3, 3, 3, 3]);
        let d = r65.diameter();
        assert_eq!(d.length, 6);
        assert_eq!(d.path, vec![3, 2, 1, 0, 4, 5, 6]);
    }

    #[test]
    fn diameter_prefers_smallest_endpoint_pair() {
        // Star: every pair of leaves is a diameter; expect (1, 2).
        assert_eq!(Tree::star(4).diameter().path, vec![1, 0, 2]);
        // Relabel a path so that the ends are 3 and 1.
        let t = Tree::new(4, [(3, 0), (0, 2), (2, 1)]).unwrap();
        assert_eq!(t.diameter().path, vec![1, 2, 0, 3]);
    }

    #[test]
    fn contraction_examples() {
        let c = Tree::path(2).contract_edge(0, 1).unwrap();
        assert_eq!(c.tree, Tree::path(1));
        assert_eq!(c.mapping, vec![0, 0, 1]);

        let s = Tree::star(3).contract_edge(2, 0).unwrap();
        assert_eq!(s.tree.edge_count(), 2);
        assert!(s.tree.is_caterpillar());
        assert_eq!(s.tree.diameter().length, 2);

        assert_eq!(
            Tree::path(3).contract_edge(0, 2),
            Err(TreeError::MissingEdge(0, 2))
        );
    }

    #[test]
    fn contracting_inner_leg_edge_of_r43() {
        let r43 = spider(&[2, 2, 2]);
        // Edge (0, 1) is the inner edge of the first leg.
        let c = r43.contract_edge(0, 1).unwrap();
        let t = c.tree;
        assert_eq!(t.edge_count(), 5);
        let kappa = t.leaf_count() + t.diameter().length - 2;
        assert_eq!(kappa, 5);
    }

    #[test]
    fn remove_vertices_examples() {
        let parts = Tree::path(3).remove_vertices(&[0, 3]);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].tree, Tree::path(1));
        assert_eq!(parts[0].vertices, vec![1, 2]);

        let isolated = Tree::star(4).remove_vertices(&[0]);
        assert_eq!(isolated.len(), 4);
        assert!(isolated.iter().all(|c| c.tree.edge_count() == 0));

        assert!(Tree::path(2).remove_vertices(&[0, 1, 2]).is_empty());
        let whole = Tree::path(4).remove_vertices(&[]);
        assert_eq!(whole.len(), 1);
        assert_eq!(whole[0].tree, Tree::path(4));
    }

    #[test]
    fn caterpillar_recognition() {
        assert_eq!(Tree::path(4).caterpillar_spine(), Some(vec![1, 2, 3]));
        assert_eq!(Tree::star(5).caterpillar_spine(), Some(vec![0]));
        assert_eq!(Tree::path(1).caterpillar_spine(), Some(vec![0]));
        assert!(Tree::single_vertex().is_caterpillar());
        assert!(!spider(&[2, 2, 2]).is_caterpillar());
        assert!(h_tree().is_caterpillar());
    }

    #[test]
    fn spider_recognition() {
        assert!(Tree::path(6).is_spider());
        assert!(spider(&[3, 3, 3, 3, 3]).is_spider());
        assert!(!h_tree().is_spider());
        assert_eq!(h_tree().edge_count(), 7);
    }

    #[test]
    fn canonical_code_examples() {
        let a = Tree::new(3, [(0, 1), (1, 2)]).unwrap();
        let b = Tree::new(3, [(1, 0), (0, 2)]).unwrap();
        assert_eq!(a.canonical_code(), b.canonical_code());
        assert_ne!(
            Tree::path(3).canonical_code(),
            Tree::star(3).canonical_code()
        );
        // Bicentroidal path: both centroids give the same answer after min.
        assert_eq!(Tree::path(3).centroids(), vec![1, 2]);
        assert_eq!(Tree::path(4).centroids(), vec![2]);
    }

    #[test]
    fn rooted_tree_validates_root() {
        assert!(RootedTree::new(Tree::path(2), 3).is_err());
        let r = RootedTree::new(Tree::path(2), 0).unwrap();
        let s = RootedTree::new(Tree::path(2), 1).unwrap();
        assert_ne!(r.canonical_code(), s.canonical_code());
        assert_eq!(r.tree().canonical_code(), s.tree().canonical_code());
    }

    #[test]
    fn text_round_trip() {
        let t = h_tree();
        assert_eq!(parse_tree(&t.to_edge_list()).unwrap(), t);
    }
}
