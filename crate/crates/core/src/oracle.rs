//! Brute-force checks for the closed forms.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::contraction::{kappa, spider_rk};
use crate::induced::{
    beautiful_bk, extremal_tk, max_caterpillar, q_r, q_reference, very_hungry_max, MAX_F_K,
    Q_CLOSED_FORM_MIN,
};
use crate::table::Formula;
use crate::tree::Tree;

/// Largest edge count [`enum_free_trees`] accepts.
pub const MAX_ENUM_EDGES: usize = 16;
/// Largest edge count for the Prüfer route.
pub const MAX_PRUFER_EDGES: usize = 8;
/// Largest vertex count for [`brute_max_caterpillar`].
pub const MAX_SUBSET_VERTICES: usize = 14;
/// Largest `k` for witness checks; `B_36` already has 679 000 edges.
pub const MAX_VERIFY_K: u32 = 36;
/// Default ceiling for exhaustive p and q checks.
pub const DEFAULT_MAX_EDGES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("edge count {m} outside 1..={max}")]
    EdgeBound { m: usize, max: usize },
    #[error("tree has {n} vertices, subset enumeration supports at most {max}")]
    VertexBound { n: usize, max: usize },
    #[error("k = {k} outside 1..={max}")]
    KBound { k: u32, max: u32 },
    #[error("bad fault spec {0:?}, expected NAME=ARG")]
    BadFault(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

/// Iterator over free trees with a fixed number of edges, one per
/// isomorphism class, by canonical level sequences (Wright, Richmond,
/// Odlyzko and McKay).
#[derive(Debug, Clone)]
pub struct FreeTrees {
    layout: Option<Vec<usize>>,
}

pub fn enum_free_trees(m: usize) -> Result<FreeTrees, OracleError> {
    if m == 0 || m > MAX_ENUM_EDGES {
        return Err(OracleError::EdgeBound {
            m,
            max: MAX_ENUM_EDGES,
        });
    }
    let order = m + 1;
    // The path rooted at its centre.
    let layout: Vec<usize> = (0..=order / 2).chain(1..order.div_ceil(2)).collect();
    Ok(FreeTrees {
        layout: Some(layout),
    })
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        let candidate = self.layout.take()?;
        let layout = next_tree(candidate)?;
        let tree = layout_to_tree(&layout);
        self.layout = next_rooted_tree(&layout, None);
        Some(tree)
    }
}

fn next_rooted_tree(prev: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = prev.len() - 1;
            while prev[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while prev[q] != prev[p] - 1 {
        q -= 1;
    }
    let mut next = prev.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().max().copied().unwrap_or(0);
    let rest_height = rest.iter().max().copied().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid
        && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
    {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let height = new_left.iter().max().copied().unwrap_or(0);
        let len = next.len();
        for (slot, level) in next[len - height - 1..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    Some(next)
}

/// Splits a level sequence into the first root subtree (levels shifted up
/// by one) and the rest of the tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let second_one = layout
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..second_one].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0)
        .chain(layout[second_one..].iter().copied())
        .collect();
    (left, rest)
}

fn layout_to_tree(layout: &[usize]) -> Tree {
    let mut last_at = vec![0usize; layout.len()];
    let mut edges = Vec::with_capacity(layout.len() - 1);
    for (v, &level) in layout.iter().enumerate() {
        if level > 0 {
            edges.push((last_at[level - 1], v));
        }
        last_at[level] = v;
    }
    Tree::new(layout.len(), edges).expect("level sequences describe trees")
}

/// Free trees with `m` edges by Prüfer enumeration and canonical-code
/// dedup, ordered by code.
pub fn enum_free_trees_prufer(m: usize) -> Result<Vec<Tree>, OracleError> {
    if m == 0 || m > MAX_PRUFER_EDGES {
        return Err(OracleError::EdgeBound {
            m,
            max: MAX_PRUFER_EDGES,
        });
    }
    let n = m + 1;
    if n == 2 {
        return Ok(vec![Tree::path(1)]);
    }
    let len = n - 2;
    let found: BTreeSet<_> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut seen = BTreeSet::new();
            let mut seq = vec![0usize; len];
            seq[0] = first;
            loop {
                let t = Tree::from_prufer(&seq);
                seen.insert(t.canonical_code());
                // Odometer over positions 1..len.
                let mut i = len - 1;
                loop {
                    if i == 0 {
                        return seen;
                    }
                    seq[i] += 1;
                    if seq[i] < n {
                        break;
                    }
                    seq[i] = 0;
                    i -= 1;
                }
            }
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(found
        .into_iter()
        .map(|code| tree_from_code(&code.0))
        .collect())
}

/// Inverse of the parenthesis code: `(` descends to a new child.
fn tree_from_code(code: &[u8]) -> Tree {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0usize;
    for &b in code {
        if b == b'(' {
            if let Some(&parent) = stack.last() {
                edges.push((parent, next));
            }
            stack.push(next);
            next += 1;
        } else {
            stack.pop();
        }
    }
    Tree::new(next, edges).expect("well-formed code")
}

/// Minimum of `metric` over all free trees with `m` edges, with the first
/// tree (in generation order) attaining it.
fn brute_min(m: usize, metric: impl Fn(&Tree) -> u64 + Sync) -> Result<(u64, Tree), OracleError> {
    let trees: Vec<Tree> = enum_free_trees(m)?.collect();
    let (value, index) = trees
        .par_iter()
        .enumerate()
        .map(|(i, t)| (metric(t), i))
        .min()
        .expect("at least one tree");
    Ok((value, trees[index].clone()))
}

fn kappa_metric(t: &Tree) -> u64 {
    kappa(t).expect("trees with an edge have leaves") as u64
}

fn caterpillar_metric(t: &Tree) -> u64 {
    max_caterpillar(t).expect("valid tree").size as u64
}

/// `min κ(T)` over trees with `m` edges.
pub fn brute_p(m: usize) -> Result<u64, OracleError> {
    brute_min(m, kappa_metric).map(|(v, _)| v)
}

/// `min` over trees with `m` edges of the largest induced caterpillar.
pub fn brute_q(m: usize) -> Result<u64, OracleError> {
    brute_min(m, caterpillar_metric).map(|(v, _)| v)
}

/// Largest induced caterpillar by trying every vertex subset.
pub fn brute_max_caterpillar(t: &Tree) -> Result<usize, OracleError> {
    let n = t.vertex_count();
    if n > MAX_SUBSET_VERTICES {
        return Err(OracleError::VertexBound {
            n,
            max: MAX_SUBSET_VERTICES,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| t.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let mut best = 0usize;
    for set in 1u32..(1 << n) {
        let size = set.count_ones() as usize;
        if size - 1 <= best {
            continue;
        }
        let mut degree_sum = 0u32;
        let mut inner = 0u32;
        for (v, &nbrs) in adj.iter().enumerate() {
            if set >> v & 1 == 1 {
                let d = (nbrs & set).count_ones();
                degree_sum += d;
                if d >= 2 {
                    inner |= 1 << v;
                }
            }
        }
        // An acyclic induced subgraph is connected iff it has |S| − 1 edges.
        if degree_sum as usize != 2 * (size - 1) {
            continue;
        }
        let spine_is_path =
            (0..n).all(|v| inner >> v & 1 == 0 || (adj[v] & inner).count_ones() <= 2);
        if spine_is_path {
            best = size - 1;
        }
    }
    Ok(best)
}

/// `F(1) = 1`, `F(k) = max_{1≤c<k} c·F(k−c) + 1`, for every k up to `max_k`.
pub fn brute_f_table(max_k: u32) -> Result<Vec<u128>, OracleError> {
    if max_k == 0 || max_k > MAX_F_K {
        return Err(OracleError::KBound {
            k: max_k,
            max: MAX_F_K,
        });
    }
    let mut f = vec![0u128; max_k as usize + 1];
    f[1] = 1;
    for k in 2..=max_k as usize {
        f[k] = (1..k).map(|c| c as u128 * f[k - c] + 1).max().unwrap();
    }
    Ok(f)
}

pub fn brute_f(k: u32) -> Result<u128, OracleError> {
    brute_f_table(k).map(|t| t[k as usize])
}

/// Most edges over profiles `⟨1, c₁ ≥ … ≥ c_{h−1}, 0⟩` with `c₁ ≤ 3` and
/// `Σ c_d = k`.
pub fn brute_f_profiles(k: u32) -> Result<u128, OracleError> {
    if k == 0 || k > MAX_F_K {
        return Err(OracleError::KBound { k, max: MAX_F_K });
    }
    let budget = k - 1;
    let mut best = 0u128;
    for threes in 0..=budget / 3 {
        for twos in 0..=(budget - 3 * threes) / 2 {
            let ones = budget - 3 * threes - 2 * twos;
            let mut edges = 1u128;
            let mut layer = 1u128;
            for c in std::iter::repeat_n(3, threes as usize)
                .chain(std::iter::repeat_n(2, twos as usize))
                .chain(std::iter::repeat_n(1, ones as usize))
            {
                layer *= c;
                edges += layer;
            }
            best = best.max(edges);
        }
    }
    Ok(best)
}

/// The closed forms under test, optionally with one value corrupted.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FormulaSet {
    fault: Option<(Formula, u64)>,
}

impl FormulaSet {
    /// Adds one to `formula` at argument `arg`.
    pub fn with_fault(formula: Formula, arg: u64) -> Self {
        FormulaSet {
            fault: Some((formula, arg)),
        }
    }

    pub fn fault(&self) -> Option<(Formula, u64)> {
        self.fault
    }

    /// Parses `NAME=ARG`, e.g. `f=7`.
    pub fn parse_fault(spec: &str) -> Result<Self, OracleError> {
        let bad = || OracleError::BadFault(spec.to_string());
        let (name, arg) = spec.split_once('=').ok_or_else(bad)?;
        let formula = name.trim().parse().map_err(|_| bad())?;
        let arg = arg.trim().parse().map_err(|_| bad())?;
        Ok(FormulaSet::with_fault(formula, arg))
    }

    fn apply(&self, formula: Formula, arg: u64, value: u128) -> u128 {
        match self.fault {
            Some((f, a)) if f == formula && a == arg => value + 1,
            _ => value,
        }
    }

    pub fn eval(&self, formula: Formula, arg: u64) -> u128 {
        self.apply(formula, arg, formula.value(arg))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub arg: u64,
    pub formula: u128,
    pub oracle: u128,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordGroup {
    pub name: String,
    pub description: String,
    pub records: Vec<Record>,
}

impl RecordGroup {
    pub fn mismatches(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub max_edges: usize,
    pub max_k: u32,
    pub sweep: (u64, u64),
    pub groups: Vec<RecordGroup>,
    pub mismatches: usize,
    pub pass: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "verification: edges 1..={}, k up to {}, q sweep {}..={}",
            self.max_edges, self.max_k, self.sweep.0, self.sweep.1
        );
        for g in &self.groups {
            let bad = g.mismatches().count();
            let status = if bad == 0 { "ok" } else { "FAIL" };
            let _ = writeln!(
                out,
                "  {:<14} {:>5} records  {:>3} mismatches  {}  ({})",
                g.name,
                g.records.len(),
                bad,
                status,
                g.description
            );
            for r in g.mismatches() {
                let _ = write!(
                    out,
                    "    at {}: formula {} oracle {}",
                    r.arg, r.formula, r.oracle
                );
                if let Some(note) = &r.note {
                    let _ = write!(out, "; {note}");
                }
                if let Some(w) = &r.witness {
                    let _ = write!(out, "; witness {w}");
                }
                out.push('\n');
            }
        }
        let _ = writeln!(
            out,
            "result: {} ({} mismatches)",
            if self.pass { "PASS" } else { "FAIL" },
            self.mismatches
        );
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_edges: usize,
    pub max_k: u32,
    /// Last `m` of the closed-form `q` sweep, which starts at 171.
    pub sweep_to: u64,
    pub threads: Option<usize>,
    pub formulas: FormulaSet,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_edges: DEFAULT_MAX_EDGES,
            max_k: 26,
            sweep_to: 20_000,
            threads: None,
            formulas: FormulaSet::default(),
        }
    }
}

pub fn verify_all(max_edges: usize, max_k: u32) -> Result<VerificationReport, OracleError> {
    verify_with(&VerifyConfig {
        max_edges,
        max_k,
        ..VerifyConfig::default()
    })
}

pub fn verify_with(config: &VerifyConfig) -> Result<VerificationReport, OracleError> {
    match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| OracleError::ThreadPool(e.to_string()))?
            .install(|| run_checks(config)),
        None => run_checks(config),
    }
}

fn record(arg: u64, formula: u128, oracle: u128) -> Record {
    Record {
        arg,
        formula,
        oracle,
        ok: formula == oracle,
        note: None,
        witness: None,
    }
}

fn run_checks(config: &VerifyConfig) -> Result<VerificationReport, OracleError> {
    let fs = &config.formulas;
    if config.max_edges == 0 || config.max_edges > MAX_ENUM_EDGES {
        return Err(OracleError::EdgeBound {
            m: config.max_edges,
            max: MAX_ENUM_EDGES,
        });
    }
    if config.max_k == 0 || config.max_k > MAX_VERIFY_K {
        return Err(OracleError::KBound {
            k: config.max_k,
            max: MAX_VERIFY_K,
        });
    }
    let ms: Vec<usize> = (1..=config.max_edges).collect();
    let ks: Vec<u32> = (1..=config.max_k).collect();

    let exhaustive =
        |formula: Formula, metric: fn(&Tree) -> u64| -> Result<Vec<Record>, OracleError> {
            ms.par_iter()
                .map(|&m| {
                    let (value, tree) = brute_min(m, metric)?;
                    let mut r = record(m as u64, fs.eval(formula, m as u64), value as u128);
                    if !r.ok {
                        r.witness = Some(tree.canonical_code().to_string());
                    }
                    Ok(r)
                })
                .collect()
        };
    let p_records = exhaustive(Formula::P, kappa_metric)?;
    let q_records = exhaustive(Formula::Q, caterpillar_metric)?;

    let f_table = brute_f_table(config.max_k)?;
    let f_records = ks
        .iter()
        .map(|&k| record(k as u64, fs.eval(Formula::F, k as u64), f_table[k as usize]))
        .collect();

    let rk_records = ks
        .par_iter()
        .map(|&k| {
            let t = spider_rk(k as u64);
            let kap = kappa_metric(&t);
            let mut r = record(
                k as u64,
                fs.eval(Formula::EContract, k as u64),
                t.edge_count() as u128,
            );
            if kap != k as u64 {
                r.ok = false;
                r.note = Some(format!("kappa {kap}"));
            }
            if !r.ok {
                r.witness = Some(t.canonical_code().to_string());
            }
            r
        })
        .collect();

    let tk = |formula: Formula| -> Vec<Record> {
        ks.par_iter()
            .filter(|&&k| k >= 2)
            .map(|&k| {
                let t = extremal_tk(k);
                let size = caterpillar_metric(&t);
                let mut r = record(k as u64, fs.eval(formula, k as u64), t.edge_count() as u128);
                if size != k as u64 {
                    r.ok = false;
                    r.note = Some(format!("max caterpillar {size}"));
                }
                if !r.ok {
                    r.witness = Some(t.canonical_code().to_string());
                }
                r
            })
            .collect()
    };
    let g_records = tk(Formula::G);
    let e_induced_records = tk(Formula::EInduced);

    let bk_records = ks
        .par_iter()
        .map(|&k| {
            let (rt, _) = beautiful_bk(k);
            let hungry = very_hungry_max(&rt).expect("rooted tree");
            let mut r = record(
                k as u64,
                fs.eval(Formula::F, k as u64),
                rt.tree().edge_count() as u128,
            );
            if hungry != k as u64 {
                r.ok = false;
                r.note = Some(format!("very hungry {hungry}"));
            }
            r
        })
        .collect();

    let sweep = (Q_CLOSED_FORM_MIN, config.sweep_to.max(Q_CLOSED_FORM_MIN));
    let sweep_records = q_sweep(sweep.0, sweep.1);

    let groups = vec![
        group("p", "p formula vs min kappa over all trees", p_records),
        group(
            "q",
            "q formula vs min max-caterpillar over all trees",
            q_records,
        ),
        group("f", "f formula vs unrestricted recurrence", f_records),
        group(
            "rk",
            "e-contract vs edges of R_k, kappa(R_k) = k",
            rk_records,
        ),
        group("tk", "g vs edges of T_k, max caterpillar = k", g_records),
        group("e-induced", "e-induced vs edges of T_k", e_induced_records),
        group("bk", "f vs edges of B_k, very hungry = k", bk_records),
        group(
            "q-closed-form",
            "max_r q_r vs reference, block starts and mismatches",
            sweep_records,
        ),
    ];
    let mismatches = groups.iter().map(|g| g.mismatches().count()).sum();
    Ok(VerificationReport {
        max_edges: config.max_edges,
        max_k: config.max_k,
        sweep,
        groups,
        mismatches,
        pass: mismatches == 0,
    })
}

fn group(name: &str, description: &str, records: Vec<Record>) -> RecordGroup {
    RecordGroup {
        name: name.to_string(),
        description: description.to_string(),
        records,
    }
}

/// `max_r q_r(m)` against the reference over `from..=to`. Only the first
/// `m` of each value block and any mismatch are recorded.
pub fn q_sweep(from: u64, to: u64) -> Vec<Record> {
    let values: Vec<(u64, u64, u64)> = (from..=to)
        .into_par_iter()
        .map(|m| {
            let closed = (0..6)
                .map(|r| q_r(r, m).expect("m in closed-form range"))
                .max()
                .unwrap();
            (m, closed, q_reference(m))
        })
        .collect();
    let mut out = Vec::new();
    let mut last = None;
    for (m, closed, reference) in values {
        if closed != reference || last != Some(reference) {
            out.push(record(m, closed as u128, reference as u128));
        }
        last = Some(reference);
    }
    out
}
