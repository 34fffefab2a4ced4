//! Acceptance criteria AC1 to AC11, one line each. Exits non-zero if any
//! criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use caterpillar_paths::contraction::{kappa, p_formula};
use caterpillar_paths::duality::{
    among_path, compatible_path, segments_to_tree, tree_to_segments, validate_path, PathMode,
};
use caterpillar_paths::induced::{
    beautiful_bk, extremal_tk, f_formula, g_formula, max_caterpillar, q_formula, very_hungry_max,
};
use caterpillar_paths::oracle::{
    brute_f_table, brute_max_caterpillar, brute_p, brute_q, enum_free_trees, q_sweep,
};
use caterpillar_paths::tree::Tree;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Check = fn() -> Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn trees_up_to(max_m: usize) -> Vec<Tree> {
    (1..=max_m)
        .flat_map(|m| enum_free_trees(m).unwrap())
        .collect()
}

fn ac1() -> Result<String, String> {
    for m in 1..=12 {
        let (brute, formula) = (brute_p(m).unwrap(), p_formula(m as u64));
        ensure(brute == formula, || {
            format!("m = {m}: brute {brute}, formula {formula}")
        })?;
    }
    let classes = enum_free_trees(12).unwrap().count();
    ensure(classes == 1301, || format!("{classes} classes at m = 12"))?;
    Ok("p(m) = min kappa for m <= 12, 1301 classes at m = 12".into())
}

fn ac2() -> Result<String, String> {
    ensure(p_formula(1) == 1, || format!("p(1) = {}", p_formula(1)))?;
    for k in 1..=20u64 {
        let p = p_formula(2 * k * k);
        ensure(p == 4 * k - 2, || format!("p(2*{k}^2) = {p}"))?;
    }
    Ok("p(1) = 1, p(2k^2) = 4k - 2 for k <= 20".into())
}

fn ac3() -> Result<String, String> {
    for m in 1..=12 {
        let (brute, formula) = (brute_q(m).unwrap(), q_formula(m as u64));
        ensure(brute == formula, || {
            format!("m = {m}: brute {brute}, formula {formula}")
        })?;
    }
    let expected = [
        (5, 5),
        (6, 5),
        (7, 6),
        (8, 6),
        (9, 7),
        (10, 7),
        (11, 8),
        (12, 8),
    ];
    for (m, q) in expected {
        ensure(q_formula(m) == q, || format!("q({m}) = {}", q_formula(m)))?;
    }
    Ok("q(m) = min max caterpillar for m <= 12, table q(5..12) reproduced".into())
}

fn ac4() -> Result<String, String> {
    let dp = brute_f_table(60).unwrap();
    for k in 1..=60u32 {
        ensure(dp[k as usize] == f_formula(k), || {
            format!("k = {k}: dp {}, formula {}", dp[k as usize], f_formula(k))
        })?;
    }
    let listed = [1, 2, 3, 5, 7, 11, 16, 23, 34, 49, 70];
    for (i, &v) in listed.iter().enumerate() {
        ensure(f_formula(i as u32 + 1) == v, || {
            format!("f({}) = {}", i + 1, f_formula(i as u32 + 1))
        })?;
    }
    for k in 2..=60u32 {
        let (cur, prev) = (f_formula(k), f_formula(k - 1));
        ensure(5 * cur >= 7 * prev, || format!("f({k})/f({}) < 7/5", k - 1))?;
        if k >= 7 {
            ensure(2 * cur < 3 * prev, || format!("f({k})/f({}) >= 3/2", k - 1))?;
        }
    }
    Ok("f = unrestricted recurrence for k <= 60, f(1..11) listed values, ratio bounds".into())
}

fn ac5() -> Result<String, String> {
    let edges = [
        2, 3, 4, 6, 8, 10, 12, 15, 20, 25, 30, 35, 44, 55, 66, 80, 96, 115, 138, 170, 204, 245,
        294, 350, 420,
    ];
    for (k, &m) in (2..=26u32).zip(edges.iter()) {
        let t = extremal_tk(k);
        ensure(t.edge_count() == m && g_formula(k) == m as u128, || {
            format!("T_{k} has {} edges, g = {}", t.edge_count(), g_formula(k))
        })?;
        let size = max_caterpillar(&t).unwrap().size;
        ensure(size == k as usize, || {
            format!("T_{k} max caterpillar {size}")
        })?;
    }
    Ok("T_k has g(k) edges and max caterpillar k for 2 <= k <= 26".into())
}

fn ac6() -> Result<String, String> {
    for k in 1..=18u32 {
        let (rt, _) = beautiful_bk(k);
        let m = rt.tree().edge_count() as u128;
        ensure(m == f_formula(k), || format!("B_{k} has {m} edges"))?;
        let hungry = very_hungry_max(&rt).unwrap();
        ensure(hungry == k as u64, || format!("B_{k} very hungry {hungry}"))?;
        let size = max_caterpillar(rt.tree()).unwrap().size;
        ensure(size < 2 * k as usize, || {
            format!("B_{k} max caterpillar {size}")
        })?;
    }
    Ok("B_k has f(k) edges, very hungry k, max caterpillar <= 2k - 1 for k <= 18".into())
}

fn ac7() -> Result<String, String> {
    let records = q_sweep(171, 1_000_000);
    if let Some(r) = records.iter().find(|r| !r.ok) {
        return Err(format!(
            "m = {}: closed form {}, reference {}",
            r.arg, r.formula, r.oracle
        ));
    }
    Ok(format!(
        "max_r q_r(m) = reference for 171 <= m <= 10^6 ({} value blocks)",
        records.len()
    ))
}

fn ac8() -> Result<String, String> {
    let trees = trees_up_to(12);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let jobs: Vec<(usize, Vec<usize>)> = trees
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let n = t.vertex_count();
            (
                i,
                rand::seq::index::sample(&mut rng, n, 3.min(n)).into_vec(),
            )
        })
        .collect();
    jobs.par_iter().try_for_each(|(i, roots)| {
        let t = &trees[*i];
        let code = t.canonical_code();
        for &root in roots {
            let s = tree_to_segments(t, root).map_err(|e| e.to_string())?;
            ensure(segments_to_tree(&s).tree.canonical_code() == code, || {
                format!("{t:?} root {root}")
            })?;
        }
        Ok::<(), String>(())
    })?;
    Ok(format!(
        "{} trees with <= 12 edges, 3 random roots each",
        trees.len()
    ))
}

fn ac9() -> Result<String, String> {
    let trees = trees_up_to(9);
    ensure(trees.len() == 200, || format!("{} classes", trees.len()))?;
    trees.par_iter().try_for_each(|t| {
        let s = tree_to_segments(t, 0).map_err(|e| e.to_string())?;
        let dual = segments_to_tree(&s).tree;
        let w = max_caterpillar(&dual).unwrap();
        let p = compatible_path(&s, &w).map_err(|e| e.to_string())?;
        let report = validate_path(&s, &p, PathMode::Compatible);
        ensure(report.passed() && p.segment_count() == w.size, || {
            format!("compatible path on {t:?}: {:?}", report.issues)
        })?;
        let a = among_path(&s).map_err(|e| e.to_string())?;
        let report = validate_path(&s, &a.path, PathMode::Simple);
        ensure(
            report.passed() && a.path.segment_count() == kappa(&dual).unwrap(),
            || format!("among path on {t:?}: {:?}", report.issues),
        )
    })?;
    Ok("200 classes: compatible paths of max-caterpillar size, among paths of size kappa".into())
}

fn ac10() -> Result<String, String> {
    let trees = trees_up_to(13);
    trees.par_iter().try_for_each(|t| {
        let (dp, brute) = (
            max_caterpillar(t).unwrap().size,
            brute_max_caterpillar(t).unwrap(),
        );
        ensure(dp == brute, || format!("{t:?}: dp {dp}, subsets {brute}"))
    })?;
    Ok(format!(
        "{} trees with <= 14 vertices agree with subset enumeration",
        trees.len()
    ))
}

fn catpath(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_catpath"))
        .args(args)
        .output()
        .map_err(|e| format!("catpath: {e}"))?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn ac11() -> Result<String, String> {
    let (code, _) = catpath(&["verify", "--max-edges", "12"])?;
    ensure(code == 0, || format!("verify exited {code}"))?;
    let (code, _) = catpath(&["verify", "--max-edges", "12", "--inject-fault", "f=7"])?;
    ensure(code == 2, || format!("verify with fault exited {code}"))?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let seg = dir.path().join("s.json");
    let tree = dir.path().join("t.txt");
    let path = dir.path().join("p.json");
    let (seg, tree, path) = (
        seg.to_str().unwrap(),
        tree.to_str().unwrap(),
        path.to_str().unwrap(),
    );
    for args in [
        &["build", "tk", "--k", "12", "--out", tree][..],
        &["dual", "to-segments", "--tree", tree, "--out", seg],
        &["path", "among", "--segments", seg, "--out", path],
    ] {
        let (code, _) = catpath(args)?;
        ensure(code == 0, || format!("{args:?} exited {code}"))?;
    }
    let snapshots: [&[&str]; 4] = [
        &["table", "q", "--from", "1", "--to", "200"],
        &["table", "f", "--from", "1", "--to", "60", "--csv"],
        &["render", "--segments", seg, "--path", path],
        &["render", "--tree", tree],
    ];
    for args in snapshots {
        let first = catpath(args)?;
        let second = catpath(args)?;
        ensure(first.0 == 0 && first == second, || {
            format!("{args:?} not byte-stable")
        })?;
    }
    Ok("verify exits 0, fault-injected verify exits 2, table and render byte-stable".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, Check, Option<Duration>); 11] = [
        ("AC1", ac1, Some(Duration::from_secs(10))),
        ("AC2", ac2, None),
        ("AC3", ac3, Some(Duration::from_secs(30))),
        ("AC4", ac4, None),
        ("AC5", ac5, Some(Duration::from_secs(5))),
        ("AC6", ac6, None),
        ("AC7", ac7, Some(Duration::from_secs(5))),
        ("AC8", ac8, None),
        ("AC9", ac9, Some(Duration::from_secs(60))),
        ("AC10", ac10, None),
        ("AC11", ac11, None),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let timing = match limit {
            Some(l) => format!("{:.2}s, limit {}s", elapsed.as_secs_f64(), l.as_secs()),
            None => format!("{:.2}s", elapsed.as_secs_f64()),
        };
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if elapsed > l => Err("time limit exceeded".to_string()),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("{name:<5} PASS  {detail} ({timing})"),
            Err(detail) => {
                failures += 1;
                println!("{name:<5} FAIL  {detail} ({timing})");
            }
        }
    }
    println!("acceptance: {} of 11 criteria passed", 11 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
