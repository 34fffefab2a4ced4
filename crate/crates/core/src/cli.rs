//! The `catpath` command line.
//!
//! Exit codes: 0 success, 1 invalid input, 2 failed validation or
//! verification.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::contraction::{contract_to_caterpillar, e_contract, e_dl, kappa, spider_rdl, spider_rk};
use crate::duality::{
    among_path, compatible_path, segments_to_tree, tree_to_segments, validate_path,
    AlternatingPath, PathMode, PathReport, SegmentFamily,
};
use crate::induced::{
    beautiful_bk, extremal_tk, f_formula, g_formula, max_caterpillar, very_hungry_max, MAX_E_K,
    MAX_F_K,
};
use crate::oracle::{verify_with, FormulaSet, VerifyConfig, DEFAULT_MAX_EDGES};
use crate::svg::{render_segments, render_tree};
use crate::table::{render_table, Formula};
use crate::tree::{parse_tree, RootedTree, Tree};

/// Largest tree `build` will write.
pub const MAX_BUILD_EDGES: u128 = 2_000_000;

/// Segment family file: `{"n": 3, "segments": [[0, 5], [1, 4], [2, 3]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentsFile {
    pub n: usize,
    pub segments: Vec<[usize; 2]>,
}

impl SegmentsFile {
    pub fn from_family(s: &SegmentFamily) -> Self {
        SegmentsFile {
            n: s.len(),
            segments: s.pairs().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_family(&self) -> Result<SegmentFamily, String> {
        let pairs: Vec<(usize, usize)> = self.segments.iter().map(|&[a, b]| (a, b)).collect();
        SegmentFamily::new(self.n, &pairs).map_err(|e| e.to_string())
    }
}

/// Path file: `{"mode": "compatible", "endpoints": [5, 0, 1, 4, 3, 2]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathFile {
    pub mode: PathMode,
    pub endpoints: Vec<usize>,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Failure(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Failure(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Failure(m) => m,
        }
    }
}

fn input<E: ToString>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "catpath",
    version,
    about = "Caterpillars in trees and alternating paths among disjoint segments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one value of a closed form.
    Eval {
        #[arg(value_parser = parse_formula)]
        formula: Formula,
        #[arg(long, conflicts_with = "k", required_unless_present = "k")]
        m: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
    },
    /// Print a closed form over a range.
    Table {
        #[arg(value_parser = parse_formula)]
        formula: Formula,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write an extremal tree as an edge list.
    Build {
        family: BuildFamily,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        l: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report size, kappa and the largest induced caterpillar of a tree.
    Analyze {
        #[arg(long)]
        tree: PathBuf,
        /// Also print the very hungry caterpillar size from this root.
        #[arg(long)]
        root: Option<usize>,
        #[arg(long)]
        witness: bool,
    },
    /// Convert between trees and segment families.
    #[command(subcommand)]
    Dual(DualCommand),
    /// Build or check alternating paths.
    #[command(subcommand)]
    Path(PathCommand),
    /// Compare every closed form with brute force.
    Verify(VerifyArgs),
    /// Draw a segment family (with an optional path) or a tree as SVG.
    Render {
        #[arg(long, required_unless_present = "tree", conflicts_with = "tree")]
        segments: Option<PathBuf>,
        #[arg(long, requires = "segments")]
        path: Option<PathBuf>,
        #[arg(long)]
        tree: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BuildFamily {
    Rk,
    Rdl,
    Bk,
    Tk,
}

#[derive(Debug, Subcommand)]
enum DualCommand {
    /// Tree to a family whose dual tree is isomorphic to it.
    ToSegments {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Family to its dual tree.
    ToTree {
        #[arg(long)]
        segments: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum PathCommand {
    /// Compatible path through a largest induced caterpillar of the dual tree.
    Compatible(PathBuildArgs),
    /// Alternating path through kappa segments.
    Among(PathBuildArgs),
    /// Validate a path file against a family.
    Check {
        #[arg(long)]
        segments: PathBuf,
        #[arg(long)]
        path: PathBuf,
    },
}

#[derive(Debug, Args)]
struct PathBuildArgs {
    #[arg(long)]
    segments: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
    max_edges: usize,
    #[arg(long, default_value_t = 26)]
    max_k: u32,
    /// Last m of the closed-form q sweep.
    #[arg(long, default_value_t = 20_000)]
    sweep_to: u64,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Corrupt one formula value, e.g. `f=7`.
    #[arg(long, hide = true)]
    inject_fault: Option<String>,
}

fn parse_formula(s: &str) -> Result<Formula, String> {
    s.parse()
}

/// Runs the command line; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.code()
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_tree(path: &Path) -> Result<Tree, CliError> {
    parse_tree(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_segments(path: &Path) -> Result<SegmentFamily, CliError> {
    let doc: SegmentsFile = serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    doc.to_family()
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_path(path: &Path) -> Result<PathFile, CliError> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, target: Option<&Path>, content: &str) -> Result<(), CliError> {
    match target {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => out.write_all(content.as_bytes()).map_err(input),
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Eval { formula, m, k } => {
            let arg = m.or(k).expect("clap requires one of --m, --k");
            let value = formula.eval(arg).map_err(input)?;
            writeln!(out, "{value}").map_err(input)
        }
        Command::Table {
            formula,
            from,
            to,
            csv,
            out: target,
        } => {
            let text = render_table(formula, from, to, csv).map_err(input)?;
            emit(out, target.as_deref(), &text)
        }
        Command::Build {
            family,
            k,
            d,
            l,
            out: target,
        } => {
            let (tree, title) = build(family, k, d, l)?;
            emit(
                out,
                target.as_deref(),
                &format!("# {title}, {} edges\n{tree}", tree.edge_count()),
            )
        }
        Command::Analyze {
            tree,
            root,
            witness,
        } => analyze(&read_tree(&tree)?, root, witness, out),
        Command::Dual(DualCommand::ToSegments {
            tree,
            root,
            out: target,
        }) => {
            let t = read_tree(&tree)?;
            let s = tree_to_segments(&t, root).map_err(input)?;
            emit(
                out,
                target.as_deref(),
                &to_json(&SegmentsFile::from_family(&s)),
            )
        }
        Command::Dual(DualCommand::ToTree {
            segments,
            out: target,
        }) => {
            let s = read_segments(&segments)?;
            emit(
                out,
                target.as_deref(),
                &segments_to_tree(&s).tree.to_string(),
            )
        }
        Command::Path(PathCommand::Compatible(args)) => {
            build_path(PathMode::Compatible, &args, out)
        }
        Command::Path(PathCommand::Among(args)) => build_path(PathMode::Simple, &args, out),
        Command::Path(PathCommand::Check { segments, path }) => {
            let s = read_segments(&segments)?;
            let doc = read_path(&path)?;
            let report = validate_path(&s, &AlternatingPath::new(doc.endpoints), doc.mode);
            write_report(out, &report)?;
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Failure(format!(
                    "{} path is invalid",
                    report.mode
                )))
            }
        }
        Command::Verify(args) => verify(args, out, err),
        Command::Render {
            segments,
            path,
            tree,
            out: target,
        } => {
            let svg = match (segments, tree) {
                (Some(segments), None) => {
                    let s = read_segments(&segments)?;
                    let p = match path {
                        Some(p) => {
                            let doc = read_path(&p)?;
                            let alt = AlternatingPath::new(doc.endpoints);
                            let report = validate_path(&s, &alt, doc.mode);
                            if !report.passed() {
                                write_report(err, &report)?;
                                return Err(CliError::Failure(format!(
                                    "{} path is invalid",
                                    doc.mode
                                )));
                            }
                            Some(alt)
                        }
                        None => None,
                    };
                    render_segments(&s, p.as_ref())
                }
                (None, Some(tree)) => render_tree(&read_tree(&tree)?),
                _ => unreachable!("clap enforces exactly one input"),
            };
            emit(out, target.as_deref(), &svg)
        }
    }
}

fn need(value: Option<u64>, flag: &str, family: &str) -> Result<u64, CliError> {
    value.ok_or_else(|| CliError::Input(format!("build {family} needs --{flag}")))
}

fn build(
    family: BuildFamily,
    k: Option<u64>,
    d: Option<u64>,
    l: Option<u64>,
) -> Result<(Tree, String), CliError> {
    let too_big = |edges: u128| -> Result<(), CliError> {
        if edges > MAX_BUILD_EDGES {
            Err(CliError::Input(format!(
                "tree would have {edges} edges, limit {MAX_BUILD_EDGES}"
            )))
        } else {
            Ok(())
        }
    };
    let small_k = |k: u64, lo: u64, hi: u64| -> Result<u32, CliError> {
        if (lo..=hi).contains(&k) {
            Ok(k as u32)
        } else {
            Err(CliError::Input(format!("--k {k} outside {lo}..={hi}")))
        }
    };
    match family {
        BuildFamily::Rk => {
            let k = need(k, "k", "rk")?;
            if !(1..=1 << 20).contains(&k) {
                return Err(CliError::Input(format!("--k {k} outside 1..={}", 1 << 20)));
            }
            too_big(e_contract(k) as u128)?;
            Ok((spider_rk(k), format!("R_{k}")))
        }
        BuildFamily::Rdl => {
            let d = need(d, "d", "rdl")?;
            let l = need(l, "l", "rdl")?;
            if d > 1 << 20 || l > 1 << 20 {
                return Err(CliError::Input(
                    "--d and --l must be at most 1048576".into(),
                ));
            }
            too_big(e_dl(d, l).map_err(input)? as u128)?;
            Ok((spider_rdl(d, l).map_err(input)?, format!("R_{{{d},{l}}}")))
        }
        BuildFamily::Bk => {
            let k = small_k(need(k, "k", "bk")?, 1, MAX_F_K as u64)?;
            too_big(f_formula(k))?;
            Ok((beautiful_bk(k).0.into_tree(), format!("B_{k}, root 0")))
        }
        BuildFamily::Tk => {
            let k = small_k(need(k, "k", "tk")?, 2, MAX_E_K as u64)?;
            too_big(g_formula(k))?;
            Ok((extremal_tk(k), format!("T_{k}")))
        }
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn analyze(
    t: &Tree,
    root: Option<usize>,
    witness: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if t.edge_count() == 0 {
        return Err(CliError::Input("tree has no edges".into()));
    }
    let kap = kappa(t).map_err(input)?;
    let cat = max_caterpillar(t).map_err(input)?;
    let diameter = t.diameter();
    let mut text = format!(
        "vertices = {}\nm = {}\nleaves = {}\ndiameter = {}\nkappa = {kap}\nmax caterpillar = {}\ncaterpillar = {}\nspider = {}\n",
        t.vertex_count(),
        t.edge_count(),
        t.leaf_count(),
        diameter.length,
        cat.size,
        t.is_caterpillar(),
        t.is_spider(),
    );
    if let Some(r) = root {
        let rooted = RootedTree::new(t.clone(), r).map_err(input)?;
        let hungry = very_hungry_max(&rooted).map_err(input)?;
        text.push_str(&format!("very hungry = {hungry}\n"));
    }
    if witness {
        let plan = contract_to_caterpillar(t, kap).map_err(input)?;
        let kept = plan.kept_source_edges(t);
        text.push_str(&format!("diameter path = {}\n", join(&diameter.path)));
        text.push_str(&format!("kappa contractions = {}\n", plan.steps.len()));
        text.push_str(&format!(
            "kappa caterpillar edges = {}\n",
            join(kept.iter().map(|(u, v)| format!("{u}-{v}")))
        ));
        text.push_str(&format!("max caterpillar spine = {}\n", join(&cat.spine)));
        text.push_str(&format!(
            "max caterpillar vertices = {}\n",
            join(&cat.vertex_set)
        ));
    }
    out.write_all(text.as_bytes()).map_err(input)
}

fn write_report(out: &mut dyn Write, report: &PathReport) -> Result<(), CliError> {
    let mut text = format!(
        "{} path through {} segments: {}\n",
        report.mode,
        report.segments_used,
        if report.passed() { "valid" } else { "INVALID" }
    );
    for issue in &report.issues {
        text.push_str(&format!("  {issue}\n"));
    }
    out.write_all(text.as_bytes()).map_err(input)
}

fn build_path(mode: PathMode, args: &PathBuildArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let s = read_segments(&args.segments)?;
    let path = match mode {
        PathMode::Compatible => {
            let w = max_caterpillar(&segments_to_tree(&s).tree).map_err(input)?;
            compatible_path(&s, &w).map_err(|e| CliError::Failure(e.to_string()))?
        }
        PathMode::Simple => {
            among_path(&s)
                .map_err(|e| CliError::Failure(e.to_string()))?
                .path
        }
    };
    let report = validate_path(&s, &path, mode);
    if !report.passed() {
        write_report(out, &report)?;
        return Err(CliError::Failure(format!(
            "constructed {mode} path failed validation"
        )));
    }
    let doc = PathFile {
        mode,
        endpoints: path.endpoints,
    };
    match &args.out {
        Some(target) => {
            emit(out, Some(target), &to_json(&doc))?;
            write_report(out, &report)
        }
        None => emit(out, None, &to_json(&doc)),
    }
}

fn verify(args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    if args.max_edges > DEFAULT_MAX_EDGES {
        let _ = writeln!(
            err,
            "warning: --max-edges {} is above the default {DEFAULT_MAX_EDGES}; this can take a while",
            args.max_edges
        );
    }
    let formulas = match &args.inject_fault {
        Some(spec) => FormulaSet::parse_fault(spec).map_err(input)?,
        None => FormulaSet::default(),
    };
    if let Some((formula, arg)) = formulas.fault() {
        formula.eval(arg).map_err(input)?;
    }
    let config = VerifyConfig {
        max_edges: args.max_edges,
        max_k: args.max_k,
        sweep_to: args.sweep_to,
        threads: args.threads,
        formulas,
    };
    let report = verify_with(&config).map_err(input)?;
    let text = if args.json {
        report.to_json()
    } else {
        report.to_text()
    };
    emit(out, args.out.as_deref(), &text)?;
    if report.pass {
        Ok(())
    } else {
        Err(CliError::Failure(format!(
            "{} mismatches",
            report.mismatches
        )))
    }
}
