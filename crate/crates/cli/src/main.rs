//! `giraw`: exact range distributions of tree-indexed random walks.
//!
//! Exit status: 0 on success, 1 on usage or input errors, 2 when a scan finds
//! a tree whose range is not dominated by the path's or a lemma check finds
//! an unexpected counterexample.

mod output;
mod tree_arg;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use giraw::analysis::lemmas::{check_spidersums_grid, check_summand_comparison_grid};
use giraw::analysis::{
    check_center_monotone, check_difference_monotone, check_spidersums, check_summand_comparison,
    compare_range, pairwise_domination_order, run_lemma_suite, scan_against_path,
    star_leaf_control, LemmaCheckResult, LemmaGrid, TreeFamily,
};
use giraw::counting::RangeDistributionRecord;
use giraw::{
    count_bounded, estimate_expected_range, estimate_pair_distance, generate_free_trees, profile,
    range_classes, range_distribution, reroot, Execution, SpiderSpec, Tree, WalkModel, WalkSampler,
};

use output::{emit, Format, Output};
use tree_arg::{load_tree, parse_legs};

const DEFAULT_MAX_N: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "giraw",
    version,
    about = "Exact range distributions of tree-indexed random walks"
)]
struct Cli {
    /// Walk model: adjacent labels differ by exactly one (standard) or at most one (lazy).
    #[arg(long, global = true)]
    model: Option<WalkModel>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Random seed; required by `sample`.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Run on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact distribution of the range of a uniform walk.
    Dist(TreeArg),
    /// Bounded labelings F^k, translation classes f^k and the root profile.
    Count {
        #[command(flatten)]
        tree: TreeArg,
        /// Label bound; defaults to the diameter.
        #[arg(long)]
        k: Option<usize>,
        /// Root for the profile.
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Tail-by-tail dominance comparison of two trees.
    Compare {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Compare every tree on n vertices against the path.
    Scan {
        #[arg(long)]
        n: usize,
        /// Scan every size from this one up to `--n`.
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long, default_value_t = TreeFamily::All)]
        family: TreeFamily,
    },
    /// Pairwise dominance among all trees on n vertices.
    Order {
        #[arg(long)]
        n: usize,
    },
    /// Exhaustive checks of the counting lemmas over a finite grid.
    VerifyLemmas(LemmaArgs),
    /// Monte Carlo estimate of E[range] or E|f(u) - f(v)| next to the exact value.
    Sample {
        #[command(flatten)]
        tree: TreeArg,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        /// Estimate E|f(u) - f(v)| for the pair `u,v` instead of E[range].
        #[arg(long)]
        pair: Option<String>,
        /// Print this many raw walks instead of an estimate.
        #[arg(long)]
        walks: Option<usize>,
    },
    /// List every tree on n vertices, one per isomorphism class.
    GenTrees {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
struct TreeArg {
    /// `path:a` (a edges), `star:l`, `spider:a1,a2,...`, or an edge-list file (`-` for stdin).
    #[arg(long)]
    tree: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LemmaChoice {
    All,
    Spidersums,
    CenterMonotone,
    DifferenceMonotone,
    SummandComparison,
    StarLeafControl,
}

#[derive(Debug, Args)]
struct LemmaArgs {
    #[arg(long, value_enum, default_value_t = LemmaChoice::All)]
    lemma: LemmaChoice,
    /// Check a single spider (`a1,a2,...`) instead of the grid.
    #[arg(long)]
    legs: Option<String>,
    /// Largest label bound.
    #[arg(long, default_value_t = 6)]
    k: usize,
    /// Longest path, in edges.
    #[arg(long, default_value_t = 6)]
    a_max: usize,
    #[arg(long, default_value_t = 3)]
    legs_max: usize,
    #[arg(long, default_value_t = 3)]
    leg_len_max: usize,
    /// Largest tree, in vertices, for the all-trees checks.
    #[arg(long, default_value_t = 7)]
    tree_n_max: usize,
    #[arg(long, default_value_t = 5)]
    remainder_n_max: usize,
}

enum Status {
    Ok,
    Violation,
}

struct Ctx {
    model: Option<WalkModel>,
    format: Format,
    seed: Option<u64>,
    out: Option<PathBuf>,
    exec: Execution,
    max_n: usize,
}

impl Ctx {
    fn model(&self) -> WalkModel {
        self.model.unwrap_or(WalkModel::Standard)
    }

    fn models(&self) -> Vec<WalkModel> {
        self.model.map_or(WalkModel::ALL.to_vec(), |m| vec![m])
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n == 0 {
            bail!("--n must be at least 1");
        }
        if n > self.max_n {
            bail!(
                "n={n} exceeds the generation cap {} (raise it with GIRAW_MAX_N)",
                self.max_n
            );
        }
        Ok(())
    }

    fn emit(&self, output: &Output) -> Result<()> {
        emit(&output.render(self.format)?, self.out.as_ref())
    }
}

fn max_n_from_env() -> Result<usize> {
    match std::env::var("GIRAW_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("GIRAW_MAX_N=`{v}` is not a vertex count")),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violation) => ExitCode::from(2),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<Status> {
    let ctx = Ctx {
        model: cli.model,
        format: cli.format,
        seed: cli.seed,
        out: cli.out,
        exec: if cli.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        },
        max_n: max_n_from_env()?,
    };
    match cli.command {
        Command::Dist(tree) => dist(&ctx, &tree.tree),
        Command::Count { tree, k, root } => count(&ctx, &tree.tree, k, root),
        Command::Compare { left, right } => compare(&ctx, &left, &right),
        Command::Scan { n, n_min, family } => scan(&ctx, n_min.unwrap_or(n), n, family),
        Command::Order { n } => order(&ctx, n),
        Command::VerifyLemmas(args) => verify_lemmas(&ctx, &args),
        Command::Sample {
            tree,
            samples,
            pair,
            walks,
        } => sample(&ctx, &tree.tree, samples, pair, walks),
        Command::GenTrees { n } => gen_trees(&ctx, n),
    }
}

fn dist(ctx: &Ctx, spec: &str) -> Result<Status> {
    let tree = load_tree(spec, ctx.max_n)?;
    let distribution = range_distribution(&tree, ctx.model());
    let expected = distribution.expected_range();
    let record = RangeDistributionRecord::from(distribution);
    let mut out = Output::new(&record)?.columns(&["range", "count", "tail"]);
    out.line(format!(
        "tree {tree}, n={}, model={}",
        record.n, record.model
    ));
    out.line(format!(
        "walks {}, E[range] = {}/{}",
        record.denominator,
        expected.numer(),
        expected.denom()
    ));
    for (k, tail) in &record.tail {
        let count = record
            .class_counts
            .get(k)
            .cloned()
            .unwrap_or_else(|| "0".into());
        out.row(vec![k.to_string(), count, tail.clone()]);
    }
    ctx.emit(&out)?;
    Ok(Status::Ok)
}

fn count(ctx: &Ctx, spec: &str, k: Option<usize>, root: usize) -> Result<Status> {
    let tree = load_tree(spec, ctx.max_n)?;
    let model = ctx.model();
    let k = k.unwrap_or_else(|| tree.diameter());
    let rooted = reroot(&tree, root)?;
    let bounded = count_bounded(&tree, k, model);
    let classes = range_classes(&tree, k, model);
    let prof: Vec<String> = profile(&rooted, k, model)
        .counts()
        .iter()
        .map(|c| c.to_string())
        .collect();
    let record = serde_json::json!({
        "tree": tree.to_edge_list(),
        "n": tree.n(),
        "model": model,
        "k": k,
        "root": root,
        "bounded": bounded.to_string(),
        "classes": classes.to_string(),
        "profile": prof,
    });
    let mut out = Output::new(&record)?.columns(&["label", "count"]);
    out.line(format!("tree {tree}, n={}, model={model}, k={k}", tree.n()));
    out.line(format!(
        "F^{k} = {bounded}, f^{k} = {classes}; labelings with root {root} at each label:"
    ));
    for (i, c) in prof.into_iter().enumerate() {
        out.row(vec![i.to_string(), c]);
    }
    ctx.emit(&out)?;
    Ok(Status::Ok)
}

fn compare(ctx: &Ctx, left: &str, right: &str) -> Result<Status> {
    let l = load_tree(left, ctx.max_n)?;
    let r = load_tree(right, ctx.max_n)?;
    let record = compare_range(&l, &r, ctx.model())?.to_record();
    let verdict = serde_json::to_value(record.verdict)?;
    let mut out = Output::new(&record)?.columns(&["k", "left_tail", "right_tail"]);
    out.line(format!(
        "left {}, right {}, n={}, model={}",
        record.left, record.right, record.n, record.model
    ));
    out.line(format!("verdict: {}", verdict.as_str().unwrap_or_default()));
    for pair in &record.per_k {
        out.row(vec![
            pair.k.to_string(),
            pair.left.clone(),
            pair.right.clone(),
        ]);
    }
    ctx.emit(&out)?;
    Ok(Status::Ok)
}

fn scan(ctx: &Ctx, n_min: usize, n_max: usize, family: TreeFamily) -> Result<Status> {
    ctx.check_n(n_min)?;
    ctx.check_n(n_max)?;
    if n_min > n_max {
        bail!("--n-min {n_min} is larger than --n {n_max}");
    }
    let model = ctx.model();
    let results = (n_min..=n_max)
        .map(|n| scan_against_path(n, model, family, ctx.exec))
        .collect::<giraw::Result<Vec<_>>>()?;
    let records: Vec<_> = results.iter().map(|r| r.to_record()).collect();
    let json = if records.len() == 1 {
        serde_json::to_value(&records[0])?
    } else {
        serde_json::to_value(&records)?
    };
    let mut out =
        Output::new(&json)?.columns(&["n", "index", "tree", "k", "tail_tree", "tail_path"]);
    for (result, record) in results.iter().zip(&records) {
        out.line(result.summary());
        for v in &record.violations {
            out.row(vec![
                record.n.to_string(),
                v.index.to_string(),
                compact(&v.tree)?,
                v.k.to_string(),
                v.tail_tree.clone(),
                v.tail_path.clone(),
            ]);
        }
    }
    ctx.emit(&out)?;
    let violations: usize = results.iter().map(|r| r.violations.len()).sum();
    if violations > 0 {
        eprintln!(
            "FINDING: {violations} trees with a tail above the path's ({model}, family {family})"
        );
        return Ok(Status::Violation);
    }
    Ok(Status::Ok)
}

/// One-line `[u-v ...]` form of an edge-list record field.
fn compact(edge_list: &str) -> Result<String> {
    Ok(giraw::parse_tree(edge_list)?.to_string())
}

fn order(ctx: &Ctx, n: usize) -> Result<Status> {
    ctx.check_n(n)?;
    let order = pairwise_domination_order(n, ctx.model(), ctx.exec)?;
    let record = order.to_record();
    let mut out = Output::new(&record)?.columns(&["index", "tree", "dominated_by"]);
    out.line(format!(
        "n={n} model={}: {} trees, totally ordered: {}",
        record.model,
        order.len(),
        if order.is_chain() { "yes" } else { "no" }
    ));
    for entry in &record.trees {
        let by: Vec<String> = entry.dominated_by.iter().map(|i| i.to_string()).collect();
        out.row(vec![
            entry.index.to_string(),
            compact(&entry.tree)?,
            by.join(" "),
        ]);
    }
    ctx.emit(&out)?;
    Ok(Status::Ok)
}

fn verify_lemmas(ctx: &Ctx, args: &LemmaArgs) -> Result<Status> {
    let grid = LemmaGrid {
        a_max: args.a_max,
        k_max: args.k,
        spider_legs_max: args.legs_max,
        spider_leg_len_max: args.leg_len_max,
        tree_n_max: args.tree_n_max,
        remainder_n_max: args.remainder_n_max,
    };
    if grid.tree_n_max > ctx.max_n || grid.remainder_n_max > ctx.max_n {
        bail!(
            "tree sizes above the generation cap {} (raise it with GIRAW_MAX_N)",
            ctx.max_n
        );
    }
    let legs = args
        .legs
        .as_deref()
        .map(|text| parse_legs(text).and_then(|l| Ok(SpiderSpec::new(l)?)))
        .transpose()
        .context("in --legs")?;
    let mut results: Vec<LemmaCheckResult> = Vec::new();
    let wants = |choice: LemmaChoice| args.lemma == LemmaChoice::All || args.lemma == choice;
    if args.lemma == LemmaChoice::All && legs.is_none() && ctx.model.is_none() {
        results = run_lemma_suite(&grid, ctx.exec)?;
    } else {
        if wants(LemmaChoice::Spidersums) {
            results.push(match &legs {
                Some(spec) => check_spidersums(spec, grid.k_max)?,
                None => check_spidersums_grid(&grid, ctx.exec),
            });
        }
        if wants(LemmaChoice::CenterMonotone) {
            for model in ctx.models() {
                results.extend(check_center_monotone(&grid, model, ctx.exec)?);
            }
        }
        if wants(LemmaChoice::StarLeafControl) {
            results.push(star_leaf_control(grid.k_max));
        }
        if wants(LemmaChoice::DifferenceMonotone) {
            for model in ctx.models() {
                results.extend(check_difference_monotone(&grid, model, ctx.exec)?);
            }
        }
        if wants(LemmaChoice::SummandComparison) {
            for model in ctx.models() {
                results.push(match &legs {
                    Some(spec) => check_summand_comparison(spec, grid.k_max, model)?,
                    None => check_summand_comparison_grid(&grid, model, ctx.exec)?,
                });
            }
        }
    }
    let mut out = Output::new(&results)?.columns(&[
        "lemma",
        "model",
        "grid",
        "cases",
        "counterexamples",
        "expected",
        "status",
    ]);
    for r in &results {
        out.row(vec![
            r.lemma.to_string(),
            r.model.map_or("both".into(), |m| m.to_string()),
            r.grid.clone(),
            r.cases_checked.to_string(),
            r.counterexample_total.to_string(),
            if r.expect_counterexamples {
                "yes"
            } else {
                "no"
            }
            .into(),
            if r.passed() { "ok" } else { "FAILED" }.into(),
        ]);
    }
    ctx.emit(&out)?;
    let failed: Vec<String> = results
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.summary())
        .collect();
    if !failed.is_empty() {
        for line in failed {
            eprintln!("FINDING: {line}");
        }
        return Ok(Status::Violation);
    }
    Ok(Status::Ok)
}

fn sample(
    ctx: &Ctx,
    spec: &str,
    samples: u64,
    pair: Option<String>,
    walks: Option<usize>,
) -> Result<Status> {
    let Some(seed) = ctx.seed else {
        bail!("sample requires --seed");
    };
    let tree = load_tree(spec, ctx.max_n)?;
    let model = ctx.model();
    if let Some(count) = walks {
        let rooted = reroot(&tree, 0)?;
        let drawn: Vec<_> = WalkSampler::new(rooted, model, seed).take(count).collect();
        let mut out = Output::new(&drawn)?.columns(&["draw", "range", "labels"]);
        for s in &drawn {
            let labels: Vec<String> = s.labels.iter().map(|l| l.to_string()).collect();
            out.row(vec![
                s.draw.to_string(),
                s.range().to_string(),
                labels.join(" "),
            ]);
        }
        ctx.emit(&out)?;
        return Ok(Status::Ok);
    }
    let report = match pair {
        Some(text) => {
            let (u, v) = parse_pair(&text, &tree)?;
            estimate_pair_distance(&tree, u, v, model, samples, seed, ctx.exec)?
        }
        None => estimate_expected_range(&tree, model, samples, seed, ctx.exec),
    };
    let mut out =
        Output::new(&report)?.columns(&["statistic", "estimate", "standard_error", "exact", "z"]);
    let z = report
        .z_score()
        .map_or(String::new(), |z| format!("{z:.2}"));
    out.line(format!(
        "E[{}] = {:.6} ± {:.6} ({} samples, seed {}, {}); exact {} ≈ {:.6}",
        report.statistic,
        report.estimate,
        report.standard_error,
        report.samples,
        report.seed,
        report.model,
        report.exact.as_deref().unwrap_or("?"),
        report.exact_decimal.unwrap_or(f64::NAN),
    ));
    if ctx.format == Format::Csv {
        out.row(vec![
            report.statistic.clone(),
            report.estimate.to_string(),
            report.standard_error.to_string(),
            report.exact.clone().unwrap_or_default(),
            z,
        ]);
    }
    ctx.emit(&out)?;
    Ok(Status::Ok)
}

fn parse_pair(text: &str, tree: &Tree) -> Result<(usize, usize)> {
    let parts: Vec<&str> = text.split(',').collect();
    let [u, v] = parts.as_slice() else {
        bail!("--pair expects `u,v`, got `{text}`");
    };
    let u: usize = u
        .trim()
        .parse()
        .with_context(|| format!("--pair: `{u}` is not a vertex"))?;
    let v: usize = v
        .trim()
        .parse()
        .with_context(|| format!("--pair: `{v}` is not a vertex"))?;
    for w in [u, v] {
        if w >= tree.n() {
            bail!(
                "--pair: vertex {w} is out of range for a tree on {} vertices",
                tree.n()
            );
        }
    }
    Ok((u, v))
}

fn gen_trees(ctx: &Ctx, n: usize) -> Result<Status> {
    ctx.check_n(n)?;
    let trees: Vec<Tree> = generate_free_trees(n)?.collect();
    let records: Vec<serde_json::Value> = trees
        .iter()
        .enumerate()
        .map(|(i, t)| {
            serde_json::json!({
                "index": i,
                "edges": t.to_edge_list(),
                "diameter": t.diameter(),
                "spider": t.is_spider(),
                "canonical": t.canonical_form(),
            })
        })
        .collect();
    let mut out =
        Output::new(&records)?.columns(&["index", "edges", "diameter", "spider", "canonical"]);
    out.line(format!("{} trees on {n} vertices", trees.len()));
    for (i, t) in trees.iter().enumerate() {
        out.row(vec![
            i.to_string(),
            t.to_string(),
            t.diameter().to_string(),
            t.is_spider().to_string(),
            t.canonical_form(),
        ]);
    }
    ctx.emit(&out)?;
    Ok(Status::Ok)
}
