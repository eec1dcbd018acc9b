//! Exhaustive checks of the counting identities and inequalities behind the
//! dominance results, over finite parameter grids.
//!
//! Notation in parameter strings: `F_i^k(T)` is the number of labelings of a
//! rooted tree with labels in `0..=k` and root label `i`; `F_{i->j}^k(P_a)`
//! fixes both end labels of a path with `a` edges.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::counting::{count_bounded, profile, transfer, CountProfile, TransferTable, WalkModel};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::generate::generate_free_trees;
use crate::tree::{make_path, make_spider, reroot, RootedTree, SpiderSpec, Tree};

/// Counterexamples kept per result; the total is always counted.
const MAX_RECORDED: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    /// Joining two legs of a spider changes `F^k` by the sum over `i < j` of
    /// `F_{i->j}(P_a1) (F_i(P_a2) - F_j(P_a2)) (F_i(T') - F_j(T'))`.
    SpiderSums,
    /// Paths rooted at an end: labels nearer the middle of `0..=k` start more
    /// bounded walks.
    CenterMonotonePaths,
    /// Same, for spiders rooted at the branch vertex.
    CenterMonotoneSpiders,
    /// Same, for every rooted tree (lazy walks only).
    CenterMonotoneTrees,
    /// Stars rooted at a leaf, standard walks: center monotonicity fails.
    StarLeafControl,
    /// `i < j`, `i + j <= k`: `0 <= F_j^k - F_i^k <= F_j^(k+1) - F_i^(k+1)` on paths.
    DifferenceMonotonePaths,
    /// The same inequality on spiders.
    DifferenceMonotoneSpiders,
    /// `i < j`, `i + j >= k`: `0 <= F_i^k - F_j^k <= F_(i+1)^(k+1) - F_(j+1)^(k+1)` on spiders.
    DifferenceShiftSpiders,
    /// The lower-half inequality on every rooted tree.
    DifferenceMonotoneTrees,
    /// The shifted inequality on every rooted tree.
    DifferenceShiftTrees,
    /// Each `(i, j)` term of the leg-joining expansion at bound `k` is at most
    /// its matched term at bound `k + 1`.
    SummandComparison,
}

impl LemmaId {
    pub const ALL: [LemmaId; 11] = [
        Self::SpiderSums,
        Self::CenterMonotonePaths,
        Self::CenterMonotoneSpiders,
        Self::CenterMonotoneTrees,
        Self::StarLeafControl,
        Self::DifferenceMonotonePaths,
        Self::DifferenceMonotoneSpiders,
        Self::DifferenceShiftSpiders,
        Self::DifferenceMonotoneTrees,
        Self::DifferenceShiftTrees,
        Self::SummandComparison,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::SpiderSums => "spider-sums",
            Self::CenterMonotonePaths => "center-monotone-paths",
            Self::CenterMonotoneSpiders => "center-monotone-spiders",
            Self::CenterMonotoneTrees => "center-monotone-trees",
            Self::StarLeafControl => "star-leaf-control",
            Self::DifferenceMonotonePaths => "difference-monotone-paths",
            Self::DifferenceMonotoneSpiders => "difference-monotone-spiders",
            Self::DifferenceShiftSpiders => "difference-shift-spiders",
            Self::DifferenceMonotoneTrees => "difference-monotone-trees",
            Self::DifferenceShiftTrees => "difference-shift-trees",
            Self::SummandComparison => "summand-comparison",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Bounds for the exhaustive checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaGrid {
    /// Longest path, in edges.
    pub a_max: usize,
    /// Largest label bound `k`.
    pub k_max: usize,
    /// Most legs on a spider.
    pub spider_legs_max: usize,
    /// Longest spider leg.
    pub spider_leg_len_max: usize,
    /// Largest tree, in vertices, for the all-trees families.
    pub tree_n_max: usize,
    /// Largest remainder tree in the lazy summand comparison.
    pub remainder_n_max: usize,
}

impl Default for LemmaGrid {
    fn default() -> Self {
        Self {
            a_max: 6,
            k_max: 6,
            spider_legs_max: 3,
            spider_leg_len_max: 3,
            tree_n_max: 7,
            remainder_n_max: 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheckResult {
    pub lemma: LemmaId,
    /// `None` when both walk models were checked.
    pub model: Option<WalkModel>,
    pub grid: String,
    pub cases_checked: u64,
    pub counterexample_total: u64,
    /// At most a fixed number of the counterexamples found.
    pub counterexamples: Vec<Counterexample>,
    /// Negative controls expect counterexamples.
    pub expect_counterexamples: bool,
}

impl LemmaCheckResult {
    pub fn passed(&self) -> bool {
        (self.counterexample_total > 0) == self.expect_counterexamples
    }

    pub fn summary(&self) -> String {
        let model = self.model.map_or("both".to_string(), |m| m.to_string());
        let status = match (self.passed(), self.expect_counterexamples) {
            (true, false) => "holds",
            (true, true) => "fails as expected",
            (false, false) => "COUNTEREXAMPLES FOUND",
            (false, true) => "CONTROL FOUND NOTHING",
        };
        format!(
            "{} [{}] {}: {} cases, {} counterexamples: {}",
            self.lemma, model, self.grid, self.cases_checked, self.counterexample_total, status
        )
    }
}

#[derive(Debug, Default)]
struct Tally {
    cases: u64,
    total: u64,
    found: Vec<Counterexample>,
}

impl Tally {
    fn check(
        &mut self,
        holds: bool,
        params: impl FnOnce() -> String,
        detail: impl FnOnce() -> String,
    ) {
        self.cases += 1;
        if !holds {
            self.total += 1;
            if self.found.len() < MAX_RECORDED {
                self.found.push(Counterexample {
                    params: params(),
                    detail: detail(),
                });
            }
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.cases += other.cases;
        self.total += other.total;
        let room = MAX_RECORDED.saturating_sub(self.found.len());
        self.found.extend(other.found.into_iter().take(room));
    }

    fn finish(
        self,
        lemma: LemmaId,
        model: Option<WalkModel>,
        grid: String,
        expect_counterexamples: bool,
    ) -> LemmaCheckResult {
        LemmaCheckResult {
            lemma,
            model,
            grid,
            cases_checked: self.cases,
            counterexample_total: self.total,
            counterexamples: self.found,
            expect_counterexamples,
        }
    }
}

fn signed(x: &num_bigint::BigUint) -> BigInt {
    BigInt::from(x.clone())
}

/// A rooted tree seen as two bare legs of lengths `first` and `second` at the
/// root plus a remainder `T'` hanging from the same root.
#[derive(Debug, Clone)]
pub struct SpiderSplit {
    first: usize,
    second: usize,
    rest: Option<RootedTree>,
}

/// Factors of the leg-joining expansion at one bound.
struct ExpansionTerms {
    transfer: TransferTable,
    second: CountProfile,
    rest: CountProfile,
}

impl ExpansionTerms {
    fn summand(&self, i: usize, j: usize) -> BigInt {
        let (i, j) = (i as i64, j as i64);
        signed(&self.transfer.get(i, j))
            * (signed(&self.second.get(i)) - signed(&self.second.get(j)))
            * (signed(&self.rest.get(i)) - signed(&self.rest.get(j)))
    }
}

impl SpiderSplit {
    pub fn new(first: usize, second: usize, rest: Option<RootedTree>) -> Self {
        Self {
            first,
            second,
            rest,
        }
    }

    /// Splits off the first two legs; the remaining legs form `T'`.
    pub fn from_spider(spec: &SpiderSpec) -> Result<Self> {
        let legs = spec.legs();
        if legs.len() < 2 {
            return Err(Error::TooFewLegs {
                needed: 2,
                got: legs.len(),
            });
        }
        let rest = match legs.len() {
            2 => None,
            _ => Some(make_spider(&SpiderSpec::new(legs[2..].to_vec())?)),
        };
        Ok(Self::new(legs[0], legs[1], rest))
    }

    fn with_rest(&self, tree: RootedTree) -> RootedTree {
        match &self.rest {
            Some(rest) => tree.glue(rest),
            None => tree,
        }
    }

    /// The tree with both legs attached separately.
    pub fn split_tree(&self) -> Tree {
        let legs = make_path(self.first).glue(&make_path(self.second));
        self.with_rest(legs).into_tree()
    }

    /// The tree with the two legs joined into one of length `first + second`.
    pub fn joined_tree(&self) -> Tree {
        self.with_rest(make_path(self.first + self.second))
            .into_tree()
    }

    fn terms(&self, k: usize, model: WalkModel) -> ExpansionTerms {
        ExpansionTerms {
            transfer: transfer(self.first, k, model),
            second: profile(&make_path(self.second), k, model),
            rest: self
                .rest
                .as_ref()
                .map_or_else(|| CountProfile::ones(k), |r| profile(r, k, model)),
        }
    }

    /// `F^k(split) - F^k(joined)` counted on the two whole trees.
    pub fn direct_difference(&self, k: usize, model: WalkModel) -> BigInt {
        signed(&count_bounded(&self.split_tree(), k, model))
            - signed(&count_bounded(&self.joined_tree(), k, model))
    }

    /// The same difference through the `(i, j)` expansion.
    pub fn expansion(&self, k: usize, model: WalkModel) -> BigInt {
        let terms = self.terms(k, model);
        (0..=k)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .map(|(i, j)| terms.summand(i, j))
            .sum()
    }

    fn describe(&self) -> String {
        let rest = self
            .rest
            .as_ref()
            .map_or("empty".to_string(), |r| r.canonical_form());
        format!("a1={} a2={} rest={}", self.first, self.second, rest)
    }
}

/// Ordered leg tuples with `min_legs..=max_legs` legs of length `1..=max_len`.
fn ordered_leg_tuples(min_legs: usize, max_legs: usize, max_len: usize) -> Vec<SpiderSpec> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn extend(
        current: &mut Vec<usize>,
        min_legs: usize,
        max_legs: usize,
        max_len: usize,
        out: &mut Vec<SpiderSpec>,
    ) {
        if current.len() >= min_legs {
            out.push(SpiderSpec::new(current.clone()).expect("positive legs"));
        }
        if current.len() == max_legs {
            return;
        }
        for len in 1..=max_len {
            current.push(len);
            extend(current, min_legs, max_legs, max_len, out);
            current.pop();
        }
    }
    extend(&mut current, min_legs.max(1), max_legs, max_len, &mut out);
    out
}

/// Spiders up to isomorphism: nonincreasing leg tuples.
fn spider_shapes(max_legs: usize, max_len: usize) -> Vec<SpiderSpec> {
    ordered_leg_tuples(1, max_legs, max_len)
        .into_iter()
        .filter(|s| s.legs().windows(2).all(|w| w[0] >= w[1]))
        .collect()
}

/// Every rooted tree on `1..=n_max` vertices, one per rooted isomorphism class.
pub fn all_rooted_trees(n_max: usize) -> Result<Vec<RootedTree>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for n in 1..=n_max {
        for tree in generate_free_trees(n)? {
            for root in 0..n {
                let rooted = reroot(&tree, root)?;
                if seen.insert(rooted.canonical_form()) {
                    out.push(rooted);
                }
            }
        }
    }
    Ok(out)
}

/// Both sides of the leg-joining identity for bounds `0..=k_max`, both models.
pub fn check_spidersums(legs: &SpiderSpec, k_max: usize) -> Result<LemmaCheckResult> {
    let split = SpiderSplit::from_spider(legs)?;
    let mut tally = Tally::default();
    spidersum_cases(&split, &legs.to_string(), k_max, &mut tally);
    Ok(tally.finish(
        LemmaId::SpiderSums,
        None,
        format!("legs={legs} k<={k_max}"),
        false,
    ))
}

fn spidersum_cases(split: &SpiderSplit, label: &str, k_max: usize, tally: &mut Tally) {
    for model in WalkModel::ALL {
        for k in 0..=k_max {
            let direct = split.direct_difference(k, model);
            let expanded = split.expansion(k, model);
            tally.check(
                direct == expanded,
                || format!("legs={label} k={k} model={model}"),
                || format!("F^k difference {direct} but expansion gives {expanded}"),
            );
        }
    }
}

/// [`check_spidersums`] over every ordered leg tuple in the grid.
pub fn check_spidersums_grid(grid: &LemmaGrid, exec: Execution) -> LemmaCheckResult {
    let spiders = ordered_leg_tuples(2, grid.spider_legs_max, grid.spider_leg_len_max);
    let tallies = exec.map(&spiders, |spec| {
        let mut tally = Tally::default();
        let split = SpiderSplit::from_spider(spec).expect("at least two legs");
        spidersum_cases(&split, &spec.to_string(), grid.k_max, &mut tally);
        tally
    });
    let mut tally = Tally::default();
    tallies.into_iter().for_each(|t| tally.absorb(t));
    tally.finish(
        LemmaId::SpiderSums,
        None,
        format!(
            "legs<={}x{} k<={}",
            grid.spider_legs_max, grid.spider_leg_len_max, grid.k_max
        ),
        false,
    )
}

fn center_monotone_cases(
    label: &str,
    tree: &RootedTree,
    k_max: usize,
    model: WalkModel,
    tally: &mut Tally,
) {
    for k in 0..=k_max {
        let p = profile(tree, k, model);
        let counts = p.counts();
        for i in 0..=k {
            for j in 0..=k {
                let closer = (2 * i).abs_diff(k) <= (2 * j).abs_diff(k);
                if !closer {
                    continue;
                }
                tally.check(
                    counts[i] >= counts[j],
                    || format!("{label} k={k} i={i} j={j}"),
                    || format!("F_i^k = {} < F_j^k = {}", counts[i], counts[j]),
                );
            }
        }
    }
}

/// Center monotonicity, `|i - k/2| <= |j - k/2|  =>  F_i^k >= F_j^k`, on an
/// explicit list of rooted trees.
pub fn check_center_monotone_on(
    lemma: LemmaId,
    trees: &[(String, RootedTree)],
    k_max: usize,
    model: WalkModel,
    expect_counterexamples: bool,
    exec: Execution,
) -> LemmaCheckResult {
    let tallies = exec.map(trees, |(label, tree)| {
        let mut tally = Tally::default();
        center_monotone_cases(label, tree, k_max, model, &mut tally);
        tally
    });
    let mut tally = Tally::default();
    tallies.into_iter().for_each(|t| tally.absorb(t));
    tally.finish(
        lemma,
        Some(model),
        format!("{} trees k<={k_max}", trees.len()),
        expect_counterexamples,
    )
}

fn path_family(a_max: usize) -> Vec<(String, RootedTree)> {
    (0..=a_max)
        .map(|a| (format!("path a={a}"), make_path(a)))
        .collect()
}

fn spider_family(grid: &LemmaGrid) -> Vec<(String, RootedTree)> {
    spider_shapes(grid.spider_legs_max, grid.spider_leg_len_max)
        .into_iter()
        .map(|s| (format!("spider legs={s}"), make_spider(&s)))
        .collect()
}

fn tree_family(n_max: usize) -> Result<Vec<(String, RootedTree)>> {
    Ok(all_rooted_trees(n_max)?
        .into_iter()
        .map(|t| (format!("rooted {}", t.canonical_form()), t))
        .collect())
}

/// Center monotonicity on paths and spiders, and for lazy walks on every
/// rooted tree up to `grid.tree_n_max` vertices.
pub fn check_center_monotone(
    grid: &LemmaGrid,
    model: WalkModel,
    exec: Execution,
) -> Result<Vec<LemmaCheckResult>> {
    let mut results = vec![
        check_center_monotone_on(
            LemmaId::CenterMonotonePaths,
            &path_family(grid.a_max),
            grid.k_max,
            model,
            false,
            exec,
        ),
        check_center_monotone_on(
            LemmaId::CenterMonotoneSpiders,
            &spider_family(grid),
            grid.k_max,
            model,
            false,
            exec,
        ),
    ];
    if model == WalkModel::Lazy {
        results.push(check_center_monotone_on(
            LemmaId::CenterMonotoneTrees,
            &tree_family(grid.tree_n_max)?,
            grid.k_max,
            model,
            false,
            exec,
        ));
    }
    Ok(results)
}

/// Stars with 3 to 5 leaves rooted at a leaf, standard walks. Center
/// monotonicity does not hold for them, so this must find counterexamples.
pub fn star_leaf_control(k_max: usize) -> LemmaCheckResult {
    let trees: Vec<(String, RootedTree)> = (3..=5)
        .map(|leaves| {
            let star = make_spider(&SpiderSpec::new(vec![1; leaves]).expect("positive legs"));
            let rooted = reroot(star.tree(), 1).expect("leaf 1 exists");
            (format!("star leaves={leaves} rooted at a leaf"), rooted)
        })
        .collect();
    check_center_monotone_on(
        LemmaId::StarLeafControl,
        &trees,
        k_max,
        WalkModel::Standard,
        true,
        Execution::Sequential,
    )
}

/// Which of the two difference inequalities to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum DifferenceForm {
    /// `i + j <= k`: `0 <= F_j^k - F_i^k <= F_j^(k+1) - F_i^(k+1)`.
    Lower,
    /// `i + j >= k`: `0 <= F_i^k - F_j^k <= F_(i+1)^(k+1) - F_(j+1)^(k+1)`.
    Shift,
}

fn difference_cases(
    label: &str,
    tree: &RootedTree,
    k_max: usize,
    model: WalkModel,
    form: DifferenceForm,
    tally: &mut Tally,
) {
    let mut upper = profile(tree, 0, model);
    for k in 0..=k_max {
        let lower = upper;
        upper = profile(tree, k + 1, model);
        let at = |p: &CountProfile, x: usize| signed(&p.get(x as i64));
        for j in 0..=k {
            for i in 0..j {
                let (small, large) = match form {
                    DifferenceForm::Lower if i + j <= k => {
                        (at(&lower, j) - at(&lower, i), at(&upper, j) - at(&upper, i))
                    }
                    DifferenceForm::Shift if i + j >= k => (
                        at(&lower, i) - at(&lower, j),
                        at(&upper, i + 1) - at(&upper, j + 1),
                    ),
                    _ => continue,
                };
                let zero = BigInt::default();
                tally.check(
                    zero <= small && small <= large,
                    || format!("{label} k={k} i={i} j={j}"),
                    || format!("difference at k is {small}, at k+1 is {large}"),
                );
            }
        }
    }
}

fn check_difference_on(
    lemma: LemmaId,
    trees: &[(String, RootedTree)],
    k_max: usize,
    model: WalkModel,
    form: DifferenceForm,
    exec: Execution,
) -> LemmaCheckResult {
    let tallies = exec.map(trees, |(label, tree)| {
        let mut tally = Tally::default();
        difference_cases(label, tree, k_max, model, form, &mut tally);
        tally
    });
    let mut tally = Tally::default();
    tallies.into_iter().for_each(|t| tally.absorb(t));
    tally.finish(
        lemma,
        Some(model),
        format!("{} trees k<={k_max}", trees.len()),
        false,
    )
}

/// Difference inequalities. Standard walks: the lower form on paths and
/// spiders, the shifted form on spiders. Lazy walks: both forms on paths and
/// on every rooted tree up to `grid.tree_n_max` vertices.
pub fn check_difference_monotone(
    grid: &LemmaGrid,
    model: WalkModel,
    exec: Execution,
) -> Result<Vec<LemmaCheckResult>> {
    let paths = path_family(grid.a_max);
    let k_max = grid.k_max;
    let mut results = vec![check_difference_on(
        LemmaId::DifferenceMonotonePaths,
        &paths,
        k_max,
        model,
        DifferenceForm::Lower,
        exec,
    )];
    match model {
        WalkModel::Standard => {
            let spiders = spider_family(grid);
            results.push(check_difference_on(
                LemmaId::DifferenceMonotoneSpiders,
                &spiders,
                k_max,
                model,
                DifferenceForm::Lower,
                exec,
            ));
            results.push(check_difference_on(
                LemmaId::DifferenceShiftSpiders,
                &spiders,
                k_max,
                model,
                DifferenceForm::Shift,
                exec,
            ));
        }
        WalkModel::Lazy => {
            let mut trees = tree_family(grid.tree_n_max)?;
            trees.extend(paths);
            results.push(check_difference_on(
                LemmaId::DifferenceMonotoneTrees,
                &trees,
                k_max,
                model,
                DifferenceForm::Lower,
                exec,
            ));
            results.push(check_difference_on(
                LemmaId::DifferenceShiftTrees,
                &trees,
                k_max,
                model,
                DifferenceForm::Shift,
                exec,
            ));
        }
    }
    Ok(results)
}

fn summand_cases(split: &SpiderSplit, k_max: usize, model: WalkModel, tally: &mut Tally) {
    let mut next = split.terms(0, model);
    for k in 0..=k_max {
        let current = next;
        next = split.terms(k + 1, model);
        for j in 0..=k {
            for i in 0..j {
                let term = current.summand(i, j);
                let (mi, mj) = if i + j <= k { (i, j) } else { (i + 1, j + 1) };
                let matched = next.summand(mi, mj);
                tally.check(
                    BigInt::default() <= term && term <= matched,
                    || format!("{} k={k} i={i} j={j} model={model}", split.describe()),
                    || format!("term {term} vs matched ({mi},{mj}) term {matched} at k+1"),
                );
            }
        }
    }
}

/// Per-term growth of the leg-joining expansion from `k` to `k + 1`, for
/// bounds `0..=k_max`: term `(i, j)` is matched with `(i, j)` when
/// `i + j <= k` and with `(i + 1, j + 1)` otherwise.
pub fn check_summand_comparison(
    legs: &SpiderSpec,
    k_max: usize,
    model: WalkModel,
) -> Result<LemmaCheckResult> {
    let split = SpiderSplit::from_spider(legs)?;
    let mut tally = Tally::default();
    summand_cases(&split, k_max, model, &mut tally);
    Ok(tally.finish(
        LemmaId::SummandComparison,
        Some(model),
        format!("legs={legs} k<={k_max}"),
        false,
    ))
}

/// [`check_summand_comparison`] over the spider grid; for lazy walks also
/// over every pair of legs up to the spider leg bound with every rooted
/// remainder up to `grid.remainder_n_max` vertices.
pub fn check_summand_comparison_grid(
    grid: &LemmaGrid,
    model: WalkModel,
    exec: Execution,
) -> Result<LemmaCheckResult> {
    let mut splits: Vec<SpiderSplit> =
        ordered_leg_tuples(2, grid.spider_legs_max, grid.spider_leg_len_max)
            .iter()
            .map(|s| SpiderSplit::from_spider(s).expect("at least two legs"))
            .collect();
    if model == WalkModel::Lazy {
        let remainders = all_rooted_trees(grid.remainder_n_max)?;
        for a1 in 1..=grid.spider_leg_len_max {
            for a2 in 1..=grid.spider_leg_len_max {
                for rest in &remainders {
                    splits.push(SpiderSplit::new(a1, a2, Some(rest.clone())));
                }
            }
        }
    }
    let tallies = exec.map(&splits, |split| {
        let mut tally = Tally::default();
        summand_cases(split, grid.k_max, model, &mut tally);
        tally
    });
    let mut tally = Tally::default();
    tallies.into_iter().for_each(|t| tally.absorb(t));
    Ok(tally.finish(
        LemmaId::SummandComparison,
        Some(model),
        format!("{} splits k<={}", splits.len(), grid.k_max),
        false,
    ))
}

/// Every check above over `grid`, in a fixed order.
pub fn run_lemma_suite(grid: &LemmaGrid, exec: Execution) -> Result<Vec<LemmaCheckResult>> {
    let mut results = vec![check_spidersums_grid(grid, exec)];
    for model in WalkModel::ALL {
        results.extend(check_center_monotone(grid, model, exec)?);
    }
    results.push(star_leaf_control(grid.k_max));
    for model in WalkModel::ALL {
        results.extend(check_difference_monotone(grid, model, exec)?);
    }
    for model in WalkModel::ALL {
        results.push(check_summand_comparison_grid(grid, model, exec)?);
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(legs: &[usize]) -> SpiderSpec {
        SpiderSpec::new(legs.to_vec()).unwrap()
    }

    #[test]
    fn star_expansion_example() {
        let split = SpiderSplit::from_spider(&spec(&[1, 1, 1])).unwrap();
        assert_eq!(
            split.direct_difference(2, WalkModel::Standard),
            BigInt::from(2)
        );
        assert_eq!(split.expansion(2, WalkModel::Standard), BigInt::from(2));
    }

    #[test]
    fn two_leg_split_joins_into_a_path() {
        let split = SpiderSplit::from_spider(&spec(&[2, 3])).unwrap();
        assert!(split.joined_tree().is_path());
        assert_eq!(split.joined_tree().n(), 6);
        assert_eq!(split.split_tree().n(), 6);
        let result = check_spidersums(&spec(&[2, 3]), 5).unwrap();
        assert!(result.passed(), "{}", result.summary());
        assert_eq!(result.cases_checked, 12);
    }

    #[test]
    fn spidersums_reject_one_leg() {
        assert_eq!(
            check_spidersums(&spec(&[4]), 3).unwrap_err(),
            Error::TooFewLegs { needed: 2, got: 1 }
        );
    }

    #[test]
    fn leg_tuples() {
        assert_eq!(ordered_leg_tuples(2, 3, 3).len(), 9 + 27);
        let shapes: Vec<Vec<usize>> = spider_shapes(2, 2)
            .iter()
            .map(|s| s.legs().to_vec())
            .collect();
        assert_eq!(
            shapes,
            vec![vec![1], vec![1, 1], vec![2], vec![2, 1], vec![2, 2]]
        );
    }

    #[test]
    fn rooted_tree_counts() {
        // Rooted trees on 1..=6 vertices: 1, 1, 2, 4, 9, 20.
        assert_eq!(all_rooted_trees(6).unwrap().len(), 37);
    }

    #[test]
    fn star_leaf_control_finds_counterexamples() {
        let result = star_leaf_control(2);
        assert!(result.counterexample_total > 0);
        assert!(result.passed());
    }

    #[test]
    fn summand_comparison_examples() {
        let std = check_summand_comparison(&spec(&[1, 1, 1]), 2, WalkModel::Standard).unwrap();
        assert!(std.passed(), "{}", std.summary());
        let lazy = check_summand_comparison(&spec(&[2, 2]), 6, WalkModel::Lazy).unwrap();
        assert!(lazy.passed(), "{}", lazy.summary());
    }

    #[test]
    fn lemma_names_match_serde() {
        for id in LemmaId::ALL {
            assert_eq!(serde_json::to_value(id).unwrap(), id.name());
        }
    }
}
