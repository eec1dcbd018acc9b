//! Exact counts of bounded walk labelings on trees.
//!
//! A labeling of a rooted tree with labels in `0..=k` is counted per root
//! label by a post-order product: a vertex's entry `i` multiplies, over its
//! children, the child's entries reachable in one step from `i`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tree::{make_path, reroot, RootedTree, Tree};

/// Which label differences an edge allows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkModel {
    /// Adjacent labels differ by exactly one.
    Standard,
    /// Adjacent labels differ by at most one.
    Lazy,
}

impl WalkModel {
    pub const ALL: [WalkModel; 2] = [WalkModel::Standard, WalkModel::Lazy];

    /// Label increments allowed across one edge.
    pub fn steps(self) -> &'static [i64] {
        match self {
            Self::Standard => &[-1, 1],
            Self::Lazy => &[-1, 0, 1],
        }
    }

    /// Number of walks per edge: 2 or 3.
    pub fn choices(self) -> u32 {
        self.steps().len() as u32
    }

    /// Size of the walk space on a tree with `n` vertices.
    pub fn walk_count(self, n: usize) -> BigUint {
        BigUint::from(self.choices()).pow((n.max(1) - 1) as u32)
    }
}

impl fmt::Display for WalkModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Standard => "standard",
            Self::Lazy => "lazy",
        })
    }
}

impl FromStr for WalkModel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "standard" => Ok(Self::Standard),
            "lazy" => Ok(Self::Lazy),
            other => Err(format!(
                "unknown walk model `{other}` (expected standard or lazy)"
            )),
        }
    }
}

/// Root-label counts `F_i^k` of a rooted tree, for `i` in `0..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountProfile {
    counts: Vec<BigUint>,
}

impl CountProfile {
    /// Profile of the empty product: every root label counted once.
    pub fn ones(k: usize) -> Self {
        Self {
            counts: vec![BigUint::one(); k + 1],
        }
    }

    pub fn bound(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Entry `i`, or zero outside `0..=k`.
    pub fn get(&self, i: i64) -> BigUint {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.counts.get(i))
            .cloned()
            .unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Profile after hanging the tree below a new root by one edge.
    pub fn lift(&self, model: WalkModel) -> Self {
        Self {
            counts: lift_row(&self.counts, model),
        }
    }

    /// Profile of two rooted trees glued at their roots.
    pub fn glue(&self, other: &Self) -> Self {
        assert_eq!(
            self.bound(),
            other.bound(),
            "profiles with different bounds"
        );
        Self {
            counts: self
                .counts
                .iter()
                .zip(&other.counts)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }
}

/// `out[i] = row[i-1] + row[i+1]`, plus `row[i]` for lazy walks.
fn lift_row(row: &[BigUint], model: WalkModel) -> Vec<BigUint> {
    let len = row.len();
    (0..len)
        .map(|i| {
            let mut sum = BigUint::zero();
            if i > 0 {
                sum += &row[i - 1];
            }
            if i + 1 < len {
                sum += &row[i + 1];
            }
            if model == WalkModel::Lazy {
                sum += &row[i];
            }
            sum
        })
        .collect()
}

/// `F_i^k` for every root label `i` of `tree`.
pub fn profile(tree: &RootedTree, k: usize, model: WalkModel) -> CountProfile {
    let mut table: Vec<Option<CountProfile>> = vec![None; tree.n()];
    for &v in tree.top_down().iter().rev() {
        let mut acc = CountProfile::ones(k);
        for &c in tree.children(v) {
            let child = table[c].take().expect("children are finished first");
            for (a, s) in acc.counts.iter_mut().zip(lift_row(&child.counts, model)) {
                *a *= s;
            }
        }
        table[v] = Some(acc);
    }
    table[tree.root()].take().expect("root is finished last")
}

/// `F^k`: labelings of `tree` with every label in `0..=k`.
pub fn count_bounded(tree: &Tree, k: usize, model: WalkModel) -> BigUint {
    let rooted = reroot(tree, 0).expect("every tree has vertex 0");
    profile(&rooted, k, model).total()
}

/// `f^k = F^k - F^(k-1)`: translation classes of walks with range at most `k`.
pub fn range_classes(tree: &Tree, k: usize, model: WalkModel) -> BigUint {
    let below = match k {
        0 => BigUint::zero(),
        _ => count_bounded(tree, k - 1, model),
    };
    count_bounded(tree, k, model) - below
}

/// Exact distribution of the range of a uniform walk on a tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RangeDistributionRecord", try_from = "RangeDistributionRecord")]
pub struct RangeDistribution {
    n: usize,
    model: WalkModel,
    // Index r: walks (up to translation) with range exactly r.
    class_counts: Vec<BigUint>,
    denominator: BigUint,
}

impl RangeDistribution {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn model(&self) -> WalkModel {
        self.model
    }

    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    /// Class counts indexed by range, up to the largest attainable range.
    pub fn class_counts(&self) -> &[BigUint] {
        &self.class_counts
    }

    pub fn count_with_range(&self, r: usize) -> BigUint {
        self.class_counts.get(r).cloned().unwrap_or_default()
    }

    pub fn max_range(&self) -> usize {
        self.class_counts.len() - 1
    }

    /// Number of classes with range at least `k`; the numerator of
    /// `P(Range >= k)` over [`Self::denominator`].
    pub fn tail_count(&self, k: usize) -> BigUint {
        self.class_counts.iter().skip(k).sum()
    }

    pub fn tail(&self, k: usize) -> BigRational {
        ratio(&self.tail_count(k), &self.denominator)
    }

    pub fn expected_range(&self) -> BigRational {
        let total: BigUint = self
            .class_counts
            .iter()
            .enumerate()
            .map(|(r, c)| c * BigUint::from(r))
            .sum();
        ratio(&total, &self.denominator)
    }
}

/// JSON layout of a [`RangeDistribution`]; big integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeDistributionRecord {
    pub n: usize,
    pub model: WalkModel,
    pub denominator: String,
    pub class_counts: BTreeMap<usize, String>,
    /// `P(Range >= k)` as `"num/den"` over the fixed denominator, for
    /// `k = 0..=max_range + 1`.
    pub tail: BTreeMap<usize, String>,
}

impl From<RangeDistribution> for RangeDistributionRecord {
    fn from(dist: RangeDistribution) -> Self {
        let tail = (0..=dist.max_range() + 1)
            .map(|k| (k, fraction(&dist.tail_count(k), &dist.denominator)))
            .collect();
        Self {
            n: dist.n,
            model: dist.model,
            denominator: dist.denominator.to_string(),
            class_counts: dist
                .class_counts
                .iter()
                .enumerate()
                .map(|(r, c)| (r, c.to_string()))
                .collect(),
            tail,
        }
    }
}

impl TryFrom<RangeDistributionRecord> for RangeDistribution {
    type Error = String;

    fn try_from(record: RangeDistributionRecord) -> Result<Self, String> {
        let parse = |s: &str| {
            s.parse::<BigUint>()
                .map_err(|_| format!("`{s}` is not a nonnegative decimal integer"))
        };
        if record.n == 0 {
            return Err("n must be positive".into());
        }
        let denominator = parse(&record.denominator)?;
        if denominator != record.model.walk_count(record.n) {
            return Err(format!(
                "denominator {denominator} does not match {} walks on {} vertices",
                record.model, record.n
            ));
        }
        let max_range = record.class_counts.keys().copied().max().unwrap_or(0);
        let mut class_counts = vec![BigUint::zero(); max_range + 1];
        for (&r, c) in &record.class_counts {
            class_counts[r] = parse(c)?;
        }
        let dist = Self {
            n: record.n,
            model: record.model,
            class_counts,
            denominator,
        };
        if dist.tail_count(0) != dist.denominator {
            return Err("class counts do not sum to the denominator".into());
        }
        for (&k, text) in &record.tail {
            if *text != fraction(&dist.tail_count(k), &dist.denominator) {
                return Err(format!("tail at k={k} is inconsistent with class counts"));
            }
        }
        Ok(dist)
    }
}

/// `P(Range >= k)` numerators for every `k` via `f^r` differences.
pub fn range_distribution(tree: &Tree, model: WalkModel) -> RangeDistribution {
    let rooted = reroot(tree, 0).expect("every tree has vertex 0");
    let diameter = tree.diameter();
    let mut class_counts = Vec::with_capacity(diameter + 1);
    let mut prev_bounded = BigUint::zero();
    let mut prev_classes = BigUint::zero();
    for r in 0..=diameter {
        let bounded = profile(&rooted, r, model).total();
        let classes = &bounded - &prev_bounded;
        class_counts.push(&classes - &prev_classes);
        prev_bounded = bounded;
        prev_classes = classes;
    }
    let denominator = model.walk_count(tree.n());
    debug_assert_eq!(prev_classes, denominator);
    RangeDistribution {
        n: tree.n(),
        model,
        class_counts,
        denominator,
    }
}

/// `F_{i->j}^k(P_a)`: bounded walks along a path with fixed end labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferTable {
    length: usize,
    model: WalkModel,
    entries: Vec<Vec<BigUint>>,
}

impl TransferTable {
    pub fn bound(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn model(&self) -> WalkModel {
        self.model
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.entries
    }

    /// Entry `(i, j)`, or zero when either label is outside `0..=k`.
    pub fn get(&self, i: i64, j: i64) -> BigUint {
        let lookup = |x: i64| usize::try_from(x).ok();
        match (lookup(i), lookup(j)) {
            (Some(i), Some(j)) => self
                .entries
                .get(i)
                .and_then(|row| row.get(j))
                .cloned()
                .unwrap_or_default(),
            _ => BigUint::zero(),
        }
    }

    pub fn row_sum(&self, i: usize) -> BigUint {
        self.entries[i].iter().sum()
    }
}

/// Powers of the one-step band matrix, applied `length` times to the identity.
pub fn transfer(length: usize, k: usize, model: WalkModel) -> TransferTable {
    let mut entries: Vec<Vec<BigUint>> = (0..=k)
        .map(|i| {
            (0..=k)
                .map(|j| {
                    if i == j {
                        BigUint::one()
                    } else {
                        BigUint::zero()
                    }
                })
                .collect()
        })
        .collect();
    for _ in 0..length {
        for row in entries.iter_mut() {
            *row = lift_row(row, model);
        }
    }
    TransferTable {
        length,
        model,
        entries,
    }
}

/// `F_i^k(P_a) - F_i^(k-1)(P_a)`: walks of length `a` from label `i` that stay
/// in `0..=k` and touch `k`.
pub fn f_start_count(length: usize, k: usize, start: usize, model: WalkModel) -> Result<BigUint> {
    if start > k {
        return Err(Error::LabelOutOfRange {
            label: start,
            bound: k,
        });
    }
    let path = make_path(length);
    let upper = profile(&path, k, model).get(start as i64);
    let lower = match k {
        0 => BigUint::zero(),
        _ => profile(&path, k - 1, model).get(start as i64),
    };
    Ok(upper - lower)
}

/// Exact law of `f(u) - f(v)` for a uniform walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceDistribution {
    distance: usize,
    model: WalkModel,
    counts: BTreeMap<i64, BigUint>,
    denominator: BigUint,
}

impl DifferenceDistribution {
    pub fn distance(&self) -> usize {
        self.distance
    }

    pub fn model(&self) -> WalkModel {
        self.model
    }

    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    /// Walk counts per difference value, over [`Self::denominator`].
    pub fn counts(&self) -> &BTreeMap<i64, BigUint> {
        &self.counts
    }

    pub fn probability(&self, value: i64) -> BigRational {
        let count = self.counts.get(&value).cloned().unwrap_or_default();
        ratio(&count, &self.denominator)
    }

    pub fn expected_abs(&self) -> BigRational {
        let total: BigUint = self
            .counts
            .iter()
            .map(|(x, c)| c * BigUint::from(x.unsigned_abs()))
            .sum();
        ratio(&total, &self.denominator)
    }
}

/// Law of `f(u) - f(v)`: on a tree the labels along the `u`–`v` path are a
/// free walk, so this is a convolution of `d` uniform steps.
pub fn endpoint_difference_distribution(
    tree: &Tree,
    u: usize,
    v: usize,
    model: WalkModel,
) -> Result<DifferenceDistribution> {
    let distance = tree.distance(u, v)?;
    let mut counts = BTreeMap::from([(0i64, BigUint::one())]);
    for _ in 0..distance {
        let mut next: BTreeMap<i64, BigUint> = BTreeMap::new();
        for (&x, c) in &counts {
            for &step in model.steps() {
                *next.entry(x + step).or_default() += c;
            }
        }
        counts = next;
    }
    Ok(DifferenceDistribution {
        distance,
        model,
        counts,
        denominator: BigUint::from(model.choices()).pow(distance as u32),
    })
}

/// Reduced exact ratio of two nonnegative integers.
pub fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// `"num/den"` without reduction.
pub fn fraction(num: &BigUint, den: &BigUint) -> String {
    format!("{num}/{den}")
}
