use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::counting::{fraction, range_distribution, RangeDistribution, WalkModel};
use crate::error::{Error, Result};
use crate::tree::Tree;

/// Outcome of comparing the upper tails `P(Range >= k)` of two trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Identical tails at every `k`.
    Equal,
    /// Every left tail is at most the right one, strictly somewhere.
    LeftDominatedByRight,
    /// Every right tail is at most the left one, strictly somewhere.
    RightDominatedByLeft,
    Incomparable,
}

/// Tail numerators at one `k`, both over the shared denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailPair {
    pub k: usize,
    pub left: BigUint,
    pub right: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceReport {
    pub left: String,
    pub right: String,
    pub n: usize,
    pub model: WalkModel,
    pub denominator: BigUint,
    /// `k = 0 ..= max(max_range) + 1`.
    pub per_k: Vec<TailPair>,
    pub verdict: Verdict,
    /// Values of `k` where the two tails differ.
    pub strict_at: Vec<usize>,
}

impl DominanceReport {
    /// True for [`Verdict::Equal`] and [`Verdict::LeftDominatedByRight`].
    pub fn left_dominated(&self) -> bool {
        matches!(self.verdict, Verdict::Equal | Verdict::LeftDominatedByRight)
    }

    pub fn to_record(&self) -> DominanceRecord {
        DominanceRecord {
            left: self.left.clone(),
            right: self.right.clone(),
            n: self.n,
            model: self.model,
            per_k: self
                .per_k
                .iter()
                .map(|pair| TailRecord {
                    k: pair.k,
                    left: fraction(&pair.left, &self.denominator),
                    right: fraction(&pair.right, &self.denominator),
                })
                .collect(),
            verdict: self.verdict,
            strict_at: self.strict_at.clone(),
        }
    }
}

/// JSON layout of a [`DominanceReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceRecord {
    pub left: String,
    pub right: String,
    pub n: usize,
    pub model: WalkModel,
    pub per_k: Vec<TailRecord>,
    pub verdict: Verdict,
    pub strict_at: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailRecord {
    pub k: usize,
    pub left: String,
    pub right: String,
}

/// Exact tail-by-tail comparison of the range distributions of two trees on
/// the same number of vertices.
pub fn compare_range(left: &Tree, right: &Tree, model: WalkModel) -> Result<DominanceReport> {
    if left.n() != right.n() {
        return Err(Error::UnequalSizes {
            left: left.n(),
            right: right.n(),
        });
    }
    compare_distributions(
        &left.to_string(),
        &range_distribution(left, model),
        &right.to_string(),
        &range_distribution(right, model),
    )
}

/// [`compare_range`] on precomputed distributions.
pub fn compare_distributions(
    left_id: &str,
    left: &RangeDistribution,
    right_id: &str,
    right: &RangeDistribution,
) -> Result<DominanceReport> {
    if left.n() != right.n() {
        return Err(Error::UnequalSizes {
            left: left.n(),
            right: right.n(),
        });
    }
    assert_eq!(
        left.model(),
        right.model(),
        "distributions under different models"
    );
    let top = left.max_range().max(right.max_range()) + 1;
    let per_k: Vec<TailPair> = (0..=top)
        .map(|k| TailPair {
            k,
            left: left.tail_count(k),
            right: right.tail_count(k),
        })
        .collect();
    let strict_at: Vec<usize> = per_k
        .iter()
        .filter(|p| p.left != p.right)
        .map(|p| p.k)
        .collect();
    let left_below = per_k.iter().all(|p| p.left <= p.right);
    let right_below = per_k.iter().all(|p| p.right <= p.left);
    let verdict = match (left_below, right_below) {
        (true, true) => Verdict::Equal,
        (true, false) => Verdict::LeftDominatedByRight,
        (false, true) => Verdict::RightDominatedByLeft,
        (false, false) => Verdict::Incomparable,
    };
    Ok(DominanceReport {
        left: left_id.to_owned(),
        right: right_id.to_owned(),
        n: left.n(),
        model: left.model(),
        denominator: left.denominator().clone(),
        per_k,
        verdict,
        strict_at,
    })
}

/// Whether every tail of `left` is at most the matching tail of `right`.
pub fn is_dominated(left: &RangeDistribution, right: &RangeDistribution) -> bool {
    let top = left.max_range().max(right.max_range());
    (0..=top).all(|k| left.tail_count(k) <= right.tail_count(k))
}
