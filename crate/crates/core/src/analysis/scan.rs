use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::dominance::{compare_distributions, is_dominated, DominanceReport};
use crate::counting::{fraction, range_distribution, RangeDistribution, WalkModel};
use crate::error::Result;
use crate::exec::Execution;
use crate::generate::generate_free_trees;
use crate::tree::{make_path, Tree};

/// Default cap on `n` for exhaustive scans.
pub const DEFAULT_MAX_SCAN_N: usize = 10;

/// Which trees a scan visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TreeFamily {
    All,
    /// Trees with at most one vertex of degree three or more.
    Spiders,
}

impl TreeFamily {
    pub fn contains(self, tree: &Tree) -> bool {
        match self {
            Self::All => true,
            Self::Spiders => tree.is_spider(),
        }
    }
}

impl fmt::Display for TreeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::All => "all",
            Self::Spiders => "spiders",
        })
    }
}

impl FromStr for TreeFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(Self::All),
            "spiders" | "spider" => Ok(Self::Spiders),
            other => Err(format!(
                "unknown tree family `{other}` (expected all or spiders)"
            )),
        }
    }
}

/// A tree whose tail exceeds the path's at some `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Position of the tree in generation order.
    pub index: usize,
    pub tree: Tree,
    pub k: usize,
    pub tail_tree: BigUint,
    pub tail_path: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanResult {
    pub n: usize,
    pub model: WalkModel,
    pub family: TreeFamily,
    pub trees_checked: usize,
    pub denominator: BigUint,
    /// Ordered by generation index, then `k`.
    pub violations: Vec<Violation>,
}

impl ScanResult {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "n={} model={} family={}: {} trees checked, {} violations",
            self.n,
            self.model,
            self.family,
            self.trees_checked,
            self.violations.len()
        )
    }

    pub fn to_record(&self) -> ScanRecord {
        ScanRecord {
            n: self.n,
            model: self.model,
            family: self.family,
            trees_checked: self.trees_checked,
            violations: self
                .violations
                .iter()
                .map(|v| ViolationRecord {
                    index: v.index,
                    tree: v.tree.to_edge_list(),
                    k: v.k,
                    tail_tree: fraction(&v.tail_tree, &self.denominator),
                    tail_path: fraction(&v.tail_path, &self.denominator),
                })
                .collect(),
        }
    }
}

/// JSON layout of a [`ScanResult`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub n: usize,
    pub model: WalkModel,
    pub family: TreeFamily,
    pub trees_checked: usize,
    pub violations: Vec<ViolationRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub index: usize,
    /// Edge-list text.
    pub tree: String,
    pub k: usize,
    pub tail_tree: String,
    pub tail_path: String,
}

/// Compares every tree on `n` vertices in `family` against the path on `n`
/// vertices and collects each `k` where the tree's tail is larger.
pub fn scan_against_path(
    n: usize,
    model: WalkModel,
    family: TreeFamily,
    exec: Execution,
) -> Result<ScanResult> {
    let trees: Vec<Tree> = generate_free_trees(n)?
        .filter(|t| family.contains(t))
        .collect();
    let path = range_distribution(make_path(n - 1).tree(), model);
    let per_tree = exec.map(&trees, |tree| {
        let dist = range_distribution(tree, model);
        (0..=dist.max_range())
            .filter_map(|k| {
                let (tail_tree, tail_path) = (dist.tail_count(k), path.tail_count(k));
                (tail_tree > tail_path).then_some((k, tail_tree, tail_path))
            })
            .collect::<Vec<_>>()
    });
    let violations = trees
        .iter()
        .zip(per_tree)
        .enumerate()
        .flat_map(|(index, (tree, hits))| {
            hits.into_iter()
                .map(move |(k, tail_tree, tail_path)| Violation {
                    index,
                    tree: tree.clone(),
                    k,
                    tail_tree,
                    tail_path,
                })
        })
        .collect();
    Ok(ScanResult {
        n,
        model,
        family,
        trees_checked: trees.len(),
        denominator: path.denominator().clone(),
        violations,
    })
}

/// Tail-dominance relation among all trees on `n` vertices.
#[derive(Debug, Clone)]
pub struct DominationOrder {
    pub n: usize,
    pub model: WalkModel,
    /// Generation order; the path is first.
    pub trees: Vec<Tree>,
    pub distributions: Vec<RangeDistribution>,
    // dominated[a][b]: every tail of tree a is at most that of tree b.
    dominated: Vec<Vec<bool>>,
}

impl DominationOrder {
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn is_dominated(&self, a: usize, b: usize) -> bool {
        self.dominated[a][b]
    }

    /// Trees that dominate tree `a`, including `a` itself.
    pub fn dominators(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.dominated[a][b]).collect()
    }

    /// Trees dominated by tree `b`, including `b` itself.
    pub fn dominated_by(&self, b: usize) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.dominated[a][b]).collect()
    }

    /// Generation index of the tree isomorphic to `tree`.
    pub fn index_of(&self, tree: &Tree) -> Option<usize> {
        let form = tree.canonical_form();
        self.trees.iter().position(|t| t.canonical_form() == form)
    }

    /// Every pair of trees is comparable.
    pub fn is_chain(&self) -> bool {
        (0..self.len())
            .all(|a| (0..self.len()).all(|b| self.dominated[a][b] || self.dominated[b][a]))
    }

    pub fn report(&self, a: usize, b: usize) -> DominanceReport {
        compare_distributions(
            &self.trees[a].to_string(),
            &self.distributions[a],
            &self.trees[b].to_string(),
            &self.distributions[b],
        )
        .expect("all trees share n")
    }

    pub fn to_record(&self) -> OrderRecord {
        OrderRecord {
            n: self.n,
            model: self.model,
            trees: self
                .trees
                .iter()
                .enumerate()
                .map(|(index, t)| OrderEntry {
                    index,
                    tree: t.to_edge_list(),
                    dominated_by: self.dominators(index),
                })
                .collect(),
        }
    }
}

/// JSON layout of a [`DominationOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRecord {
    pub n: usize,
    pub model: WalkModel,
    pub trees: Vec<OrderEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderEntry {
    pub index: usize,
    pub tree: String,
    /// Indices of trees whose every tail is at least this tree's.
    pub dominated_by: Vec<usize>,
}

/// Full pairwise dominance matrix over all trees on `n` vertices.
pub fn pairwise_domination_order(
    n: usize,
    model: WalkModel,
    exec: Execution,
) -> Result<DominationOrder> {
    let trees: Vec<Tree> = generate_free_trees(n)?.collect();
    let distributions = exec.map(&trees, |t| range_distribution(t, model));
    let dominated = exec.map_range(trees.len(), |a| {
        distributions
            .iter()
            .map(|right| is_dominated(&distributions[a], right))
            .collect()
    });
    Ok(DominationOrder {
        n,
        model,
        trees,
        distributions,
        dominated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_lazy_scan_is_clean() {
        let result =
            scan_against_path(6, WalkModel::Lazy, TreeFamily::All, Execution::Sequential).unwrap();
        assert_eq!(result.trees_checked, 6);
        assert!(result.is_clean());
        assert_eq!(
            result.summary(),
            "n=6 model=lazy family=all: 6 trees checked, 0 violations"
        );
    }

    #[test]
    fn spider_filter() {
        // On 6 vertices only the two-branch tree is not a spider.
        let result = scan_against_path(
            6,
            WalkModel::Standard,
            TreeFamily::Spiders,
            Execution::Sequential,
        )
        .unwrap();
        assert_eq!(result.trees_checked, 5);
        assert!(result.is_clean());
    }

    #[test]
    fn order_on_four_vertices_is_a_chain() {
        let order =
            pairwise_domination_order(4, WalkModel::Standard, Execution::Sequential).unwrap();
        assert_eq!(order.len(), 2);
        assert!(order.is_chain());
        let star = order.index_of(&"0 1\n0 2\n0 3".parse().unwrap()).unwrap();
        let path = order.index_of(&"0 1\n1 2\n2 3".parse().unwrap()).unwrap();
        assert!(order.is_dominated(star, path));
        assert!(!order.is_dominated(path, star));
        assert_eq!(order.dominators(path), vec![path]);
    }

    #[test]
    fn order_on_two_vertices() {
        let order = pairwise_domination_order(2, WalkModel::Lazy, Execution::Sequential).unwrap();
        assert_eq!(order.len(), 1);
        assert_eq!(order.dominators(0), vec![0]);
    }

    #[test]
    fn execution_modes_agree() {
        let seq = scan_against_path(
            8,
            WalkModel::Standard,
            TreeFamily::All,
            Execution::Sequential,
        )
        .unwrap();
        let par = scan_against_path(8, WalkModel::Standard, TreeFamily::All, Execution::Parallel)
            .unwrap();
        assert_eq!(seq, par);
    }
}
