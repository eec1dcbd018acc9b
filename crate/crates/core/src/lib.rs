//! Exact range distributions of tree-indexed random walks.
//!
//! A walk on a tree labels every vertex with an integer so that adjacent
//! labels differ by exactly one ([`WalkModel::Standard`]) or by at most one
//! ([`WalkModel::Lazy`]). Walks are counted exactly with big integers: the
//! range distribution of a uniform walk, bounded-label counts, and the
//! path transfer tables that feed the dominance comparisons and identity
//! checks in [`analysis`].

pub mod analysis;
pub mod counting;
pub mod error;
pub mod exec;
pub mod generate;
pub mod sampler;
pub mod tree;

pub use counting::{
    count_bounded, endpoint_difference_distribution, f_start_count, profile, range_classes,
    range_distribution, transfer, CountProfile, DifferenceDistribution, RangeDistribution,
    TransferTable, WalkModel,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use generate::{generate_free_trees, FreeTrees, MAX_GENERATED_N};
pub use sampler::{
    estimate_expected_range, estimate_pair_distance, sample_walk, EstimateReport, WalkSample,
    WalkSampler,
};
pub use tree::{
    make_path, make_spider, parse_tree, reroot, LevelSequence, RootedTree, SpiderSpec, Tree,
};
