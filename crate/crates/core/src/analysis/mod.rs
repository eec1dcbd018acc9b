//! Dominance comparisons between trees, exhaustive scans against the path,
//! and the lemma lab.

pub mod dominance;
pub mod lemmas;
pub mod scan;

pub use dominance::{compare_distributions, compare_range, is_dominated, DominanceReport, Verdict};
pub use lemmas::{
    check_center_monotone, check_difference_monotone, check_spidersums, check_summand_comparison,
    run_lemma_suite, star_leaf_control, LemmaCheckResult, LemmaGrid, LemmaId,
};
pub use scan::{
    pairwise_domination_order, scan_against_path, DominationOrder, ScanResult, TreeFamily,
};
