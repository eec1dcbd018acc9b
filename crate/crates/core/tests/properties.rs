mod common;

use giraw::analysis::compare_range;
use giraw::counting::RangeDistributionRecord;
use giraw::{
    count_bounded, make_path, make_spider, parse_tree, profile, range_distribution, reroot,
    transfer, RangeDistribution, SpiderSpec, Tree, WalkModel,
};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn model_strategy() -> impl Strategy<Value = WalkModel> {
    prop_oneof![Just(WalkModel::Standard), Just(WalkModel::Lazy)]
}

/// A uniform labeled tree on `2..=max_n` vertices.
fn tree_strategy(max_n: usize) -> impl Strategy<Value = Tree> {
    (2..=max_n, any::<u64>())
        .prop_map(|(n, seed)| common::random_tree(n, &mut ChaCha8Rng::seed_from_u64(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn bounded_count_does_not_depend_on_root(tree in tree_strategy(9), k in 0usize..8, m in model_strategy()) {
        let expected = count_bounded(&tree, k, m);
        for root in 0..tree.n() {
            let rooted = reroot(&tree, root).unwrap();
            prop_assert_eq!(profile(&rooted, k, m).total(), expected.clone());
        }
    }

    #[test]
    fn profiles_are_symmetric(tree in tree_strategy(9), root in 0usize..9, k in 0usize..8, m in model_strategy()) {
        let rooted = reroot(&tree, root % tree.n()).unwrap();
        let counts = profile(&rooted, k, m).counts().to_vec();
        let mut reversed = counts.clone();
        reversed.reverse();
        prop_assert_eq!(counts, reversed);
    }

    #[test]
    fn profile_matches_brute_force(tree in tree_strategy(6), root in 0usize..6, k in 0usize..4, m in model_strategy()) {
        let root = root % tree.n();
        let ours: Vec<BigUint> = profile(&reroot(&tree, root).unwrap(), k, m).counts().to_vec();
        let brute: Vec<BigUint> = common::brute_profile(&tree, root, k, m).into_iter().map(BigUint::from).collect();
        prop_assert_eq!(ours, brute);
    }

    #[test]
    fn path_profile_grows_by_at_most_the_step_count(a in 1usize..10, k in 0usize..10, m in model_strategy()) {
        let longer = profile(&make_path(a), k, m);
        let shorter = profile(&make_path(a - 1), k, m);
        let factor = BigUint::from(m.choices());
        for i in 0..=k {
            prop_assert!(longer.counts()[i] <= &shorter.counts()[i] * &factor);
        }
    }

    #[test]
    fn bounded_counts_grow_and_saturate(tree in tree_strategy(9), m in model_strategy()) {
        let diameter = tree.diameter();
        let mut prev = BigUint::default();
        let mut prev_classes = BigUint::default();
        for k in 0..=diameter + 2 {
            let bounded = count_bounded(&tree, k, m);
            prop_assert!(bounded >= prev);
            let classes = &bounded - &prev;
            prop_assert!(classes >= prev_classes);
            if k >= diameter {
                prop_assert_eq!(classes.clone(), m.walk_count(tree.n()));
            }
            prev = bounded;
            prev_classes = classes;
        }
    }

    #[test]
    fn transfer_rows_sum_to_path_profile(a in 0usize..8, k in 0usize..8, m in model_strategy()) {
        let table = transfer(a, k, m);
        let path = profile(&make_path(a), k, m);
        for i in 0..=k {
            prop_assert_eq!(table.row_sum(i), path.counts()[i].clone());
            for j in 0..=k {
                prop_assert_eq!(table.get(i as i64, j as i64), table.get(j as i64, i as i64));
            }
        }
    }

    #[test]
    fn spider_profile_is_product_of_legs(legs in prop::collection::vec(1usize..5, 1..4), k in 0usize..7, m in model_strategy()) {
        let spec = SpiderSpec::new(legs.clone()).unwrap();
        let spider = profile(&make_spider(&spec), k, m);
        for i in 0..=k {
            let product: BigUint = legs
                .iter()
                .map(|&a| profile(&make_path(a), k, m).counts()[i].clone())
                .product();
            prop_assert_eq!(spider.counts()[i].clone(), product);
        }
    }

    #[test]
    fn edge_lists_round_trip(tree in tree_strategy(12)) {
        let parsed = parse_tree(&tree.to_edge_list()).unwrap();
        prop_assert_eq!(&parsed, &tree);
        prop_assert_eq!(parsed.canonical_form(), tree.canonical_form());
    }

    #[test]
    fn distribution_json_round_trips(tree in tree_strategy(9), m in model_strategy()) {
        let dist = range_distribution(&tree, m);
        let json = serde_json::to_string(&dist).unwrap();
        let back: RangeDistribution = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &dist);
        let record = RangeDistributionRecord::from(dist);
        prop_assert_eq!(record.tail.get(&0).cloned(), Some(format!("{}/{}", record.denominator, record.denominator)));
    }

    #[test]
    fn comparison_ignores_vertex_labels(a in tree_strategy(8), seed in any::<u64>(), m in model_strategy()) {
        let n = a.n();
        let b = common::random_tree(n, &mut ChaCha8Rng::seed_from_u64(seed));
        let mut perm: Vec<usize> = (0..n).rev().collect();
        perm.rotate_left((seed % n as u64) as usize);
        let relabeled = b.relabeled(&perm).unwrap();
        let direct = compare_range(&a, &b, m).unwrap();
        let permuted = compare_range(&a, &relabeled, m).unwrap();
        prop_assert_eq!(direct.verdict, permuted.verdict);
        prop_assert_eq!(direct.strict_at, permuted.strict_at);
    }
}

#[test]
fn tampered_records_are_rejected() {
    let dist = range_distribution(&make_path(3).into_tree(), WalkModel::Standard);
    let mut json: serde_json::Value = serde_json::to_value(&dist).unwrap();
    json["class_counts"]["1"] = "3".into();
    assert!(serde_json::from_value::<RangeDistribution>(json).is_err());
}
