//! Brute-force oracles. Nothing here calls the dynamic programs under test.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use giraw::{Tree, WalkModel};
use num_bigint::BigUint;

/// Adjacency lists built straight from the edge list.
fn adjacency(tree: &Tree) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); tree.n()];
    for &(u, v) in tree.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Parent-before-child order from vertex 0, with each vertex's parent.
fn orientation(tree: &Tree) -> Vec<(usize, usize)> {
    let adj = adjacency(tree);
    let mut seen = vec![false; tree.n()];
    seen[0] = true;
    let mut stack = vec![0];
    let mut out = Vec::new();
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                out.push((u, w));
                stack.push(w);
            }
        }
    }
    out
}

/// Every walk with `f(0) = 0`, as label vectors, in step-odometer order.
pub fn all_walks(tree: &Tree, model: WalkModel) -> Vec<Vec<i64>> {
    let steps = model.steps();
    let order = orientation(tree);
    let edges = order.len();
    let total = steps.len().pow(edges as u32);
    let mut walks = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut labels = vec![0i64; tree.n()];
        for &(parent, child) in &order {
            labels[child] = labels[parent] + steps[code % steps.len()];
            code /= steps.len();
        }
        walks.push(labels);
    }
    walks
}

pub fn range_of(labels: &[i64]) -> usize {
    (labels.iter().max().unwrap() - labels.iter().min().unwrap()) as usize
}

/// Walk counts per range.
pub fn brute_range_counts(tree: &Tree, model: WalkModel) -> BTreeMap<usize, u64> {
    let mut counts = BTreeMap::new();
    for walk in all_walks(tree, model) {
        *counts.entry(range_of(&walk)).or_insert(0) += 1;
    }
    counts
}

/// Labelings in `0..=k`: each walk of range `r` fits in `k + 1 - r` shifts.
pub fn brute_bounded(tree: &Tree, k: usize, model: WalkModel) -> BigUint {
    all_walks(tree, model)
        .iter()
        .map(|w| (k + 1).saturating_sub(range_of(w)) as u64)
        .sum::<u64>()
        .into()
}

/// Translation classes with range at most `k`.
pub fn brute_classes(tree: &Tree, k: usize, model: WalkModel) -> BigUint {
    (all_walks(tree, model)
        .iter()
        .filter(|w| range_of(w) <= k)
        .count() as u64)
        .into()
}

/// Labelings in `0..=k` with `root` labeled `i`, by scanning every vector in
/// `[0, k]^n`.
pub fn brute_profile(tree: &Tree, root: usize, k: usize, model: WalkModel) -> Vec<u64> {
    let n = tree.n();
    let mut counts = vec![0u64; k + 1];
    let base = k + 1;
    let total = base.pow(n as u32);
    'outer: for mut code in 0..total {
        let mut labels = vec![0i64; n];
        for slot in labels.iter_mut() {
            *slot = (code % base) as i64;
            code /= base;
        }
        for &(u, v) in tree.edges() {
            if !model.steps().contains(&(labels[u] - labels[v])) {
                continue 'outer;
            }
        }
        counts[labels[root] as usize] += 1;
    }
    counts
}

/// Decodes a Prüfer sequence into the labeled tree on `seq.len() + 2` vertices.
pub fn prufer_decode(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::from_edges(n, edges).unwrap()
}

/// All labeled trees on `n` vertices.
pub fn all_labeled_trees(n: usize) -> Vec<Tree> {
    match n {
        1 => return vec![Tree::singleton()],
        2 => return vec![Tree::from_edges(2, vec![(0, 1)]).unwrap()],
        _ => {}
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let x = code % n;
                    code /= n;
                    x
                })
                .collect();
            prufer_decode(&seq)
        })
        .collect()
}

/// Minimum over all roots of the sorted-children parenthesis encoding; a
/// complete isomorphism invariant computed without finding centers.
pub fn min_rooted_code(tree: &Tree) -> String {
    let adj = adjacency(tree);
    fn encode(adj: &[Vec<usize>], v: usize, parent: Option<usize>) -> String {
        let mut parts: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| Some(w) != parent)
            .map(|&w| encode(adj, w, Some(v)))
            .collect();
        parts.sort();
        format!("({})", parts.concat())
    }
    (0..tree.n()).map(|r| encode(&adj, r, None)).min().unwrap()
}

/// Number of isomorphism classes of trees on `n` vertices, by classifying
/// every labeled tree.
pub fn count_free_trees_by_prufer(n: usize) -> usize {
    all_labeled_trees(n)
        .iter()
        .map(min_rooted_code)
        .collect::<HashSet<_>>()
        .len()
}

/// Uniform random labeled tree from a seeded Prüfer sequence.
pub fn random_tree<R: rand::Rng>(n: usize, rng: &mut R) -> Tree {
    match n {
        1 => Tree::singleton(),
        2 => Tree::from_edges(2, vec![(0, 1)]).unwrap(),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            prufer_decode(&seq)
        }
    }
}
