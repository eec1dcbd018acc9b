//! Exhaustive generation of free trees, one per isomorphism class.
//!
//! Trees are produced as canonical level sequences rooted at a center, in the
//! order of the Wright–Richmond–Odlyzko–McKay successor: a Beyer–Hedetniemi
//! rooted-tree step, plus a jump that skips rooted sequences whose first
//! subtree is not the tallest (those are not center-rooted canonical forms).

use crate::error::{Error, Result};
use crate::tree::{LevelSequence, Tree};

/// Largest vertex count [`generate_free_trees`] accepts.
pub const MAX_GENERATED_N: usize = 32;

/// Streams every free tree on `n` vertices exactly once.
pub fn generate_free_trees(n: usize) -> Result<FreeTrees> {
    if n == 0 || n > MAX_GENERATED_N {
        return Err(Error::UnsupportedSize {
            n,
            max: MAX_GENERATED_N,
        });
    }
    Ok(FreeTrees::new(n))
}

/// Iterator returned by [`generate_free_trees`].
#[derive(Debug, Clone)]
pub struct FreeTrees {
    state: State,
}

#[derive(Debug, Clone)]
enum State {
    Single,
    Layout(Vec<usize>),
    Done,
}

impl FreeTrees {
    fn new(n: usize) -> Self {
        let state = if n == 1 {
            State::Single
        } else {
            // The path rooted at its center.
            let layout = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
            State::Layout(layout)
        };
        Self { state }
    }

    /// Next canonical level sequence, without building the tree.
    pub fn next_sequence(&mut self) -> Option<LevelSequence> {
        match std::mem::replace(&mut self.state, State::Done) {
            State::Done => None,
            State::Single => Some(LevelSequence::from_raw(vec![0])),
            State::Layout(candidate) => {
                let layout = next_free_candidate(candidate)?;
                if let Some(successor) = next_rooted_tree(&layout, None) {
                    self.state = State::Layout(successor);
                }
                Some(LevelSequence::from_raw(layout))
            }
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        self.next_sequence()
            .map(|seq| seq.to_rooted_tree().into_tree())
    }
}

/// One Beyer–Hedetniemi step: the next rooted level sequence in reverse
/// lexicographic order, or `None` after the star.
fn next_rooted_tree(layout: &[usize], start: Option<usize>) -> Option<Vec<usize>> {
    let p = match start {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while layout[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while layout[q] + 1 != layout[p] {
        q -= 1;
    }
    let mut result = layout.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// Splits off the first subtree of the root: returns its depths (shifted up
/// one level) and the remaining tree.
fn split_first_subtree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let end = layout
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &d)| d == 1)
        .map(|(i, _)| i)
        .unwrap_or(layout.len());
    let left = layout[1..end].iter().map(|d| d - 1).collect();
    let rest = std::iter::once(0)
        .chain(layout[end..].iter().copied())
        .collect();
    (left, rest)
}

/// Accepts `candidate` if it is a center-rooted canonical sequence, otherwise
/// jumps to the next one.
fn next_free_candidate(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_first_subtree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let valid = match rest_height.cmp(&left_height) {
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Equal => {
            left.len() < rest.len() || (left.len() == rest.len() && left <= rest)
        }
    };
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut jumped = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_first_subtree(&jumped);
        let height = new_left.iter().copied().max().unwrap_or(0);
        let len = jumped.len();
        for (slot, depth) in jumped[len - height - 1..].iter_mut().zip(1..) {
            *slot = depth;
        }
    }
    Some(jumped)
}
