//! Uniform sampling of walks on a tree and Monte Carlo estimates checked
//! against the exact values.
//!
//! A walk on a tree with `f(root) = 0` is a free choice of one step per edge,
//! so drawing each edge's step independently and uniformly along a top-down
//! order is exactly uniform.
//!
//! Draw number `d` for a given seed always comes from the ChaCha8 stream
//! `d / CHUNK` of that seed, so parallel estimates see the same walks as a
//! sequential [`WalkSampler`].

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::counting::{endpoint_difference_distribution, range_distribution, WalkModel};
use crate::error::Result;
use crate::exec::Execution;
use crate::tree::{reroot, RootedTree, Tree};

/// Draws per generator stream.
pub const CHUNK: u64 = 1 << 14;

/// One uniformly drawn walk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkSample {
    pub labels: Vec<i64>,
    pub model: WalkModel,
    pub root: usize,
    pub seed: u64,
    pub draw: u64,
}

impl WalkSample {
    pub fn range(&self) -> i64 {
        label_range(&self.labels)
    }
}

fn label_range(labels: &[i64]) -> i64 {
    let max = labels.iter().max().copied().unwrap_or(0);
    let min = labels.iter().min().copied().unwrap_or(0);
    max - min
}

/// Fills `labels` with a uniform walk on `tree` that is zero at the root.
pub fn sample_walk_into<R: Rng + ?Sized>(
    tree: &RootedTree,
    model: WalkModel,
    rng: &mut R,
    labels: &mut Vec<i64>,
) {
    let steps = model.steps();
    labels.clear();
    labels.resize(tree.n(), 0);
    for &v in &tree.top_down()[1..] {
        let parent = tree.parent(v).expect("non-root vertex");
        labels[v] = labels[parent] + steps[rng.random_range(0..steps.len())];
    }
}

/// A uniform walk on `tree` with `f(root) = 0`.
pub fn sample_walk<R: Rng + ?Sized>(tree: &RootedTree, model: WalkModel, rng: &mut R) -> Vec<i64> {
    let mut labels = Vec::with_capacity(tree.n());
    sample_walk_into(tree, model, rng, &mut labels);
    labels
}

fn stream(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

/// Reproducible sequence of walks for one seed.
#[derive(Debug, Clone)]
pub struct WalkSampler {
    tree: RootedTree,
    model: WalkModel,
    seed: u64,
    draw: u64,
    rng: ChaCha8Rng,
}

impl WalkSampler {
    pub fn new(tree: RootedTree, model: WalkModel, seed: u64) -> Self {
        Self {
            tree,
            model,
            seed,
            draw: 0,
            rng: stream(seed, 0),
        }
    }

    pub fn next_sample(&mut self) -> WalkSample {
        if self.draw > 0 && self.draw.is_multiple_of(CHUNK) {
            self.rng = stream(self.seed, self.draw / CHUNK);
        }
        let labels = sample_walk(&self.tree, self.model, &mut self.rng);
        let sample = WalkSample {
            labels,
            model: self.model,
            root: self.tree.root(),
            seed: self.seed,
            draw: self.draw,
        };
        self.draw += 1;
        sample
    }
}

impl Iterator for WalkSampler {
    type Item = WalkSample;

    fn next(&mut self) -> Option<WalkSample> {
        Some(self.next_sample())
    }
}

/// Monte Carlo mean of a statistic, with its exact value when known.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    pub statistic: String,
    pub model: WalkModel,
    pub samples: u64,
    pub seed: u64,
    pub estimate: f64,
    pub standard_error: f64,
    /// Exact value as `"num/den"` (reduced).
    pub exact: Option<String>,
    pub exact_decimal: Option<f64>,
    /// `|estimate - exact|`, present only with an exact value.
    pub deviation: Option<f64>,
}

impl EstimateReport {
    /// Deviation in units of the standard error.
    pub fn z_score(&self) -> Option<f64> {
        let deviation = self.deviation?;
        if self.standard_error > 0.0 {
            Some(deviation / self.standard_error)
        } else if deviation == 0.0 {
            Some(0.0)
        } else {
            Some(f64::INFINITY)
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    count: u64,
    sum: u128,
    sum_sq: u128,
}

impl Moments {
    fn merge(self, other: Self) -> Self {
        Self {
            count: self.count + other.count,
            sum: self.sum + other.sum,
            sum_sq: self.sum_sq + other.sum_sq,
        }
    }

    fn mean_and_error(&self) -> (f64, f64) {
        let n = self.count as f64;
        let mean = self.sum as f64 / n;
        if self.count < 2 {
            return (mean, 0.0);
        }
        let centered = self.sum_sq as f64 - (self.sum as f64) * mean;
        let variance = (centered / (n - 1.0)).max(0.0);
        (mean, (variance / n).sqrt())
    }
}

/// Runs `statistic` over draws `0..samples`, chunk by chunk.
fn simulate<F>(
    tree: &RootedTree,
    model: WalkModel,
    samples: u64,
    seed: u64,
    exec: Execution,
    statistic: F,
) -> Moments
where
    F: Fn(&[i64]) -> u64 + Sync + Send,
{
    let chunks = samples.div_ceil(CHUNK) as usize;
    exec.map_range(chunks, |c| {
        let mut rng = stream(seed, c as u64);
        let len = CHUNK.min(samples - c as u64 * CHUNK);
        let mut labels = Vec::with_capacity(tree.n());
        let mut moments = Moments::default();
        for _ in 0..len {
            sample_walk_into(tree, model, &mut rng, &mut labels);
            let x = statistic(&labels) as u128;
            moments.count += 1;
            moments.sum += x;
            moments.sum_sq += x * x;
        }
        moments
    })
    .into_iter()
    .fold(Moments::default(), Moments::merge)
}

fn report(
    statistic: String,
    model: WalkModel,
    seed: u64,
    moments: Moments,
    exact: Option<BigRational>,
) -> EstimateReport {
    let (estimate, standard_error) = moments.mean_and_error();
    let exact_decimal = exact.as_ref().and_then(ToPrimitive::to_f64);
    EstimateReport {
        statistic,
        model,
        samples: moments.count,
        seed,
        estimate,
        standard_error,
        exact: exact.map(|r| format!("{}/{}", r.numer(), r.denom())),
        exact_decimal,
        deviation: exact_decimal.map(|x| (estimate - x).abs()),
    }
}

/// Monte Carlo `E[Range]` with the exact expectation attached.
pub fn estimate_expected_range(
    tree: &Tree,
    model: WalkModel,
    samples: u64,
    seed: u64,
    exec: Execution,
) -> EstimateReport {
    let rooted = reroot(tree, 0).expect("every tree has vertex 0");
    let samples = samples.max(1);
    let moments = simulate(&rooted, model, samples, seed, exec, |labels| {
        label_range(labels) as u64
    });
    let exact = range_distribution(tree, model).expected_range();
    report("range".into(), model, seed, moments, Some(exact))
}

/// Monte Carlo `E|f(u) - f(v)|` with the exact expectation attached.
pub fn estimate_pair_distance(
    tree: &Tree,
    u: usize,
    v: usize,
    model: WalkModel,
    samples: u64,
    seed: u64,
    exec: Execution,
) -> Result<EstimateReport> {
    let exact = endpoint_difference_distribution(tree, u, v, model)?.expected_abs();
    let rooted = reroot(tree, 0)?;
    let samples = samples.max(1);
    let moments = simulate(&rooted, model, samples, seed, exec, |labels| {
        labels[u].abs_diff(labels[v])
    });
    Ok(report(
        format!("|f({u}) - f({v})|"),
        model,
        seed,
        moments,
        Some(exact),
    ))
}
