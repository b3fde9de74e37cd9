use std::collections::{BTreeMap, VecDeque};

use rand::seq::index;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHED};
use crate::io::Series;

/// How many BFS sources a path statistic uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathPolicy {
    /// Every node is a source; each unordered pair is counted once.
    Exact,
    /// `count` sources drawn uniformly without replacement; every
    /// (source, other node) pair is counted. Falls back to `Exact` when
    /// `count` covers all candidate sources.
    Sample { count: usize, seed: u64 },
}

impl PathPolicy {
    /// The CLI default: exact up to `exact_limit` nodes, otherwise sample.
    pub fn auto(node_count: usize, exact_limit: usize, samples: usize, seed: u64) -> Self {
        if node_count <= exact_limit {
            PathPolicy::Exact
        } else {
            PathPolicy::Sample { count: samples, seed }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathStats {
    pub mean: f64,
    /// Hop distance -> number of pairs, for distances >= 1.
    pub histogram: BTreeMap<u32, u64>,
    pub diameter: u32,
    pub sampled: bool,
    pub sources: usize,
    pub seed: Option<u64>,
}

impl PathStats {
    pub fn pair_count(&self) -> u64 {
        self.histogram.values().sum()
    }

    pub fn series(&self) -> Series {
        histogram_series("pathhist", &self.histogram)
    }
}

pub(crate) fn histogram_series(name: &str, hist: &BTreeMap<u32, u64>) -> Series {
    let mut s = Series::new(name, &["d", "pairs"]);
    for (&d, &c) in hist {
        s.push(vec![d.into(), c.into()]);
    }
    s
}

/// Histogram-weighted mean, summed in integers so it is independent of
/// accumulation order.
pub(crate) fn histogram_mean(hist: &BTreeMap<u32, u64>) -> f64 {
    let (mut weighted, mut total) = (0u128, 0u128);
    for (&d, &c) in hist {
        weighted += d as u128 * c as u128;
        total += c as u128;
    }
    weighted as f64 / total as f64
}

pub(crate) fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// `count` distinct indices from `0..population`, seeded. Returned sorted.
pub(crate) fn sample_indices(population: usize, count: usize, seed: u64) -> Vec<usize> {
    let mut picked = index::sample(&mut rng(seed), population, count.min(population)).into_vec();
    picked.sort_unstable();
    picked
}

pub fn shortest_path_stats(g: &Graph, policy: PathPolicy) -> Result<PathStats> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::Degenerate("path statistics need at least two nodes".into()));
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let (sources, all_pairs, seed) = match policy {
        PathPolicy::Sample { count, seed } if count < n => {
            if count == 0 {
                return Err(Error::Degenerate("sample count must be at least 1".into()));
            }
            (sample_indices(n, count, seed), false, Some(seed))
        }
        _ => ((0..n).collect(), true, None),
    };

    let counts = sources
        .par_iter()
        .map_init(
            || (vec![UNREACHED; n], VecDeque::new()),
            |(dist, queue), &s| {
                g.bfs_into(s, dist, queue);
                let mut local = Vec::new();
                let first = if all_pairs { s + 1 } else { 0 };
                for (t, &d) in dist.iter().enumerate().skip(first) {
                    if t == s {
                        continue;
                    }
                    let d = d as usize;
                    if local.len() <= d {
                        local.resize(d + 1, 0u64);
                    }
                    local[d] += 1;
                }
                local
            },
        )
        .reduce(Vec::new, merge_counts);

    let histogram: BTreeMap<u32, u64> = counts
        .iter()
        .enumerate()
        .filter(|&(d, &c)| d > 0 && c > 0)
        .map(|(d, &c)| (d as u32, c))
        .collect();
    Ok(PathStats {
        mean: histogram_mean(&histogram),
        diameter: histogram.keys().next_back().copied().unwrap_or(0),
        histogram,
        sampled: !all_pairs,
        sources: sources.len(),
        seed,
    })
}

pub(crate) fn merge_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}
