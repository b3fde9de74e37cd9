//! Seeded graph generators: uniform random G(n, L), preferential attachment,
//! and a configuration model with power-law degrees.
//!
//! All generators use ChaCha8 seeded from a `u64`, so output is identical
//! across platforms for a given seed.

use std::collections::HashSet;

use rand::seq::{index, SliceRandom};
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::metrics::rng;

/// Model and parameters for one generated graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenSpec {
    Er { n: usize, links: usize },
    Ba { n: usize, m: usize },
    PowerLawConfig { n: usize, gamma: f64, kmin: usize },
}

impl GenSpec {
    pub fn generate(&self, seed: u64) -> Result<Graph> {
        match *self {
            GenSpec::Er { n, links } => gen_er(n, links, seed),
            GenSpec::Ba { n, m } => gen_ba(n, m, seed),
            GenSpec::PowerLawConfig { n, gamma, kmin } => gen_powerlaw_config(n, gamma, kmin, seed),
        }
    }
}

/// Exactly `links` distinct edges drawn uniformly from all node pairs.
pub fn gen_er(n: usize, links: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidSpec("er needs at least 2 nodes".into()));
    }
    let possible = n * (n - 1) / 2;
    if links > possible {
        return Err(Error::InvalidSpec(format!(
            "{links} links exceed the {possible} possible on {n} nodes"
        )));
    }
    let picked = index::sample(&mut rng(seed), possible, links);
    let edges: Vec<(NodeId, NodeId)> = picked.into_iter().map(|i| pair_from_index(i, n)).collect();
    Graph::from_edges(n, &edges)
}

/// Maps 0..n(n-1)/2 onto pairs (u, v), u < v, in row-major order.
fn pair_from_index(idx: usize, n: usize) -> (NodeId, NodeId) {
    // Row u starts at offset(u) = u*n - u(u+1)/2.
    let offset = |u: usize| u * n - u * (u + 1) / 2;
    let nf = n as f64;
    let guess = ((2.0 * nf - 1.0 - ((2.0 * nf - 1.0).powi(2) - 8.0 * idx as f64).max(0.0).sqrt()) / 2.0) as usize;
    let mut u = guess.min(n - 2);
    while u > 0 && offset(u) > idx {
        u -= 1;
    }
    while u + 1 < n - 1 && offset(u + 1) <= idx {
        u += 1;
    }
    (u, u + 1 + idx - offset(u))
}

/// Preferential attachment grown from a clique on `m + 1` nodes.
///
/// Each new node picks `m` distinct targets with probability proportional
/// to current degree, redrawing on repeats.
pub fn gen_ba(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if m < 1 || m >= n {
        return Err(Error::InvalidSpec(format!("ba needs 1 <= m < n (got m={m}, n={n})")));
    }
    let mut rng = rng(seed);
    let mut edges = Vec::with_capacity(m * (m + 1) / 2 + m * (n - m - 1));
    // Every edge endpoint, so a uniform pick is degree-proportional.
    let mut endpoints: Vec<NodeId> = Vec::with_capacity(2 * edges.capacity());
    for u in 0..=m {
        for v in u + 1..=m {
            edges.push((u, v));
            endpoints.extend([u, v]);
        }
    }
    let mut targets = Vec::with_capacity(m);
    for v in m + 1..n {
        targets.clear();
        while targets.len() < m {
            let t = endpoints[rng.gen_range(0..endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((t, v));
            endpoints.extend([t, v]);
        }
    }
    Graph::from_edges(n, &edges)
}

/// Discrete power law P(k) proportional to k^-gamma on `kmin..=kmax`,
/// sampled by inverting a cumulative table.
#[derive(Debug, Clone)]
pub struct PowerLawDegrees {
    kmin: usize,
    cumulative: Vec<f64>,
}

impl PowerLawDegrees {
    pub fn new(gamma: f64, kmin: usize, kmax: usize) -> Result<Self> {
        if gamma.is_nan() || gamma <= 1.0 || kmin < 1 || kmax < kmin {
            return Err(Error::InvalidSpec(format!(
                "power law needs gamma > 1 and 1 <= kmin <= kmax (got gamma={gamma}, kmin={kmin}, kmax={kmax})"
            )));
        }
        let mut acc = 0.0;
        let mut cumulative: Vec<f64> = (kmin..=kmax)
            .map(|k| {
                acc += (k as f64 / kmin as f64).powf(-gamma);
                acc
            })
            .collect();
        let total = acc;
        for c in &mut cumulative {
            *c /= total;
        }
        Ok(Self { kmin, cumulative })
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.gen();
        let i = self.cumulative.partition_point(|&c| c <= u);
        self.kmin + i.min(self.cumulative.len() - 1)
    }
}

/// Outcome of configuration-model stub matching.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigModel {
    pub graph: Graph,
    /// Sampled degree sequence after the parity fix.
    pub target_degrees: Vec<usize>,
    /// Stubs left unmatched after the final reshuffle pass.
    pub erased_stubs: usize,
    pub reshuffle_passes: usize,
}

/// Maximum number of times conflicting stubs are reshuffled before the
/// remainder is erased.
pub const MAX_RESHUFFLE_PASSES: usize = 100;

pub fn gen_powerlaw_config(n: usize, gamma: f64, kmin: usize, seed: u64) -> Result<Graph> {
    powerlaw_config_model(n, gamma, kmin, seed).map(|c| c.graph)
}

pub fn powerlaw_config_model(n: usize, gamma: f64, kmin: usize, seed: u64) -> Result<ConfigModel> {
    if n < 2 {
        return Err(Error::InvalidSpec("plconfig needs at least 2 nodes".into()));
    }
    if kmin > n - 1 {
        return Err(Error::InvalidSpec(format!("kmin {kmin} exceeds n-1 = {}", n - 1)));
    }
    let law = PowerLawDegrees::new(gamma, kmin, n - 1)?;
    let mut rng = rng(seed);
    let mut degrees: Vec<usize> = (0..n).map(|_| law.sample(&mut rng)).collect();
    if degrees.iter().sum::<usize>() % 2 == 1 {
        *degrees.last_mut().unwrap() += 1;
    }
    let mut stubs: Vec<NodeId> = Vec::with_capacity(degrees.iter().sum());
    for (v, &d) in degrees.iter().enumerate() {
        stubs.extend(std::iter::repeat_n(v, d));
    }
    stubs.shuffle(&mut rng);

    let mut seen: HashSet<(NodeId, NodeId)> = HashSet::with_capacity(stubs.len() / 2);
    let mut edges = Vec::with_capacity(stubs.len() / 2);
    let mut pending = stubs;
    let mut passes = 0;
    loop {
        let mut conflicts = Vec::new();
        for pair in pending.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                conflicts.extend([u, v]);
            } else {
                edges.push((u, v));
            }
        }
        pending = conflicts;
        if pending.is_empty() || passes == MAX_RESHUFFLE_PASSES {
            break;
        }
        passes += 1;
        pending.shuffle(&mut rng);
    }
    if !pending.is_empty() {
        log::debug!("configuration model erased {} stub(s)", pending.len());
    }
    Ok(ConfigModel {
        graph: Graph::from_edges(n, &edges)?,
        target_degrees: degrees,
        erased_stubs: pending.len(),
        reshuffle_passes: passes,
    })
}
