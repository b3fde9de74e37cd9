//! Node- and link-removal experiments on a fixed graph.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::io::{Cell, Series};
use crate::metrics::{rng, sample_indices, shortest_path_stats, PathPolicy};

/// Default number of BFS sources for mean-path estimates inside experiments.
pub const DEFAULT_SAMPLE_SOURCES: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemovalStrategy {
    /// Highest original degree first, ties by ascending id.
    TargetedDegree,
    /// A seeded uniform permutation; larger fractions extend smaller ones.
    Random,
}

impl FromStr for RemovalStrategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "targeted" | "targeted-degree" => Ok(RemovalStrategy::TargetedDegree),
            "random" => Ok(RemovalStrategy::Random),
            other => Err(format!("unknown strategy `{other}` (expected targeted or random)")),
        }
    }
}

impl fmt::Display for RemovalStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RemovalStrategy::TargetedDegree => "targeted-degree",
            RemovalStrategy::Random => "random",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RemovalPlan {
    pub strategy: RemovalStrategy,
    fractions: Vec<f64>,
    pub seed: u64,
    pub sample_sources: usize,
}

impl RemovalPlan {
    /// Fractions must be strictly ascending and each in [0, 1).
    pub fn new(strategy: RemovalStrategy, fractions: Vec<f64>, seed: u64) -> Result<Self> {
        validate_fractions(&fractions)?;
        Ok(Self {
            strategy,
            fractions,
            seed,
            sample_sources: DEFAULT_SAMPLE_SOURCES,
        })
    }

    pub fn with_sample_sources(mut self, sources: usize) -> Self {
        self.sample_sources = sources.max(1);
        self
    }

    pub fn fractions(&self) -> &[f64] {
        &self.fractions
    }
}

pub fn validate_fractions(fractions: &[f64]) -> Result<()> {
    if fractions.is_empty() {
        return Err(Error::InvalidPlan("no removal fractions given".into()));
    }
    if let Some(f) = fractions.iter().find(|f| !(0.0..1.0).contains(*f)) {
        return Err(Error::InvalidPlan(format!("fraction {f} is outside [0, 1)")));
    }
    if fractions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidPlan("fractions must be strictly ascending".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResiliencePoint {
    pub fraction: f64,
    pub removed: usize,
    pub remaining: usize,
    pub giant_nodes: usize,
    /// Giant component size over remaining nodes.
    pub giant_share: f64,
    /// Mean shortest path on the remaining giant component; `None` if it
    /// has fewer than two nodes.
    pub mean_path: Option<f64>,
}

/// Nodes removed for `fraction`: ceil(fraction * N), kept below N so at
/// least one node survives. The epsilon absorbs float error in the product.
fn removal_count(fraction: f64, n: usize) -> usize {
    let c = (fraction * n as f64 - 1e-9).ceil().max(0.0) as usize;
    c.min(n - 1)
}

fn removal_order(g: &Graph, strategy: RemovalStrategy, seed: u64) -> Vec<NodeId> {
    let mut order: Vec<NodeId> = (0..g.node_count()).collect();
    match strategy {
        RemovalStrategy::TargetedDegree => {
            let degrees = g.degrees();
            order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
        }
        RemovalStrategy::Random => order.shuffle(&mut rng(seed)),
    }
    order
}

pub fn node_removal_experiment(g: &Graph, plan: &RemovalPlan) -> Result<Vec<ResiliencePoint>> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::Degenerate("removal experiments need at least two nodes".into()));
    }
    let order = removal_order(g, plan.strategy, plan.seed);
    plan.fractions
        .iter()
        .enumerate()
        .map(|(i, &fraction)| {
            let removed = removal_count(fraction, n);
            let mut keep = vec![true; n];
            for &v in &order[..removed] {
                keep[v] = false;
            }
            let (rest, _) = g.induced_subgraph(&keep);
            let (giant, _) = rest.giant_component();
            let mean_path = giant_mean_path(&giant, plan.sample_sources, plan.seed.wrapping_add(i as u64))?;
            Ok(ResiliencePoint {
                fraction,
                removed,
                remaining: rest.node_count(),
                giant_nodes: giant.node_count(),
                giant_share: giant.node_count() as f64 / rest.node_count() as f64,
                mean_path,
            })
        })
        .collect()
}

fn giant_mean_path(giant: &Graph, sources: usize, seed: u64) -> Result<Option<f64>> {
    if giant.node_count() < 2 {
        return Ok(None);
    }
    let stats = shortest_path_stats(giant, PathPolicy::Sample { count: sources, seed })?;
    Ok(Some(stats.mean))
}

/// Series "attack" with `(fraction, strategy, giant_share, mean_path)`.
pub fn attack_series<'a, I>(runs: I) -> Series
where
    I: IntoIterator<Item = (RemovalStrategy, &'a [ResiliencePoint])>,
{
    let mut s = Series::new("attack", &["fraction", "strategy", "giant_share", "mean_path"]);
    for (strategy, points) in runs {
        for p in points {
            s.push(vec![
                p.fraction.into(),
                Cell::Text(strategy.to_string()),
                p.giant_share.into(),
                p.mean_path.into(),
            ]);
        }
    }
    s
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClubLinkRemoval {
    pub internal_links: usize,
    pub links_removed: usize,
    /// Every node of the original giant component is still in one component.
    pub connected: bool,
    pub mean_path_before: f64,
    /// Mean path on the giant component after removal; `None` if it has
    /// fewer than two nodes.
    pub mean_path_after: Option<f64>,
}

impl ClubLinkRemoval {
    /// Relative increase of the mean path, `after / before - 1`.
    pub fn inflation(&self) -> Option<f64> {
        self.mean_path_after.map(|a| a / self.mean_path_before - 1.0)
    }
}

/// Remove ceil(fraction * E) uniformly chosen links among `members` and
/// measure the effect on connectivity and mean path length.
pub fn club_link_removal_experiment(
    g: &Graph,
    members: &[NodeId],
    remove_fraction: f64,
    seed: u64,
    sample_sources: usize,
) -> Result<ClubLinkRemoval> {
    if !(remove_fraction > 0.0 && remove_fraction < 1.0) {
        return Err(Error::InvalidPlan(format!(
            "remove fraction {remove_fraction} is outside (0, 1)"
        )));
    }
    let mut club = vec![false; g.node_count()];
    for &m in members {
        g.check_node(m)?;
        club[m] = true;
    }
    let internal: Vec<(NodeId, NodeId)> = g.edges().filter(|&(u, v)| club[u] && club[v]).collect();
    if internal.is_empty() {
        return Err(Error::Degenerate("club has no internal links".into()));
    }
    let count = ((remove_fraction * internal.len() as f64 - 1e-9).ceil() as usize).clamp(1, internal.len());
    let removed: Vec<(NodeId, NodeId)> = sample_indices(internal.len(), count, seed)
        .into_iter()
        .map(|i| internal[i])
        .collect();

    let before_comps = g.components();
    let (giant_before, _) = g.giant_component();
    let mean_path_before = giant_mean_path(&giant_before, sample_sources, seed)?
        .ok_or_else(|| Error::Degenerate("giant component has fewer than two nodes".into()))?;

    let after = g.without_edges(&removed);
    let after_comps = after.components();
    let giant_nodes: Vec<NodeId> = (0..g.node_count())
        .filter(|&v| before_comps.component[v] == 0)
        .collect();
    let first = after_comps.component[giant_nodes[0]];
    let connected = giant_nodes.iter().all(|&v| after_comps.component[v] == first);
    let (giant_after, _) = after.giant_component();
    let mean_path_after = giant_mean_path(&giant_after, sample_sources, seed)?;

    Ok(ClubLinkRemoval {
        internal_links: internal.len(),
        links_removed: removed.len(),
        connected,
        mean_path_before,
        mean_path_after,
    })
}
