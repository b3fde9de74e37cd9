//! Rich-club coefficient, club selection, and classification of shortest
//! paths between peripheral nodes by whether they transit the club.

use std::collections::{BTreeMap, VecDeque};
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, UNREACHED};
use crate::io::Series;
use crate::metrics::{histogram_mean, histogram_series, merge_counts, sample_indices, PathPolicy};

/// Graphs up to this size also get the optimistic (any shortest path)
/// transit fraction.
pub const OPTIMISTIC_LIMIT: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RichClubRow {
    pub k: usize,
    pub n_geq: usize,
    pub e_geq: usize,
    /// `None` when fewer than two nodes qualify.
    pub phi: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RichClubCurve {
    pub rows: Vec<RichClubRow>,
}

impl RichClubCurve {
    pub fn get(&self, k: usize) -> Option<&RichClubRow> {
        self.rows.binary_search_by_key(&k, |r| r.k).ok().map(|i| &self.rows[i])
    }

    pub fn series(&self) -> Series {
        let mut s = Series::new("richclub", &["k", "n_geq", "e_geq", "phi"]);
        for r in &self.rows {
            s.push(vec![r.k.into(), r.n_geq.into(), r.e_geq.into(), r.phi.into()]);
        }
        s
    }
}

/// phi(k) = 2 E(>=k) / (N(>=k) (N(>=k) - 1)) for every observed degree k.
pub fn rich_club_curve(g: &Graph) -> RichClubCurve {
    let degrees = g.degrees();
    let kmax = g.max_degree();
    let mut nodes_at = vec![0usize; kmax + 2];
    for &d in &degrees {
        nodes_at[d] += 1;
    }
    // An edge lies inside the club at k iff its smaller endpoint degree is >= k.
    let mut edges_at = vec![0usize; kmax + 2];
    for (u, v) in g.edges() {
        edges_at[degrees[u].min(degrees[v])] += 1;
    }
    let mut rows = Vec::new();
    let (mut n_geq, mut e_geq) = (0usize, 0usize);
    for k in (0..=kmax).rev() {
        n_geq += nodes_at[k];
        e_geq += edges_at[k];
        if nodes_at[k] == 0 {
            continue;
        }
        let phi = (n_geq > 1).then(|| 2.0 * e_geq as f64 / (n_geq as f64 * (n_geq - 1) as f64));
        rows.push(RichClubRow { k, n_geq, e_geq, phi });
    }
    rows.reverse();
    RichClubCurve { rows }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClubSelector {
    /// Every node with degree >= the threshold.
    MinDegree(usize),
    /// The `rank` highest-degree nodes; ties go to the lower id.
    TopRank(usize),
}

impl FromStr for ClubSelector {
    type Err = String;

    /// `top:<rank>` or `min-degree:<k>`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (mode, value) = s.split_once(':').ok_or_else(|| format!("bad club selector `{s}`"))?;
        let value: usize = value
            .parse()
            .map_err(|_| format!("bad club selector value `{value}`"))?;
        match mode {
            "top" => Ok(ClubSelector::TopRank(value)),
            "min-degree" => Ok(ClubSelector::MinDegree(value)),
            _ => Err(format!("unknown club selector mode `{mode}`")),
        }
    }
}

/// Club member ids, ascending.
pub fn club_members(g: &Graph, sel: ClubSelector) -> Result<Vec<NodeId>> {
    let degrees = g.degrees();
    match sel {
        ClubSelector::MinDegree(0) => Err(Error::InvalidSelector("degree threshold must be at least 1".into())),
        ClubSelector::MinDegree(k) => Ok((0..g.node_count()).filter(|&v| degrees[v] >= k).collect()),
        ClubSelector::TopRank(0) => Err(Error::InvalidSelector("rank must be at least 1".into())),
        ClubSelector::TopRank(r) if r > g.node_count() => Err(Error::InvalidSelector(format!(
            "rank {r} exceeds node count {}",
            g.node_count()
        ))),
        ClubSelector::TopRank(r) => {
            let mut order: Vec<NodeId> = (0..g.node_count()).collect();
            order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
            order.truncate(r);
            order.sort_unstable();
            Ok(order)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClubStats {
    pub size: usize,
    pub internal_links: usize,
    /// Internal links over the maximum possible, as in phi.
    pub density: f64,
    pub fully_connected: bool,
}

fn membership(g: &Graph, members: &[NodeId]) -> Result<Vec<bool>> {
    let mut mask = vec![false; g.node_count()];
    for &m in members {
        g.check_node(m)?;
        mask[m] = true;
    }
    Ok(mask)
}

pub fn club_subgraph_stats(g: &Graph, members: &[NodeId]) -> Result<ClubStats> {
    let mask = membership(g, members)?;
    let size = mask.iter().filter(|&&m| m).count();
    if size <= 1 {
        return Err(Error::Degenerate("club statistics need at least two members".into()));
    }
    let internal_links = (0..g.node_count())
        .filter(|&u| mask[u])
        .map(|u| g.neighbors(u).iter().filter(|&&v| v > u && mask[v]).count())
        .sum();
    let possible = size * (size - 1) / 2;
    Ok(ClubStats {
        size,
        internal_links,
        density: internal_links as f64 / possible as f64,
        fully_connected: internal_links == possible,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TransitReport {
    pub club_size: usize,
    pub peripheral_nodes: usize,
    pub pairs: u64,
    pub histogram: BTreeMap<u32, u64>,
    /// Pairs whose canonical shortest path has at least one interior node
    /// and every interior node in the club.
    pub interior_in_club: f64,
    /// Pairs following peripheral -> club (-> club) -> peripheral, length <= 3.
    pub strict_pattern: f64,
    /// Like `interior_in_club` but satisfied by any shortest path. Only
    /// computed for graphs with at most [`OPTIMISTIC_LIMIT`] nodes.
    pub optimistic_interior_in_club: Option<f64>,
    pub mean_hops: f64,
    pub sampled: bool,
    pub sources: usize,
    pub seed: Option<u64>,
}

impl TransitReport {
    pub fn series(&self) -> Series {
        histogram_series("transit", &self.histogram)
    }
}

#[derive(Default)]
struct TransitTally {
    hops: Vec<u64>,
    interior: u64,
    strict: u64,
    optimistic: u64,
}

impl TransitTally {
    fn merge(mut self, other: TransitTally) -> TransitTally {
        self.hops = merge_counts(self.hops, other.hops);
        self.interior += other.interior;
        self.strict += other.strict;
        self.optimistic += other.optimistic;
        self
    }
}

struct Scratch {
    dist: Vec<u32>,
    pred: Vec<NodeId>,
    /// Canonical path from the source to v runs through club nodes only
    /// (source excluded, v included).
    canon_club: Vec<bool>,
    /// Some shortest path from the source to v does.
    any_club: Vec<bool>,
    order: Vec<NodeId>,
    queue: VecDeque<NodeId>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Self {
            dist: vec![UNREACHED; n],
            pred: vec![NodeId::MAX; n],
            canon_club: vec![false; n],
            any_club: vec![false; n],
            order: Vec::with_capacity(n),
            queue: VecDeque::new(),
        }
    }
}

/// BFS from `s` recording the lowest-id predecessor of every node and the
/// club-only reachability flags.
fn transit_bfs(g: &Graph, club: &[bool], s: NodeId, optimistic: bool, sc: &mut Scratch) {
    sc.dist.fill(UNREACHED);
    sc.pred.fill(NodeId::MAX);
    sc.order.clear();
    sc.queue.clear();
    sc.dist[s] = 0;
    sc.queue.push_back(s);
    while let Some(u) = sc.queue.pop_front() {
        sc.order.push(u);
        let next = sc.dist[u] + 1;
        for &w in g.neighbors(u) {
            if sc.dist[w] == UNREACHED {
                sc.dist[w] = next;
                sc.queue.push_back(w);
            }
            if sc.dist[w] == next && u < sc.pred[w] {
                sc.pred[w] = u;
            }
        }
    }
    sc.canon_club[s] = true;
    sc.any_club[s] = true;
    for &v in &sc.order[1..] {
        sc.canon_club[v] = club[v] && sc.canon_club[sc.pred[v]];
        if optimistic {
            let d = sc.dist[v];
            sc.any_club[v] = club[v] && g.neighbors(v).iter().any(|&u| sc.dist[u] + 1 == d && sc.any_club[u]);
        }
    }
}

pub fn transit_decomposition(g: &Graph, members: &[NodeId], policy: PathPolicy) -> Result<TransitReport> {
    let club = membership(g, members)?;
    let club_size = club.iter().filter(|&&m| m).count();
    if club_size == 0 {
        return Err(Error::EmptyClub);
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let peripheral: Vec<NodeId> = (0..g.node_count()).filter(|&v| !club[v]).collect();
    if peripheral.len() < 2 {
        return Err(Error::NoPeripheralPairs);
    }
    let (sources, all_pairs, seed) = match policy {
        PathPolicy::Sample { count, seed } if count < peripheral.len() => {
            if count == 0 {
                return Err(Error::Degenerate("sample count must be at least 1".into()));
            }
            let picked = sample_indices(peripheral.len(), count, seed);
            (picked.into_iter().map(|i| peripheral[i]).collect(), false, Some(seed))
        }
        _ => (peripheral.clone(), true, None),
    };
    let optimistic = g.node_count() <= OPTIMISTIC_LIMIT;
    let n = g.node_count();

    let tally = sources
        .par_iter()
        .map_init(
            || Scratch::new(n),
            |sc, &s| {
                transit_bfs(g, &club, s, optimistic, sc);
                let mut t = TransitTally::default();
                for &target in &peripheral {
                    if target == s || (all_pairs && target < s) {
                        continue;
                    }
                    let d = sc.dist[target] as usize;
                    if t.hops.len() <= d {
                        t.hops.resize(d + 1, 0);
                    }
                    t.hops[d] += 1;
                    let p = sc.pred[target];
                    if p != s && sc.canon_club[p] {
                        t.interior += 1;
                        if d <= 3 {
                            t.strict += 1;
                        }
                    }
                    if optimistic
                        && d >= 2
                        && g.neighbors(target)
                            .iter()
                            .any(|&u| u != s && sc.dist[u] as usize + 1 == d && sc.any_club[u])
                    {
                        t.optimistic += 1;
                    }
                }
                t
            },
        )
        .reduce(TransitTally::default, TransitTally::merge);

    let histogram: BTreeMap<u32, u64> = tally
        .hops
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(d, &c)| (d as u32, c))
        .collect();
    let pairs: u64 = histogram.values().sum();
    let frac = |c: u64| c as f64 / pairs as f64;
    Ok(TransitReport {
        club_size,
        peripheral_nodes: peripheral.len(),
        pairs,
        mean_hops: histogram_mean(&histogram),
        histogram,
        interior_in_club: frac(tally.interior),
        strict_pattern: frac(tally.strict),
        optimistic_interior_in_club: optimistic.then(|| frac(tally.optimistic)),
        sampled: !all_pairs,
        sources: sources.len(),
        seed,
    })
}
