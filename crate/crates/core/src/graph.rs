//! Immutable undirected simple graph in compressed adjacency form, plus the
//! traversal primitives (components, BFS) the analysis modules build on.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

/// Dense node index in `0..node_count`.
pub type NodeId = usize;

/// Internal marker for "not reached" inside BFS scratch buffers. Public
/// results expose unreachable nodes as `None`.
pub(crate) const UNREACHED: u32 = u32::MAX;

/// Undirected simple graph with dense ids and the original node labels.
///
/// Adjacency lists are sorted ascending. No self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
    labels: Vec<String>,
    edge_count: usize,
}

/// Incrementally interns labelled edges and produces a [`Graph`].
///
/// Ids are assigned in first-appearance order. Self-loops and duplicate
/// edges are dropped and counted.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    index: HashMap<String, NodeId>,
    labels: Vec<String>,
    pairs: Vec<(NodeId, NodeId)>,
    self_loops: usize,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn intern(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        id
    }

    pub fn add_edge(&mut self, left: &str, right: &str) {
        let u = self.intern(left);
        let v = self.intern(right);
        if u == v {
            self.self_loops += 1;
        } else {
            self.pairs.push((u.min(v), u.max(v)));
        }
    }

    pub fn self_loops(&self) -> usize {
        self.self_loops
    }

    /// Finish construction. Returns the graph and the number of duplicate
    /// edges that were collapsed.
    pub fn finish(self) -> Result<(Graph, BuildStats)> {
        let GraphBuilder {
            labels,
            mut pairs,
            self_loops,
            ..
        } = self;
        if labels.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let raw = pairs.len();
        pairs.sort_unstable();
        pairs.dedup();
        let stats = BuildStats {
            self_loops,
            duplicates: raw - pairs.len(),
        };
        if stats.self_loops > 0 || stats.duplicates > 0 {
            log::warn!(
                "dropped {} self-loop(s) and {} duplicate edge(s)",
                stats.self_loops,
                stats.duplicates
            );
        }
        Ok((Graph::from_sorted_pairs(labels, &pairs), stats))
    }
}

/// Counts of input records discarded while building a graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    pub self_loops: usize,
    pub duplicates: usize,
}

/// Build a graph from labelled edges. Self-loops and duplicates (in either
/// orientation) are dropped.
pub fn build_graph<I, A, B>(edges: I) -> Result<Graph>
where
    I: IntoIterator<Item = (A, B)>,
    A: AsRef<str>,
    B: AsRef<str>,
{
    let mut builder = GraphBuilder::new();
    for (a, b) in edges {
        builder.add_edge(a.as_ref(), b.as_ref());
    }
    builder.finish().map(|(g, _)| g)
}

impl Graph {
    /// Graph on nodes `0..node_count` labelled by their decimal id. Isolated
    /// nodes are kept. Self-loops and duplicates are dropped.
    pub fn from_edges(node_count: usize, edges: &[(NodeId, NodeId)]) -> Result<Graph> {
        let mut pairs = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for node in [u, v] {
                if node >= node_count {
                    return Err(Error::InvalidNode { node, node_count });
                }
            }
            if u != v {
                pairs.push((u.min(v), u.max(v)));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        let labels = (0..node_count).map(|i| i.to_string()).collect();
        Ok(Graph::from_sorted_pairs(labels, &pairs))
    }

    /// `pairs` must be sorted, deduplicated, with `u < v` in every pair.
    fn from_sorted_pairs(labels: Vec<String>, pairs: &[(NodeId, NodeId)]) -> Graph {
        let n = labels.len();
        let mut degree = vec![0usize; n];
        for &(u, v) in pairs {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0; 2 * pairs.len()];
        // Pairs are sorted by (u, v): each row receives its targets in
        // ascending order for both orientations, so rows end up sorted.
        for &(u, v) in pairs {
            targets[cursor[v]] = u;
            cursor[v] += 1;
        }
        for &(u, v) in pairs {
            targets[cursor[u]] = v;
            cursor[u] += 1;
        }
        Graph {
            offsets,
            targets,
            labels,
            edge_count: pairs.len(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: NodeId) -> Result<usize> {
        self.check_node(v)?;
        Ok(self.offsets[v + 1] - self.offsets[v])
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.offsets.windows(2).map(|w| w[1] - w[0]).max().unwrap_or(0)
    }

    /// Sorted neighbour ids of `v`.
    ///
    /// Panics if `v` is out of range.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn label(&self, v: NodeId) -> Option<&str> {
        self.labels.get(v).map(String::as_str)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node_by_label(&self, label: &str) -> Option<NodeId> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        u < self.node_count() && v < self.node_count() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.node_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub(crate) fn check_node(&self, v: NodeId) -> Result<()> {
        if v < self.node_count() {
            Ok(())
        } else {
            Err(Error::InvalidNode {
                node: v,
                node_count: self.node_count(),
            })
        }
    }

    /// Subgraph induced by the nodes with `keep[v] == true`. Relative node
    /// order and labels are preserved. Returns the old-to-new id mapping.
    pub fn induced_subgraph(&self, keep: &[bool]) -> (Graph, Vec<Option<NodeId>>) {
        assert_eq!(keep.len(), self.node_count(), "keep mask length must equal node count");
        let mut mapping = vec![None; self.node_count()];
        let mut labels = Vec::new();
        for (v, _) in keep.iter().enumerate().filter(|(_, &k)| k) {
            mapping[v] = Some(labels.len());
            labels.push(self.labels[v].clone());
        }
        let pairs: Vec<_> = self
            .edges()
            .filter_map(|(u, v)| Some((mapping[u]?, mapping[v]?)))
            .collect();
        // Relabelling is monotone, so pairs stay sorted with u < v.
        (Graph::from_sorted_pairs(labels, &pairs), mapping)
    }

    /// Copy of the graph with the given edges removed. Node set and labels
    /// are unchanged. Edges may be given in either orientation.
    pub fn without_edges(&self, removed: &[(NodeId, NodeId)]) -> Graph {
        let mut drop: Vec<(NodeId, NodeId)> = removed.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        drop.sort_unstable();
        let pairs: Vec<_> = self.edges().filter(|e| drop.binary_search(e).is_err()).collect();
        Graph::from_sorted_pairs(self.labels.clone(), &pairs)
    }

    pub fn components(&self) -> ComponentMap {
        let n = self.node_count();
        let mut raw = vec![usize::MAX; n];
        let mut raw_sizes = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if raw[start] != usize::MAX {
                continue;
            }
            let id = raw_sizes.len();
            raw[start] = id;
            queue.push_back(start);
            let mut size = 0;
            while let Some(u) = queue.pop_front() {
                size += 1;
                for &w in self.neighbors(u) {
                    if raw[w] == usize::MAX {
                        raw[w] = id;
                        queue.push_back(w);
                    }
                }
            }
            raw_sizes.push(size);
        }
        // Raw ids follow smallest contained node, so a stable sort by size
        // descending breaks ties toward the smallest node id.
        let mut order: Vec<usize> = (0..raw_sizes.len()).collect();
        order.sort_by(|&a, &b| raw_sizes[b].cmp(&raw_sizes[a]));
        let mut rank = vec![0; order.len()];
        for (r, &c) in order.iter().enumerate() {
            rank[c] = r;
        }
        ComponentMap {
            component: raw.iter().map(|&c| rank[c]).collect(),
            sizes: order.iter().map(|&c| raw_sizes[c]).collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.node_count() <= 1 || self.components().sizes.len() == 1
    }

    /// Largest connected component as its own graph, with the old-to-new
    /// id mapping. Equal-size ties go to the component holding the
    /// smallest node id.
    pub fn giant_component(&self) -> (Graph, Vec<Option<NodeId>>) {
        let comps = self.components();
        let keep: Vec<bool> = comps.component.iter().map(|&c| c == 0).collect();
        self.induced_subgraph(&keep)
    }

    pub fn bfs_distances(&self, source: NodeId) -> Result<DistanceRow> {
        self.check_node(source)?;
        let mut dist = vec![UNREACHED; self.node_count()];
        let mut queue = VecDeque::new();
        self.bfs_into(source, &mut dist, &mut queue);
        Ok(DistanceRow {
            source,
            distances: dist.into_iter().map(|d| (d != UNREACHED).then_some(d)).collect(),
        })
    }

    /// BFS into caller-owned scratch space. `dist` is reset in full.
    pub(crate) fn bfs_into(&self, source: NodeId, dist: &mut [u32], queue: &mut VecDeque<NodeId>) {
        dist.fill(UNREACHED);
        queue.clear();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in self.neighbors(u) {
                if dist[w] == UNREACHED {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
    }
}

/// Connected-component labelling.
///
/// Component ids are ranked: id 0 is the largest component, and equal sizes
/// are ordered by their smallest node id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMap {
    pub component: Vec<usize>,
    /// Sizes indexed by component id, hence non-increasing.
    pub sizes: Vec<usize>,
}

impl ComponentMap {
    pub fn giant_size(&self) -> usize {
        self.sizes.first().copied().unwrap_or(0)
    }
}

/// Hop distances from one source; `None` marks unreachable nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: NodeId,
    pub distances: Vec<Option<u32>>,
}

impl DistanceRow {
    pub fn get(&self, v: NodeId) -> Option<u32> {
        self.distances.get(v).copied().flatten()
    }

    pub fn reachable_count(&self) -> usize {
        self.distances.iter().filter(|d| d.is_some()).count()
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn build_drops_self_loops_and_duplicates() {
        let mut b = GraphBuilder::new();
        b.add_edge("a", "b");
        b.add_edge("b", "a");
        b.add_edge("a", "a");
        let (g, stats) = b.finish().unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(
            stats,
            BuildStats {
                self_loops: 1,
                duplicates: 1
            }
        );
    }

    #[test]
    fn build_triangle_and_k5() {
        let g = build_graph([("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        assert_eq!(g.degrees(), vec![2, 2, 2]);

        let mut pairs = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                pairs.push((format!("n{u}"), format!("n{v}")));
            }
        }
        let g = build_graph(pairs).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (5, 10));
        assert!(g.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn ids_follow_first_appearance() {
        let g = build_graph([("7", "3"), ("3", "9")]).unwrap();
        assert_eq!(g.labels(), ["7", "3", "9"]);
        assert_eq!(g.node_by_label("9"), Some(2));
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn empty_input_is_an_error() {
        let none: Vec<(&str, &str)> = Vec::new();
        assert!(matches!(build_graph(none), Err(Error::EmptyGraph)));
    }

    #[test]
    fn degree_lookup() {
        let s = star(4);
        assert_eq!(s.degree(0).unwrap(), 4);
        assert_eq!(s.degree(3).unwrap(), 1);
        assert_eq!(complete(3).degree(1).unwrap(), 2);
        assert!(matches!(
            s.degree(5),
            Err(Error::InvalidNode { node: 5, node_count: 5 })
        ));
    }

    #[test]
    fn giant_component_cases() {
        let tri = complete(3);
        let (g, map) = tri.giant_component();
        assert_eq!(g, tri);
        assert_eq!(map, vec![Some(0), Some(1), Some(2)]);

        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        let (giant, map) = g.giant_component();
        assert_eq!(giant.node_count(), 3);
        assert_eq!(map[3], None);

        let g = Graph::from_edges(4, &[(2, 3), (0, 1)]).unwrap();
        let (giant, map) = g.giant_component();
        assert_eq!(giant.labels(), ["0", "1"]);
        assert_eq!(map, vec![Some(0), Some(1), None, None]);
    }

    #[test]
    fn bfs_cases() {
        let row = path(4).bfs_distances(0).unwrap();
        assert_eq!(row.distances, vec![Some(0), Some(1), Some(2), Some(3)]);

        let row = complete(4).bfs_distances(2).unwrap();
        let mut d: Vec<_> = row.distances.iter().map(|d| d.unwrap()).collect();
        d.sort();
        assert_eq!(d, vec![0, 1, 1, 1]);

        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let row = g.bfs_distances(0).unwrap();
        assert_eq!(row.distances, vec![Some(0), Some(1), Some(1), None]);
        assert_eq!(row.reachable_count(), 3);

        assert!(g.bfs_distances(4).is_err());
    }

    #[test]
    fn components_are_ranked_by_size() {
        let g = Graph::from_edges(7, &[(5, 6), (0, 1), (2, 3), (3, 4)]).unwrap();
        let c = g.components();
        assert_eq!(c.sizes, vec![3, 2, 2]);
        assert_eq!(c.component, vec![1, 1, 0, 0, 0, 2, 2]);
        assert!(!g.is_connected());
        assert!(ring(5).is_connected());
    }

    #[test]
    fn without_edges_keeps_nodes() {
        let g = double_star().without_edges(&[(1, 0)]);
        assert_eq!(g.node_count(), 6);
        assert_eq!(g.edge_count(), 4);
        assert!(!g.has_edge(0, 1));
        assert_eq!(g.components().sizes, vec![3, 3]);
    }
}
