use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, PartialEq)]
pub struct Clustering {
    /// Local coefficient per node; `None` for nodes of degree < 2.
    pub per_node: Vec<Option<f64>>,
    /// Mean over nodes of degree >= 2; `None` if there are none.
    pub mean: Option<f64>,
}

/// Number of triangles through `v`, by merging sorted adjacency lists.
pub fn triangles_at(g: &Graph, v: NodeId) -> usize {
    let nb = g.neighbors(v);
    let mut count = 0;
    for (i, &u) in nb.iter().enumerate() {
        let rest = &nb[i + 1..];
        let other = g.neighbors(u);
        let (mut a, mut b) = (0, 0);
        while a < rest.len() && b < other.len() {
            match rest[a].cmp(&other[b]) {
                std::cmp::Ordering::Less => a += 1,
                std::cmp::Ordering::Greater => b += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    a += 1;
                    b += 1;
                }
            }
        }
    }
    count
}

pub fn clustering(g: &Graph) -> Clustering {
    let per_node: Vec<Option<f64>> = (0..g.node_count())
        .map(|v| {
            let k = g.neighbors(v).len();
            (k >= 2).then(|| 2.0 * triangles_at(g, v) as f64 / (k * (k - 1)) as f64)
        })
        .collect();
    let defined: Vec<f64> = per_node.iter().flatten().copied().collect();
    let mean = (!defined.is_empty()).then(|| defined.iter().sum::<f64>() / defined.len() as f64);
    Clustering { per_node, mean }
}
