use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::Series;

/// Average nearest-neighbour degree as a function of degree.
#[derive(Debug, Clone, PartialEq)]
pub struct KnnCurve {
    /// `(k, knn(k), number of k-degree nodes)` for every populated k >= 1.
    pub points: Vec<(usize, f64, usize)>,
}

impl KnnCurve {
    pub fn get(&self, k: usize) -> Option<f64> {
        self.points
            .binary_search_by_key(&k, |p| p.0)
            .ok()
            .map(|i| self.points[i].1)
    }

    pub fn series(&self) -> Series {
        let mut s = Series::new("knn", &["k", "knn"]);
        for &(k, knn, _) in &self.points {
            s.push(vec![k.into(), knn.into()]);
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MixingReport {
    pub knn: KnnCurve,
    /// `None` when the coefficient is undefined (zero endpoint-degree variance).
    pub alpha: Option<f64>,
    pub edge_count: usize,
}

/// Mean neighbour degree of each node; `None` for isolated nodes.
pub fn mean_neighbor_degrees(g: &Graph) -> Vec<Option<f64>> {
    let degrees = g.degrees();
    (0..g.node_count())
        .map(|v| {
            let nb = g.neighbors(v);
            if nb.is_empty() {
                None
            } else {
                let sum: usize = nb.iter().map(|&w| degrees[w]).sum();
                Some(sum as f64 / nb.len() as f64)
            }
        })
        .collect()
}

/// knn(k): mean, over all k-degree nodes, of each node's mean neighbour degree.
pub fn knn_curve(g: &Graph) -> KnnCurve {
    let degrees = g.degrees();
    let per_node = mean_neighbor_degrees(g);
    let kmax = g.max_degree();
    let mut sums = vec![0.0; kmax + 1];
    let mut counts = vec![0usize; kmax + 1];
    for (v, m) in per_node.iter().enumerate() {
        if let Some(m) = m {
            sums[degrees[v]] += m;
            counts[degrees[v]] += 1;
        }
    }
    let points = (1..=kmax)
        .filter(|&k| counts[k] > 0)
        .map(|k| (k, sums[k] / counts[k] as f64, counts[k]))
        .collect();
    KnnCurve { points }
}

/// Degree assortativity coefficient over edge endpoint degrees.
///
/// Each undirected edge contributes one term. Sums are accumulated in
/// integers, so the zero-variance check is exact.
pub fn assortativity(g: &Graph) -> Result<f64> {
    let l = g.edge_count();
    if l == 0 {
        return Err(Error::Degenerate("assortativity needs at least one edge".into()));
    }
    let degrees = g.degrees();
    let (mut prod, mut sum, mut sq) = (0u128, 0u128, 0u128);
    for (u, v) in g.edges() {
        let (j, k) = (degrees[u] as u128, degrees[v] as u128);
        prod += j * k;
        sum += j + k;
        sq += j * j + k * k;
    }
    // Multiply numerator and denominator through by 4 L^2:
    //   num = 4L * sum(jk) - (sum(j+k))^2
    //   den = 2L * sum(j^2+k^2) - (sum(j+k))^2
    let l = l as u128;
    let mean_sq = sum * sum;
    let den = 2 * l * sq - mean_sq;
    if den == 0 {
        return Err(Error::UndefinedMixing);
    }
    let num = (4 * l * prod) as i128 - mean_sq as i128;
    Ok(num as f64 / den as f64)
}

pub fn mixing_report(g: &Graph) -> MixingReport {
    MixingReport {
        knn: knn_curve(g),
        alpha: assortativity(g).ok(),
        edge_count: g.edge_count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn knn_small_graphs() {
        let c = knn_curve(&path(3));
        assert_eq!(c.get(1), Some(2.0));
        assert_eq!(c.get(2), Some(1.0));

        let c = knn_curve(&star(4));
        assert_eq!(c.get(1), Some(4.0));
        assert_eq!(c.get(4), Some(1.0));
        assert_eq!(c.get(2), None);
    }

    #[test]
    fn knn_skips_isolated_nodes() {
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        let c = knn_curve(&g);
        assert_eq!(c.points, vec![(1, 1.0, 2)]);
    }

    #[test]
    fn assortativity_fixtures() {
        assert_eq!(assortativity(&star(3)).unwrap(), -1.0);
        assert!(matches!(assortativity(&complete(4)), Err(Error::UndefinedMixing)));
        assert!(matches!(assortativity(&ring(5)), Err(Error::UndefinedMixing)));
        // P4: edges (1,2),(2,2),(2,1): (8/3 - 25/9) / (3 - 25/9) = -1/2
        let a = assortativity(&path(4)).unwrap();
        assert!((a + 0.5).abs() < 1e-12);
    }

    #[test]
    fn report_marks_undefined_alpha() {
        let r = mixing_report(&complete(4));
        assert_eq!(r.alpha, None);
        assert_eq!(r.edge_count, 6);
        assert_eq!(r.knn.get(3), Some(3.0));
    }
}
