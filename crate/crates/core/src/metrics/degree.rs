use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::Series;

/// Empirical degree distribution: counts, P(k) and CCDF over observed degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistribution {
    /// Distinct observed degrees, ascending.
    degrees: Vec<usize>,
    counts: Vec<usize>,
    /// Number of samples with degree >= degrees[i].
    at_least: Vec<usize>,
    total: usize,
}

impl DegreeDistribution {
    /// Build from raw per-node degrees. Panics on an empty slice.
    pub fn from_degrees(values: &[usize]) -> Self {
        assert!(!values.is_empty(), "degree distribution needs at least one node");
        let mut sorted = values.to_vec();
        sorted.sort_unstable();
        let mut degrees = Vec::new();
        let mut counts: Vec<usize> = Vec::new();
        for &k in &sorted {
            if degrees.last() == Some(&k) {
                *counts.last_mut().unwrap() += 1;
            } else {
                degrees.push(k);
                counts.push(1);
            }
        }
        let mut at_least = vec![0; counts.len()];
        let mut acc = 0;
        for i in (0..counts.len()).rev() {
            acc += counts[i];
            at_least[i] = acc;
        }
        Self {
            degrees,
            counts,
            at_least,
            total: values.len(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.total
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn min_degree(&self) -> usize {
        self.degrees[0]
    }

    pub fn max_degree(&self) -> usize {
        *self.degrees.last().unwrap()
    }

    pub fn count(&self, k: usize) -> usize {
        self.degrees.binary_search(&k).map_or(0, |i| self.counts[i])
    }

    /// Fraction of nodes with degree exactly `k`.
    pub fn pk(&self, k: usize) -> f64 {
        self.count(k) as f64 / self.total as f64
    }

    /// Number of nodes with degree >= `k`.
    pub fn count_at_least(&self, k: usize) -> usize {
        let i = self.degrees.partition_point(|&d| d < k);
        self.at_least.get(i).copied().unwrap_or(0)
    }

    /// Fraction of nodes with degree >= `k`.
    pub fn ccdf(&self, k: usize) -> f64 {
        self.count_at_least(k) as f64 / self.total as f64
    }

    /// Rows of `(k, count, P(k))`.
    pub fn pk_series(&self) -> Series {
        let mut s = Series::new("pk", &["k", "count", "pk"]);
        for (&k, &c) in self.degrees.iter().zip(&self.counts) {
            s.push(vec![k.into(), c.into(), (c as f64 / self.total as f64).into()]);
        }
        s
    }

    pub fn ccdf_series(&self) -> Series {
        let mut s = Series::new("ccdf", &["k", "ccdf"]);
        for (&k, &a) in self.degrees.iter().zip(&self.at_least) {
            s.push(vec![k.into(), (a as f64 / self.total as f64).into()]);
        }
        s
    }
}

pub fn degree_distribution(g: &Graph) -> DegreeDistribution {
    DegreeDistribution::from_degrees(&g.degrees())
}

/// Mean degree 2L/N.
pub fn average_degree(g: &Graph) -> f64 {
    2.0 * g.edge_count() as f64 / g.node_count() as f64
}

/// Fraction of possible links present, 2L / (N(N-1)).
pub fn density(g: &Graph) -> Result<f64> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::Degenerate("density needs at least two nodes".into()));
    }
    Ok(2.0 * g.edge_count() as f64 / (n as f64 * (n - 1) as f64))
}
