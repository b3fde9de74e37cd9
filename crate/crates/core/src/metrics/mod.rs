//! Whole-graph structural statistics: degree distribution and power-law
//! fit, degree mixing, clustering, density, shortest-path lengths.

mod clustering;
mod degree;
mod mixing;
mod paths;
mod powerlaw;

pub use clustering::{clustering, triangles_at, Clustering};
pub use degree::{average_degree, degree_distribution, density, DegreeDistribution};
pub use mixing::{assortativity, knn_curve, mean_neighbor_degrees, mixing_report, KnnCurve, MixingReport};
pub use paths::{shortest_path_stats, PathPolicy, PathStats};
pub use powerlaw::{fit_power_law, hurwitz_zeta, hurwitz_zeta_ds, FitMethod, PowerLawFit, MIN_TAIL_SAMPLES};

pub(crate) use paths::{histogram_mean, histogram_series, merge_counts, rng, sample_indices};
