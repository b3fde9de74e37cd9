//! Structural analytics for AS-level Internet topologies.
//!
//! * [`graph`]: immutable undirected simple graph, components, BFS.
//! * [`io`]: edge-list and AS-relationship parsing, CSV series output.
//! * [`metrics`]: degree distribution and power-law fit, knn curve,
//!   assortativity, clustering, density, shortest-path statistics.
//! * [`richclub`]: rich-club coefficient, club selection, transit
//!   decomposition of peripheral shortest paths.
//! * [`synth`]: seeded G(n, L), preferential attachment and power-law
//!   configuration-model generators.
//! * [`resilience`]: targeted/random node removal and club link removal.
//! * [`cli`]: the `topolens` command-line front end.
//!
//! ```
//! use topolens::{graph::build_graph, metrics, richclub};
//!
//! let g = build_graph([("1", "2"), ("1", "3"), ("1", "4"), ("2", "3")]).unwrap();
//! assert_eq!(metrics::average_degree(&g), 2.0);
//! let curve = richclub::rich_club_curve(&g);
//! assert_eq!(curve.get(2).unwrap().n_geq, 3);
//! ```

pub mod cli;
pub mod error;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod resilience;
pub mod richclub;
pub mod synth;

pub use error::{Error, Result};
pub use graph::{build_graph, Graph, NodeId};
