//! Bi-objective genetic community detection for undirected networks.
//!
//! Candidate partitions are encoded one gene per node and evolved with
//! NSGA-II against two minimized objectives:
//!
//! * `f1 = 1 - Q`, where `Q` is modularity;
//! * `f2 = (1 - Q) + 10 / (1 + CS)`, where `CS` is the community score.
//!
//! The crate also provides the evaluation side: modularity and normalized
//! mutual information against a ground truth, a planted-partition benchmark
//! generator, and the `bicomm` command-line front end.
//!
//! ```
//! use bicomm::{datasets, nsga2::{evolve, GaConfig}};
//!
//! let g = datasets::karate();
//! let config = GaConfig { population_size: 20, generations: 10, ..GaConfig::default() };
//! let run = evolve(&g, &config).unwrap();
//! assert!(run.best_by_q.objectives.q > 0.0);
//! ```

pub mod benchmark;
pub mod cli;
pub mod datasets;
pub mod encoding;
pub mod error;
pub mod graph;
pub mod metrics;
pub mod nsga2;
pub mod objectives;

pub use error::{Error, Result};
pub use graph::{Graph, Partition};
