//! Planted-partition benchmark graphs with a tunable mixing parameter.
//!
//! Nodes are split into equal communities. Every intra-community pair gets
//! an edge with probability `(1 - mu) * d / (c - 1)` and every
//! inter-community pair with probability `mu * d / (n - c)`, where `d` is
//! the target average degree and `c` the community size. In expectation
//! each node has degree `d`, a fraction `mu` of it leaving its community.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Partition};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkSpec {
    pub nodes: usize,
    pub communities: usize,
    pub avg_degree: f64,
    /// Expected fraction of each node's edges that leave its community.
    pub mixing: f64,
    pub seed: u64,
}

impl Default for BenchmarkSpec {
    fn default() -> Self {
        BenchmarkSpec {
            nodes: 128,
            communities: 4,
            avg_degree: 16.0,
            mixing: 0.2,
            seed: 1,
        }
    }
}

impl BenchmarkSpec {
    pub fn with_mixing(mixing: f64, seed: u64) -> Self {
        BenchmarkSpec {
            mixing,
            seed,
            ..BenchmarkSpec::default()
        }
    }

    pub fn community_size(&self) -> usize {
        self.nodes / self.communities
    }

    /// Intra- and inter-community edge probabilities.
    pub fn edge_probabilities(&self) -> Result<(f64, f64)> {
        self.validate()?;
        let c = self.community_size() as f64;
        let n = self.nodes as f64;
        let p_in = if c > 1.0 {
            (1.0 - self.mixing) * self.avg_degree / (c - 1.0)
        } else {
            0.0
        };
        let p_out = if n > c {
            self.mixing * self.avg_degree / (n - c)
        } else {
            0.0
        };
        if !(0.0..=1.0).contains(&p_in) {
            return Err(Error::InvalidConfig(format!(
                "intra-community edge probability {p_in:.4} outside [0, 1] \
                 (mixing {}, avg degree {}, community size {})",
                self.mixing,
                self.avg_degree,
                self.community_size()
            )));
        }
        if !(0.0..=1.0).contains(&p_out) {
            return Err(Error::InvalidConfig(format!(
                "inter-community edge probability {p_out:.4} outside [0, 1] \
                 (mixing {}, avg degree {}, {} nodes outside each community)",
                self.mixing,
                self.avg_degree,
                self.nodes - self.community_size()
            )));
        }
        Ok((p_in, p_out))
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidConfig(msg));
        if self.nodes == 0 || self.communities == 0 {
            return fail("nodes and communities must be positive".into());
        }
        if !self.nodes.is_multiple_of(self.communities) {
            return fail(format!(
                "nodes ({}) must be divisible by communities ({})",
                self.nodes, self.communities
            ));
        }
        if !(self.avg_degree >= 0.0 && self.avg_degree < self.nodes as f64) {
            return fail(format!(
                "average degree must lie in [0, {}), got {}",
                self.nodes, self.avg_degree
            ));
        }
        if !(0.0..=1.0).contains(&self.mixing) {
            return fail(format!("mixing must lie in [0, 1], got {}", self.mixing));
        }
        Ok(())
    }
}

/// Generates a benchmark graph and its planted partition.
///
/// Node `i` (0-based) belongs to community `i / community_size`; node labels
/// are `1..=nodes`. Pairs are visited in lexicographic order so the output is
/// a pure function of `spec`.
pub fn generate(spec: &BenchmarkSpec) -> Result<(Graph, Partition)> {
    let (p_in, p_out) = spec.edge_probabilities()?;
    let size = spec.community_size();
    let community = |i: usize| i / size;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut edges = Vec::new();
    for u in 0..spec.nodes {
        for v in (u + 1)..spec.nodes {
            let p = if community(u) == community(v) { p_in } else { p_out };
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let graph = Graph::from_edges(spec.nodes, &edges)?;
    let membership: Vec<usize> = (0..spec.nodes).map(community).collect();
    Ok((graph, Partition::from_labels(&membership)))
}
