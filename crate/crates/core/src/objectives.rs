//! Modularity, community score, and the two minimized fitness functions.

use serde::{Deserialize, Serialize};

use crate::encoding::{decode, Chromosome};
use crate::error::{Error, Result};
use crate::graph::{Graph, Partition};

/// Weight of the community-score term in the second fitness function.
pub const CS_WEIGHT: f64 = 10.0;

/// Parameters of the community score.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScoreParams {
    /// Exponent of the power mean over per-node internal fractions.
    pub r: f64,
}

impl ScoreParams {
    pub fn new(r: f64) -> Result<Self> {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "power-mean exponent must be positive, got {r}"
            )));
        }
        Ok(ScoreParams { r })
    }
}

impl Default for ScoreParams {
    fn default() -> Self {
        ScoreParams { r: 2.5 }
    }
}

/// Objective values of one solution. Both `f1` and `f2` are minimized.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObjectivePair {
    pub f1: f64,
    pub f2: f64,
    /// Modularity.
    pub q: f64,
    /// Community score.
    pub cs: f64,
}

impl ObjectivePair {
    pub fn from_scores(q: f64, cs: f64) -> Self {
        let f1 = 1.0 - q;
        ObjectivePair {
            f1,
            f2: f1 + CS_WEIGHT / (1.0 + cs),
            q,
            cs,
        }
    }
}

/// Newman-Girvan modularity: the sum over communities of `l_s/m - (d_s/2m)^2`.
pub fn modularity(g: &Graph, p: &Partition) -> Result<f64> {
    check_cover(g, p)?;
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::NoEdges);
    }
    let k = p.community_count();
    let mut internal = vec![0usize; k];
    let mut degree_sum = vec![0usize; k];
    for &(u, v) in g.edges() {
        let cu = p.community_of(u);
        if cu == p.community_of(v) {
            internal[cu] += 1;
        }
    }
    for node in 0..g.node_count() {
        degree_sum[p.community_of(node)] += g.degree(node);
    }
    let m = m as f64;
    Ok(internal
        .iter()
        .zip(&degree_sum)
        .map(|(&l, &d)| {
            let share = d as f64 / (2.0 * m);
            l as f64 / m - share * share
        })
        .sum())
}

/// Community score: for every community `S`, the power mean of order `r` of
/// `k_in(i) / |S|` over its members, times the ordered-pair internal volume
/// `sum_{i,j in S} A_ij` (twice the internal edge count).
pub fn community_score(g: &Graph, p: &Partition, params: ScoreParams) -> Result<f64> {
    check_cover(g, p)?;
    let k = p.community_count();
    let sizes = p.community_sizes();
    let mut power_sum = vec![0.0f64; k];
    let mut volume = vec![0usize; k];
    for node in 0..g.node_count() {
        let c = p.community_of(node);
        let k_in = g
            .neighbors(node)
            .iter()
            .filter(|&&j| p.community_of(j) == c)
            .count();
        volume[c] += k_in;
        if k_in > 0 {
            power_sum[c] += (k_in as f64 / sizes[c] as f64).powf(params.r);
        }
    }
    Ok((0..k)
        .map(|c| power_sum[c] / sizes[c] as f64 * volume[c] as f64)
        .sum())
}

/// Scores an already decoded partition.
pub fn evaluate_partition(g: &Graph, p: &Partition, params: ScoreParams) -> Result<ObjectivePair> {
    let q = modularity(g, p)?;
    let cs = community_score(g, p, params)?;
    Ok(ObjectivePair::from_scores(q, cs))
}

/// Decodes `c` and scores the resulting partition.
pub fn evaluate(g: &Graph, c: &Chromosome, params: ScoreParams) -> Result<ObjectivePair> {
    if c.len() != g.node_count() {
        return Err(Error::LengthMismatch {
            left: c.len(),
            right: g.node_count(),
        });
    }
    evaluate_partition(g, &decode(c), params)
}

fn check_cover(g: &Graph, p: &Partition) -> Result<()> {
    if g.node_count() != p.node_count() {
        return Err(Error::NodeSetMismatch {
            left: g.node_count(),
            right: p.node_count(),
        });
    }
    Ok(())
}
