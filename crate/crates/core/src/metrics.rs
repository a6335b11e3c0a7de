//! Partition comparison: confusion matrix and normalized mutual information.

use crate::error::{Error, Result};
use crate::graph::Partition;

/// Overlap counts between the communities of two partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfusionMatrix {
    counts: Vec<Vec<usize>>,
    row_sums: Vec<usize>,
    col_sums: Vec<usize>,
    total: usize,
}

impl ConfusionMatrix {
    /// `counts[i][j]` is the number of nodes in community `i` of the first
    /// partition and community `j` of the second.
    pub fn counts(&self) -> &[Vec<usize>] {
        &self.counts
    }

    pub fn row_sums(&self) -> &[usize] {
        &self.row_sums
    }

    pub fn col_sums(&self) -> &[usize] {
        &self.col_sums
    }

    pub fn total(&self) -> usize {
        self.total
    }
}

pub fn confusion_matrix(a: &Partition, b: &Partition) -> Result<ConfusionMatrix> {
    if a.node_count() != b.node_count() {
        return Err(Error::NodeSetMismatch {
            left: a.node_count(),
            right: b.node_count(),
        });
    }
    let mut counts = vec![vec![0; b.community_count()]; a.community_count()];
    for (&ca, &cb) in a.membership().iter().zip(b.membership()) {
        counts[ca][cb] += 1;
    }
    let row_sums = counts.iter().map(|r| r.iter().sum()).collect();
    let col_sums = (0..b.community_count())
        .map(|j| counts.iter().map(|r| r[j]).sum())
        .collect();
    Ok(ConfusionMatrix {
        counts,
        row_sums,
        col_sums,
        total: a.node_count(),
    })
}

/// Normalized mutual information with arithmetic-mean normalization:
///
/// ```text
///        -2 sum_ij N_ij ln(N_ij N / (N_i. N_.j))
/// NMI = -----------------------------------------
///        sum_i N_i. ln(N_i./N) + sum_j N_.j ln(N_.j/N)
/// ```
///
/// Zero cells contribute nothing. Identical groupings, including two
/// single-community partitions, score exactly 1.
pub fn nmi(a: &Partition, b: &Partition) -> Result<f64> {
    let cm = confusion_matrix(a, b)?;
    if cm.total == 0 {
        return Err(Error::InvalidConfig("NMI of empty partitions".into()));
    }
    let occupied = cm.counts.iter().flatten().filter(|&&c| c > 0).count();
    let nonempty = |sums: &[usize]| sums.iter().filter(|&&s| s > 0).count();
    if occupied == nonempty(&cm.row_sums) && occupied == nonempty(&cm.col_sums) {
        // same grouping up to labels; skip the rounding of the general formula
        return Ok(1.0);
    }
    let n = cm.total as f64;
    let mut numerator = 0.0;
    for (i, row) in cm.counts.iter().enumerate() {
        for (j, &nij) in row.iter().enumerate() {
            if nij > 0 {
                let nij = nij as f64;
                numerator += nij * (nij * n / (cm.row_sums[i] as f64 * cm.col_sums[j] as f64)).ln();
            }
        }
    }
    let marginal = |sums: &[usize]| -> f64 {
        sums.iter()
            .filter(|&&s| s > 0)
            .map(|&s| s as f64 * (s as f64 / n).ln())
            .sum()
    };
    let denominator = marginal(&cm.row_sums) + marginal(&cm.col_sums);
    Ok(-2.0 * numerator / denominator)
}
