//! Gene-per-node chromosome encoding and its variation operators.
//!
//! A chromosome for an `n`-node graph holds `n` genes. Gene `i` holding node
//! `j` asserts that `i` and `j` share a community. Genes are stored as
//! 0-based node indices; [`Chromosome::to_string`] renders them 1-based.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chromosome {
    genes: Vec<usize>,
}

impl Chromosome {
    /// Wraps 0-based genes. Panics if any gene is out of range.
    pub fn new(genes: Vec<usize>) -> Self {
        let n = genes.len();
        assert!(n > 0, "chromosome must have at least one gene");
        assert!(genes.iter().all(|&g| g < n), "gene out of range 0..{n}");
        Chromosome { genes }
    }

    /// Builds from 1-based gene values, as written in dumps.
    pub fn from_one_based(genes: &[usize]) -> Result<Self> {
        let n = genes.len();
        if n == 0 || genes.iter().any(|&g| g == 0 || g > n) {
            return Err(Error::InvalidConfig(format!(
                "gene values must lie in 1..={n}"
            )));
        }
        Ok(Chromosome {
            genes: genes.iter().map(|g| g - 1).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.genes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.genes.is_empty()
    }

    pub fn genes(&self) -> &[usize] {
        &self.genes
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.genes.iter().map(|g| g + 1).collect()
    }
}

impl fmt::Display for Chromosome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.genes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", g + 1)?;
        }
        Ok(())
    }
}

/// Draws each gene independently and uniformly from all `n` nodes.
pub fn random_chromosome<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Chromosome {
    assert!(n >= 1, "node count must be positive");
    Chromosome {
        genes: (0..n).map(|_| rng.random_range(0..n)).collect(),
    }
}

const UNASSIGNED: usize = usize::MAX;

/// Decodes a chromosome into a partition in one pass over the genes.
///
/// For gene `i -> j`: if neither node has a cluster they open a new one; if
/// exactly one has a cluster the other joins it; if both already have
/// clusters the gene is ignored, even when the clusters differ. Clusters are
/// numbered in order of creation.
pub fn decode(c: &Chromosome) -> Partition {
    let mut cluster = vec![UNASSIGNED; c.len()];
    let mut next = 0;
    for (i, &j) in c.genes.iter().enumerate() {
        match (cluster[i], cluster[j]) {
            (UNASSIGNED, UNASSIGNED) => {
                cluster[i] = next;
                cluster[j] = next;
                next += 1;
            }
            (UNASSIGNED, cj) => cluster[i] = cj,
            (ci, UNASSIGNED) => cluster[j] = ci,
            _ => {}
        }
    }
    // creation order already equals first appearance by node index
    Partition::from_labels(&cluster)
}

/// One-point crossover: the first `site` genes come from one parent, the rest
/// from the other.
pub fn one_point_crossover(
    p1: &Chromosome,
    p2: &Chromosome,
    site: usize,
) -> Result<(Chromosome, Chromosome)> {
    if p1.len() != p2.len() {
        return Err(Error::LengthMismatch {
            left: p1.len(),
            right: p2.len(),
        });
    }
    let n = p1.len();
    if site == 0 || site >= n {
        return Err(Error::InvalidConfig(format!(
            "crossover site {site} outside 1..{n}"
        )));
    }
    let splice = |head: &Chromosome, tail: &Chromosome| Chromosome {
        genes: head.genes[..site]
            .iter()
            .chain(&tail.genes[site..])
            .copied()
            .collect(),
    };
    Ok((splice(p1, p2), splice(p2, p1)))
}

/// Draws a crossover site uniformly from `1..n`, or `None` when `n < 2`.
pub fn random_site<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Option<usize> {
    (n >= 2).then(|| rng.random_range(1..n))
}

/// Replaces each gene, independently with probability `pm`, by a uniform
/// draw over all nodes (which may equal the old value).
pub fn mutate<R: Rng + ?Sized>(c: &Chromosome, pm: f64, rng: &mut R) -> Chromosome {
    let mut out = c.clone();
    mutate_in_place(&mut out, pm, rng);
    out
}

pub fn mutate_in_place<R: Rng + ?Sized>(c: &mut Chromosome, pm: f64, rng: &mut R) {
    assert!((0.0..=1.0).contains(&pm), "mutation probability {pm} outside [0, 1]");
    let n = c.len();
    for gene in c.genes.iter_mut() {
        if rng.random_bool(pm) {
            *gene = rng.random_range(0..n);
        }
    }
}
