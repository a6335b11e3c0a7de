//! Undirected simple graphs, partitions, and the plain-text file formats.
//!
//! Edge lists hold one edge per line as two whitespace-separated node labels.
//! Membership files hold one `node community` pair per line. In both formats
//! blank lines and lines starting with `#` are skipped.
//!
//! Labels are arbitrary strings. Internally nodes are dense indices `0..n`
//! (numeric label order for all-integer labels, first appearance otherwise);
//! all written output uses the original labels.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// An undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph over `n` nodes labelled `1..=n`.
    ///
    /// Duplicate and reversed edges collapse; self-loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        let mut builder = Builder::with_labels(labels);
        for (line, &(u, v)) in edges.iter().enumerate() {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for {n} nodes");
            builder.add_edge(u, v, line + 1)?;
        }
        Ok(builder.finish())
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted neighbor list of `node`.
    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn label(&self, node: usize) -> &str {
        &self.labels[node]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node_index(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Serializes the graph in edge-list format using the original labels.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", self.labels[u], self.labels[v]);
        }
        out
    }
}

struct Builder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    neighbors: Vec<BTreeSet<usize>>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            labels: Vec::new(),
            index: HashMap::new(),
            neighbors: Vec::new(),
        }
    }

    fn with_labels(labels: Vec<String>) -> Self {
        let mut b = Builder::new();
        for label in labels {
            b.intern(&label);
        }
        b
    }

    fn intern(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), i);
        self.neighbors.push(BTreeSet::new());
        i
    }

    fn add_edge(&mut self, u: usize, v: usize, line: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop {
                line,
                label: self.labels[u].clone(),
            });
        }
        self.neighbors[u].insert(v);
        self.neighbors[v].insert(u);
        Ok(())
    }

    fn finish(self) -> Graph {
        let adjacency: Vec<Vec<usize>> = self
            .neighbors
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        let edges = adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect();
        Graph {
            labels: self.labels,
            index: self.index,
            adjacency,
            edges,
        }
    }
}

/// Yields `(line_number, fields)` for every non-blank, non-comment line.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

/// Parses an edge list into a simple undirected graph.
///
/// When every label is a non-negative integer, internal indices follow
/// numeric label order, so node `k` of a 1-based dataset is index `k - 1`.
/// Otherwise indices follow order of first appearance.
pub fn load_edge_list(text: &str) -> Result<Graph> {
    let mut pairs = Vec::new();
    for (line, fields) in records(text) {
        if fields.len() != 2 {
            return Err(Error::FieldCount {
                line,
                found: fields.len(),
            });
        }
        pairs.push((line, fields[0], fields[1]));
    }
    let mut builder = Builder::new();
    let mut numeric: Vec<(u64, &str)> = Vec::new();
    let all_numeric = pairs.iter().all(|&(_, a, b)| {
        [a, b].iter().all(|l| match l.parse::<u64>() {
            Ok(v) => {
                numeric.push((v, l));
                true
            }
            Err(_) => false,
        })
    });
    if all_numeric {
        numeric.sort_unstable();
        for (_, label) in numeric {
            builder.intern(label);
        }
    }
    for (line, a, b) in pairs {
        let u = builder.intern(a);
        let v = builder.intern(b);
        builder.add_edge(u, v, line)?;
    }
    Ok(builder.finish())
}

/// Assignment of every node to exactly one community.
///
/// Community ids are contiguous `0..k`, numbered in order of first
/// appearance when scanning nodes by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    membership: Vec<usize>,
    community_count: usize,
}

impl Partition {
    /// Builds a partition from arbitrary per-node labels.
    pub fn from_labels<T: Eq + std::hash::Hash>(labels: &[T]) -> Self {
        let mut ids: HashMap<&T, usize> = HashMap::new();
        let membership = labels
            .iter()
            .map(|l| {
                let next = ids.len();
                *ids.entry(l).or_insert(next)
            })
            .collect();
        Partition {
            membership,
            community_count: ids.len(),
        }
    }

    /// All `n` nodes in a single community.
    pub fn single(n: usize) -> Self {
        Partition {
            membership: vec![0; n],
            community_count: usize::from(n > 0),
        }
    }

    pub fn node_count(&self) -> usize {
        self.membership.len()
    }

    pub fn community_count(&self) -> usize {
        self.community_count
    }

    pub fn community_of(&self, node: usize) -> usize {
        self.membership[node]
    }

    pub fn membership(&self) -> &[usize] {
        &self.membership
    }

    /// Members of each community, each list sorted by node index.
    pub fn communities(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.community_count];
        for (node, &c) in self.membership.iter().enumerate() {
            out[c].push(node);
        }
        out
    }

    pub fn community_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.community_count];
        for &c in &self.membership {
            sizes[c] += 1;
        }
        sizes
    }

    /// Serializes as a membership file with 1-based community ids.
    pub fn to_membership(&self, g: &Graph) -> String {
        let mut out = String::new();
        for (node, &c) in self.membership.iter().enumerate() {
            let _ = writeln!(out, "{} {}", g.label(node), c + 1);
        }
        out
    }
}

/// Parses a membership file against the node labels of `g`.
pub fn load_membership(text: &str, g: &Graph) -> Result<Partition> {
    let mut assigned: Vec<Option<String>> = vec![None; g.node_count()];
    for (line, fields) in records(text) {
        if fields.len() != 2 {
            return Err(Error::FieldCount {
                line,
                found: fields.len(),
            });
        }
        let node = g
            .node_index(fields[0])
            .ok_or_else(|| Error::UnknownNode(fields[0].to_owned()))?;
        if assigned[node].is_some() {
            return Err(Error::DuplicateNode(fields[0].to_owned()));
        }
        assigned[node] = Some(fields[1].to_owned());
    }
    let labels = assigned
        .into_iter()
        .enumerate()
        .map(|(node, c)| c.ok_or_else(|| Error::MissingNode(g.label(node).to_owned())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Partition::from_labels(&labels))
}

/// Number of edges with both endpoints in `community`.
pub fn internal_edge_count(g: &Graph, p: &Partition, community: usize) -> Result<usize> {
    if community >= p.community_count() {
        return Err(Error::UnknownCommunity(community));
    }
    Ok(g
        .edges()
        .iter()
        .filter(|&&(u, v)| p.community_of(u) == community && p.community_of(v) == community)
        .count())
}
