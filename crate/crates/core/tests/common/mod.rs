//! Independent reference implementations used by the integration suites.
#![allow(dead_code)]

use bicomm::graph::Graph;
use bicomm::objectives::ObjectivePair;

/// Every set partition of `n` nodes as a restricted growth string.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for label in 0..=max + 1 {
            prefix.push(label);
            extend(prefix, max.max(label), n, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut prefix = vec![0];
    extend(&mut prefix, 0, n, &mut out);
    out
}

/// Pairwise form of modularity over a dense adjacency matrix:
/// `Q = 1/(2m) sum_ij [A_ij - k_i k_j / (2m)] [c_i == c_j]`.
pub fn reference_modularity(adj: &[Vec<u8>], labels: &[usize]) -> f64 {
    let n = adj.len();
    let degree: Vec<f64> = adj
        .iter()
        .map(|row| row.iter().map(|&a| a as f64).sum())
        .collect();
    let two_m: f64 = degree.iter().sum();
    let mut q = 0.0;
    for i in 0..n {
        for j in 0..n {
            if labels[i] == labels[j] {
                q += adj[i][j] as f64 - degree[i] * degree[j] / two_m;
            }
        }
    }
    q / two_m
}

pub fn dense(g: &Graph) -> Vec<Vec<u8>> {
    let n = g.node_count();
    let mut adj = vec![vec![0u8; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = 1;
        adj[v][u] = 1;
    }
    adj
}

/// Maximum modularity over all partitions, with one maximizer.
pub fn max_modularity(g: &Graph) -> (f64, Vec<usize>) {
    let adj = dense(g);
    set_partitions(g.node_count())
        .into_iter()
        .map(|p| (reference_modularity(&adj, &p), p))
        .fold((f64::NEG_INFINITY, Vec::new()), |best, cur| {
            if cur.0 > best.0 + 1e-12 {
                cur
            } else {
                best
            }
        })
}

/// Small graphs (at most 8 nodes) with known structure.
pub fn small_graph_corpus() -> Vec<(&'static str, Graph)> {
    let build = |n: usize, edges: &[(usize, usize)]| Graph::from_edges(n, edges).unwrap();
    vec![
        (
            "two triangles",
            build(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]),
        ),
        (
            "bridged triangles",
            build(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]),
        ),
        ("path 5", build(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])),
        ("star 6", build(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)])),
        ("cycle 8", build(8, &(0..8).map(|i| (i, (i + 1) % 8)).collect::<Vec<_>>())),
        (
            "complete 5",
            build(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
        ),
        (
            "barbell 8",
            build(
                8,
                &[
                    (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                    (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
                    (3, 4),
                ],
            ),
        ),
        (
            "sparse 8",
            build(
                8,
                &[(0, 1), (0, 4), (1, 2), (1, 5), (2, 6), (3, 7), (4, 5), (5, 6), (6, 7), (2, 7), (0, 5)],
            ),
        ),
        (
            "three cliques 8",
            build(
                8,
                &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (6, 7), (2, 3), (5, 6)],
            ),
        ),
    ]
}

pub fn dominates_ref(a: &ObjectivePair, b: &ObjectivePair) -> bool {
    (a.f1 <= b.f1 && a.f2 <= b.f2) && (a.f1 != b.f1 || a.f2 != b.f2)
}

/// Front peeling: repeatedly remove every point no remaining point dominates.
pub fn brute_force_fronts(objs: &[ObjectivePair]) -> Vec<Vec<usize>> {
    let mut remaining: Vec<usize> = (0..objs.len()).collect();
    let mut fronts = Vec::new();
    while !remaining.is_empty() {
        let front: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&i| !remaining.iter().any(|&j| dominates_ref(&objs[j], &objs[i])))
            .collect();
        remaining.retain(|i| !front.contains(i));
        fronts.push(front);
    }
    fronts
}

pub fn objective(f1: f64, f2: f64) -> ObjectivePair {
    ObjectivePair {
        f1,
        f2,
        q: 1.0 - f1,
        cs: 0.0,
    }
}

/// NMI from label vectors via entropies: `2 I(A;B) / (H(A) + H(B))`, with
/// two single-cluster labelings scoring 1.
pub fn reference_nmi(a: &[usize], b: &[usize]) -> f64 {
    use std::collections::HashMap;
    let n = a.len() as f64;
    let mut pa: HashMap<usize, f64> = HashMap::new();
    let mut pb: HashMap<usize, f64> = HashMap::new();
    let mut pab: HashMap<(usize, usize), f64> = HashMap::new();
    for (&x, &y) in a.iter().zip(b) {
        *pa.entry(x).or_default() += 1.0 / n;
        *pb.entry(y).or_default() += 1.0 / n;
        *pab.entry((x, y)).or_default() += 1.0 / n;
    }
    let entropy = |m: &HashMap<usize, f64>| -m.values().map(|p| p * p.ln()).sum::<f64>();
    let (ha, hb) = (entropy(&pa), entropy(&pb));
    if ha + hb == 0.0 {
        return 1.0;
    }
    let mi: f64 = pab
        .iter()
        .map(|(&(x, y), &p)| p * (p / (pa[&x] * pb[&y])).ln())
        .sum();
    2.0 * mi / (ha + hb)
}
