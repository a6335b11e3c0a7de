//! Bundled reference networks.

use crate::graph::{load_edge_list, load_membership, Graph, Partition};

/// Zachary's karate club: 34 members, 78 friendship ties.
pub const KARATE_EDGES: &str = include_str!("../data/karate.edges");

/// The club's observed two-faction split.
pub const KARATE_TRUTH: &str = include_str!("../data/karate.truth");

/// A 34-gene karate chromosome (1-based) that decodes into four communities.
pub const KARATE_EXAMPLE_GENES: [usize; 34] = [
    2, 3, 4, 14, 17, 17, 6, 14, 19, 19, 17, 14, 2, 9, 19, 9, 15, 8, 21, 8, 27, 1, 15, 26, 26, 32,
    30, 26, 25, 3, 19, 4, 23, 9,
];

/// Division IA college football games of the 2000 regular season: 115 teams, 613 games.
pub const FOOTBALL_EDGES: &str = include_str!("../data/football.edges");

/// Conference of each team (12 conferences, independents counted as one).
pub const FOOTBALL_TRUTH: &str = include_str!("../data/football.truth");

pub fn karate() -> Graph {
    load_edge_list(KARATE_EDGES).expect("bundled karate edge list is valid")
}

pub fn karate_truth(g: &Graph) -> Partition {
    load_membership(KARATE_TRUTH, g).expect("bundled karate membership is valid")
}

pub fn football() -> Graph {
    load_edge_list(FOOTBALL_EDGES).expect("bundled football edge list is valid")
}

pub fn football_truth(g: &Graph) -> Partition {
    load_membership(FOOTBALL_TRUTH, g).expect("bundled football membership is valid")
}
