//! Parse an edge list and a membership file, then write them back out.
//!
//! `cargo run --example edge_list_io [edges] [membership]`
//!
//! Without arguments a small inline network is used.

use bicomm::graph::{internal_edge_count, load_edge_list, load_membership};

const EDGES: &str = "\
# two squares joined by one edge
a b
b c
c d
d a
e f
f g
g h
h e
d e
";

const MEMBERSHIP: &str = "a 1\nb 1\nc 1\nd 1\ne 2\nf 2\ng 2\nh 2\n";

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (edges, membership) = match args.as_slice() {
        [e, m] => (std::fs::read_to_string(e).unwrap(), std::fs::read_to_string(m).unwrap()),
        _ => (EDGES.to_string(), MEMBERSHIP.to_string()),
    };

    let g = match load_edge_list(&edges) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("edge list: {e}");
            std::process::exit(1);
        }
    };
    println!("{} nodes, {} edges", g.node_count(), g.edge_count());
    for v in 0..g.node_count() {
        let nbrs: Vec<&str> = g.neighbors(v).iter().map(|&u| g.label(u)).collect();
        println!("  {} (degree {}): {}", g.label(v), g.degree(v), nbrs.join(" "));
    }

    let p = load_membership(&membership, &g).unwrap();
    for s in 0..p.community_count() {
        println!("community {}: {} internal edges", s + 1, internal_edge_count(&g, &p, s).unwrap());
    }

    print!("\nnormalized edge list:\n{}", g.to_edge_list());
    print!("membership:\n{}", p.to_membership(&g));

    // rejected inputs
    for bad in ["x x\n", "a b c\n"] {
        println!("{bad:?} -> {}", load_edge_list(bad).unwrap_err());
    }
}
