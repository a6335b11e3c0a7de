//! Decode a gene-per-node chromosome into communities.
//!
//! `cargo run --example decode_chromosome`

use bicomm::datasets::{self, KARATE_EXAMPLE_GENES};
use bicomm::encoding::{decode, Chromosome};
use bicomm::objectives::modularity;

fn main() {
    let g = datasets::karate();
    let c = Chromosome::from_one_based(&KARATE_EXAMPLE_GENES).expect("genes are in 1..=34");
    println!("chromosome: {c}");

    let p = decode(&c);
    for (i, members) in p.communities().iter().enumerate() {
        let labels: Vec<&str> = members.iter().map(|&v| g.label(v)).collect();
        println!("cluster {}: {}", i + 1, labels.join(", "));
    }
    println!("Q = {:.4}", modularity(&g, &p).unwrap());
}
