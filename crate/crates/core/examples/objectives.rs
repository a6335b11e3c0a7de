//! Modularity, community score and the two minimized objectives.
//!
//! `cargo run --example objectives`

use bicomm::datasets::{self, KARATE_EXAMPLE_GENES};
use bicomm::encoding::{decode, Chromosome};
use bicomm::graph::Partition;
use bicomm::objectives::{evaluate_partition, ScoreParams};

fn main() {
    let g = datasets::karate();
    let example = decode(&Chromosome::from_one_based(&KARATE_EXAMPLE_GENES).unwrap());
    let candidates = [
        ("observed split", datasets::karate_truth(&g)),
        ("four clusters", example),
        ("everyone together", Partition::single(g.node_count())),
    ];

    println!("{:<18} {:>3} {:>8} {:>9} {:>7} {:>7}", "partition", "k", "Q", "CS", "f1", "f2");
    for r in [1.0, 2.5] {
        let params = ScoreParams::new(r).unwrap();
        println!("r = {r}");
        for (name, p) in &candidates {
            let o = evaluate_partition(&g, p, params).unwrap();
            println!(
                "{:<18} {:>3} {:>8.4} {:>9.3} {:>7.4} {:>7.4}",
                name,
                p.community_count(),
                o.q,
                o.cs,
                o.f1,
                o.f2
            );
        }
    }
}
