//! Evolve communities on the karate club network and print the final front.
//!
//! `cargo run --release --example detect_karate [generations] [seed]`
//!
//! Defaults to 3000 generations of 200 individuals, seed 3.

use bicomm::datasets;
use bicomm::encoding::decode;
use bicomm::metrics::nmi;
use bicomm::nsga2::{evolve_with_progress, GaConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let generations = args.next().map_or(3000, |a| a.parse().expect("generations"));
    let seed = args.next().map_or(3, |a| a.parse().expect("seed"));

    let g = datasets::karate();
    let truth = datasets::karate_truth(&g);
    let config = GaConfig { generations, seed, ..GaConfig::default() };
    let step = (generations / 10).max(1);
    let run = evolve_with_progress(&g, &config, |rec| {
        if rec.generation % step == 0 {
            println!("gen {:>5}  best Q {:.4}  front {}", rec.generation, rec.best_q, rec.front_size);
        }
    })
    .unwrap();

    let mut front = run.final_front.clone();
    front.sort_by(|a, b| a.objectives.f1.total_cmp(&b.objectives.f1));
    front.dedup_by(|a, b| a.objectives == b.objectives);
    println!("\ndistinct points on the final front:");
    println!("{:>7} {:>7} {:>7} {:>8} {:>3}", "f1", "f2", "Q", "CS", "k");
    for ind in &front {
        let o = ind.objectives;
        let k = decode(&ind.chromosome).community_count();
        println!("{:>7.4} {:>7.4} {:>7.4} {:>8.3} {:>3}", o.f1, o.f2, o.q, o.cs, k);
    }

    let best = decode(&run.best_by_q.chromosome);
    println!("\nbest by Q: Q = {:.4}, k = {}, NMI vs observed split = {:.4}", run.best_by_q.objectives.q, best.community_count(), nmi(&best, &truth).unwrap());
    for (i, members) in best.communities().iter().enumerate() {
        let labels: Vec<&str> = members.iter().map(|&v| g.label(v)).collect();
        println!("  community {}: {}", i + 1, labels.join(" "));
    }
}
