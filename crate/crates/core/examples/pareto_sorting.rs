//! Non-dominated sorting, crowding distance and tournament selection on a
//! hand-made set of objective pairs.
//!
//! `cargo run --example pareto_sorting`

use bicomm::encoding::Chromosome;
use bicomm::nsga2::{assign_rank_and_crowding, crowding_distance, fast_nondominated_sort, tournament_select, Individual};
use bicomm::objectives::ObjectivePair;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let points = [(0.2, 3.0), (0.4, 2.0), (0.6, 1.5), (0.3, 3.5), (0.5, 2.5), (0.9, 1.0), (0.7, 3.0), (0.2, 3.0)];
    let objs: Vec<ObjectivePair> = points.iter().map(|&(f1, f2)| ObjectivePair { f1, f2, q: 1.0 - f1, cs: 0.0 }).collect();

    for (rank, front) in fast_nondominated_sort(&objs).iter().enumerate() {
        let crowd = crowding_distance(&objs, front);
        let rows: Vec<String> = front
            .iter()
            .zip(&crowd)
            .map(|(&i, d)| format!("#{i} ({}, {}) d={d:.3}", objs[i].f1, objs[i].f2))
            .collect();
        println!("front {}: {}", rank + 1, rows.join("  "));
    }

    let mut pop: Vec<Individual> = objs
        .iter()
        .map(|&objectives| Individual { chromosome: Chromosome::new(vec![0]), objectives, rank: 0, crowding: 0.0 })
        .collect();
    assign_rank_and_crowding(&mut pop);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut wins = vec![0; pop.len()];
    for _ in 0..10_000 {
        wins[tournament_select(&pop, &mut rng)] += 1;
    }
    println!("tournament wins out of 10000: {wins:?}");
}
