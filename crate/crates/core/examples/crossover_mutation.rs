//! One-point crossover and per-gene mutation.
//!
//! `cargo run --example crossover_mutation`

use bicomm::encoding::{mutate, one_point_crossover, random_site, Chromosome};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let p1 = Chromosome::from_one_based(&[1, 2, 4, 5, 3, 5, 6, 1, 9, 4]).unwrap();
    let p2 = Chromosome::from_one_based(&[3, 6, 3, 2, 6, 4, 3, 1, 2, 9]).unwrap();
    println!("parent 1: {p1}");
    println!("parent 2: {p2}");

    let (c1, c2) = one_point_crossover(&p1, &p2, 5).unwrap();
    println!("site 5 -> child 1: {c1}");
    println!("          child 2: {c2}");

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let site = random_site(p1.len(), &mut rng).expect("length > 1");
    let (c1, _) = one_point_crossover(&p1, &p2, site).unwrap();
    println!("random site {site} -> child 1: {c1}");

    // high rate so the effect is visible
    let m = mutate(&c1, 0.3, &mut rng);
    let changed: Vec<usize> = (0..m.len()).filter(|&i| m.genes()[i] != c1.genes()[i]).map(|i| i + 1).collect();
    println!("mutated (pm = 0.3): {m}  changed positions {changed:?}");
}
