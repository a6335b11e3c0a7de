//! Planted-partition benchmarks across mixing values, with detection
//! accuracy measured by NMI.
//!
//! `cargo run --release --example benchmark_sweep [generations]`
//!
//! The default of 500 generations keeps the sweep short; pass 3000 for the
//! full budget.

use bicomm::benchmark::{generate, BenchmarkSpec};
use bicomm::encoding::decode;
use bicomm::metrics::nmi;
use bicomm::nsga2::{evolve, GaConfig};
use bicomm::objectives::modularity;

fn main() {
    let generations = std::env::args().nth(1).map_or(500, |a| a.parse().expect("generations"));
    println!("{:>4} {:>6} {:>8} {:>8} {:>8} {:>3}", "mu", "edges", "Q truth", "Q found", "NMI", "k");
    for mu in [0.1, 0.2, 0.3, 0.4, 0.5] {
        let spec = BenchmarkSpec::with_mixing(mu, 1);
        let (g, truth) = generate(&spec).unwrap();
        let run = evolve(&g, &GaConfig { generations, ..GaConfig::default() }).unwrap();
        let found = decode(&run.best_by_q.chromosome);
        println!(
            "{:>4} {:>6} {:>8.4} {:>8.4} {:>8.4} {:>3}",
            mu,
            g.edge_count(),
            modularity(&g, &truth).unwrap(),
            run.best_by_q.objectives.q,
            nmi(&found, &truth).unwrap(),
            found.community_count()
        );
    }
}
