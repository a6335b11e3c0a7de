//! Confusion matrix and normalized mutual information between two partitions.
//!
//! `cargo run --example compare_partitions`

use bicomm::datasets::{self, KARATE_EXAMPLE_GENES};
use bicomm::encoding::{decode, Chromosome};
use bicomm::graph::Partition;
use bicomm::metrics::{confusion_matrix, nmi};

fn main() {
    let g = datasets::karate();
    let truth = datasets::karate_truth(&g);
    let found = decode(&Chromosome::from_one_based(&KARATE_EXAMPLE_GENES).unwrap());

    let cm = confusion_matrix(&found, &truth).unwrap();
    println!("rows: decoded clusters, columns: observed factions");
    for (row, sum) in cm.counts().iter().zip(cm.row_sums()) {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        println!("{} | {sum:>3}", cells.join(""));
    }
    let cols: Vec<String> = cm.col_sums().iter().map(|c| format!("{c:>3}")).collect();
    println!("{} | {:>3}", cols.join(""), cm.total());

    println!("NMI(decoded, observed) = {:.6}", nmi(&found, &truth).unwrap());
    println!("NMI(observed, observed) = {}", nmi(&truth, &truth).unwrap());
    let single = Partition::single(g.node_count());
    println!("NMI(single, observed) = {}", nmi(&single, &truth).unwrap());
}
