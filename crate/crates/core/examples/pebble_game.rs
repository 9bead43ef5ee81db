// Laman counts with the (2,3) pebble game, checked against brute force.

use std::error::Error;

use c3rigid::{brute_force_laman, pebble_sparsity, Graph};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // K4 has one edge too many; the witness is the whole graph.
    let k4 = Graph::complete(4);
    let report = pebble_sparsity(&k4)?;
    println!("K4: sparse={} tight={} witness={:?}", report.is_sparse, report.is_tight, report.witness);
    assert_eq!(report.witness, Some(vec![0, 1, 2, 3]));

    // Two triangles sharing a vertex plus a bridge: count fails, sparsity holds.
    let bowtie = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])?;
    let report = pebble_sparsity(&bowtie)?;
    println!("bowtie: {} edges, target {}, tight={}", report.edge_count, report.target, report.is_tight);
    assert!(report.is_sparse && !report.is_tight);

    let k33 = Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v))))?;
    let tight = pebble_sparsity(&k33)?.is_tight;
    println!("K3,3: pebble game {tight}, brute force {}", brute_force_laman(&k33)?);
    assert_eq!(tight, brute_force_laman(&k33)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
