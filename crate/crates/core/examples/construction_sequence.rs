// Reduce a graph to the triangle, then rebuild it move by move.

use std::error::Error;

use c3rigid::c3::{extract_sequence, reduce_once, relabeling_matches, replay_sequence};
use c3rigid::corpus::random_tight_c3;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (sg, built_with) = random_tight_c3(15, 42);
    println!("built n={} m={} with {} moves", sg.n(), sg.m(), built_with.len());

    let step = reduce_once(&sg)?;
    println!("first reduction: {:?} via {:?}, leaves n={}", step.step.kind(), step.case, step.reduced.n());

    let seq = extract_sequence(&sg)?;
    for mv in &seq.moves {
        println!("  {}", serde_json::to_string(mv)?);
    }
    let replay = replay_sequence(&seq)?;
    for s in &replay.trace {
        println!("  step {}: n={} m={} tight={}", s.step, s.n, s.m, s.tight);
    }
    assert!(relabeling_matches(&seq.labels, &replay.graph, &sg));
    println!("replay matches the input under labels {:?}", seq.labels);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
