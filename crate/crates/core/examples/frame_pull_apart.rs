// From a tree partition to a framework: all joints start on three points,
// then symmetric groups are pulled apart while the rank stays full.

use std::error::Error;

use c3rigid::c3::{build_tree_partition, extract_sequence};
use c3rigid::corpus::random_tight_c3;
use c3rigid::realization::{frame_from_partition, framework_from_frame, pull_apart};
use c3rigid::{exact_rank, numeric_isostatic_check};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (sg, _) = random_tight_c3(12, 3);
    let seq = extract_sequence(&sg)?;
    let tp = build_tree_partition(&seq)?.relabeled(&seq.labels);

    let frame = frame_from_partition(&sg, &tp)?;
    let coincident = frame.coincident_edges(sg.graph()).len();
    let rank = exact_rank(&c3rigid::realization::generalized_rigidity_matrix(sg.graph(), &frame)?);
    println!("frame: {coincident} of {} bars have coincident ends, rank {rank}", sg.m());

    let pulled = pull_apart(&sg, &tp, &frame)?;
    for r in &pulled.rounds {
        println!(
            "  moved {:?} (missing T{}) along T{} direction, t = {}, rank {}",
            r.component, r.class, r.along_tree, r.t, r.rank
        );
    }
    let placement = framework_from_frame(&sg, &pulled.frame)?;
    let verdict = numeric_isostatic_check(sg.graph(), &placement)?;
    println!("framework: {verdict:?}, symmetric: {}", placement.is_symmetric(&sg));
    assert!(verdict.isostatic);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
