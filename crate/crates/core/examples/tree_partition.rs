// Three trees, cyclically permuted by the rotation, covering each vertex twice.

use std::error::Error;

use c3rigid::c3::{build_tree_partition, extract_sequence, verify_tree_partition};
use c3rigid::parse_graph;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let k33 = parse_graph(
        r#"{"vertices":6,"edges":[[0,3],[0,4],[0,5],[1,3],[1,4],[1,5],[2,3],[2,4],[2,5]],"c3":[1,2,0,4,5,3]}"#,
    )?;
    let seq = extract_sequence(&k33)?;
    let tp = build_tree_partition(&seq)?.relabeled(&seq.labels);
    for (i, t) in tp.trees().iter().enumerate() {
        println!("T{i}: {t:?}");
    }
    let check = verify_tree_partition(&k33, &tp);
    println!("{check:?}");
    assert!(check.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
