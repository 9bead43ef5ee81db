// Deciding symmetric isostaticity from a JSON document.

use std::error::Error;

use c3rigid::c3::Reason;
use c3rigid::graph::count_fixed;
use c3rigid::{check_c3_isostatic, parse_graph};

const PRISM: &str = r#"{"vertices":6,
  "edges":[[0,1],[1,2],[2,0],[3,4],[4,5],[5,3],[0,3],[1,4],[2,5]],
  "c3":[1,2,0,4,5,3]}"#;

const STAR: &str = r#"{"vertices":4,"edges":[[0,3],[1,3],[2,3]],"c3":[1,2,0,3]}"#;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let prism = parse_graph(PRISM)?;
    let verdict = check_c3_isostatic(&prism)?;
    println!("prism: {verdict:?}");
    assert!(verdict.isostatic);

    // The hub of a star is fixed by the rotation, which rules it out.
    let star = parse_graph(STAR)?;
    let counts = count_fixed(star.graph(), star.c3()?);
    let verdict = check_c3_isostatic(&star)?;
    println!("star: j={} b={} reasons={:?}", counts.j, counts.b, verdict.reasons);
    assert!(verdict.reasons.contains(&Reason::FixedVertex));

    // A transposition is not a rotation.
    let err = parse_graph(r#"{"vertices":3,"edges":[[0,1],[1,2],[2,0]],"c3":[1,0,2]}"#).unwrap_err();
    println!("swap: {err}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
