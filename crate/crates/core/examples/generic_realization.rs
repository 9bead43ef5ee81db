// Rank of the rigidity matrix at random symmetric positions.

use std::error::Error;

use c3rigid::{numeric_isostatic_check, parse_graph, symmetric_generic_positions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let prism = parse_graph(
        r#"{"vertices":6,"edges":[[0,1],[1,2],[2,0],[3,4],[4,5],[5,3],[0,3],[1,4],[2,5]],"c3":[1,2,0,4,5,3]}"#,
    )?;
    let p = symmetric_generic_positions(&prism, 7)?;
    assert!(p.is_symmetric(&prism));
    for (v, [x, y]) in p.to_f64().iter().enumerate() {
        println!("p{v} = ({x:.4}, {y:.4})");
    }
    let verdict = numeric_isostatic_check(prism.graph(), &p)?;
    println!("prism: {verdict:?}");
    assert!(verdict.isostatic);

    // Dropping one spoke leaves a single flex.
    let cut = prism.graph().without_edges(&[(0, 3)]);
    let verdict = numeric_isostatic_check(&cut, &p)?;
    println!("prism minus a spoke: {verdict:?}");
    assert!(verdict.independent && verdict.flex_dimension == 1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
