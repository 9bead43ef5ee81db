// Write an SVG drawing with bars styled by tree.

use std::error::Error;

use c3rigid::cli;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let input = r#"{"vertices":6,"edges":[[0,3],[0,4],[0,5],[1,3],[1,4],[1,5],[2,3],[2,4],[2,5]],"c3":[1,2,0,4,5,3]}"#;
    let out = std::env::temp_dir().join("c3rigid-k33.svg");
    let outcome = cli::cmd_render(input, 5, &out);
    println!("{}", outcome.to_json());
    assert_eq!(outcome.exit_code, cli::EXIT_ISOSTATIC);
    let svg = std::fs::read_to_string(&out)?;
    println!("{} bytes, {} bars", svg.len(), svg.matches("<line").count());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
