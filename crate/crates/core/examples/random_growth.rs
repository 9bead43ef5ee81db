// Grow symmetric graphs by random moves; every step stays tight.

use std::error::Error;

use c3rigid::corpus::{random_move, rng};
use c3rigid::{laman_check, SymGraph};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut r = rng(2024);
    let mut sg = SymGraph::triangle();
    for _ in 0..6 {
        let (mv, next) = random_move(&sg, &mut r)?;
        println!("{:?} on {:?} -> n={} m={}", mv.kind(), mv.anchors(), next.n(), next.m());
        assert!(laman_check(next.graph())?);
        sg = next;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
