// Arithmetic in Q(√3) and exact rank without tolerances.

use std::error::Error;

use c3rigid::field::QSqrt3;
use c3rigid::{exact_rank, ExactMatrix};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let x = QSqrt3::from_ratios(1, 1, 1, 1);
    let y = QSqrt3::from_ratios(1, 1, -1, 1);
    println!("({x}) * ({y}) = {}", &x * &y);
    println!("1/√3 = {}", QSqrt3::sqrt3().inverse()?);
    println!("as JSON: {}", serde_json::to_string(&QSqrt3::from_ratios(-1, 2, 1, 2))?);

    // (1, 2+√3) and (1+√3, 5+3√3) are proportional, so the rank is 1.
    let m = ExactMatrix::from_rows(vec![
        vec![QSqrt3::from_int(1), QSqrt3::from_ratios(2, 1, 1, 1)],
        vec![QSqrt3::from_ratios(1, 1, 1, 1), QSqrt3::from_ratios(5, 1, 3, 1)],
    ]);
    let rank = exact_rank(&m);
    println!("rank = {rank}");
    assert_eq!(rank, 1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
