//! The factorial Schur oracle: which variable identification matches the
//! rule, and a cross-check over a whole box.
//!
//!     cargo run --release --example oracle_cross_check -- 2 2 5

use eqhorn::oracle::{cross_check, cross_check_box, oracle_structure_constants, EvaluationGrid, VariableMap};
use eqhorn::Partition;

fn main() -> eqhorn::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (rows, cols, trials) = (
        args.first().copied().unwrap_or(2),
        args.get(1).copied().unwrap_or(2),
        args.get(2).copied().unwrap_or(3),
    );

    let one: Partition = "1".parse()?;
    let grid = EvaluationGrid::random(1, 1, 0, VariableMap::Negation);
    for (nu, value) in oracle_structure_constants(&one, &one, &grid)? {
        println!("P^1, σ_1 σ_1 at ({nu}): {value}");
    }

    for map in VariableMap::ALL {
        let grid = EvaluationGrid::random(rows, cols, 0, map);
        let report = cross_check_box(&grid)?;
        println!("{map:?}: {} comparisons, {} mismatches", report.compared, report.mismatches.len());
    }

    let lambda: Partition = "1".parse()?;
    let report = cross_check(&lambda, &lambda, rows, cols, trials, 0)?;
    println!(
        "(1) x (1) in {rows}x{cols} over {} grids: {}",
        report.grids,
        if report.passed() { "agree" } else { "disagree" }
    );
    Ok(())
}
