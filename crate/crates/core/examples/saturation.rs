//! Nonvanishing under stretching, for one triple and over a whole box.
//!
//!     cargo run --release --example saturation -- 3

use eqhorn::coefficient::saturation_scan;
use eqhorn::verify::saturation_suite;
use eqhorn::Partition;

fn main() -> eqhorn::Result<()> {
    let size: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let p = |s: &str| s.parse::<Partition>();

    for (l, m, n) in [("4,1", "3,2,1", "4,2,2"), ("1", "", "2"), ("2,1", "1", "2,2")] {
        let report = saturation_scan(&p(l)?, &p(m)?, &p(n)?, &[1, 2, 3, 4]);
        let verdicts: Vec<String> = report.entries.iter().map(|e| format!("N={}: {}", e.stretch, e.nonzero)).collect();
        println!("({l}) ({m}) ({n}): {}", verdicts.join(", "));
    }

    let report = saturation_suite(size, size, &[2, 3]);
    println!(
        "all triples in the {size}x{size} box: {} checks, {} failures",
        report.checked, report.failure_count
    );
    Ok(())
}
