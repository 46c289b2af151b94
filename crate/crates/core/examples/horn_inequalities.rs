//! Horn triples and eigenvalue feasibility with violation certificates.
//!
//!     cargo run --example horn_inequalities -- 2,0 0,0 1,1

use eqhorn::coefficient::eq_nonzero;
use eqhorn::horn::{
    classical_feasible, eq_nonzero_via_horn, horn_triples, majorized_feasible, triples, Family, Violation,
};
use eqhorn::{Partition, RealSpectrum};

fn main() -> eqhorn::Result<()> {
    for (d, r) in [(1, 2), (1, 3), (2, 4)] {
        let lr = horn_triples(d, r)?;
        let sdr = triples(d, r, Family::Sdr)?;
        println!("d={d} r={r}: {} lr-positive triples, {} in the larger family", lr.len(), sdr.len());
    }

    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |k: usize, default: &str| args.get(k).cloned().unwrap_or_else(|| default.to_string());
    let x: RealSpectrum = arg(0, "2,0").parse()?;
    let y: RealSpectrum = arg(1, "0,0").parse()?;
    let z: RealSpectrum = arg(2, "1,1").parse()?;
    for (name, report) in [("A + B = C", classical_feasible(&x, &y, &z)?), ("A + B >= C", majorized_feasible(&x, &y, &z)?)] {
        println!("{name} with spectra {x} / {y} / {z}: feasible {}", report.feasible);
        match report.violation {
            Some(Violation::Inequality { triple, x_sum, y_sum, z_sum }) => {
                println!("  violated by {triple}: {x_sum} + {y_sum} < {z_sum}")
            }
            Some(Violation::Trace { lhs, rhs, required }) => {
                println!("  traces: {lhs} against {rhs}, required {required}")
            }
            None => {}
        }
    }

    // nonvanishing from inequalities against nonvanishing from tableaux
    let p = |s: &str| s.parse::<Partition>();
    for (l, m, n) in [("4,2,1", "3,2", "4,3,1"), ("1", "", "2"), ("2", "2", "2,2")] {
        let (l, m, n) = (p(l)?, p(m)?, p(n)?);
        println!(
            "({l}) ({m}) ({n}): inequalities {}, tableaux {}",
            eq_nonzero_via_horn(&l, &m, &n)?,
            eq_nonzero(&l, &m, &n).nonzero
        );
    }
    Ok(())
}
