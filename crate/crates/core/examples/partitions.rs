//! Partitions, index sets and the maps between them.
//!
//!     cargo run --example partitions -- 4,2,1

use eqhorn::partition::{complement_set, dual_partition, partitions_in_box, phi, select, tau, tau_inverse};
use eqhorn::{IndexSet, Partition, RealSpectrum};

fn main() -> eqhorn::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "4,2,1".to_string());
    let lambda: Partition = text.parse()?;
    println!("λ = ({lambda}), size {}, length {}", lambda.size(), lambda.length());
    println!("conjugate ({}), doubled ({})", lambda.conjugate(), lambda.stretch(2));

    // a d-subset of [r] and its partition, inside the d x (r-d) box
    let (d, r) = (lambda.length().max(1), lambda.length().max(1) + lambda.first());
    let set = tau_inverse(&lambda, d, r)?;
    println!("as a {d}-subset of [{r}]: {set}, back to ({})", tau(&set));
    println!("dual in the {d}x{} box: ({})", r - d, dual_partition(&lambda, d, r)?);

    let positions = IndexSet::new(lambda.length().max(1), vec![1])?;
    println!("parts at {positions}: ({})", select(&lambda, &positions)?);
    println!("complement of {set}: {}", complement_set(&set));
    println!("merge with (2,2): ({})", phi(&lambda, &"2,2".parse()?));

    let spectrum = RealSpectrum::from_partition(&lambda, lambda.length() + 1)?;
    println!("as a spectrum padded by one zero: {spectrum}");

    let count = partitions_in_box(2, 3).len();
    println!("{count} partitions fit in the 2x3 box");
    Ok(())
}
