//! Edge-labeled tableaux: drawing, reading words, witness conditions and weights.
//!
//!     cargo run --example tableau_rule -- 4,1 3,2,1 4,2,2

use eqhorn::tableau::witnesses;
use eqhorn::{EdgeLabeledTableau, Partition};

fn main() -> eqhorn::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |k: usize, default: &str| args.get(k).cloned().unwrap_or_else(|| default.to_string());
    let lambda: Partition = arg(0, "4,1").parse()?;
    let mu: Partition = arg(1, "3,2,1").parse()?;
    let nu: Partition = arg(2, "4,2,2").parse()?;
    let rows = nu.length().max(1);

    let all: Vec<EdgeLabeledTableau> = witnesses(&lambda, &mu, &nu, rows).collect();
    println!("{} witnesses of shape ({nu})/({lambda}) with content ({mu})", all.len());
    for t in all.iter().take(3) {
        println!("\n{}", t.render());
        println!("reading word {:?}", t.reading_word().labels());
        let factors: Vec<String> = t
            .weight_factors()?
            .into_iter()
            .map(|(_, p, q)| format!("(t_{p} - t_{q})"))
            .collect();
        println!("weight {}", factors.join(""));
    }

    // the text form parses back to the same tableau
    if let Some(t) = all.first() {
        assert_eq!(&EdgeLabeledTableau::parse(&t.render())?, t);
    }
    Ok(())
}
