//! Structure constants: classical numbers, equivariant polynomials and
//! their expansion in `y_i = t_i - t_{i+1}`.
//!
//!     cargo run --example equivariant_coefficients -- 2,1 2,1 3,2,1 3

use eqhorn::coefficient::{eq_coef, eq_nonzero_with_rows, graham_decompose, lr_coef};
use eqhorn::Partition;

fn show(lambda: &Partition, mu: &Partition, nu: &Partition, rows: usize) -> eqhorn::Result<()> {
    let c = eq_coef(lambda, mu, nu, rows)?;
    println!("C[({lambda}), ({mu}); ({nu})] with {rows} rows = {c}");
    if !c.is_zero() {
        println!("  in y: {}", graham_decompose(&c)?.display_with("y"));
    }
    if lambda.size() + mu.size() == nu.size() {
        println!("  classical c = {}", lr_coef(lambda, mu, nu));
    }
    if let Some(t) = &eq_nonzero_with_rows(lambda, mu, nu, rows).witness {
        println!("  first witness:");
        for line in t.render().lines() {
            println!("    {line}");
        }
    }
    Ok(())
}

fn main() -> eqhorn::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.len() >= 3 {
        let rows = args.get(3).map_or(Ok(0), |s| s.parse()).unwrap_or(0);
        let (l, m, n): (Partition, Partition, Partition) = (args[0].parse()?, args[1].parse()?, args[2].parse()?);
        return show(&l, &m, &n, rows.max(n.length()).max(1));
    }
    for (l, m, n, rows) in [("1", "1", "1", 1), ("1", "1", "1", 2), ("2,1", "1", "2,1", 3), ("2,1", "2,1", "3,2,1", 3), ("1", "", "2", 1)] {
        show(&l.parse()?, &m.parse()?, &n.parse()?, rows)?;
    }
    Ok(())
}
