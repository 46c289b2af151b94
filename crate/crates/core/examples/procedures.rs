//! Adding one edge label and removing the last one, with the repair chain.

use eqhorn::tableau::{add_edge_label, reduce_content, remove_last_edge_label_traced, witnesses};
use eqhorn::{EdgeLabeledTableau, GapPosition, Partition, SkewShape};

fn main() -> eqhorn::Result<()> {
    let p = |s: &str| s.parse::<Partition>();

    // grow the content from (3,2) to (3,3)
    let t = witnesses(&p("4,2,1")?, &p("3,2")?, &p("4,3,1")?, 3)
        .next()
        .expect("the coefficient is nonzero");
    let up = add_edge_label(&t, 2)?;
    println!("witness for content (3,2):\n{}\nafter adding a 2:\n{}", t.render(), up.render());

    // remove an edge label whose removal breaks the lattice condition
    let shape = SkewShape::new(p("6,4,2")?, p("5,2")?, 3)?;
    let boxes = [((1, 6), 1), ((2, 3), 2), ((2, 4), 2), ((3, 1), 3), ((3, 2), 3)];
    let edges = [(GapPosition::new(1, 5), vec![1])];
    let t = EdgeLabeledTableau::new(shape, boxes.into_iter().collect(), edges.into_iter().collect())?;
    println!("word {:?}", t.reading_word().labels());
    for (k, step) in remove_last_edge_label_traced(&t)?.iter().enumerate() {
        println!("step {}: word {:?}", k + 1, step.reading_word().labels());
    }

    // strip every edge label: a classical witness remains
    let t = witnesses(&p("2,1")?, &p("2,1")?, &p("2,2")?, 2)
        .find(|t| t.num_edge_labels() > 0)
        .expect("some witness has edge labels");
    let classical = reduce_content(&t, 1)?;
    println!("\n{}reduces to\n{}", t.render(), classical.render());
    Ok(())
}
