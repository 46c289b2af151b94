//! Adding and removing single edge labels while keeping a witness.

use super::{EdgeLabeledTableau, GapPosition, Source, Word};
use crate::error::{Error, Result};
use crate::partition::Partition;

fn require_witness(t: &EdgeLabeledTableau) -> Result<()> {
    if !t.is_semistandard() {
        return Err(Error::Precondition("tableau is not semistandard".into()));
    }
    if !t.is_lattice() {
        return Err(Error::Precondition("tableau is not lattice".into()));
    }
    if !t.too_high_labels().is_empty() {
        return Err(Error::Precondition("tableau has a label that is too high".into()));
    }
    Ok(())
}

/// Gap row where `ℓ` would have to go in column `j` to keep the column increasing.
fn forced_gap_row(t: &EdgeLabeledTableau, j: usize, l: usize) -> usize {
    let top = t.shape().column_top(j);
    let smaller = (top + 1..=t.shape().column_bottom(j))
        .filter(|&i| t.box_labels()[&(i, j)] < l)
        .count();
    top + smaller
}

fn column_has(t: &EdgeLabeledTableau, j: usize, l: usize) -> bool {
    t.column(j).iter().any(|x| x.label == l)
}

/// Adds one edge label `ℓ` in the leftmost column that has no `ℓ` yet and
/// where the forced position is not too high.
pub fn add_edge_label(t: &EdgeLabeledTableau, l: usize) -> Result<EdgeLabeledTableau> {
    require_witness(t)?;
    if l == 0 {
        return Err(Error::Precondition("labels are positive".into()));
    }
    let mut content = t.content();
    if content.len() < l {
        content.resize(l, 0);
    }
    content[l - 1] += 1;
    let grown = Partition::new(content).map_err(|_| {
        Error::Precondition(format!("adding a box in row {l} does not give a partition"))
    })?;
    if !grown.is_contained_in(t.shape().outer()) {
        return Err(Error::Precondition(format!(
            "content ({grown}) is not contained in ({})",
            t.shape().outer()
        )));
    }

    let column = (1..=t.shape().num_columns()).find(|&j| {
        !column_has(t, j, l) && forced_gap_row(t, j, l) >= l
    });
    let Some(j) = column else {
        return Err(Error::Internal(format!(
            "no column accepts edge label {l} although the content allows it"
        )));
    };
    let gap = GapPosition::new(forced_gap_row(t, j, l), j);
    let mut edges = t.edge_labels().clone();
    let set = edges.entry(gap).or_default();
    set.push(l);
    set.sort_unstable();
    let out = EdgeLabeledTableau::new(t.shape().clone(), t.box_labels().clone(), edges)?;
    if !out.is_witness() {
        return Err(Error::Internal(format!(
            "adding edge label {l} at gap ({}, {}) broke the witness conditions",
            gap.row, gap.col
        )));
    }
    Ok(out)
}

/// Removes the last edge label in reading order and repairs the lattice
/// condition by lowering box labels. Returns every intermediate tableau:
/// the first has the edge label removed, each later one has one more box
/// label lowered, and the last is the result.
pub fn remove_last_edge_label_traced(t: &EdgeLabeledTableau) -> Result<Vec<EdgeLabeledTableau>> {
    require_witness(t)?;
    let word = t.reading_word();
    let Some(pos) = word.0.iter().rposition(|x| x.source.is_edge()) else {
        return Err(Error::Precondition("tableau has no edge label".into()));
    };
    let mut letters = word.0.clone();
    let removed = letters.remove(pos);
    let shape = t.shape().clone();
    let mut trace = vec![EdgeLabeledTableau::from_word(shape.clone(), &Word(letters.clone()))?];

    let max = letters.iter().map(|x| x.label).max().unwrap_or(0) + 2;
    let mut counts = vec![0usize; max + 1];
    for x in &letters[..pos] {
        counts[x.label] += 1;
    }
    let mut cur = removed.label;
    for q in pos..letters.len() {
        let x = letters[q].label;
        counts[x] += 1;
        if x == cur + 1 && counts[cur + 1] > counts[cur] {
            if !matches!(letters[q].source, Source::Box { .. }) {
                return Err(Error::Internal(
                    "lattice repair reached an edge label".into(),
                ));
            }
            letters[q].label = cur;
            counts[cur + 1] -= 1;
            counts[cur] += 1;
            cur += 1;
            trace.push(EdgeLabeledTableau::from_word(shape.clone(), &Word(letters.clone()))?);
        }
    }
    let last = trace.last().unwrap();
    if !last.is_witness() || last.content_partition().is_none() {
        return Err(Error::Internal("edge label removal did not produce a witness".into()));
    }
    Ok(trace)
}

/// One removal step: the repaired tableau and its content.
pub fn remove_last_edge_label(t: &EdgeLabeledTableau) -> Result<(EdgeLabeledTableau, Partition)> {
    let out = remove_last_edge_label_traced(t)?.pop().unwrap();
    let content = out
        .content_partition()
        .ok_or_else(|| Error::Internal("content is not a partition".into()))?;
    Ok((out, content))
}

/// Removes edge labels until the content has size `s`.
pub fn reduce_content(t: &EdgeLabeledTableau, s: usize) -> Result<EdgeLabeledTableau> {
    require_witness(t)?;
    let size: usize = t.content().iter().sum();
    let boxes = t.shape().num_skew_boxes();
    if s < boxes || s > size {
        return Err(Error::Precondition(format!(
            "target size {s} is outside [{boxes}, {size}]"
        )));
    }
    let mut cur = t.clone();
    for _ in s..size {
        cur = remove_last_edge_label(&cur)?.0;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{enumerate, SkewShape};
    use super::*;

    #[test]
    fn add_to_the_pieri_example() {
        let t = pieri_example();
        let up = add_edge_label(&t, 2).unwrap();
        assert_eq!(up.content(), vec![3, 3]);
        assert_eq!(up.edge_set(GapPosition::new(2, 2)), &[2]);
        assert!(up.is_witness());
    }

    #[test]
    fn add_to_empty_point() {
        let shape = SkewShape::new(p("1"), p("1"), 1).unwrap();
        let t = EdgeLabeledTableau::empty(shape).unwrap();
        let up = add_edge_label(&t, 1).unwrap();
        assert_eq!(up.edge_set(GapPosition::new(1, 1)), &[1]);
        assert_eq!(up.num_edge_labels(), 1);
    }

    #[test]
    fn add_rejects_bad_rows() {
        let t = pieri_example();
        assert!(add_edge_label(&t, 4).is_err());
        assert!(add_edge_label(&t, 3).unwrap().is_witness());
        assert!(add_edge_label(&t, 0).is_err());
        let shape = SkewShape::new(p("1"), p("1"), 1).unwrap();
        let t = EdgeLabeledTableau::empty(shape).unwrap();
        assert!(add_edge_label(&add_edge_label(&t, 1).unwrap(), 1).is_err());
    }

    #[test]
    fn cascade_reproduces_the_chain() {
        let trace = remove_last_edge_label_traced(&cascade_example()).unwrap();
        let words: Vec<Vec<usize>> = trace.iter().map(|t| t.reading_word().labels()).collect();
        assert_eq!(
            words,
            vec![vec![1, 2, 2, 3, 3], vec![1, 2, 1, 3, 3], vec![1, 2, 1, 3, 2]]
        );
        assert_eq!(trace[1].box_labels()[&(2, 3)], 1);
        assert_eq!(trace[2].box_labels()[&(3, 1)], 2);
        let (star, mu) = remove_last_edge_label(&cascade_example()).unwrap();
        assert_eq!(mu, p("2,2,1"));
        assert_eq!(star.num_edge_labels(), 0);
    }

    #[test]
    fn removal_without_cascade() {
        let t = tableau("1", "1", 1, &[], &[((1, 1), &[1])]);
        let trace = remove_last_edge_label_traced(&t).unwrap();
        assert_eq!(trace.len(), 1);
        assert!(trace[0].reading_word().is_empty());
        let shape = SkewShape::new(p("1"), p("1"), 1).unwrap();
        assert!(remove_last_edge_label(&EdgeLabeledTableau::empty(shape).unwrap()).is_err());
    }

    #[test]
    fn reduce_content_bounds() {
        let t = cascade_example();
        assert_eq!(reduce_content(&t, 6).unwrap(), t);
        assert_eq!(reduce_content(&t, 5).unwrap(), remove_last_edge_label(&t).unwrap().0);
        assert!(reduce_content(&t, 4).is_err());
        assert!(reduce_content(&t, 7).is_err());
    }

    #[test]
    fn removal_over_small_shapes() {
        for outer in ["2,1", "2,2", "3,1", "2,2,1"] {
            for inner in ["1", "2", "1,1", "2,1"] {
                let Ok(shape) = SkewShape::new(p(outer), p(inner), 3) else { continue };
                for mu in ["1", "2", "1,1", "2,1", "3", "2,2"] {
                    for t in enumerate(&shape, &p(mu)) {
                        if t.num_edge_labels() == 0 {
                            continue;
                        }
                        let (star, content) = remove_last_edge_label(&t).unwrap();
                        assert!(star.is_witness());
                        assert_eq!(content.size() + 1, p(mu).size());
                        assert!(content.is_contained_in(&p(mu)));
                        assert_eq!(star.num_edge_labels() + 1, t.num_edge_labels());
                    }
                }
            }
        }
    }
}
