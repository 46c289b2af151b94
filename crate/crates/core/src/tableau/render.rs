//! Canonical text form of a tableau.
//!
//! ```text
//! shape 4,2,2 / 4,1 rows 3
//! b1: .|.|.|.
//! g1: -||1|1
//! b2: .|1|-|-
//! g2: ||-|-
//! b3: 2|2|-|-
//! g3: 3||-|-
//! ```
//!
//! The header gives outer shape, inner shape (`∅` when empty) and the row
//! count. Then for each row `i` of the outer shape come two lines with one
//! cell per column `1..=ν_1`, separated by `|`. The `b<i>` line holds the
//! box row: `.` for a box of the inner shape, the label for a skew box,
//! `-` outside the outer shape. The `g<i>` line holds the labels of the
//! edge below each box, comma-separated in increasing order; a cell is
//! empty when the edge has no labels and `-` when it is not labelable.

use std::collections::BTreeMap;

use super::{EdgeLabeledTableau, GapPosition, SkewShape};
use crate::error::{Error, Result};
use crate::partition::Partition;

fn show(p: &Partition) -> String {
    if p.is_empty() {
        "∅".to_string()
    } else {
        p.to_string()
    }
}

impl EdgeLabeledTableau {
    pub fn render(&self) -> String {
        let s = self.shape();
        let mut out = format!("shape {} / {} rows {}\n", show(s.outer()), show(s.inner()), s.rows());
        let ncols = s.num_columns();
        for i in 1..=s.outer().length() {
            let boxes: Vec<String> = (1..=ncols)
                .map(|j| {
                    if i <= s.column_top(j) {
                        ".".to_string()
                    } else if i <= s.column_bottom(j) {
                        self.box_labels()[&(i, j)].to_string()
                    } else {
                        "-".to_string()
                    }
                })
                .collect();
            let gaps: Vec<String> = (1..=ncols)
                .map(|j| {
                    let g = GapPosition::new(i, j);
                    if !s.is_legal_gap(g) {
                        return "-".to_string();
                    }
                    let labels: Vec<String> =
                        self.edge_set(g).iter().map(|l| l.to_string()).collect();
                    labels.join(",")
                })
                .collect();
            out.push_str(&format!("b{i}: {}\n", boxes.join("|")));
            out.push_str(&format!("g{i}: {}\n", gaps.join("|")));
        }
        out
    }

    /// Inverse of [`EdgeLabeledTableau::render`].
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty tableau text".into()))?;
        let bad_header = || Error::Parse(format!("bad tableau header {header:?}"));
        let rest = header.strip_prefix("shape ").ok_or_else(bad_header)?;
        let (shapes, rows) = rest.split_once(" rows ").ok_or_else(bad_header)?;
        let (outer, inner) = shapes.split_once('/').ok_or_else(bad_header)?;
        let outer: Partition = outer.trim().parse()?;
        let inner: Partition = inner.trim().parse()?;
        let rows: usize = rows.trim().parse().map_err(|_| bad_header())?;
        let shape = SkewShape::new(outer, inner, rows)?;

        let mut boxes = BTreeMap::new();
        let mut edges = BTreeMap::new();
        let ncols = shape.num_columns();
        for i in 1..=shape.outer().length() {
            for (tag, is_box) in [("b", true), ("g", false)] {
                let line = lines
                    .next()
                    .ok_or_else(|| Error::Parse(format!("missing line {tag}{i}")))?;
                let prefix = format!("{tag}{i}:");
                let body = line
                    .strip_prefix(&prefix)
                    .ok_or_else(|| Error::Parse(format!("expected {prefix} in {line:?}")))?;
                let cells: Vec<&str> = body.split('|').map(str::trim).collect();
                if cells.len() != ncols {
                    return Err(Error::Parse(format!(
                        "line {prefix} has {} cells, expected {ncols}",
                        cells.len()
                    )));
                }
                for (k, cell) in cells.into_iter().enumerate() {
                    let j = k + 1;
                    if cell.is_empty() || cell == "." || cell == "-" {
                        continue;
                    }
                    if is_box {
                        let l = cell
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad box label {cell:?}")))?;
                        boxes.insert((i, j), l);
                    } else {
                        let set = cell
                            .split(',')
                            .map(|x| {
                                x.trim()
                                    .parse()
                                    .map_err(|_| Error::Parse(format!("bad edge label {x:?}")))
                            })
                            .collect::<Result<Vec<usize>>>()?;
                        edges.insert(GapPosition::new(i, j), set);
                    }
                }
            }
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("unexpected line {extra:?}")));
        }
        EdgeLabeledTableau::new(shape, boxes, edges)
    }
}
