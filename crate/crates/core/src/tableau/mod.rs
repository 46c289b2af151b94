//! Edge-labeled equivariant tableaux.
//!
//! A tableau of skew shape `ν/λ` fills every box of `ν/λ` with a positive
//! label and may attach a set of labels to each horizontal edge that is
//! either the lower edge of a skew box or part of the southern border of
//! `λ`. Edges are addressed by the box directly above them: `gap(i, j)` is
//! the lower edge of box `(i, j)`, which is legal iff `λ'_j <= i <= ν'_j`
//! and `i >= 1`.
//!
//! Weights follow the a-priori rule: an edge label `ℓ` in `gap(i, j)`
//! contributes `t_p - t_q` with `p = r + j - i` and
//! `q = p + i - ℓ + 1 + ρ`, where `ρ` counts the occurrences of `ℓ` (box or
//! edge) in columns strictly right of column `j`. Every factor of a
//! tableau with no label too high has `p < q`. Under this convention the
//! sum of weights matches factorial Schur structure constants evaluated
//! with `a_i = -t_i` (see [`crate::oracle`]).

mod enumerate;
mod procedures;
mod render;

pub use enumerate::{enumerate, witnesses, Witnesses};
pub(crate) use enumerate::{count_fillings, weight_sum};
pub use procedures::{add_edge_label, reduce_content, remove_last_edge_label, remove_last_edge_label_traced};

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::TPolynomial;

/// `ν/λ` drawn in an ambient rectangle with `rows` rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
    rows: usize,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition, rows: usize) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::Precondition(format!(
                "inner shape ({inner}) is not contained in outer shape ({outer})"
            )));
        }
        if rows < outer.length() {
            return Err(Error::Precondition(format!(
                "{rows} rows cannot hold ({outer})"
            )));
        }
        Ok(SkewShape { outer, inner, rows })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn num_columns(&self) -> usize {
        self.outer.first()
    }

    /// `λ'_j`: the row of the lowest inner box in column `j`.
    pub fn column_top(&self, j: usize) -> usize {
        self.inner.column_length(j)
    }

    /// `ν'_j`.
    pub fn column_bottom(&self, j: usize) -> usize {
        self.outer.column_length(j)
    }

    pub fn is_skew_box(&self, i: usize, j: usize) -> bool {
        j >= 1 && j <= self.num_columns() && i > self.column_top(j) && i <= self.column_bottom(j)
    }

    pub fn is_legal_gap(&self, g: GapPosition) -> bool {
        g.row >= 1
            && g.col >= 1
            && g.col <= self.num_columns()
            && g.row >= self.column_top(g.col)
            && g.row <= self.column_bottom(g.col)
    }

    /// Boxes of `ν/λ`, column by column.
    pub fn skew_boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 1..=self.num_columns() {
            for i in self.column_top(j) + 1..=self.column_bottom(j) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn num_skew_boxes(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Column distance `r + j - i` of box `(i, j)` from the lower-left box.
    pub fn dist(&self, i: usize, j: usize) -> usize {
        self.rows + j - i
    }
}

/// The horizontal edge directly below box `(row, col)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GapPosition {
    pub row: usize,
    pub col: usize,
}

impl GapPosition {
    pub fn new(row: usize, col: usize) -> Self {
        GapPosition { row, col }
    }
}

/// Every labelable edge of the shape, sorted by `(col, row)`.
pub fn legal_gaps(shape: &SkewShape) -> Vec<GapPosition> {
    let mut out = Vec::new();
    for j in 1..=shape.num_columns() {
        for i in shape.column_top(j).max(1)..=shape.column_bottom(j) {
            out.push(GapPosition::new(i, j));
        }
    }
    out
}

/// Where a letter of the reading word came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Source {
    Box { row: usize, col: usize },
    Edge { row: usize, col: usize },
}

impl Source {
    pub fn row(&self) -> usize {
        match *self {
            Source::Box { row, .. } | Source::Edge { row, .. } => row,
        }
    }

    pub fn col(&self) -> usize {
        match *self {
            Source::Box { col, .. } | Source::Edge { col, .. } => col,
        }
    }

    pub fn is_edge(&self) -> bool {
        matches!(self, Source::Edge { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Letter {
    pub label: usize,
    pub source: Source,
}

/// Column reading word: columns right to left, each read top to bottom.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn labels(&self) -> Vec<usize> {
        self.0.iter().map(|l| l.label).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First 1-based position at which some prefix has more `ℓ+1`s than `ℓ`s.
    pub fn first_lattice_violation(&self) -> Option<usize> {
        first_lattice_violation(&self.labels())
    }

    pub fn is_lattice(&self) -> bool {
        self.first_lattice_violation().is_none()
    }
}

pub(crate) fn first_lattice_violation(labels: &[usize]) -> Option<usize> {
    let mut counts: Vec<usize> = Vec::new();
    for (p, &l) in labels.iter().enumerate() {
        if counts.len() < l + 1 {
            counts.resize(l + 1, 0);
        }
        counts[l] += 1;
        if l >= 2 && counts[l] > counts[l - 1] {
            return Some(p + 1);
        }
    }
    None
}

/// A skew tableau with box labels and edge label sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeLabeledTableau {
    shape: SkewShape,
    boxes: BTreeMap<(usize, usize), usize>,
    edges: BTreeMap<GapPosition, Vec<usize>>,
}

impl EdgeLabeledTableau {
    /// Checks that `boxes` covers exactly the skew boxes and that every
    /// edge set sits on a legal gap. Empty edge sets are dropped.
    /// Semistandardness is not checked here.
    pub fn new(
        shape: SkewShape,
        boxes: BTreeMap<(usize, usize), usize>,
        edges: BTreeMap<GapPosition, Vec<usize>>,
    ) -> Result<Self> {
        let skew = shape.skew_boxes();
        if skew.len() != boxes.len() || skew.iter().any(|b| !boxes.contains_key(b)) {
            return Err(Error::Precondition(
                "box labels must cover exactly the skew boxes".into(),
            ));
        }
        let mut kept = BTreeMap::new();
        for (g, set) in edges {
            if set.is_empty() {
                continue;
            }
            if !shape.is_legal_gap(g) {
                return Err(Error::Precondition(format!(
                    "edge ({}, {}) is not labelable",
                    g.row, g.col
                )));
            }
            kept.insert(g, set);
        }
        Ok(EdgeLabeledTableau {
            shape,
            boxes,
            edges: kept,
        })
    }

    /// The tableau with no boxes and no edge labels on `ν/ν`.
    pub fn empty(shape: SkewShape) -> Result<Self> {
        EdgeLabeledTableau::new(shape, BTreeMap::new(), BTreeMap::new())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn box_labels(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.boxes
    }

    pub fn edge_labels(&self) -> &BTreeMap<GapPosition, Vec<usize>> {
        &self.edges
    }

    pub fn num_edge_labels(&self) -> usize {
        self.edges.values().map(Vec::len).sum()
    }

    pub fn edge_set(&self, g: GapPosition) -> &[usize] {
        self.edges.get(&g).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Labels of column `j` from top to bottom with their sources.
    pub fn column(&self, j: usize) -> Vec<Letter> {
        let top = self.shape.column_top(j);
        let bottom = self.shape.column_bottom(j);
        let mut out = Vec::new();
        let push_gap = |out: &mut Vec<Letter>, i: usize| {
            for &l in self.edge_set(GapPosition::new(i, j)) {
                out.push(Letter {
                    label: l,
                    source: Source::Edge { row: i, col: j },
                });
            }
        };
        if top >= 1 {
            push_gap(&mut out, top);
        }
        for i in top + 1..=bottom {
            out.push(Letter {
                label: self.boxes[&(i, j)],
                source: Source::Box { row: i, col: j },
            });
            push_gap(&mut out, i);
        }
        out
    }

    pub fn reading_word(&self) -> Word {
        Word(
            (1..=self.shape.num_columns())
                .rev()
                .flat_map(|j| self.column(j))
                .collect(),
        )
    }

    /// Rebuilds a tableau from a source-annotated word.
    pub fn from_word(shape: SkewShape, word: &Word) -> Result<Self> {
        let mut boxes = BTreeMap::new();
        let mut edges: BTreeMap<GapPosition, Vec<usize>> = BTreeMap::new();
        for l in &word.0 {
            match l.source {
                Source::Box { row, col } => {
                    if boxes.insert((row, col), l.label).is_some() {
                        return Err(Error::Precondition(format!(
                            "box ({row}, {col}) labeled twice"
                        )));
                    }
                }
                Source::Edge { row, col } => {
                    edges.entry(GapPosition::new(row, col)).or_default().push(l.label)
                }
            }
        }
        for set in edges.values_mut() {
            set.sort_unstable();
        }
        EdgeLabeledTableau::new(shape, boxes, edges)
    }

    pub fn is_semistandard(&self) -> bool {
        if self.boxes.values().any(|&l| l == 0) || self.edges.values().flatten().any(|&l| l == 0) {
            return false;
        }
        for set in self.edges.values() {
            if set.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        for (&(i, j), &l) in &self.boxes {
            if let Some(&right) = self.boxes.get(&(i, j + 1)) {
                if l > right {
                    return false;
                }
            }
        }
        (1..=self.shape.num_columns()).all(|j| {
            self.column(j)
                .windows(2)
                .all(|w| w[0].label < w[1].label)
        })
    }

    pub fn is_lattice(&self) -> bool {
        self.reading_word().is_lattice()
    }

    /// Labels `ℓ` sitting in a box of row `i < ℓ` or in `gap(i, j)` with `i < ℓ`.
    pub fn too_high_labels(&self) -> Vec<Letter> {
        self.reading_word()
            .0
            .into_iter()
            .filter(|l| l.label > l.source.row())
            .collect()
    }

    /// Semistandard, lattice and nothing too high.
    pub fn is_witness(&self) -> bool {
        self.is_semistandard() && self.is_lattice() && self.too_high_labels().is_empty()
    }

    /// Multiplicity of each label `1, 2, …, max`, boxes and edges combined.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for l in self.boxes.values().chain(self.edges.values().flatten()) {
            if counts.len() < *l {
                counts.resize(*l, 0);
            }
            counts[*l - 1] += 1;
        }
        counts
    }

    /// The content as a partition, if it is one.
    pub fn content_partition(&self) -> Option<Partition> {
        Partition::new(self.content()).ok()
    }

    /// The `t_p - t_q` factor of every edge label, in reading order.
    pub fn weight_factors(&self) -> Result<Vec<(Letter, usize, usize)>> {
        let word = self.reading_word();
        let mut out = Vec::new();
        for (k, letter) in word.0.iter().enumerate() {
            let Source::Edge { row, col } = letter.source else {
                continue;
            };
            let l = letter.label;
            let rho = word.0[..k]
                .iter()
                .filter(|x| x.label == l && x.source.col() > col)
                .count();
            let p = self.shape.dist(row, col);
            let q = p + row + 1 + rho;
            if q <= l || q - l <= p {
                return Err(Error::Calibration(format!(
                    "edge label {l} at gap ({row}, {col}) gives t_{p} - t_{}",
                    (q as isize) - (l as isize)
                )));
            }
            out.push((*letter, p, q - l));
        }
        Ok(out)
    }

    /// `∏ (t_p - t_q)` over all edge labels; boxes contribute `1`.
    pub fn weight(&self) -> Result<TPolynomial> {
        if !self.is_semistandard() {
            return Err(Error::Precondition("tableau is not semistandard".into()));
        }
        if !self.is_lattice() {
            return Err(Error::Precondition("tableau is not lattice".into()));
        }
        if !self.too_high_labels().is_empty() {
            return Err(Error::Precondition("tableau has a label that is too high".into()));
        }
        Ok(self
            .weight_factors()?
            .into_iter()
            .fold(TPolynomial::one(), |acc, (_, p, q)| &acc * &TPolynomial::binomial(p, q)))
    }
}

impl fmt::Display for EdgeLabeledTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Builds a tableau from `((row, col), label)` boxes and `((row, col), labels)` edges.
    pub fn tableau(
        outer: &str,
        inner: &str,
        rows: usize,
        boxes: &[((usize, usize), usize)],
        edges: &[((usize, usize), &[usize])],
    ) -> EdgeLabeledTableau {
        let shape = SkewShape::new(p(outer), p(inner), rows).unwrap();
        EdgeLabeledTableau::new(
            shape,
            boxes.iter().copied().collect(),
            edges
                .iter()
                .map(|&((i, j), s)| (GapPosition::new(i, j), s.to_vec()))
                .collect(),
        )
        .unwrap()
    }

    /// Semistandard example on (4,2,2)/(2,1) with content (3,3,2).
    pub fn content_example() -> EdgeLabeledTableau {
        tableau(
            "4,2,2",
            "2,1",
            3,
            &[((1, 3), 1), ((1, 4), 1), ((2, 2), 1), ((3, 1), 2), ((3, 2), 3)],
            &[((1, 3), &[2, 3]), ((1, 4), &[2])],
        )
    }

    /// The worked weight example on (4,2,2)/(4,1), content (3,2,1).
    pub fn weight_example() -> EdgeLabeledTableau {
        tableau(
            "4,2,2",
            "4,1",
            3,
            &[((2, 2), 1), ((3, 1), 2), ((3, 2), 2)],
            &[((1, 3), &[1]), ((1, 4), &[1]), ((3, 1), &[3])],
        )
    }

    /// Witness for (4,2,1),(3,2) inside (4,3,1).
    pub fn pieri_example() -> EdgeLabeledTableau {
        tableau(
            "4,3,1",
            "4,2,1",
            3,
            &[((2, 3), 2)],
            &[((1, 3), &[1]), ((1, 4), &[1]), ((3, 1), &[1, 2])],
        )
    }

    /// The tableau whose reading word is 1 1̲ 2 2 3 3 on (6,4,2)/(5,2).
    pub fn cascade_example() -> EdgeLabeledTableau {
        tableau(
            "6,4,2",
            "5,2",
            3,
            &[((1, 6), 1), ((2, 3), 2), ((2, 4), 2), ((3, 1), 3), ((3, 2), 3)],
            &[((1, 5), &[1])],
        )
    }
}
