//! Column-by-column search for witness tableaux.
//!
//! Columns are filled right to left, which is reading order, so the lattice
//! condition and the `ρ` counts of the weight only depend on labels already
//! placed. A search state is the next column to fill, the label counts so
//! far, and the box labels of the column just filled (they bound the boxes
//! to their left). Both the iterator and the memoized sums run on these
//! states.
//!
//! Inside a column, fills are produced in a fixed order: slots are visited
//! top to bottom; at a gap the set is closed before it is extended, and
//! labels are tried in increasing order. The iterator therefore yields
//! tableaux in a deterministic order that depends only on the input.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{EdgeLabeledTableau, GapPosition, SkewShape};
use crate::partition::Partition;
use crate::poly::TPolynomial;

#[derive(Clone, Debug)]
pub(crate) struct ColumnFill {
    /// Box labels for rows `top+1..=bottom`.
    pub boxes: Vec<usize>,
    /// Edge sets for gap rows `top..=bottom`; the row-0 entry stays empty.
    pub gaps: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct StateKey {
    col: usize,
    counts: Vec<usize>,
    right: Vec<usize>,
}

#[derive(Clone, Copy)]
enum Slot {
    Gap(usize),
    Box(usize),
}

struct Layout {
    shape: SkewShape,
    content: Vec<usize>,
    allow_edges: bool,
    /// `cap[c][ℓ-1]`: columns `1..=c` that can hold label `ℓ`.
    cap: Vec<Vec<usize>>,
}

impl Layout {
    fn new(shape: &SkewShape, content: &Partition, allow_edges: bool) -> Self {
        let content = content.parts().to_vec();
        let ncols = shape.num_columns();
        let mut cap = vec![vec![0; content.len()]; ncols + 1];
        for c in 1..=ncols {
            for l in 1..=content.len() {
                // a column holds label ℓ only in a slot of row >= ℓ
                let usable = if allow_edges {
                    shape.column_bottom(c) >= l && shape.column_bottom(c) >= 1
                } else {
                    shape.column_bottom(c) >= l && shape.column_bottom(c) > shape.column_top(c)
                };
                cap[c][l - 1] = cap[c - 1][l - 1] + usize::from(usable);
            }
        }
        Layout {
            shape: shape.clone(),
            content,
            allow_edges,
            cap,
        }
    }

    fn slots(&self, c: usize) -> Vec<Slot> {
        let top = self.shape.column_top(c);
        let bottom = self.shape.column_bottom(c);
        let mut out = vec![Slot::Gap(top)];
        for i in top + 1..=bottom {
            out.push(Slot::Box(i));
            out.push(Slot::Gap(i));
        }
        out
    }

    /// Upper bound for the box in row `i` of column `c` from its right neighbor.
    fn right_bound(&self, c: usize, right: &[usize], i: usize) -> Option<usize> {
        if c + 1 > self.shape.num_columns() {
            return None;
        }
        let top = self.shape.column_top(c + 1);
        let bottom = self.shape.column_bottom(c + 1);
        (i > top && i <= bottom).then(|| right[i - top - 1])
    }

    fn feasible_after(&self, c: usize, counts: &[usize]) -> bool {
        let cap = &self.cap[c - 1];
        counts
            .iter()
            .zip(&self.content)
            .zip(cap)
            .all(|((&have, &want), &room)| want - have <= room)
    }

    /// All fills of column `c` compatible with the state, with updated counts.
    fn column_fills(&self, c: usize, counts: &[usize], right: &[usize]) -> Vec<(ColumnFill, Vec<usize>)> {
        let slots = self.slots(c);
        let top = self.shape.column_top(c);
        let bottom = self.shape.column_bottom(c);
        let mut search = FillSearch {
            layout: self,
            col: c,
            slots: &slots,
            top,
            right,
            counts: counts.to_vec(),
            boxes: Vec::with_capacity(bottom - top),
            gaps: vec![Vec::new(); bottom - top + 1],
            out: Vec::new(),
        };
        search.slot(0, 0);
        search.out
    }
}

struct FillSearch<'a> {
    layout: &'a Layout,
    col: usize,
    slots: &'a [Slot],
    top: usize,
    right: &'a [usize],
    counts: Vec<usize>,
    boxes: Vec<usize>,
    gaps: Vec<Vec<usize>>,
    out: Vec<(ColumnFill, Vec<usize>)>,
}

impl FillSearch<'_> {
    fn can_add(&self, l: usize) -> bool {
        let k = l - 1;
        self.counts[k] < self.layout.content[k] && (k == 0 || self.counts[k] < self.counts[k - 1])
    }

    fn slot(&mut self, s: usize, last: usize) {
        if s == self.slots.len() {
            if self.layout.feasible_after(self.col, &self.counts) {
                self.out.push((
                    ColumnFill {
                        boxes: self.boxes.clone(),
                        gaps: self.gaps.clone(),
                    },
                    self.counts.clone(),
                ));
            }
            return;
        }
        let max_label = self.layout.content.len();
        match self.slots[s] {
            Slot::Gap(g) => self.gap(s, g, last),
            Slot::Box(i) => {
                let hi = self
                    .layout
                    .right_bound(self.col, self.right, i)
                    .map_or(i.min(max_label), |b| b.min(i).min(max_label));
                for l in last + 1..=hi {
                    if !self.can_add(l) {
                        continue;
                    }
                    self.counts[l - 1] += 1;
                    self.boxes.push(l);
                    self.slot(s + 1, l);
                    self.boxes.pop();
                    self.counts[l - 1] -= 1;
                }
            }
        }
    }

    fn gap(&mut self, s: usize, g: usize, last: usize) {
        self.slot(s + 1, last);
        if !self.layout.allow_edges || g == 0 {
            return;
        }
        let hi = g.min(self.layout.content.len());
        for l in last + 1..=hi {
            if !self.can_add(l) {
                continue;
            }
            self.counts[l - 1] += 1;
            self.gaps[g - self.top].push(l);
            self.gap(s, g, l);
            self.gaps[g - self.top].pop();
            self.counts[l - 1] -= 1;
        }
    }
}

fn assemble(shape: &SkewShape, columns: &[(usize, &ColumnFill)]) -> EdgeLabeledTableau {
    let mut boxes = BTreeMap::new();
    let mut edges = BTreeMap::new();
    for &(c, fill) in columns {
        let top = shape.column_top(c);
        for (k, &l) in fill.boxes.iter().enumerate() {
            boxes.insert((top + 1 + k, c), l);
        }
        for (k, set) in fill.gaps.iter().enumerate() {
            if !set.is_empty() {
                edges.insert(GapPosition::new(top + k, c), set.clone());
            }
        }
    }
    EdgeLabeledTableau::new(shape.clone(), boxes, edges)
        .expect("search only produces structurally valid fillings")
}

struct Frame {
    key: StateKey,
    fills: Vec<(ColumnFill, Vec<usize>)>,
    next: usize,
    found: bool,
}

/// Lazy stream of witness tableaux of a fixed shape and content.
pub struct Witnesses {
    layout: Option<Layout>,
    stack: Vec<Frame>,
    dead: HashSet<StateKey>,
    pending_empty: bool,
}

impl Witnesses {
    fn none() -> Self {
        Witnesses {
            layout: None,
            stack: Vec::new(),
            dead: HashSet::new(),
            pending_empty: false,
        }
    }

    fn start(shape: &SkewShape, content: &Partition, allow_edges: bool) -> Self {
        let layout = Layout::new(shape, content, allow_edges);
        let ncols = shape.num_columns();
        if ncols == 0 || layout.content.iter().sum::<usize>() == 0 {
            // only the filling with no labels at all can work
            let fits = layout.content.is_empty() && shape.num_skew_boxes() == 0;
            return Witnesses {
                pending_empty: fits,
                layout: Some(layout),
                ..Witnesses::none()
            };
        }
        let counts = vec![0; layout.content.len()];
        let mut it = Witnesses {
            layout: Some(layout),
            ..Witnesses::none()
        };
        let layout = it.layout.as_ref().unwrap();
        let fills = layout.column_fills(ncols, &counts, &[]);
        it.stack.push(Frame {
            key: StateKey {
                col: ncols,
                counts,
                right: Vec::new(),
            },
            fills,
            next: 0,
            found: false,
        });
        it
    }

    fn current(&self) -> EdgeLabeledTableau {
        let layout = self.layout.as_ref().unwrap();
        let cols: Vec<(usize, &ColumnFill)> = self
            .stack
            .iter()
            .map(|f| (f.key.col, &f.fills[f.next - 1].0))
            .collect();
        assemble(&layout.shape, &cols)
    }
}

impl Iterator for Witnesses {
    type Item = EdgeLabeledTableau;

    fn next(&mut self) -> Option<EdgeLabeledTableau> {
        let layout = self.layout.as_ref()?;
        if self.pending_empty {
            self.pending_empty = false;
            return Some(assemble(&layout.shape, &[]));
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.next < top.fills.len() {
                let idx = top.next;
                top.next += 1;
                let c = top.key.col;
                let (fill, counts) = &top.fills[idx];
                if c == 1 {
                    if *counts == layout.content {
                        top.found = true;
                        return Some(self.current());
                    }
                    continue;
                }
                let key = StateKey {
                    col: c - 1,
                    counts: counts.clone(),
                    right: fill.boxes.clone(),
                };
                if self.dead.contains(&key) {
                    continue;
                }
                let fills = layout.column_fills(c - 1, &key.counts, &key.right);
                self.stack.push(Frame {
                    key,
                    fills,
                    next: 0,
                    found: false,
                });
            } else {
                let done = self.stack.pop().unwrap();
                if done.found {
                    if let Some(parent) = self.stack.last_mut() {
                        parent.found = true;
                    }
                } else {
                    self.dead.insert(done.key);
                }
            }
        }
    }
}

/// Every semistandard lattice tableau of `shape` with content `content`
/// and no label too high, in a deterministic order.
pub fn enumerate(shape: &SkewShape, content: &Partition) -> Witnesses {
    Witnesses::start(shape, content, true)
}

/// Witnesses for the triple `(λ, μ, ν)` drawn with `rows` rows.
/// Empty when `λ ⊄ ν` or `ν` does not fit in `rows` rows.
pub fn witnesses(lambda: &Partition, mu: &Partition, nu: &Partition, rows: usize) -> Witnesses {
    match SkewShape::new(nu.clone(), lambda.clone(), rows) {
        Ok(shape) => enumerate(&shape, mu),
        Err(_) => Witnesses::none(),
    }
}

/// Memoized sum over all fillings: each column contributes a factor, the
/// total is the sum over fillings of the product of their column factors.
fn fold<V: Clone>(
    shape: &SkewShape,
    content: &Partition,
    allow_edges: bool,
    zero: V,
    one: V,
    column_factor: &dyn Fn(usize, &ColumnFill, &[usize]) -> V,
    mul: &dyn Fn(&V, &V) -> V,
    add: &dyn Fn(&mut V, V),
) -> V {
    let layout = Layout::new(shape, content, allow_edges);
    let ncols = shape.num_columns();
    if ncols == 0 || layout.content.iter().sum::<usize>() == 0 {
        let fits = layout.content.is_empty() && shape.num_skew_boxes() == 0;
        return if fits { one } else { zero };
    }
    struct Ctx<'a, V> {
        layout: &'a Layout,
        zero: V,
        one: V,
        column_factor: &'a dyn Fn(usize, &ColumnFill, &[usize]) -> V,
        mul: &'a dyn Fn(&V, &V) -> V,
        add: &'a dyn Fn(&mut V, V),
        memo: HashMap<StateKey, V>,
    }
    fn go<V: Clone>(ctx: &mut Ctx<'_, V>, key: StateKey) -> V {
        if let Some(v) = ctx.memo.get(&key) {
            return v.clone();
        }
        let c = key.col;
        let fills = ctx.layout.column_fills(c, &key.counts, &key.right);
        let mut total = ctx.zero.clone();
        for (fill, counts) in fills {
            let rest = if c == 1 {
                if counts == ctx.layout.content {
                    ctx.one.clone()
                } else {
                    continue;
                }
            } else {
                go(
                    ctx,
                    StateKey {
                        col: c - 1,
                        counts,
                        right: fill.boxes.clone(),
                    },
                )
            };
            let factor = (ctx.column_factor)(c, &fill, &key.counts);
            (ctx.add)(&mut total, (ctx.mul)(&factor, &rest));
        }
        ctx.memo.insert(key, total.clone());
        total
    }
    let mut ctx = Ctx {
        layout: &layout,
        zero,
        one,
        column_factor,
        mul,
        add,
        memo: HashMap::new(),
    };
    let start = StateKey {
        col: ncols,
        counts: vec![0; layout.content.len()],
        right: Vec::new(),
    };
    go(&mut ctx, start)
}

/// Number of witness fillings without edge labels, i.e. the classical
/// Littlewood-Richardson number.
pub(crate) fn count_fillings(shape: &SkewShape, content: &Partition) -> BigUint {
    fold(
        shape,
        content,
        false,
        BigUint::zero(),
        BigUint::one(),
        &|_, _, _| BigUint::one(),
        &|a, b| a * b,
        &|acc, v| *acc += v,
    )
}

/// Sum of weights over every witness of `shape` with content `content`.
pub(crate) fn weight_sum(shape: &SkewShape, content: &Partition) -> TPolynomial {
    let rows = shape.rows();
    let shape_ref = shape.clone();
    let factor = move |c: usize, fill: &ColumnFill, before: &[usize]| {
        let top = shape_ref.column_top(c);
        let mut w = TPolynomial::one();
        for (k, set) in fill.gaps.iter().enumerate() {
            let i = top + k;
            for &l in set {
                let p = rows + c - i;
                let q = p + i + 1 + before[l - 1] - l;
                w = &w * &TPolynomial::binomial(p, q);
            }
        }
        w
    };
    fold(
        shape,
        content,
        true,
        TPolynomial::zero(),
        TPolynomial::one(),
        &factor,
        &|a, b| a * b,
        &|acc, v| *acc += v,
    )
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn shape(outer: &str, inner: &str, rows: usize) -> SkewShape {
        SkewShape::new(p(outer), p(inner), rows).unwrap()
    }

    #[test]
    fn empty_stream_when_not_contained() {
        assert_eq!(witnesses(&p("3"), &p("1"), &p("2,1,1"), 3).count(), 0);
    }

    #[test]
    fn empty_shape_and_content() {
        let all: Vec<_> = enumerate(&shape("2,1", "2,1", 2), &p("")).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].num_edge_labels(), 0);
        assert_eq!(enumerate(&shape("", "", 1), &p("")).count(), 1);
        assert_eq!(enumerate(&shape("", "", 1), &p("1")).count(), 0);
    }

    #[test]
    fn point_class_square() {
        // σ_1 · σ_1 on P^1: a single edge label
        let all: Vec<_> = enumerate(&shape("1", "1", 1), &p("1")).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].weight().unwrap(), TPolynomial::binomial(1, 2));
    }

    #[test]
    fn every_output_is_a_witness_with_the_right_content() {
        for (outer, inner, mu, rows) in [
            ("4,2,2", "2,1", "3,2", 3),
            ("4,3,1", "4,2,1", "3,2", 3),
            ("3,2,1", "2,1", "2,1", 3),
            ("2,2", "2,1", "2,1", 2),
        ] {
            let s = shape(outer, inner, rows);
            let mut seen = HashSet::new();
            for t in enumerate(&s, &p(mu)) {
                assert!(t.is_witness(), "{t}");
                assert_eq!(t.content(), p(mu).parts().to_vec());
                assert!(seen.insert(t.reading_word()));
            }
        }
    }

    #[test]
    fn finds_the_worked_examples() {
        let t = pieri_example();
        let found: Vec<_> = enumerate(t.shape(), &p("3,2")).collect();
        assert!(found.contains(&t));
        let t = weight_example();
        let found: Vec<_> = enumerate(t.shape(), &p("3,2,1")).collect();
        assert!(found.contains(&t));
    }

    #[test]
    fn dp_matches_enumeration() {
        for (outer, inner, mu, rows) in [
            ("3,2,1", "2,1", "2,1", 3),
            ("2,2", "2,1", "2,1", 2),
            ("2,1", "1", "1", 2),
            ("3,2", "2", "2,1", 3),
            ("2,2,1", "1,1", "2,1", 3),
            ("4,3,1", "4,2,1", "3,2", 3),
        ] {
            let s = shape(outer, inner, rows);
            let by_enum = enumerate(&s, &p(mu))
                .map(|t| t.weight().unwrap())
                .fold(TPolynomial::zero(), |a, b| &a + &b);
            assert_eq!(weight_sum(&s, &p(mu)), by_enum, "{outer}/{inner} {mu}");
            let plain = enumerate(&s, &p(mu)).filter(|t| t.num_edge_labels() == 0).count();
            assert_eq!(count_fillings(&s, &p(mu)), BigUint::from(plain));
        }
    }

    #[test]
    fn deterministic_order() {
        let s = shape("3,2,1", "1", 3);
        let a: Vec<_> = enumerate(&s, &p("2,1")).collect();
        let b: Vec<_> = enumerate(&s, &p("2,1")).collect();
        assert_eq!(a, b);
    }
}
