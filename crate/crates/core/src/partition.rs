//! Partitions, index sets and real spectra, together with the set-and-shape
//! combinatorics used by the Horn machinery: the bijection between
//! `d`-subsets of `[r]` and partitions in a `d x (r-d)` rectangle, duals,
//! merges, selections and Fulton's restriction/extension of index sets.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros. Two partitions are equal iff their canonical forms are.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(
                parts.iter().map(|p| p.to_string()).collect(),
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted parts are weakly decreasing")
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The 1-based part `λ_i`, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// Column length `λ'_j` (1-based).
    pub fn column_length(&self, j: usize) -> usize {
        if j == 0 {
            return self.length();
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn conjugate(&self) -> Partition {
        Partition {
            parts: (1..=self.first()).map(|j| self.column_length(j)).collect(),
        }
    }

    /// Parts padded with zeros to length `r`; `None` if `λ` has more than `r` parts.
    pub fn padded(&self, r: usize) -> Option<Vec<usize>> {
        if self.length() > r {
            return None;
        }
        let mut v = self.parts.clone();
        v.resize(r, 0);
        Some(v)
    }

    /// `true` iff `self ⊆ outer` componentwise.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        contains(self, outer)
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.length() <= rows && self.first() <= cols
    }

    /// The partition with every part multiplied by `n`.
    pub fn stretch(&self, n: usize) -> Partition {
        stretch(self, n)
    }

    /// Boxes `(i, j)` in matrix coordinates, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// Partitions obtained by adding a single box.
    pub fn add_box_in_row(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.length() + 1 {
            return None;
        }
        if row > 1 && self.part(row - 1) == self.part(row) {
            return None;
        }
        let mut v = self.parts.clone();
        if row == v.len() + 1 {
            v.push(1);
        } else {
            v[row - 1] += 1;
        }
        Some(Partition { parts: v })
    }

    fn fit_error(&self, rows: usize, cols: usize) -> Error {
        Error::DoesNotFit {
            partition: self.to_string(),
            rows,
            cols,
        }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Comma-separated parts; the empty string for `∅`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list::<usize>(s)?;
        Partition::new(parts)
    }
}

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() || s == "∅" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("bad entry {x:?} in {s:?}")))
        })
        .collect()
}

/// Containment of Young diagrams: `inner_i <= outer_i` for every `i`.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.length() <= outer.length()
        && inner
            .parts
            .iter()
            .zip(&outer.parts)
            .all(|(a, b)| a <= b)
}

pub fn stretch(lambda: &Partition, n: usize) -> Partition {
    Partition::new(lambda.parts.iter().map(|p| p * n).collect()).expect("scaling keeps order")
}

/// Merge of the parts of two partitions, sorted decreasingly.
pub fn phi(lambda: &Partition, alpha: &Partition) -> Partition {
    let mut v: Vec<usize> = lambda.parts.iter().chain(&alpha.parts).copied().collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition { parts: v }
}

/// All partitions inside the `rows x cols` rectangle, in reverse
/// lexicographic order of their padded part vectors.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    fn rec(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if prefix.len() == rows {
            out.push(Partition::new(prefix.clone()).unwrap());
            return;
        }
        for p in (0..=max).rev() {
            prefix.push(p);
            rec(rows, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// All partitions contained in `outer`.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    fn rec(outer: &[usize], i: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == outer.len() {
            out.push(Partition::new(prefix.clone()).unwrap());
            return;
        }
        for p in (0..=max.min(outer[i])).rev() {
            prefix.push(p);
            rec(outer, i + 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&outer.parts, 0, outer.first(), &mut Vec::new(), &mut out);
    out
}

/// A subset of `[r] = {1, …, r}` with its ambient `r` recorded.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexSet {
    ambient: usize,
    elements: Vec<usize>,
}

impl IndexSet {
    pub fn new(ambient: usize, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!(
                "repeated element in index set {elements:?}"
            )));
        }
        if let Some(&bad) = elements.iter().find(|&&e| e == 0 || e > ambient) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                ambient,
            });
        }
        Ok(IndexSet { ambient, elements })
    }

    /// `[r]` itself.
    pub fn full(ambient: usize) -> Self {
        IndexSet {
            ambient,
            elements: (1..=ambient).collect(),
        }
    }

    pub fn empty(ambient: usize) -> Self {
        IndexSet {
            ambient,
            elements: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// All `d`-subsets of `[r]` in lexicographic order.
    pub fn subsets(ambient: usize, d: usize) -> Vec<IndexSet> {
        fn rec(start: usize, ambient: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
            if cur.len() == d {
                out.push(IndexSet {
                    ambient,
                    elements: cur.clone(),
                });
                return;
            }
            for e in start..=ambient {
                if ambient - e + 1 < d - cur.len() {
                    break;
                }
                cur.push(e);
                rec(e + 1, ambient, d, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if d <= ambient {
            rec(1, ambient, d, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Parses a comma-separated list of elements.
    pub fn parse(ambient: usize, s: &str) -> Result<Self> {
        IndexSet::new(ambient, parse_list(s)?)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.elements.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// `τ(I) = (i_d - d, …, i_2 - 2, i_1 - 1)`.
pub fn tau(set: &IndexSet) -> Partition {
    let parts = set
        .elements
        .iter()
        .enumerate()
        .rev()
        .map(|(k, &i)| i - (k + 1))
        .collect();
    Partition::new(parts).expect("tau of a strictly increasing set is a partition")
}

/// Inverse of [`tau`] for partitions in the `d x (r-d)` rectangle.
pub fn tau_inverse(lambda: &Partition, d: usize, r: usize) -> Result<IndexSet> {
    if d > r || !lambda.fits_in(d, r - d) {
        return Err(lambda.fit_error(d, r.saturating_sub(d)));
    }
    let elements = (1..=d).map(|k| lambda.part(d + 1 - k) + k).collect();
    IndexSet::new(r, elements)
}

/// Complement of `λ` in `d x (r-d)` rotated by 180 degrees.
pub fn dual_partition(lambda: &Partition, d: usize, r: usize) -> Result<Partition> {
    if d > r || !lambda.fits_in(d, r - d) {
        return Err(lambda.fit_error(d, r.saturating_sub(d)));
    }
    let w = r - d;
    Partition::new((1..=d).map(|i| w - lambda.part(d + 1 - i)).collect())
}

/// `I∨ = {r + 1 - i : i ∈ I}`.
pub fn dual_set(set: &IndexSet) -> IndexSet {
    let r = set.ambient;
    let mut elements: Vec<usize> = set.elements.iter().map(|&i| r + 1 - i).collect();
    elements.reverse();
    IndexSet {
        ambient: r,
        elements,
    }
}

/// `[r] \ I`.
pub fn complement_set(set: &IndexSet) -> IndexSet {
    let elements = (1..=set.ambient)
        .filter(|e| set.elements.binary_search(e).is_err())
        .collect();
    IndexSet {
        ambient: set.ambient,
        elements,
    }
}

/// `I_F = {i_f : f ∈ F}` where `F ⊆ [|I|]`.
pub fn restrict_set(set: &IndexSet, positions: &IndexSet) -> Result<IndexSet> {
    if positions.ambient != set.len() {
        return Err(Error::AmbientMismatch {
            expected: set.len(),
            found: positions.ambient,
        });
    }
    let elements = positions
        .elements
        .iter()
        .map(|&f| set.elements[f - 1])
        .collect();
    Ok(IndexSet {
        ambient: set.ambient,
        elements,
    })
}

/// `I_F^+ = I ∪ (I^c)_F` where `F ⊆ [r - |I|]`.
pub fn extend_set(set: &IndexSet, positions: &IndexSet) -> Result<IndexSet> {
    let comp = complement_set(set);
    let added = restrict_set(&comp, positions)?;
    let mut elements = set.elements.clone();
    elements.extend(added.elements);
    elements.sort_unstable();
    Ok(IndexSet {
        ambient: set.ambient,
        elements,
    })
}

/// A weakly decreasing vector of exact rationals of fixed length `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealSpectrum {
    entries: Vec<BigRational>,
}

impl RealSpectrum {
    pub fn new(entries: Vec<BigRational>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(
                entries.iter().map(|p| p.to_string()).collect(),
            ));
        }
        Ok(RealSpectrum { entries })
    }

    /// A partition padded with zeros to length `r`.
    pub fn from_partition(lambda: &Partition, r: usize) -> Result<Self> {
        let padded = lambda
            .padded(r)
            .ok_or_else(|| lambda.fit_error(r, usize::MAX))?;
        Ok(RealSpectrum {
            entries: padded
                .into_iter()
                .map(|p| BigRational::from_integer(p.into()))
                .collect(),
        })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        RealSpectrum::new(
            values
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The trace `Σ x_i`.
    pub fn sum(&self) -> BigRational {
        self.entries.iter().fold(BigRational::zero(), |a, b| a + b)
    }

    /// Sum of the entries at the positions of `set`.
    pub fn sum_over(&self, set: &IndexSet) -> BigRational {
        set.elements()
            .iter()
            .fold(BigRational::zero(), |a, &i| a + &self.entries[i - 1])
    }

    /// Multiplies every entry by a positive rational.
    pub fn scale(&self, c: &BigRational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::Precondition("scale factor must be positive".into()));
        }
        Ok(RealSpectrum {
            entries: self.entries.iter().map(|e| e * c).collect(),
        })
    }

    /// Entries at the positions of `set`; requires `set.ambient() == len`.
    pub fn select(&self, set: &IndexSet) -> Result<Self> {
        if set.ambient() != self.len() {
            return Err(Error::AmbientMismatch {
                expected: self.len(),
                found: set.ambient(),
            });
        }
        Ok(RealSpectrum {
            entries: set
                .elements()
                .iter()
                .map(|&i| self.entries[i - 1].clone())
                .collect(),
        })
    }
}

impl FromStr for RealSpectrum {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RealSpectrum::new(parse_list::<BigRational>(s)?)
    }
}

impl fmt::Display for RealSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl Serialize for RealSpectrum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        v.serialize(s)
    }
}

/// `λ_I`: the parts of `λ` (padded to `set.ambient()`) at the positions of `set`.
pub fn select(lambda: &Partition, set: &IndexSet) -> Result<Partition> {
    let r = set.ambient();
    let padded = lambda.padded(r).ok_or(Error::LengthMismatch {
        expected: r,
        found: lambda.length(),
    })?;
    Partition::new(set.elements().iter().map(|&i| padded[i - 1]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn set(r: usize, s: &str) -> IndexSet {
        IndexSet::parse(r, s).unwrap()
    }

    #[test]
    fn canonical_form_trims_zeros() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p("2,1"));
        assert_eq!(p("").size(), 0);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!("3,x".parse::<Partition>().is_err());
    }

    #[test]
    fn containment() {
        assert!(contains(&p("2,1"), &p("4,2,2")));
        assert!(!contains(&p("3"), &p("2,1,1")));
        for nu in partitions_in_box(3, 3) {
            assert!(contains(&Partition::empty(), &nu));
        }
    }

    #[test]
    fn stretching() {
        assert_eq!(stretch(&p("2,1"), 3), p("6,3"));
        assert_eq!(stretch(&p(""), 4), p(""));
        assert_eq!(stretch(&p("1"), 2), p("2"));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&set(5, "1,2,3")), p(""));
        assert_eq!(tau(&set(5, "3,4,5")), p("2,2,2"));
        assert_eq!(tau(&set(5, "1,3,4")), p("1,1"));
        assert_eq!(tau(&IndexSet::empty(4)), p(""));
    }

    #[test]
    fn tau_inverse_examples() {
        assert_eq!(tau_inverse(&p(""), 2, 4).unwrap(), set(4, "1,2"));
        assert_eq!(tau_inverse(&p("1,1"), 3, 5).unwrap(), set(5, "1,3,4"));
        assert_eq!(tau_inverse(&p("2,2"), 2, 4).unwrap(), set(4, "3,4"));
        assert!(tau_inverse(&p("3"), 2, 4).is_err());
        assert!(tau_inverse(&p("1,1,1"), 2, 4).is_err());
    }

    #[test]
    fn tau_round_trips() {
        for r in 1..=6 {
            for d in 0..=r {
                for lambda in partitions_in_box(d, r - d) {
                    assert_eq!(tau(&tau_inverse(&lambda, d, r).unwrap()), lambda);
                }
                for s in IndexSet::subsets(r, d) {
                    assert_eq!(tau_inverse(&tau(&s), d, r).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn duals() {
        assert_eq!(dual_partition(&p(""), 2, 5).unwrap(), p("3,3"));
        assert_eq!(dual_partition(&p("2,1"), 2, 4).unwrap(), p("1"));
        assert!(dual_partition(&p("3"), 2, 4).is_err());
        for lambda in partitions_in_box(2, 3) {
            let d = dual_partition(&lambda, 2, 5).unwrap();
            assert_eq!(dual_partition(&d, 2, 5).unwrap(), lambda);
        }
        assert_eq!(dual_set(&set(4, "1,2")), set(4, "3,4"));
        assert_eq!(dual_set(&set(4, "1,3")), set(4, "2,4"));
        for r in [4, 5] {
            for s in IndexSet::subsets(r, 2) {
                assert_eq!(
                    tau(&dual_set(&s)),
                    dual_partition(&tau(&s), 2, r).unwrap()
                );
            }
        }
    }

    #[test]
    fn phi_merges() {
        assert_eq!(phi(&p("2,1"), &p("")), p("2,1"));
        assert_eq!(phi(&p("3,1"), &p("2,2")), p("3,2,2,1"));
        assert_eq!(phi(&p("1"), &p("1")), p("1,1"));
    }

    #[test]
    fn selections() {
        assert_eq!(select(&p("4,2,1"), &set(3, "1,3")).unwrap(), p("4,1"));
        assert_eq!(select(&p("4,2,1"), &IndexSet::full(3)).unwrap(), p("4,2,1"));
        assert_eq!(select(&p("4,2,1"), &set(4, "2,4")).unwrap(), p("2"));
        assert!(select(&p("4,2,1,1"), &set(3, "1")).is_err());
        let x = RealSpectrum::from_integers(&[4, 2, 1]).unwrap();
        assert_eq!(
            x.select(&set(3, "1,3")).unwrap(),
            RealSpectrum::from_integers(&[4, 1]).unwrap()
        );
        assert!(x.select(&set(4, "1")).is_err());
    }

    #[test]
    fn complements_and_extensions() {
        assert_eq!(complement_set(&set(4, "1,3")), set(4, "2,4"));
        assert_eq!(complement_set(&IndexSet::empty(3)), IndexSet::full(3));
        assert_eq!(complement_set(&IndexSet::full(3)), IndexSet::empty(3));

        assert_eq!(
            restrict_set(&set(6, "2,4,5"), &set(3, "1,3")).unwrap(),
            set(6, "2,5")
        );
        assert_eq!(
            restrict_set(&set(6, "2,4,5"), &IndexSet::full(3)).unwrap(),
            set(6, "2,4,5")
        );
        assert_eq!(restrict_set(&set(4, "1,2"), &set(2, "2")).unwrap(), set(4, "2"));
        assert!(restrict_set(&set(4, "1,2"), &set(3, "2")).is_err());

        assert_eq!(extend_set(&set(4, "1,3"), &set(2, "1")).unwrap(), set(4, "1,2,3"));
        assert_eq!(
            extend_set(&set(4, "1,3"), &IndexSet::empty(2)).unwrap(),
            set(4, "1,3")
        );
        assert_eq!(
            extend_set(&IndexSet::empty(4), &set(4, "2,3")).unwrap(),
            set(4, "2,3")
        );
        assert!(extend_set(&set(4, "1,3"), &set(3, "1")).is_err());
    }

    #[test]
    fn complements_preserve_containment() {
        for r in 1..=5 {
            let shapes = partitions_in_box(r, 2);
            for nu in &shapes {
                for mu in subpartitions(nu) {
                    for d in 1..r {
                        let subsets = IndexSet::subsets(r, d);
                        for i in &subsets {
                            for j in &subsets {
                                if !contains(&tau(i), &tau(j)) {
                                    continue;
                                }
                                let a = select(&mu, &complement_set(i)).unwrap();
                                let b = select(nu, &complement_set(j)).unwrap();
                                assert!(contains(&a, &b), "{mu} {nu} {i} {j}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn boxes_and_columns() {
        let l = p("3,1");
        assert_eq!(l.column_length(1), 2);
        assert_eq!(l.column_length(3), 1);
        assert_eq!(l.column_length(4), 0);
        assert_eq!(l.conjugate(), p("2,1,1"));
        assert_eq!(l.boxes().count(), 4);
        assert_eq!(l.add_box_in_row(2), Some(p("3,2")));
        assert_eq!(p("2,2").add_box_in_row(2), None);
        assert_eq!(l.add_box_in_row(3), Some(p("3,1,1")));
    }

    #[test]
    fn subpartition_enumeration() {
        assert_eq!(subpartitions(&p("2,1")).len(), 5);
        assert_eq!(partitions_in_box(3, 3).len(), 20);
        assert_eq!(partitions_in_box(2, 2).len(), 6);
    }

    #[test]
    fn spectra_parse() {
        let x: RealSpectrum = "1/2,0,-3".parse().unwrap();
        assert_eq!(x.len(), 3);
        assert!("0,1".parse::<RealSpectrum>().is_err());
    }
}
