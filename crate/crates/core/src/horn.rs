//! Horn triples and the eigenvalue inequalities built from them.
//!
//! For `d < r`, a triple `(I, J, K)` of `d`-subsets of `[r]` gives the
//! inequality `Σ_{i∈I} x_i + Σ_{j∈J} y_j >= Σ_{k∈K} z_k`. The
//! `lr-positive` family keeps triples with `c_{τ(I),τ(J)}^{τ(K)} ≠ 0`; the
//! larger `sdr` family keeps triples with `σ_I σ_J σ_{K∨} ≠ 0` in the
//! cohomology of `Gr_d(C^r)`. Both families cut out the same region.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::coefficient::lr_coef;
use crate::error::{Error, Result};
use crate::partition::{dual_partition, partitions_in_box, tau, IndexSet, Partition, RealSpectrum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    LrPositive,
    Sdr,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::LrPositive => "lr-positive",
            Family::Sdr => "sdr",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "lr-positive" => Ok(Family::LrPositive),
            "sdr" => Ok(Family::Sdr),
            other => Err(Error::Parse(format!("unknown triple family {other:?}"))),
        }
    }
}

/// `(I, J, K)` with the strongest certificate it carries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HornTriple {
    pub i: IndexSet,
    pub j: IndexSet,
    pub k: IndexSet,
    pub kind: Family,
}

impl HornTriple {
    pub fn d(&self) -> usize {
        self.i.len()
    }

    pub fn r(&self) -> usize {
        self.i.ambient()
    }
}

impl fmt::Display for HornTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({{{}}}, {{{}}}, {{{}}})", self.i, self.j, self.k)
    }
}

fn check_dims(d: usize, r: usize) -> Result<()> {
    if d == 0 || d >= r {
        return Err(Error::Precondition(format!("need 0 < d < r, got d={d}, r={r}")));
    }
    Ok(())
}

fn check_triple(i: &IndexSet, j: &IndexSet, k: &IndexSet) -> Result<()> {
    for s in [j, k] {
        if s.ambient() != i.ambient() {
            return Err(Error::AmbientMismatch {
                expected: i.ambient(),
                found: s.ambient(),
            });
        }
        if s.len() != i.len() {
            return Err(Error::LengthMismatch {
                expected: i.len(),
                found: s.len(),
            });
        }
    }
    Ok(())
}

/// Some `γ̃ ⊆ γ` with `|γ̃| = |α| + |β|` and `c_{α,β}^{γ̃} ≠ 0`; the
/// lexicographically greatest one if several exist.
pub fn find_contained_target(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    d: usize,
    r: usize,
) -> Result<Option<Partition>> {
    let w = r.checked_sub(d).ok_or_else(|| Error::Precondition(format!("d={d} exceeds r={r}")))?;
    for p in [alpha, beta, gamma] {
        if !p.fits_in(d, w) {
            return Err(Error::DoesNotFit {
                partition: p.to_string(),
                rows: d,
                cols: w,
            });
        }
    }
    let target = alpha.size() + beta.size();
    if target > gamma.size() {
        return Ok(None);
    }
    Ok(crate::partition::subpartitions(gamma)
        .into_iter()
        .filter(|g| g.size() == target && !lr_coef(alpha, beta, g).is_zero())
        .max_by(|a, b| a.parts().cmp(b.parts())))
}

/// Whether `σ_I σ_J σ_{K∨} ≠ 0` in the cohomology of `Gr_d(C^r)`.
pub fn in_sdr(i: &IndexSet, j: &IndexSet, k: &IndexSet) -> Result<bool> {
    check_triple(i, j, k)?;
    let (d, r) = (i.len(), i.ambient());
    Ok(find_contained_target(&tau(i), &tau(j), &tau(k), d, r)?.is_some())
}

fn is_lr_positive(i: &IndexSet, j: &IndexSet, k: &IndexSet) -> bool {
    let (a, b, c) = (tau(i), tau(j), tau(k));
    a.size() + b.size() == c.size() && !lr_coef(&a, &b, &c).is_zero()
}

fn build(d: usize, r: usize, family: Family) -> Vec<HornTriple> {
    let sets = IndexSet::subsets(r, d);
    let mut out = Vec::new();
    for i in &sets {
        for j in &sets {
            for k in &sets {
                let kind = if is_lr_positive(i, j, k) {
                    Family::LrPositive
                } else if family == Family::Sdr
                    && in_sdr(i, j, k).expect("subsets share ambient and size")
                {
                    Family::Sdr
                } else {
                    continue;
                };
                out.push(HornTriple {
                    i: i.clone(),
                    j: j.clone(),
                    k: k.clone(),
                    kind,
                });
            }
        }
    }
    out
}

type Table = Arc<Vec<HornTriple>>;
type Slot = Arc<OnceLock<Table>>;

fn table_cache() -> &'static Mutex<HashMap<(usize, usize, Family), Slot>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize, Family), Slot>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// All triples of `family` for `d`-subsets of `[r]`, in lexicographic
/// order of `(I, J, K)`. Built once per key and shared afterwards.
pub fn triples(d: usize, r: usize, family: Family) -> Result<Table> {
    check_dims(d, r)?;
    let slot = {
        let mut cache = table_cache().lock().expect("triple cache poisoned");
        cache.entry((d, r, family)).or_default().clone()
    };
    Ok(slot.get_or_init(|| Arc::new(build(d, r, family))).clone())
}

/// The `lr-positive` triples for `d`-subsets of `[r]`.
pub fn horn_triples(d: usize, r: usize) -> Result<Table> {
    triples(d, r, Family::LrPositive)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// `Σx + Σy` against `Σz`.
    Trace {
        lhs: String,
        rhs: String,
        required: String,
    },
    Inequality {
        triple: HornTriple,
        x_sum: String,
        y_sum: String,
        z_sum: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasibilityReport {
    pub feasible: bool,
    pub violation: Option<Violation>,
    pub checked_count: usize,
}

fn common_length(x: &RealSpectrum, y: &RealSpectrum, z: &RealSpectrum) -> Result<usize> {
    for s in [y, z] {
        if s.len() != x.len() {
            return Err(Error::LengthMismatch {
                expected: x.len(),
                found: s.len(),
            });
        }
    }
    Ok(x.len())
}

/// Scans every inequality of `family` for `d = 1, …, r-1` and reports the
/// first violation in scan order.
pub fn check_horn(x: &RealSpectrum, y: &RealSpectrum, z: &RealSpectrum, family: Family) -> Result<FeasibilityReport> {
    let r = common_length(x, y, z)?;
    let mut checked = 0;
    for d in 1..r {
        let table = triples(d, r, family)?;
        let violated = |t: &HornTriple| {
            x.sum_over(&t.i) + y.sum_over(&t.j)
                < z.sum_over(&t.k)
        };
        if let Some(pos) = table.par_iter().position_first(violated) {
            let t = &table[pos];
            return Ok(FeasibilityReport {
                feasible: false,
                violation: Some(Violation::Inequality {
                    triple: t.clone(),
                    x_sum: x.sum_over(&t.i).to_string(),
                    y_sum: y.sum_over(&t.j).to_string(),
                    z_sum: z.sum_over(&t.k).to_string(),
                }),
                checked_count: checked + pos + 1,
            });
        }
        checked += table.len();
    }
    Ok(FeasibilityReport {
        feasible: true,
        violation: None,
        checked_count: checked,
    })
}

fn trace_then_horn(
    x: &RealSpectrum,
    y: &RealSpectrum,
    z: &RealSpectrum,
    ok: impl Fn(&BigRational, &BigRational) -> bool,
    required: &str,
) -> Result<FeasibilityReport> {
    common_length(x, y, z)?;
    let lhs = x.sum() + y.sum();
    let rhs = z.sum();
    if !ok(&lhs, &rhs) {
        return Ok(FeasibilityReport {
            feasible: false,
            violation: Some(Violation::Trace {
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                required: required.to_string(),
            }),
            checked_count: 0,
        });
    }
    check_horn(x, y, z, Family::LrPositive)
}

/// Whether Hermitian `A, B` with spectra `x, y` can have `A + B` of spectrum `z`.
pub fn classical_feasible(x: &RealSpectrum, y: &RealSpectrum, z: &RealSpectrum) -> Result<FeasibilityReport> {
    trace_then_horn(x, y, z, |l, r| l == r, "equal")
}

/// Whether Hermitian `A, B, C` with spectra `x, y, z` can satisfy `A + B >= C`.
pub fn majorized_feasible(x: &RealSpectrum, y: &RealSpectrum, z: &RealSpectrum) -> Result<FeasibilityReport> {
    trace_then_horn(x, y, z, |l, r| l >= r, "at least")
}

/// Nonvanishing of `C_{λ,μ}^ν` decided by containment, size and the Horn
/// inequalities, with partitions padded to `max(ℓ(λ), ℓ(μ), ℓ(ν), 1)` parts.
pub fn eq_nonzero_via_horn(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<bool> {
    let r = lambda.length().max(mu.length()).max(nu.length()).max(1);
    eq_nonzero_via_horn_with_rows(lambda, mu, nu, r)
}

pub fn eq_nonzero_via_horn_with_rows(lambda: &Partition, mu: &Partition, nu: &Partition, rows: usize) -> Result<bool> {
    if lambda.size() + mu.size() < nu.size() || !lambda.is_contained_in(nu) || !mu.is_contained_in(nu) {
        return Ok(false);
    }
    let x = RealSpectrum::from_partition(lambda, rows)?;
    let y = RealSpectrum::from_partition(mu, rows)?;
    let z = RealSpectrum::from_partition(nu, rows)?;
    Ok(check_horn(&x, &y, &z, Family::LrPositive)?.feasible)
}

/// `σ_α σ_β σ_{γ∨} ≠ 0` in `H^*(Gr_d(C^r))` by expanding the product in
/// the Schur basis; only used to validate [`in_sdr`].
pub fn triple_product_nonzero(alpha: &Partition, beta: &Partition, gamma: &Partition, d: usize, r: usize) -> Result<bool> {
    let dual = dual_partition(gamma, d, r)?;
    let shapes = partitions_in_box(d, r - d);
    for kappa in &shapes {
        if crate::oracle::classical_oracle_lr(alpha, beta, kappa).is_zero() {
            continue;
        }
        if shapes
            .iter()
            .any(|rho| !crate::oracle::classical_oracle_lr(kappa, &dual, rho).is_zero())
        {
            return Ok(true);
        }
    }
    Ok(false)
}

fn table_body(triples: &[HornTriple]) -> String {
    let mut body = String::new();
    for t in triples {
        body.push_str(&format!(
            "{} {} | {} | {} | {} | {}\n",
            t.d(),
            t.r(),
            t.i,
            t.j,
            t.k,
            t.kind
        ));
    }
    body
}

fn digest(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

/// Writes triples as `d r | I | J | K | kind` lines under a checksum header.
pub fn write_triple_table(path: &Path, triples: &[HornTriple]) -> Result<()> {
    let body = table_body(triples);
    std::fs::write(path, format!("# sha256 {}\n{body}", digest(&body)))?;
    Ok(())
}

/// Reads a file written by [`write_triple_table`], verifying its checksum.
pub fn load_triple_table(path: &Path) -> Result<Vec<HornTriple>> {
    let text = std::fs::read_to_string(path)?;
    let (header, body) = text
        .split_once('\n')
        .ok_or_else(|| Error::Parse("triple table has no header".into()))?;
    let stored = header
        .strip_prefix("# sha256 ")
        .ok_or_else(|| Error::Parse(format!("bad triple table header {header:?}")))?
        .trim()
        .to_string();
    let computed = digest(body);
    if stored != computed {
        return Err(Error::Checksum { stored, computed });
    }
    body.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let fields: Vec<&str> = line.split('|').map(str::trim).collect();
            let [dims, i, j, k, kind] = fields.as_slice() else {
                return Err(Error::Parse(format!("bad triple line {line:?}")));
            };
            let dims: Vec<usize> = dims
                .split_whitespace()
                .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad dimension {x:?}"))))
                .collect::<Result<_>>()?;
            let [d, r] = dims.as_slice() else {
                return Err(Error::Parse(format!("bad dimensions in {line:?}")));
            };
            let t = HornTriple {
                i: IndexSet::parse(*r, i)?,
                j: IndexSet::parse(*r, j)?,
                k: IndexSet::parse(*r, k)?,
                kind: kind.parse()?,
            };
            if t.d() != *d || t.j.len() != *d || t.k.len() != *d {
                return Err(Error::Parse(format!("set sizes disagree with d in {line:?}")));
            }
            Ok(t)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficient::eq_nonzero;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn set(r: usize, s: &str) -> IndexSet {
        IndexSet::parse(r, s).unwrap()
    }

    fn spec(s: &str) -> RealSpectrum {
        s.parse().unwrap()
    }

    fn as_strings(t: &[HornTriple]) -> Vec<String> {
        t.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn small_tables() {
        assert_eq!(
            as_strings(&horn_triples(1, 2).unwrap()),
            vec!["({1}, {1}, {1})", "({1}, {2}, {2})", "({2}, {1}, {2})"]
        );
        let t = horn_triples(1, 3).unwrap();
        assert_eq!(t.len(), 6);
        for x in t.iter() {
            assert_eq!(x.k.elements()[0], x.i.elements()[0] + x.j.elements()[0] - 1);
        }
        assert!(horn_triples(2, 2).is_err());
        assert!(horn_triples(0, 2).is_err());
    }

    #[test]
    fn d2_r3_matches_brute_force() {
        let t = horn_triples(2, 3).unwrap();
        let sets = IndexSet::subsets(3, 2);
        let mut expected = Vec::new();
        for i in &sets {
            for j in &sets {
                for k in &sets {
                    let (a, b, c) = (tau(i), tau(j), tau(k));
                    if a.size() + b.size() == c.size()
                        && !crate::oracle::classical_oracle_lr(&a, &b, &c).is_zero()
                    {
                        expected.push((i.clone(), j.clone(), k.clone()));
                    }
                }
            }
        }
        let got: Vec<_> = t.iter().map(|x| (x.i.clone(), x.j.clone(), x.k.clone())).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn sdr_membership() {
        assert!(in_sdr(&set(2, "1"), &set(2, "1"), &set(2, "2")).unwrap());
        assert!(!in_sdr(&set(2, "2"), &set(2, "2"), &set(2, "1")).unwrap());
        assert!(in_sdr(&set(2, "1"), &set(3, "1"), &set(2, "1")).is_err());
        for r in 2..=4 {
            for d in 1..r {
                let lr = horn_triples(d, r).unwrap();
                let sdr = triples(d, r, Family::Sdr).unwrap();
                for t in lr.iter() {
                    assert!(sdr.iter().any(|s| s.i == t.i && s.j == t.j && s.k == t.k));
                }
            }
        }
    }

    #[test]
    fn sdr_agrees_with_direct_expansion() {
        for r in 2..=4 {
            for d in 1..r {
                let sets = IndexSet::subsets(r, d);
                for i in &sets {
                    for j in &sets {
                        for k in &sets {
                            assert_eq!(
                                in_sdr(i, j, k).unwrap(),
                                triple_product_nonzero(&tau(i), &tau(j), &tau(k), d, r).unwrap(),
                                "{i} {j} {k}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn contained_targets() {
        assert_eq!(find_contained_target(&p(""), &p(""), &p("2,1"), 2, 4).unwrap(), Some(p("")));
        assert_eq!(find_contained_target(&p("1"), &p("1"), &p("2,1"), 2, 4).unwrap(), Some(p("2")));
        assert_eq!(find_contained_target(&p("2"), &p("2"), &p("2,1"), 2, 4).unwrap(), None);
        assert!(find_contained_target(&p("3"), &p(""), &p(""), 2, 4).is_err());
    }

    #[test]
    fn feasibility_examples() {
        let r = check_horn(&spec("1,0"), &spec("1,0"), &spec("1,1"), Family::LrPositive).unwrap();
        assert!(r.feasible);
        assert_eq!(r.checked_count, 3);
        let r = check_horn(&spec("2,0"), &spec("0,0"), &spec("1,1"), Family::LrPositive).unwrap();
        let Some(Violation::Inequality { triple, y_sum, z_sum, .. }) = r.violation else {
            panic!("expected an inequality violation")
        };
        assert_eq!(triple.to_string(), "({2}, {1}, {2})");
        assert_eq!((y_sum.as_str(), z_sum.as_str()), ("0", "1"));
        assert!(check_horn(&spec("5"), &spec("-1"), &spec("9"), Family::Sdr).unwrap().feasible);

        assert!(classical_feasible(&spec("1,0"), &spec("1,0"), &spec("1,1")).unwrap().feasible);
        assert!(!classical_feasible(&spec("2,0"), &spec("0,0"), &spec("1,1")).unwrap().feasible);
        let r = classical_feasible(&spec("1"), &spec("1"), &spec("3")).unwrap();
        assert!(matches!(r.violation, Some(Violation::Trace { .. })));
        assert!(majorized_feasible(&spec("1"), &spec("0"), &spec("0")).unwrap().feasible);
        let r = majorized_feasible(&spec("2,0"), &spec("0,0"), &spec("1,1")).unwrap();
        assert!(matches!(r.violation, Some(Violation::Inequality { .. })));
        assert!(check_horn(&spec("1"), &spec("1,0"), &spec("1"), Family::LrPositive).is_err());
    }

    #[test]
    fn horn_decides_nonvanishing() {
        assert!(eq_nonzero_via_horn(&p("4,1"), &p("3,2,1"), &p("4,2,2")).unwrap());
        assert!(!eq_nonzero_via_horn(&p("1"), &p(""), &p("")).unwrap());
        assert!(!eq_nonzero_via_horn(&p("1"), &p(""), &p("2")).unwrap());
        let shapes = partitions_in_box(3, 3);
        for l in &shapes {
            for m in &shapes {
                for n in &shapes {
                    assert_eq!(
                        eq_nonzero_via_horn(l, m, n).unwrap(),
                        eq_nonzero(l, m, n).nonzero,
                        "{l} {m} {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn table_file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("triples.txt");
        let t = triples(2, 4, Family::Sdr).unwrap();
        write_triple_table(&path, &t).unwrap();
        assert_eq!(load_triple_table(&path).unwrap(), *t);
        let text = std::fs::read_to_string(&path).unwrap();
        std::fs::write(&path, text.replacen("| sdr", "| lr-positive", 1)).unwrap();
        assert!(matches!(load_triple_table(&path), Err(Error::Checksum { .. })));
    }
}
