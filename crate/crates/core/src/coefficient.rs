//! Classical and equivariant structure coefficients from the tableau rule.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::TPolynomial;
use crate::tableau::{self, EdgeLabeledTableau, SkewShape};

/// Shapes for which the coefficient vanishes for size or containment reasons alone.
fn trivially_zero(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    !lambda.is_contained_in(nu)
        || !mu.is_contained_in(nu)
        || nu.size() > lambda.size() + mu.size()
}

/// `c_{λ,μ}^ν`: lattice fillings of `ν/λ` with content `μ`.
pub fn lr_coef(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    if lambda.size() + mu.size() != nu.size() || trivially_zero(lambda, mu, nu) {
        return BigUint::zero();
    }
    let shape = SkewShape::new(nu.clone(), lambda.clone(), nu.length())
        .expect("containment checked above");
    tableau::count_fillings(&shape, mu)
}

/// `C_{λ,μ}^ν` for the Grassmannian with `rows` rows: the sum of the
/// weights of all witnesses. Zero when no witness exists.
pub fn eq_coef(lambda: &Partition, mu: &Partition, nu: &Partition, rows: usize) -> Result<TPolynomial> {
    if rows < nu.length().max(lambda.length()).max(mu.length()) {
        return Err(Error::Precondition(format!(
            "{rows} rows cannot hold ({lambda}), ({mu}), ({nu})"
        )));
    }
    if trivially_zero(lambda, mu, nu) {
        return Ok(TPolynomial::zero());
    }
    let shape = SkewShape::new(nu.clone(), lambda.clone(), rows)?;
    Ok(tableau::weight_sum(&shape, mu))
}

/// Sum of weights straight from the witness stream; slower than [`eq_coef`].
pub fn eq_coef_by_enumeration(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    rows: usize,
) -> Result<TPolynomial> {
    let mut total = TPolynomial::zero();
    for t in tableau::witnesses(lambda, mu, nu, rows) {
        total += t.weight()?;
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub nonzero: bool,
    pub witness: Option<EdgeLabeledTableau>,
}

impl WitnessReport {
    /// Expanded weight of the witness. A product of one binomial per edge
    /// label, so it can be large; the verdict never needs it.
    pub fn witness_weight(&self) -> Option<TPolynomial> {
        self.witness
            .as_ref()
            .map(|t| t.weight().expect("enumerated tableaux are witnesses"))
    }
}

impl Serialize for WitnessReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            nonzero: bool,
            witness: Option<String>,
            weight_factors: Option<Vec<String>>,
        }
        let weight_factors = self.witness.as_ref().map(|t| {
            t.weight_factors()
                .expect("enumerated tableaux are witnesses")
                .into_iter()
                .map(|(_, p, q)| format!("t_{p} - t_{q}"))
                .collect()
        });
        Out {
            nonzero: self.nonzero,
            witness: self.witness.as_ref().map(EdgeLabeledTableau::render),
            weight_factors,
        }
        .serialize(s)
    }
}

/// Whether `C_{λ,μ}^ν ≠ 0`, with the first witness found.
///
/// The weights of witnesses never cancel, so one witness settles the
/// question. The answer does not depend on the row count as long as `ν`
/// fits; the witness is drawn with `max(ℓ(ν), 1)` rows.
pub fn eq_nonzero(lambda: &Partition, mu: &Partition, nu: &Partition) -> WitnessReport {
    eq_nonzero_with_rows(lambda, mu, nu, nu.length().max(1))
}

pub fn eq_nonzero_with_rows(lambda: &Partition, mu: &Partition, nu: &Partition, rows: usize) -> WitnessReport {
    let first = if trivially_zero(lambda, mu, nu) {
        None
    } else {
        tableau::witnesses(lambda, mu, nu, rows).next()
    };
    match first {
        Some(t) => WitnessReport {
            nonzero: true,
            witness: Some(t),
        },
        None => WitnessReport {
            nonzero: false,
            witness: None,
        },
    }
}

/// Rewrites a translation-invariant polynomial in `y_i = t_i - t_{i+1}`.
/// The result is a polynomial whose variable `i` stands for `y_i`.
pub fn graham_decompose(p: &TPolynomial) -> Result<TPolynomial> {
    if !p.is_translation_invariant() {
        return Err(Error::NotTranslationInvariant);
    }
    Ok(p.substitute(|i| {
        let mut image = TPolynomial::zero();
        for k in 1..i {
            image = &image - &TPolynomial::var(k);
        }
        image
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationEntry {
    pub stretch: usize,
    pub nonzero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    /// Verdict at `N = 1`, the reference for every other stretch.
    pub base: bool,
    pub entries: Vec<SaturationEntry>,
    /// Stretches whose verdict differs from `N = 1`.
    pub flagged: Vec<usize>,
}

/// Nonvanishing of `C_{Nλ,Nμ}^{Nν}` for each `N`, compared against `N = 1`.
pub fn saturation_scan(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    stretches: &[usize],
) -> SaturationReport {
    let verdict = |n: usize| eq_nonzero(&lambda.stretch(n), &mu.stretch(n), &nu.stretch(n)).nonzero;
    let base = verdict(1);
    let entries: Vec<SaturationEntry> = stretches
        .iter()
        .map(|&n| SaturationEntry {
            stretch: n,
            nonzero: if n == 1 { base } else { verdict(n) },
        })
        .collect();
    let flagged = entries
        .iter()
        .filter(|e| e.nonzero != base)
        .map(|e| e.stretch)
        .collect();
    SaturationReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        base,
        entries,
        flagged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_in_box;
    use crate::poly::Monomial;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn classical_values() {
        assert_eq!(lr_coef(&p("3"), &p("2,1,1"), &p("3,2,1,1")), BigUint::from(1u32));
        assert!(lr_coef(&p("3"), &p("1"), &p("2,1,1")).is_zero());
        assert!(lr_coef(&p(""), &p("2,1"), &p("3")).is_zero());
        assert_eq!(lr_coef(&p(""), &p("3,1"), &p("3,1")), BigUint::from(1u32));
        assert_eq!(lr_coef(&p("2,1"), &p("2,1"), &p("3,2,1")), BigUint::from(2u32));
        assert_eq!(lr_coef(&p("2,1"), &p("2,1"), &p("4,2")), BigUint::from(1u32));
    }

    #[test]
    fn equivariant_values() {
        assert_eq!(
            eq_coef(&p("1"), &p("1"), &p("1"), 1).unwrap(),
            TPolynomial::binomial(1, 2)
        );
        assert_eq!(eq_coef(&p("2,1"), &p(""), &p("2,1"), 2).unwrap(), TPolynomial::one());
        assert_eq!(eq_coef(&p("1"), &p("1"), &p("1,1"), 2).unwrap(), TPolynomial::one());
        assert!(eq_coef(&p("1"), &p(""), &p("2"), 1).unwrap().is_zero());
        assert!(eq_coef(&p("1"), &p("1"), &p("1,1"), 1).is_err());
        // Pieri on Gr_2(C^4)
        assert_eq!(
            eq_coef(&p("1"), &p("1"), &p("1"), 2).unwrap(),
            TPolynomial::binomial(2, 3)
        );
    }

    #[test]
    fn nonvanishing() {
        assert!(eq_nonzero(&p("4,2,1"), &p("3,2"), &p("4,3,1")).nonzero);
        assert!(eq_nonzero(&p("4,2,1"), &p("3,3"), &p("4,3,1")).nonzero);
        assert!(eq_nonzero(&p("4,1"), &p("3,2,1"), &p("4,2,2")).nonzero);
        let r = eq_nonzero(&p("1"), &p(""), &p("2"));
        assert!(!r.nonzero && r.witness.is_none());
        let r = eq_nonzero(&p("1"), &p("1"), &p("1"));
        assert!(r.witness.unwrap().is_witness());
    }

    #[test]
    fn symmetric_homogeneous_and_graham_positive_in_small_boxes() {
        for (rows, cols) in [(2, 3), (3, 2)] {
            let shapes = partitions_in_box(rows, cols);
            for l in &shapes {
                for m in &shapes {
                    for n in &shapes {
                        let c = eq_coef(l, m, n, rows).unwrap();
                        assert_eq!(c, eq_coef(m, l, n, rows).unwrap(), "{l} {m} {n}");
                        if c.is_zero() {
                            continue;
                        }
                        assert!(c.is_homogeneous());
                        assert_eq!(c.degree(), Some((l.size() + m.size() - n.size()) as u32));
                        if l.size() + m.size() == n.size() {
                            assert_eq!(
                                c,
                                TPolynomial::constant(num_bigint::BigInt::from(lr_coef(l, m, n)))
                            );
                        }
                        assert!(graham_decompose(&c).unwrap().is_nonnegative());
                    }
                }
            }
        }
    }

    #[test]
    fn graham_examples() {
        let y1 = TPolynomial::var(1);
        assert_eq!(graham_decompose(&TPolynomial::binomial(1, 2)).unwrap(), y1);
        assert_eq!(
            graham_decompose(&TPolynomial::binomial(4, 6)).unwrap(),
            &TPolynomial::var(4) + &TPolynomial::var(5)
        );
        let prod = &TPolynomial::binomial(1, 2) * &TPolynomial::binomial(4, 6);
        let g = graham_decompose(&prod).unwrap();
        assert_eq!(g.num_terms(), 2);
        assert_eq!(g.coefficient(&Monomial::from_pairs([(1, 1), (4, 1)])), 1.into());
        assert_eq!(g.coefficient(&Monomial::from_pairs([(1, 1), (5, 1)])), 1.into());
        assert_eq!(graham_decompose(&TPolynomial::var(1)), Err(Error::NotTranslationInvariant));
    }

    #[test]
    fn saturation_examples() {
        let r = saturation_scan(&p("1"), &p("1"), &p("1"), &[1, 2, 3]);
        assert!(r.base && r.flagged.is_empty());
        let r = saturation_scan(&p("1"), &p(""), &p("2"), &[1, 2]);
        assert!(!r.base && r.flagged.is_empty());
        let r = saturation_scan(&p("4,1"), &p("3,2,1"), &p("4,2,2"), &[2]);
        assert!(r.entries[0].nonzero);
    }

    #[test]
    fn enumeration_sum_agrees() {
        for (l, m, n, r) in [("2,1", "1", "2,1", 2), ("1", "2", "2,1", 3), ("2,1", "2,1", "3,2,1", 3)] {
            assert_eq!(
                eq_coef(&p(l), &p(m), &p(n), r).unwrap(),
                eq_coef_by_enumeration(&p(l), &p(m), &p(n), r).unwrap()
            );
        }
    }
}
