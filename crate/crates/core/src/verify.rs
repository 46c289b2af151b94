//! Exhaustive checks over all shapes in a box, run in parallel.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::coefficient::{eq_nonzero, lr_coef};
use crate::error::Result;
use crate::horn::{classical_feasible, eq_nonzero_via_horn_with_rows};
use crate::oracle::cross_check;
use crate::partition::{partitions_in_box, subpartitions, Partition, RealSpectrum};

/// Failures beyond this many are counted but not listed.
const MAX_LISTED: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checked: usize,
    pub failure_count: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn from_results(suite: &str, results: Vec<(usize, Vec<String>)>) -> Self {
        let checked = results.iter().map(|(n, _)| n).sum();
        let all: Vec<String> = results.into_iter().flat_map(|(_, f)| f).collect();
        SuiteReport {
            suite: suite.to_string(),
            passed: all.is_empty(),
            checked,
            failure_count: all.len(),
            failures: all.into_iter().take(MAX_LISTED).collect(),
        }
    }
}

/// Nonvanishing is unchanged by stretching: for every `ν` in the box and
/// `λ, μ ⊆ ν` with `|λ| + |μ| >= |ν|`, compares `N = 1` with each stretch.
pub fn saturation_suite(rows: usize, cols: usize, stretches: &[usize]) -> SuiteReport {
    let outers = partitions_in_box(rows, cols);
    let results = outers
        .par_iter()
        .map(|nu| {
            let inner = subpartitions(nu);
            let mut checked = 0;
            let mut failures = Vec::new();
            for lambda in &inner {
                for mu in &inner {
                    if lambda.size() + mu.size() < nu.size() {
                        continue;
                    }
                    let base = eq_nonzero(lambda, mu, nu).nonzero;
                    for &n in stretches {
                        checked += 1;
                        let stretched =
                            eq_nonzero(&lambda.stretch(n), &mu.stretch(n), &nu.stretch(n)).nonzero;
                        if stretched != base {
                            failures.push(format!(
                                "({lambda}) ({mu}) ({nu}): N=1 gives {base}, N={n} gives {stretched}"
                            ));
                        }
                    }
                }
            }
            (checked, failures)
        })
        .collect();
    SuiteReport::from_results("saturation", results)
}

/// Tableau nonvanishing against the Horn decision for all `λ, μ ⊆ ν`
/// with at most `rows` rows and parts at most `max_part`.
pub fn horn_suite(rows: usize, max_part: usize) -> Result<SuiteReport> {
    let outers = partitions_in_box(rows, max_part);
    let results = outers
        .par_iter()
        .map(|nu| -> Result<(usize, Vec<String>)> {
            let inner = subpartitions(nu);
            let mut checked = 0;
            let mut failures = Vec::new();
            for lambda in &inner {
                for mu in &inner {
                    checked += 1;
                    let rule = eq_nonzero(lambda, mu, nu).nonzero;
                    let horn = eq_nonzero_via_horn_with_rows(lambda, mu, nu, rows)?;
                    if rule != horn {
                        failures.push(format!(
                            "({lambda}) ({mu}) ({nu}): tableaux say {rule}, inequalities say {horn}"
                        ));
                    }
                }
            }
            Ok((checked, failures))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport::from_results("horn", results))
}

/// `c_{λ,μ}^ν ≠ 0` against classical feasibility of the padded spectra,
/// for `|λ| + |μ| = |ν|` with at most `rows` rows and parts at most `max_part`.
pub fn classical_horn_suite(rows: usize, max_part: usize) -> Result<SuiteReport> {
    let shapes = partitions_in_box(rows, max_part);
    let results = shapes
        .par_iter()
        .map(|nu| -> Result<(usize, Vec<String>)> {
            let z = RealSpectrum::from_partition(nu, rows)?;
            let mut checked = 0;
            let mut failures = Vec::new();
            for lambda in &shapes {
                if lambda.size() > nu.size() {
                    continue;
                }
                let x = RealSpectrum::from_partition(lambda, rows)?;
                for mu in shapes.iter().filter(|m| lambda.size() + m.size() == nu.size()) {
                    checked += 1;
                    let y = RealSpectrum::from_partition(mu, rows)?;
                    let lr = !lr_coef(lambda, mu, nu).is_zero();
                    let feasible = classical_feasible(&x, &y, &z)?.feasible;
                    if lr != feasible {
                        failures.push(format!(
                            "({lambda}) ({mu}) ({nu}): coefficient nonzero {lr}, feasible {feasible}"
                        ));
                    }
                }
            }
            Ok((checked, failures))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport::from_results("classical-horn", results))
}

/// Rule against the factorial Schur oracle for every pair in the box, on
/// `trials` grids seeded from `seed`.
pub fn oracle_suite(rows: usize, cols: usize, trials: usize, seed: u64) -> Result<SuiteReport> {
    let shapes = partitions_in_box(rows, cols);
    let pairs: Vec<(&Partition, &Partition)> =
        shapes.iter().flat_map(|l| shapes.iter().map(move |m| (l, m))).collect();
    let results = pairs
        .par_iter()
        .map(|(lambda, mu)| -> Result<(usize, Vec<String>)> {
            let report = cross_check(lambda, mu, rows, cols, trials, seed)?;
            let failures = report
                .mismatches
                .iter()
                .map(|m| {
                    format!(
                        "({}) ({}) ({}) seed {:?}: rule {} oracle {}",
                        m.lambda, m.mu, m.nu, m.seed, m.rule, m.oracle
                    )
                })
                .collect();
            Ok((report.compared, failures))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport::from_results("oracle", results))
}
