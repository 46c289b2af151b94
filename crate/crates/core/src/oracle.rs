//! Independent checks of the tableau rule.
//!
//! Equivariant structure constants are recovered from factorial Schur
//! functions `s_λ(x | a)` in `r` variables. These vanish at the points
//! `x(ν)_i = a_{ν_i + r + 1 - i}` unless `λ ⊆ ν`, and are nonzero at
//! `x(λ)`, so evaluating `s_λ s_μ = Σ_ν c_{λμ}^ν(a) s_ν` at `x(ν)` in order
//! of increasing `|ν|` gives a triangular system for the coefficients.
//! Everything is done with exact rationals at random points `a`, and
//! compared against the tableau rule evaluated at the matching `t`.
//!
//! The classical numbers are checked separately by multiplying Schur
//! polynomials as explicit monomial expansions.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coefficient::eq_coef;
use crate::error::{Error, Result};
use crate::partition::{partitions_in_box, Partition};
use crate::poly::TPolynomial;

/// How the oracle's `a` variables are expressed through the rule's `t` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VariableMap {
    /// `a_i = t_i`
    Identity,
    /// `a_i = t_{n+1-i}`
    Reversal,
    /// `a_i = -t_i`
    Negation,
    /// `a_i = -t_{n+1-i}`
    ReversalNegation,
}

impl VariableMap {
    pub const ALL: [VariableMap; 4] = [
        VariableMap::Identity,
        VariableMap::Reversal,
        VariableMap::Negation,
        VariableMap::ReversalNegation,
    ];
}

/// Random exact values for `t_1, t_2, …` together with a Grassmannian
/// `Gr_r(C^n)`, `n = rows + cols`, and a variable map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationGrid {
    rows: usize,
    cols: usize,
    t: Vec<BigRational>,
    map: VariableMap,
    seed: Option<u64>,
}

impl EvaluationGrid {
    /// Strictly increasing rationals with small numerators and denominators.
    /// Enough values are drawn to cover `Gr_rows(C^{2(rows+cols)})`, so
    /// [`EvaluationGrid::with_cols`] can widen the grid without new draws.
    pub fn random(rows: usize, cols: usize, seed: u64, map: VariableMap) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let len = 2 * (rows + cols) + 2;
        let mut t = Vec::with_capacity(len);
        let mut cur = BigRational::new(BigInt::from(rng.gen_range(-12i64..=12)), BigInt::from(rng.gen_range(1i64..=4)));
        for _ in 0..len {
            t.push(cur.clone());
            let step = BigRational::new(BigInt::from(rng.gen_range(1i64..=9)), BigInt::from(rng.gen_range(1i64..=5)));
            cur += step;
        }
        EvaluationGrid { rows, cols, t, map, seed: Some(seed) }
    }

    pub fn from_values(rows: usize, cols: usize, t: Vec<BigRational>, map: VariableMap) -> Self {
        EvaluationGrid { rows, cols, t, map, seed: None }
    }

    /// Same `t` values, different rectangle width.
    pub fn with_cols(&self, cols: usize) -> Self {
        EvaluationGrid {
            cols,
            ..self.clone()
        }
    }

    pub fn with_map(&self, map: VariableMap) -> Self {
        EvaluationGrid { map, ..self.clone() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn n(&self) -> usize {
        self.rows + self.cols
    }

    pub fn map(&self) -> VariableMap {
        self.map
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn t(&self, i: usize) -> Option<BigRational> {
        i.checked_sub(1).and_then(|k| self.t.get(k)).cloned()
    }

    pub fn a(&self, i: usize) -> BigRational {
        let n = self.n();
        let t = |k: usize| self.t(k).expect("grid holds enough values");
        match self.map {
            VariableMap::Identity => t(i),
            VariableMap::Reversal => t(n + 1 - i),
            VariableMap::Negation => -t(i),
            VariableMap::ReversalNegation => -t(n + 1 - i),
        }
    }

    /// Evaluates a polynomial in the `t` variables.
    pub fn evaluate(&self, p: &TPolynomial) -> Result<BigRational> {
        p.evaluate(|i| self.t(i))
    }

    /// `x(ν)`, where `s_κ` vanishes unless `κ ⊆ ν`.
    pub fn point(&self, nu: &Partition) -> Vec<BigRational> {
        let r = self.rows;
        (1..=r).map(|i| self.a(nu.part(i) + r + 1 - i)).collect()
    }
}

/// Semistandard tableaux of shape `λ` with entries in `1..=max`, as rows.
fn ssyt(lambda: &Partition, max: usize) -> Vec<Vec<Vec<usize>>> {
    fn fill(
        lambda: &[usize],
        max: usize,
        row: usize,
        col: usize,
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if row == lambda.len() {
            out.push(cur.clone());
            return;
        }
        if col == lambda[row] {
            cur.push(Vec::new());
            fill(lambda, max, row + 1, 0, cur, out);
            cur.pop();
            return;
        }
        let left = if col > 0 { *cur[row].last().unwrap() } else { 1 };
        let above = if row > 0 { cur[row - 1][col] + 1 } else { 1 };
        for v in left.max(above)..=max {
            cur[row].push(v);
            fill(lambda, max, row, col + 1, cur, out);
            cur[row].pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![Vec::new()];
    fill(lambda.parts(), max, 0, 0, &mut cur, &mut out);
    // the driver pushes one empty row per finished row; strip the scaffold
    out.into_iter()
        .map(|t| t.into_iter().filter(|r| !r.is_empty()).collect())
        .collect()
}

/// `s_λ(x | a) = Σ_T ∏_{(i,j)} (x_{T(i,j)} - a_{T(i,j) + j - i})` over
/// semistandard `T` with entries at most `x.len()`.
pub fn factorial_schur_value(lambda: &Partition, x: &[BigRational], a: &dyn Fn(usize) -> BigRational) -> BigRational {
    let mut total = BigRational::zero();
    for t in ssyt(lambda, x.len()) {
        let mut term = BigRational::one();
        for (i, row) in t.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                term *= &x[v - 1] - a(v + j - i);
            }
        }
        total += term;
    }
    total
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(pivot) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != c {
            m.swap(pivot, c);
            det = -det;
        }
        det *= &m[c][c];
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let sub = &f * &m[c][k];
                m[r][k] -= sub;
            }
        }
    }
    det
}

/// The same function as a ratio of alternants,
/// `det[(x_j | a)^{λ_i + r - i}] / det[(x_j | a)^{r - i}]` with
/// `(x | a)^k = (x - a_1)⋯(x - a_k)`. Needs distinct `x_j`. Polynomial in
/// the size of `λ`, so the triangular solve uses this form.
pub fn factorial_schur_alternant(lambda: &Partition, x: &[BigRational], a: &dyn Fn(usize) -> BigRational) -> Result<BigRational> {
    let r = x.len();
    if lambda.length() > r {
        return Ok(BigRational::zero());
    }
    let power = |xj: &BigRational, k: usize| (1..=k).fold(BigRational::one(), |acc, m| acc * (xj - a(m)));
    let matrix = |shift: &dyn Fn(usize) -> usize| -> Vec<Vec<BigRational>> {
        (1..=r)
            .map(|i| x.iter().map(|xj| power(xj, shift(i))).collect())
            .collect()
    };
    let num = determinant(matrix(&|i| lambda.part(i) + r - i));
    let den = determinant(matrix(&|i| r - i));
    if den.is_zero() {
        return Err(Error::Precondition("evaluation point has repeated coordinates".into()));
    }
    Ok(num / den)
}

/// Every `c_{λμ}^ν(a)` for `ν` in the grid's rectangle, at the grid's `a`.
pub fn oracle_structure_constants(
    lambda: &Partition,
    mu: &Partition,
    grid: &EvaluationGrid,
) -> Result<BTreeMap<Partition, BigRational>> {
    let r = grid.rows();
    let mut shapes = partitions_in_box(r, grid.cols());
    shapes.sort_by_key(Partition::size);
    let a = |i: usize| grid.a(i);
    let mut found: Vec<(Partition, BigRational)> = Vec::new();
    for nu in &shapes {
        let x = grid.point(nu);
        let lhs = factorial_schur_alternant(lambda, &x, &a)? * factorial_schur_alternant(mu, &x, &a)?;
        let mut rest = lhs;
        for (kappa, c) in &found {
            if c.is_zero() || !kappa.is_contained_in(nu) {
                continue;
            }
            rest -= c * factorial_schur_alternant(kappa, &x, &a)?;
        }
        let diag = factorial_schur_alternant(nu, &x, &a)?;
        if diag.is_zero() {
            return Err(Error::Internal(format!("s_({nu}) vanishes at its own point")));
        }
        found.push((nu.clone(), rest / diag));
    }
    Ok(found.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub seed: Option<u64>,
    pub rule: String,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub rows: usize,
    pub cols: usize,
    pub map: VariableMap,
    pub grids: usize,
    pub compared: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CrossCheckReport {
    fn empty(grid: &EvaluationGrid) -> Self {
        CrossCheckReport {
            rows: grid.rows(),
            cols: grid.cols(),
            map: grid.map(),
            grids: 0,
            compared: 0,
            mismatches: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn compare(&mut self, lambda: &Partition, mu: &Partition, grid: &EvaluationGrid) -> Result<()> {
        for (nu, expected) in oracle_structure_constants(lambda, mu, grid)? {
            let rule = grid.evaluate(&eq_coef(lambda, mu, &nu, grid.rows())?)?;
            self.compared += 1;
            if rule != expected {
                self.mismatches.push(Mismatch {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                    nu,
                    seed: grid.seed(),
                    rule: rule.to_string(),
                    oracle: expected.to_string(),
                });
            }
        }
        Ok(())
    }
}

/// Compares rule and oracle for one pair `λ, μ` and every `ν` on one grid.
pub fn cross_check_grid(lambda: &Partition, mu: &Partition, grid: &EvaluationGrid) -> Result<CrossCheckReport> {
    let mut report = CrossCheckReport::empty(grid);
    report.grids = 1;
    report.compare(lambda, mu, grid)?;
    Ok(report)
}

/// [`cross_check_grid`] over `trials` random grids with seeds
/// `seed, seed + 1, …`, using `a_i = -t_i`.
pub fn cross_check(
    lambda: &Partition,
    mu: &Partition,
    rows: usize,
    cols: usize,
    trials: usize,
    seed: u64,
) -> Result<CrossCheckReport> {
    if !lambda.fits_in(rows, cols) || !mu.fits_in(rows, cols) {
        return Err(Error::Precondition(format!(
            "({lambda}) and ({mu}) must fit in {rows}x{cols}"
        )));
    }
    let first = EvaluationGrid::random(rows, cols, seed, VariableMap::Negation);
    let mut report = CrossCheckReport::empty(&first);
    for k in 0..trials as u64 {
        let grid = EvaluationGrid::random(rows, cols, seed.wrapping_add(k), VariableMap::Negation);
        report.grids += 1;
        report.compare(lambda, mu, &grid)?;
    }
    Ok(report)
}

/// Compares the rule against the oracle for every `λ, μ, ν` in the grid's rectangle.
pub fn cross_check_box(grid: &EvaluationGrid) -> Result<CrossCheckReport> {
    let shapes = partitions_in_box(grid.rows(), grid.cols());
    let mut report = CrossCheckReport::empty(grid);
    report.grids = 1;
    for lambda in &shapes {
        for mu in &shapes {
            report.compare(lambda, mu, grid)?;
        }
    }
    Ok(report)
}

type Expansion = HashMap<Vec<u32>, BigInt>;

fn schur_expansion(lambda: &Partition, vars: usize) -> Expansion {
    let mut out = Expansion::new();
    for t in ssyt(lambda, vars) {
        let mut e = vec![0u32; vars];
        for v in t.iter().flatten() {
            e[v - 1] += 1;
        }
        *out.entry(e).or_default() += 1;
    }
    out
}

/// `c_{λ,μ}^ν` by expanding `s_λ s_μ` into Schur polynomials in enough variables.
pub fn classical_oracle_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if lambda.size() + mu.size() != nu.size() {
        return BigInt::zero();
    }
    let vars = lambda.length() + mu.length();
    if nu.length() > vars {
        return BigInt::zero();
    }
    let a = schur_expansion(lambda, vars);
    let b = schur_expansion(mu, vars);
    let mut prod = Expansion::new();
    for (ea, ca) in &a {
        for (eb, cb) in &b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *prod.entry(e).or_default() += ca * cb;
        }
    }
    prod.retain(|_, c| !c.is_zero());
    // peel off lex-leading monomials; each is the shape of a Schur term
    while let Some(lead) = prod.keys().max().cloned() {
        let c = prod[&lead].clone();
        let shape = Partition::new(lead.iter().map(|&x| x as usize).collect())
            .expect("leading exponent of a symmetric polynomial is a partition");
        if shape == *nu {
            return c;
        }
        if c.is_negative() {
            break;
        }
        for (e, k) in schur_expansion(&shape, vars) {
            let entry = prod.entry(e).or_default();
            *entry -= &c * k;
        }
        prod.retain(|_, c| !c.is_zero());
    }
    BigInt::zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficient::lr_coef;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(ssyt(&p("2,1"), 3).len(), 8);
        assert_eq!(ssyt(&p(""), 3).len(), 1);
        assert_eq!(ssyt(&p("1,1,1"), 2).len(), 0);
    }

    #[test]
    fn alternant_matches_tableau_formula() {
        let grid = EvaluationGrid::random(3, 3, 7, VariableMap::Identity);
        let a = |i: usize| grid.a(i);
        let x: Vec<BigRational> = [3, -1, 5].iter().map(|&v| BigRational::from_integer(v.into())).collect();
        for lambda in partitions_in_box(3, 3) {
            assert_eq!(
                factorial_schur_alternant(&lambda, &x, &a).unwrap(),
                factorial_schur_value(&lambda, &x, &a),
                "{lambda}"
            );
        }
    }

    #[test]
    fn vanishing_at_interpolation_points() {
        let grid = EvaluationGrid::random(2, 3, 1, VariableMap::Negation);
        let a = |i: usize| grid.a(i);
        for lambda in partitions_in_box(2, 3) {
            for nu in partitions_in_box(2, 3) {
                let v = factorial_schur_value(&lambda, &grid.point(&nu), &a);
                assert_eq!(v.is_zero(), !lambda.is_contained_in(&nu), "{lambda} at {nu}");
            }
        }
    }

    #[test]
    fn only_negation_matches_the_rule() {
        let grid = EvaluationGrid::random(2, 2, 11, VariableMap::Negation);
        for map in VariableMap::ALL {
            let report = cross_check_box(&grid.with_map(map)).unwrap();
            assert_eq!(report.passed(), map == VariableMap::Negation, "{map:?}");
        }
    }

    #[test]
    fn projective_line_and_pieri() {
        let grid = EvaluationGrid::random(1, 1, 3, VariableMap::Negation);
        let c = oracle_structure_constants(&p("1"), &p("1"), &grid).unwrap();
        assert_eq!(c[&p("1")], grid.t(1).unwrap() - grid.t(2).unwrap());
        let grid = EvaluationGrid::random(2, 2, 3, VariableMap::Negation);
        let c = oracle_structure_constants(&p("1"), &p("1"), &grid).unwrap();
        assert_eq!(c[&p("1")], grid.t(2).unwrap() - grid.t(3).unwrap());
    }

    #[test]
    fn small_examples() {
        let grid = EvaluationGrid::random(1, 1, 9, VariableMap::Negation);
        let c = oracle_structure_constants(&p("1"), &p("1"), &grid).unwrap();
        assert_eq!(c[&p("1")], grid.a(2) - grid.a(1));
        let c = oracle_structure_constants(&p(""), &p(""), &grid).unwrap();
        assert_eq!(c[&p("")], BigRational::one());
        assert!(c[&p("1")].is_zero());
        let a = |i: usize| grid.a(i);
        let x = vec![BigRational::from_integer(7.into())];
        assert_eq!(factorial_schur_value(&p("1"), &x, &a), &x[0] - grid.a(1));
        assert_eq!(factorial_schur_value(&p(""), &x, &a), BigRational::one());
        let x2 = vec![BigRational::from_integer(2.into()), BigRational::from_integer(5.into())];
        let by_hand = (&x2[0] - grid.a(1)) * (&x2[0] - grid.a(2))
            + (&x2[0] - grid.a(1)) * (&x2[1] - grid.a(3))
            + (&x2[1] - grid.a(2)) * (&x2[1] - grid.a(3));
        assert_eq!(factorial_schur_value(&p("2"), &x2, &a), by_hand);
        assert!(cross_check(&p(""), &p(""), 2, 2, 2, 0).unwrap().passed());
        assert!(cross_check(&p("1"), &p("1"), 1, 1, 3, 0).unwrap().passed());
    }

    #[test]
    fn wider_rectangles_agree() {
        let grid = EvaluationGrid::random(2, 2, 5, VariableMap::Negation);
        let wide = grid.with_cols(3);
        for lambda in partitions_in_box(2, 2) {
            for mu in partitions_in_box(2, 2) {
                let narrow = oracle_structure_constants(&lambda, &mu, &grid).unwrap();
                let widened = oracle_structure_constants(&lambda, &mu, &wide).unwrap();
                for (nu, v) in narrow {
                    assert_eq!(widened[&nu], v);
                }
            }
        }
    }

    #[test]
    fn classical_oracle_values() {
        assert_eq!(classical_oracle_lr(&p("2,1"), &p("2,1"), &p("3,2,1")), 2.into());
        assert_eq!(classical_oracle_lr(&p("3"), &p("1"), &p("2,1,1")), 0.into());
        for l in partitions_in_box(3, 2) {
            for m in partitions_in_box(2, 3) {
                for n in partitions_in_box(3, 3) {
                    assert_eq!(
                        classical_oracle_lr(&l, &m, &n),
                        BigInt::from(lr_coef(&l, &m, &n)),
                        "{l} {m} {n}"
                    );
                }
            }
        }
    }
}
