//! Exact sparse multivariate polynomials over `Z` in indexed variables.
//!
//! Coefficients of equivariant structure constants live in `Z[t_1, t_2, …]`;
//! the same type carries Graham decompositions (variables read as `y_i`)
//! and the monomial expansions used by the classical Schur oracle
//! (variables read as `x_i`). Variable indices are 1-based.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `∏ v_i^{e_i}` stored as `(index, exponent)` pairs sorted by
/// index with every exponent positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        Monomial(vec![(i, 1)])
    }

    /// Builds from arbitrary pairs, merging repeats and dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut m: BTreeMap<usize, u32> = BTreeMap::new();
        for (i, e) in pairs {
            *m.entry(i).or_insert(0) += e;
        }
        Monomial(m.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn pairs(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0
            .binary_search_by_key(&i, |&(v, _)| v)
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Lexicographic comparison of exponent vectors with `v_1 > v_2 > …`.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va < vb {
                        return Ordering::Greater;
                    }
                    if vb < va {
                        return Ordering::Less;
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }

    /// Graded lexicographic comparison: total degree first, then [`Monomial::lex_cmp`].
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

/// A polynomial with arbitrary-precision integer coefficients. No zero
/// coefficient is ever stored, so equality is equality of term maps.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl TPolynomial {
    pub fn zero() -> Self {
        TPolynomial::default()
    }

    pub fn one() -> Self {
        TPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = TPolynomial::zero();
        p.add_term(Monomial::one(), c.into());
        p
    }

    pub fn var(i: usize) -> Self {
        let mut p = TPolynomial::zero();
        p.add_term(Monomial::var(i), BigInt::one());
        p
    }

    /// `v_p - v_q`.
    pub fn binomial(p: usize, q: usize) -> Self {
        &TPolynomial::var(p) - &TPolynomial::var(q)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = TPolynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `true` when every term has the same total degree (vacuous for zero).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Largest variable index occurring, zero for constants.
    pub fn max_var(&self) -> usize {
        self.terms
            .keys()
            .filter_map(|m| m.0.last().map(|&(v, _)| v))
            .max()
            .unwrap_or(0)
    }

    /// All coefficients nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Terms sorted by descending graded lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.grlex_cmp(a.0));
        v
    }

    /// The lex-largest monomial and its coefficient.
    pub fn lex_leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().max_by(|a, b| a.0.lex_cmp(b.0))
    }

    /// Exact evaluation; `value(i)` supplies the value of variable `i`.
    pub fn evaluate<F>(&self, mut value: F) -> Result<BigRational>
    where
        F: FnMut(usize) -> Option<BigRational>,
    {
        let mut cache: BTreeMap<usize, BigRational> = BTreeMap::new();
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for &(v, e) in &m.0 {
                let x = match cache.get(&v) {
                    Some(x) => x.clone(),
                    None => {
                        let x = value(v).ok_or_else(|| {
                            Error::Precondition(format!("no value supplied for variable {v}"))
                        })?;
                        cache.insert(v, x.clone());
                        x
                    }
                };
                for _ in 0..e {
                    term *= &x;
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> TPolynomial {
        let mut out = TPolynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let rest = Monomial::from_pairs(
                m.0.iter()
                    .map(|&(v, x)| if v == i { (v, x - 1) } else { (v, x) }),
            );
            out.add_term(rest, c * BigInt::from(e));
        }
        out
    }

    /// `true` iff `P(t + c·(1,1,…)) = P(t)`, i.e. `Σ_i ∂P/∂t_i = 0`.
    pub fn is_translation_invariant(&self) -> bool {
        let mut sum = TPolynomial::zero();
        for i in 1..=self.max_var() {
            sum += self.derivative(i);
        }
        sum.is_zero()
    }

    /// Substitutes a polynomial for each variable.
    pub fn substitute<F>(&self, mut image: F) -> TPolynomial
    where
        F: FnMut(usize) -> TPolynomial,
    {
        let mut cache: BTreeMap<usize, TPolynomial> = BTreeMap::new();
        let mut out = TPolynomial::zero();
        for (m, c) in &self.terms {
            let mut term = TPolynomial::constant(c.clone());
            for &(v, e) in &m.0 {
                let img = cache.entry(v).or_insert_with(|| image(v)).clone();
                for _ in 0..e {
                    term = &term * &img;
                }
            }
            out += term;
        }
        out
    }

    /// Multiplies by an integer.
    pub fn scale(&self, c: &BigInt) -> TPolynomial {
        TPolynomial::from_terms(self.terms.iter().map(|(m, x)| (m.clone(), x * c)))
    }

    /// Renders with a variable prefix such as `"t"` or `"y"`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = m
                .0
                .iter()
                .map(|&(v, e)| {
                    if e == 1 {
                        format!("{var}_{v}")
                    } else {
                        format!("{var}_{v}^{e}")
                    }
                })
                .collect();
            if mono.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push_str(&mono.join("*"));
            }
        }
        s
    }
}

impl fmt::Display for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl Add for &TPolynomial {
    type Output = TPolynomial;
    fn add(self, rhs: &TPolynomial) -> TPolynomial {
        let mut out = self.clone();
        out += rhs.clone();
        out
    }
}

impl Add for TPolynomial {
    type Output = TPolynomial;
    fn add(mut self, rhs: TPolynomial) -> TPolynomial {
        self += rhs;
        self
    }
}

impl AddAssign for TPolynomial {
    fn add_assign(&mut self, rhs: TPolynomial) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Neg for &TPolynomial {
    type Output = TPolynomial;
    fn neg(self) -> TPolynomial {
        TPolynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), -c)))
    }
}

impl Sub for &TPolynomial {
    type Output = TPolynomial;
    fn sub(self, rhs: &TPolynomial) -> TPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &TPolynomial {
    type Output = TPolynomial;
    fn mul(self, rhs: &TPolynomial) -> TPolynomial {
        let mut out = TPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for TPolynomial {
    type Output = TPolynomial;
    fn mul(self, rhs: TPolynomial) -> TPolynomial {
        &self * &rhs
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    coeff: String,
    exps: BTreeMap<String, u32>,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    terms: Vec<JsonTerm>,
}

impl TPolynomial {
    fn to_json_terms(&self) -> JsonPoly {
        JsonPoly {
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(m, c)| JsonTerm {
                    coeff: c.to_string(),
                    exps: m.0.iter().map(|&(v, e)| (v.to_string(), e)).collect(),
                })
                .collect(),
        }
    }

    fn from_json_terms(j: JsonPoly) -> Result<Self> {
        let mut p = TPolynomial::zero();
        for t in j.terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            let mut pairs = Vec::new();
            for (k, e) in t.exps {
                let v: usize = k
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable index {k:?}")))?;
                if v == 0 {
                    return Err(Error::Parse("variable indices are 1-based".into()));
                }
                pairs.push((v, e));
            }
            p.add_term(Monomial::from_pairs(pairs), c);
        }
        Ok(p)
    }

    /// JSON encoding with an optional Graham decomposition attached as `y_terms`.
    pub fn to_json_value(&self, graham: Option<&TPolynomial>) -> serde_json::Value {
        let mut v = serde_json::to_value(self.to_json_terms()).expect("serializable");
        if let Some(g) = graham {
            v["y_terms"] = serde_json::to_value(g.to_json_terms().terms).expect("serializable");
        }
        v
    }

    /// Parses the `terms` field (and `y_terms`, when present) of a JSON document.
    pub fn from_json_value(v: &serde_json::Value) -> Result<(TPolynomial, Option<TPolynomial>)> {
        let terms = v
            .get("terms")
            .ok_or_else(|| Error::Parse("missing \"terms\"".into()))?;
        let p: Vec<JsonTerm> =
            serde_json::from_value(terms.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let main = TPolynomial::from_json_terms(JsonPoly { terms: p })?;
        let y = match v.get("y_terms") {
            None => None,
            Some(y) => {
                let t: Vec<JsonTerm> =
                    serde_json::from_value(y.clone()).map_err(|e| Error::Parse(e.to_string()))?;
                Some(TPolynomial::from_json_terms(JsonPoly { terms: t })?)
            }
        };
        Ok((main, y))
    }
}

impl Serialize for TPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = JsonPoly::deserialize(d)?;
        TPolynomial::from_json_terms(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: usize) -> TPolynomial {
        TPolynomial::var(i)
    }

    #[test]
    fn arithmetic_cancels() {
        let a = &t(1) - &t(2);
        let b = &t(2) - &t(1);
        assert!((&a + &b).is_zero());
        let sq = &a * &a;
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.degree(), Some(2));
        assert!(sq.is_homogeneous());
        assert!(!(&sq + &TPolynomial::one()).is_homogeneous());
        assert_eq!(TPolynomial::zero().degree(), None);
    }

    #[test]
    fn evaluation_is_exact() {
        let p = &(&t(1) - &t(2)) * &(&t(4) - &t(6));
        let v = p
            .evaluate(|i| Some(BigRational::new(BigInt::from(i as i64), BigInt::from(3))))
            .unwrap();
        assert_eq!(v, BigRational::new(2.into(), 9.into()));
        assert!(p.evaluate(|_| None).is_err());
    }

    #[test]
    fn translation_invariance() {
        let p = &(&t(1) - &t(2)) * &(&t(4) - &t(6));
        assert!(p.is_translation_invariant());
        assert!(!t(1).is_translation_invariant());
        assert!(TPolynomial::constant(5).is_translation_invariant());
    }

    #[test]
    fn grlex_json_order() {
        let p = &(&t(2) * &t(2)) + &(&t(1) + &TPolynomial::constant(3));
        let v = p.to_json_value(None);
        let first = &v["terms"][0];
        assert_eq!(first["exps"]["2"], 2);
        assert_eq!(v["terms"][2]["coeff"], "3");
        let (back, y) = TPolynomial::from_json_value(&v).unwrap();
        assert_eq!(back, p);
        assert!(y.is_none());
    }

    #[test]
    fn display() {
        let p = &t(1) - &t(2);
        assert_eq!(p.to_string(), "t_1 - t_2");
        assert_eq!(TPolynomial::zero().to_string(), "0");
        assert_eq!((&p * &p).to_string(), "t_1^2 - 2*t_1*t_2 + t_2^2");
    }

    #[test]
    fn lex_leading_term() {
        let p = &(&t(1) * &t(3)) + &(&t(2) * &t(2));
        assert_eq!(p.lex_leading().unwrap().0, &Monomial::from_pairs([(1, 1), (3, 1)]));
    }
}
