//! Sparse multivariate polynomials in `a1..an` and the cyclic cover weights.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors under graded
//! lexicographic order, so two polynomials are equal exactly when their maps
//! are. Zero coefficients are never stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Ring;

/// Exponent vector, one entry per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// `a_var` with `var` 1-indexed.
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var - 1] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly<C> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Ring> MPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// The variable `a_i`, 1-indexed.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!((1..=nvars).contains(&i), "variable a{i} out of range for {nvars} variables");
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, i), C::one());
        p
    }

    /// `a1 + ... + an`.
    pub fn sum_of_vars(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        for i in 1..=nvars {
            p.add_term(Monomial::var(nvars, i), C::one());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of the linear monomial `a_r`.
    pub fn linear_coefficient(&self, r: usize) -> C {
        self.coefficient(&Monomial::var(self.nvars, r))
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        assert_eq!(m.0.len(), self.nvars, "monomial arity");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::NvarsMismatch(self.nvars, other.nvars))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.check(other)?;
        self.add_assign_unchecked(other);
        Ok(())
    }

    fn add_assign_unchecked(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), C::zero() - c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut c = ca.clone();
                c *= cb;
                out.add_term(ma.times(mb), c);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, v) in &self.terms {
            let mut v = v.clone();
            v *= c;
            out.add_term(m.clone(), v);
        }
        out
    }

    /// Substitute `a_i = values[i-1]`.
    pub fn evaluate(&self, values: &[C]) -> Result<C> {
        if values.len() != self.nvars {
            return Err(Error::NvarsMismatch(self.nvars, values.len()));
        }
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= v;
                }
            }
            total += &t;
        }
        Ok(total)
    }

    /// Sum of coefficients, i.e. the value at `a_i = 1`.
    pub fn evaluate_all_ones(&self) -> C {
        let mut total = C::zero();
        for c in self.terms.values() {
            total += c;
        }
        total
    }

    /// JSON form: terms in descending graded-lex order with string coefficients.
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| JsonTerm { exps: m.0.clone(), coef: c.to_string() })
            .collect()
    }

    pub fn from_json_terms(nvars: usize, terms: &[JsonTerm]) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for t in terms {
            if t.exps.len() != nvars {
                return Err(Error::NvarsMismatch(nvars, t.exps.len()));
            }
            let c = C::from_str_radix(&t.coef, 10)
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coef)))?;
            p.add_term(Monomial(t.exps.clone()), c);
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub exps: Vec<u32>,
    pub coef: String,
}

impl<C: Ring> Serialize for MPoly<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

/// Renders as `2*a1^2*a2 + a3`, highest graded-lex term first.
impl<C: Ring> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("a{}", i + 1) } else { format!("a{}^{}", i + 1, e) })
                .collect();
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{c}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// The cyclic index set `{i, i+1, ..., j-1}` modulo `n`, for `i != j` in `[n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CyclicInterval {
    i: usize,
    j: usize,
    n: usize,
}

impl CyclicInterval {
    pub fn new(i: usize, j: usize, n: usize) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::InvalidReflection { i, j, n });
        }
        Ok(CyclicInterval { i, j, n })
    }

    pub fn len(&self) -> usize {
        if self.i < self.j {
            self.j - self.i
        } else {
            self.n - (self.i - self.j)
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).map(move |t| (self.i - 1 + t) % self.n + 1)
    }

    /// Membership of `r` after reducing it to its representative in `[n]`.
    pub fn contains(&self, r: i64) -> bool {
        let r = ((r - 1).rem_euclid(self.n as i64) + 1) as usize;
        if self.i < self.j {
            self.i <= r && r < self.j
        } else {
            r >= self.i || r < self.j
        }
    }

    pub fn weight<C: Ring>(&self) -> MPoly<C> {
        let mut p = MPoly::zero(self.n);
        for r in self.indices() {
            p.add_term(Monomial::var(self.n, r), C::one());
        }
        p
    }
}

/// Weight of the cover `f·t_{ij} ⋖ f`: `a_i + ... + a_{j-1}` taken cyclically.
pub fn cover_weight<C: Ring>(i: usize, j: usize, n: usize) -> Result<MPoly<C>> {
    Ok(CyclicInterval::new(i, j, n)?.weight())
}

/// Whether `a_r` (with `r` reduced into `[n]`) appears in the weight of `(i, j)`.
pub fn is_r_good(i: usize, j: usize, n: usize, r: i64) -> bool {
    CyclicInterval::new(i, j, n)
        .expect("is_r_good needs distinct i, j in [n]")
        .contains(r)
}

/// `a_i + ... + a_{j-1}` for `i < j`, the non-cyclic weight used on `S_n`.
pub fn interval_weight<C: Ring>(i: usize, j: usize, nvars: usize) -> MPoly<C> {
    let mut p = MPoly::zero(nvars);
    for r in i..j {
        p.add_term(Monomial::var(nvars, r), C::one());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type P = MPoly<BigInt>;

    fn a(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    fn s(p: &P, q: &P) -> P {
        p.add(q).unwrap()
    }

    fn m(p: &P, q: &P) -> P {
        p.mul(q).unwrap()
    }

    #[test]
    fn square_of_sum() {
        let sum = P::sum_of_vars(3);
        let sq = sum.pow(2);
        assert_eq!(sq.num_terms(), 6);
        assert_eq!(sq.to_string(), "a1^2 + 2*a1*a2 + 2*a1*a3 + a2^2 + 2*a2*a3 + a3^2");
        assert_eq!(sum.pow(0), P::one(3));
        assert_eq!(sq.evaluate_all_ones(), BigInt::from(9));
    }

    #[test]
    fn worked_chain_sum_identity() {
        let (a1, a2, a3) = (a(3, 1), a(3, 2), a(3, 3));
        let terms = [
            m(&a1, &a2),
            m(&a1, &s(&a1, &a3)),
            m(&a2, &s(&a1, &a2)),
            m(&a2, &a3),
            m(&a3, &a1),
            m(&a3, &s(&a2, &a3)),
        ];
        let total = terms.iter().fold(P::zero(3), |acc, t| s(&acc, t));
        assert_eq!(total, P::sum_of_vars(3).pow(2));
        assert_eq!(total.evaluate_all_ones(), BigInt::from(9));
    }

    #[test]
    fn arithmetic_edges() {
        assert!(matches!(P::one(2).add(&P::one(3)), Err(Error::NvarsMismatch(2, 3))));
        assert!(P::one(2).mul(&P::one(3)).is_err());
        let p = s(&a(2, 1), &a(2, 2));
        assert!(p.sub(&p).unwrap().is_zero());
        assert_eq!(p.scale(&BigInt::from(0)), P::zero(2));
        assert_eq!(P::zero(4).evaluate_all_ones(), BigInt::from(0));
        assert_eq!(P::zero(4).to_string(), "0");
        assert_eq!(P::constant(2, BigInt::from(5)).to_string(), "5");
        assert_eq!(P::sum_of_vars(4).pow(3).evaluate_all_ones(), BigInt::from(64));
        assert_eq!(P::sum_of_vars(3).pow(4).total_degree(), Some(4));
        let v = [BigInt::from(2), BigInt::from(3)];
        assert_eq!(p.pow(2).evaluate(&v).unwrap(), BigInt::from(25));
    }

    #[test]
    fn generic_over_coefficients() {
        let q = MPoly::<BigRational>::sum_of_vars(2).pow(2);
        assert_eq!(q.evaluate_all_ones(), BigRational::from_integer(BigInt::from(4)));
        let f = MPoly::<f64>::sum_of_vars(3).pow(2);
        assert_eq!(f.evaluate(&[0.5, 0.25, 0.25]).unwrap(), 1.0);
        let i = MPoly::<i64>::sum_of_vars(3).pow(3);
        assert_eq!(i.evaluate_all_ones(), 27);
    }

    #[test]
    fn cover_weights() {
        assert_eq!(cover_weight::<BigInt>(1, 2, 3).unwrap(), a(3, 1));
        assert_eq!(cover_weight::<BigInt>(3, 2, 3).unwrap(), s(&a(3, 3), &a(3, 1)));
        assert_eq!(cover_weight::<BigInt>(3, 1, 3).unwrap(), a(3, 3));
        assert!(cover_weight::<BigInt>(2, 2, 3).is_err());
        assert_eq!(cover_weight::<BigInt>(2, 3, 3).unwrap().to_string(), "a2");
        assert_eq!(cover_weight::<BigInt>(3, 2, 3).unwrap().to_string(), "a1 + a3");
    }

    #[test]
    fn r_goodness() {
        for n in 2..6 {
            for i in 1..=n {
                for j in 1..i {
                    assert!(is_r_good(i, j, n, n as i64));
                    assert!(is_r_good(i, j, n, 0));
                }
            }
        }
        assert!(is_r_good(1, 2, 3, 1));
        assert!(!is_r_good(1, 2, 3, 2));
        assert!(is_r_good(3, 2, 3, 1));
        assert!(is_r_good(3, 2, 3, 4));
        assert!(!is_r_good(3, 2, 3, -1));
    }

    #[test]
    fn complementary_weights_partition_the_variables() {
        for n in 2..8 {
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let w = cover_weight::<BigInt>(i, j, n).unwrap();
                    let wc = cover_weight::<BigInt>(j, i, n).unwrap();
                    assert_eq!(s(&w, &wc), P::sum_of_vars(n));
                    for r in 1..=n {
                        let coeff = w.linear_coefficient(r);
                        assert_eq!(is_r_good(i, j, n, r as i64), coeff == BigInt::from(1));
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let p = s(&P::sum_of_vars(2).pow(2), &P::constant(2, BigInt::from(7)));
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(
            v,
            serde_json::json!([
                {"exps": [2, 0], "coef": "1"},
                {"exps": [1, 1], "coef": "2"},
                {"exps": [0, 2], "coef": "1"},
                {"exps": [0, 0], "coef": "7"}
            ])
        );
        let terms: Vec<JsonTerm> = serde_json::from_value(v).unwrap();
        assert_eq!(P::from_json_terms(2, &terms).unwrap(), p);
        assert!(P::from_json_terms(3, &terms).is_err());
    }
}
