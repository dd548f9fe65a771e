//! Truncated bivariate power series in `x, y` and the cardinality generating
//! function `Σ |CB(k,n)| x^k y^n / n! = e^{xy} (x-1) / (x - e^{y(x-1)})`.
//!
//! The quotient is not a formal division by a unit as written: both `x - 1` and
//! `x - e^{y(x-1)}` have non-invertible constant terms. Every `y^m` coefficient
//! of `e^{y(x-1)} - 1` is `(x-1)^m / m!`, so
//! `g = (e^{y(x-1)} - 1) / (x - 1)` is a genuine series with zero constant term,
//! `x - e^{y(x-1)} = (x - 1)(1 - g)`, and the generating function equals
//! `e^{xy} / (1 - g)`.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{factorial, Field};

/// Default cap on `n_max` for [`cb_cardinalities`].
pub const DEFAULT_EGF_CAP: usize = 8;

/// Coefficients of `x^a y^b` for `a <= max_x`, `b <= max_y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries<F> {
    max_x: usize,
    max_y: usize,
    coeffs: Vec<F>,
}

impl<F: Field> BiSeries<F> {
    pub fn zero(max_x: usize, max_y: usize) -> Self {
        BiSeries { max_x, max_y, coeffs: vec![F::zero(); (max_x + 1) * (max_y + 1)] }
    }

    pub fn one(max_x: usize, max_y: usize) -> Self {
        Self::monomial(max_x, max_y, 0, 0, F::one())
    }

    /// `c x^a y^b`, dropped if beyond the truncation.
    pub fn monomial(max_x: usize, max_y: usize, a: usize, b: usize, c: F) -> Self {
        let mut s = Self::zero(max_x, max_y);
        if a <= max_x && b <= max_y {
            s.set(a, b, c);
        }
        s
    }

    pub fn x(max_x: usize, max_y: usize) -> Self {
        Self::monomial(max_x, max_y, 1, 0, F::one())
    }

    pub fn y(max_x: usize, max_y: usize) -> Self {
        Self::monomial(max_x, max_y, 0, 1, F::one())
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.max_x, self.max_y)
    }

    fn idx(&self, a: usize, b: usize) -> usize {
        a * (self.max_y + 1) + b
    }

    pub fn coeff(&self, a: usize, b: usize) -> &F {
        &self.coeffs[self.idx(a, b)]
    }

    pub fn set(&mut self, a: usize, b: usize, c: F) {
        let i = self.idx(a, b);
        self.coeffs[i] = c;
    }

    fn same_orders(&self, other: &Self) {
        assert_eq!(self.orders(), other.orders(), "series truncation orders differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_orders(other);
        let mut out = self.clone();
        for (o, c) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *o += c;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_orders(other);
        let mut out = self.clone();
        for (o, c) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *o -= c;
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = self.clone();
        for o in &mut out.coeffs {
            *o *= c;
        }
        out
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Self {
        self.same_orders(other);
        let mut out = Self::zero(self.max_x, self.max_y);
        for a1 in 0..=self.max_x {
            for b1 in 0..=self.max_y {
                let c1 = self.coeff(a1, b1);
                if c1.is_zero() {
                    continue;
                }
                for a2 in 0..=self.max_x - a1 {
                    for b2 in 0..=self.max_y - b1 {
                        let c2 = other.coeff(a2, b2);
                        if c2.is_zero() {
                            continue;
                        }
                        let mut t = c1.clone();
                        t *= c2;
                        let i = out.idx(a1 + a2, b1 + b2);
                        out.coeffs[i] += &t;
                    }
                }
            }
        }
        out
    }

    /// `Σ_m s^m / m!`; requires a zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeff(0, 0).is_zero() {
            return Err(Error::NotInvertible("exp needs a zero constant term".into()));
        }
        let mut total = Self::one(self.max_x, self.max_y);
        let mut power = Self::one(self.max_x, self.max_y);
        // s^m vanishes once m exceeds the total truncation degree.
        for m in 1..=self.max_x + self.max_y {
            power = power.mul(self);
            let inv_fact = F::one() / factorial::<F>(m);
            total = total.add(&power.scale(&inv_fact));
        }
        Ok(total)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeff(0, 0).clone();
        if c0.is_zero() {
            return Err(Error::NotInvertible("constant term is zero".into()));
        }
        let mut out = Self::zero(self.max_x, self.max_y);
        for a in 0..=self.max_x {
            for b in 0..=self.max_y {
                let mut acc = if (a, b) == (0, 0) { F::one() } else { F::zero() };
                for i in 0..=a {
                    for j in 0..=b {
                        if (i, j) == (0, 0) {
                            continue;
                        }
                        let mut t = self.coeff(i, j).clone();
                        if t.is_zero() {
                            continue;
                        }
                        t *= out.coeff(a - i, b - j);
                        acc -= &t;
                    }
                }
                out.set(a, b, acc / c0.clone());
            }
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Divides every `y^b` coefficient, as a polynomial in `x`, by `x - 1`.
    ///
    /// Exact only when no column was cut off by the `x` truncation; a nonzero
    /// remainder is reported as an error.
    pub fn exact_div_x_minus_one(&self) -> Result<Self> {
        let mut out = Self::zero(self.max_x, self.max_y);
        for b in 0..=self.max_y {
            // Synthetic division by the root x = 1, from the top coefficient down.
            let mut carry = F::zero();
            for a in (1..=self.max_x).rev() {
                carry += self.coeff(a, b);
                out.set(a - 1, b, carry.clone());
            }
            let rem = carry + self.coeff(0, b).clone();
            if !rem.is_zero() {
                return Err(Error::NotInvertible(format!("y^{b} coefficient is not divisible by x - 1")));
            }
        }
        Ok(out)
    }
}

/// `g = (e^{y(x-1)} - 1) / (x - 1)` at orders `(n_max, n_max)`.
pub fn shifted_exp_quotient(n_max: usize) -> Result<BiSeries<BigRational>> {
    let x = BiSeries::<BigRational>::x(n_max, n_max);
    let y = BiSeries::<BigRational>::y(n_max, n_max);
    let one = BiSeries::one(n_max, n_max);
    let e = y.mul(&x.sub(&one)).exp()?;
    e.sub(&one).exact_div_x_minus_one()
}

/// The full generating function `e^{xy} / (1 - g)` at orders `(n_max, n_max)`.
pub fn cardinality_series(n_max: usize) -> Result<BiSeries<BigRational>> {
    let x = BiSeries::<BigRational>::x(n_max, n_max);
    let y = BiSeries::<BigRational>::y(n_max, n_max);
    let one = BiSeries::one(n_max, n_max);
    let g = shifted_exp_quotient(n_max)?;
    x.mul(&y).exp()?.div(&one.sub(&g))
}

/// `table[n][k] = |CB(k,n)|` for `0 <= k <= n <= n_max`, read off as
/// `n! [x^k y^n]`.
pub fn cb_cardinalities(n_max: usize, cap: usize) -> Result<Vec<Vec<BigUint>>> {
    if n_max > cap {
        return Err(Error::CapExceeded { what: "n_max", value: n_max, cap });
    }
    let series = cardinality_series(n_max)?;
    let mut table = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let nfact = BigRational::from_integer(factorial(n));
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let v = series.coeff(k, n).clone() * &nfact;
            if !v.is_integer() || v.is_negative() {
                return Err(Error::NonIntegral(format!("{v} at x^{k} y^{n}")));
            }
            row.push(v.to_integer().to_biguint().expect("nonnegative"));
        }
        // Coefficients with k > n must vanish.
        for k in n + 1..=n_max {
            if !series.coeff(k, n).is_zero() {
                return Err(Error::Inconsistent(format!("nonzero coefficient at x^{k} y^{n}")));
            }
        }
        table.push(row);
    }
    Ok(table)
}
