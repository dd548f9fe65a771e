//! Affine permutations `f: Z -> Z` with `f(i + n) = f(i) + n`, stored by
//! window `[f(1), ..., f(n)]`, plus the decorated-permutation encoding of the
//! bounded ones.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perms::{parse_list, validate_subset, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawAffine", into = "RawAffine")]
pub struct AffinePermutation {
    window: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawAffine {
    n: usize,
    window: Vec<i64>,
}

impl TryFrom<RawAffine> for AffinePermutation {
    type Error = Error;

    fn try_from(raw: RawAffine) -> Result<Self> {
        if raw.n != raw.window.len() {
            return Err(Error::InvalidParameters(format!(
                "n = {} but window has {} entries",
                raw.n,
                raw.window.len()
            )));
        }
        AffinePermutation::new(raw.window)
    }
}

impl From<AffinePermutation> for RawAffine {
    fn from(f: AffinePermutation) -> Self {
        RawAffine { n: f.n(), window: f.window }
    }
}

impl AffinePermutation {
    /// Validates that the window values are pairwise distinct modulo `n`.
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidParameters("empty window".into()));
        }
        let mut seen = vec![false; n];
        for &v in &window {
            let r = v.rem_euclid(n as i64) as usize;
            if seen[r] {
                return Err(Error::InvalidWindow { n, window });
            }
            seen[r] = true;
        }
        Ok(AffinePermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        AffinePermutation { window: (1..=n as i64).collect() }
    }

    /// `f_top = [1+k, ..., n+k]`.
    pub fn top(k: usize, n: usize) -> Self {
        AffinePermutation { window: (1..=n as i64).map(|i| i + k as i64).collect() }
    }

    /// `f_min,λ`: `i + n` on `λ`, `i` elsewhere.
    pub fn min_for(lambda: &[usize], n: usize) -> Result<Self> {
        let lambda = validate_subset(lambda, n)?;
        let window = (1..=n)
            .map(|i| if lambda.binary_search(&i).is_ok() { (i + n) as i64 } else { i as i64 })
            .collect();
        Ok(AffinePermutation { window })
    }

    /// The translation element `t_k = [1+n, ..., k+n, k+1, ..., n]`.
    pub fn translation(k: usize, n: usize) -> Self {
        let window = (1..=n)
            .map(|i| if i <= k { (i + n) as i64 } else { i as i64 })
            .collect();
        AffinePermutation { window }
    }

    /// Embeds `S_n` via `u ↦ [u(1), ..., u(n)]`.
    pub fn from_permutation(u: &Permutation) -> Self {
        AffinePermutation { window: u.images().iter().map(|&v| v as i64).collect() }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `f(i)` for any integer `i`.
    pub fn evaluate(&self, i: i64) -> i64 {
        let n = self.n() as i64;
        let shift = (i - 1).div_euclid(n);
        let pos = (i - 1).rem_euclid(n) as usize;
        self.window[pos] + n * shift
    }

    /// `(1/n) Σ (f(i) - i)`. Integral for any valid window; the error is a guard.
    pub fn av(&self) -> Result<i64> {
        let n = self.n() as i64;
        let shift: i64 = self.window.iter().zip(1..).map(|(&v, i)| v - i).sum();
        if shift.rem_euclid(n) != 0 {
            return Err(Error::NonIntegralAverage { n: self.n(), shift });
        }
        Ok(shift / n)
    }

    /// Number of classes of inversions `i < j`, `f(i) > f(j)` modulo simultaneous
    /// translation by `n`.
    ///
    /// One representative per class has `i` in `[n]`. Since `f(j) - j` is at least
    /// the smallest window offset `m`, only `j < f(i) - m` can be a partner; for
    /// bounded `f` this is `j < f(i)`.
    pub fn length(&self) -> usize {
        let min_offset = self.window.iter().zip(1..).map(|(&v, i)| v - i).min().unwrap_or(0);
        let mut count = 0;
        for i in 1..=self.n() as i64 {
            let fi = self.evaluate(i);
            count += (i + 1..fi - min_offset).filter(|&j| self.evaluate(j) < fi).count();
        }
        count
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffinePermutation) -> AffinePermutation {
        assert_eq!(self.n(), other.n(), "composing affine permutations of different period");
        AffinePermutation { window: other.window.iter().map(|&g| self.evaluate(g)).collect() }
    }

    pub fn inverse(&self) -> AffinePermutation {
        let n = self.n() as i64;
        let mut window = vec![0; self.n()];
        for (i, &v) in (1..).zip(&self.window) {
            // f(i) = v, so f^{-1}(v') = i - n*shift where v' = v - n*shift lands in [n].
            let shift = (v - 1).div_euclid(n);
            let pos = (v - 1).rem_euclid(n) as usize;
            window[pos] = i - n * shift;
        }
        AffinePermutation { window }
    }

    /// The reflection `t_{ij}` for `i != j` in `[n]`: a transposition when
    /// `i < j`, and the `r = 1` affine reflection placing `i - n` at `j` and
    /// `j + n` at `i` when `i > j`.
    pub fn reflection(i: usize, j: usize, n: usize) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::InvalidReflection { i, j, n });
        }
        let mut window: Vec<i64> = (1..=n as i64).collect();
        if i < j {
            window.swap(i - 1, j - 1);
        } else {
            window[j - 1] = i as i64 - n as i64;
            window[i - 1] = (j + n) as i64;
        }
        Ok(AffinePermutation { window })
    }

    /// `self · t_{ij}`.
    pub fn times_reflection(&self, i: usize, j: usize) -> Result<AffinePermutation> {
        Ok(self.compose(&Self::reflection(i, j, self.n())?))
    }

    /// `i ≤ f(i) ≤ i + n` on the window (and hence everywhere).
    pub fn is_bounded(&self) -> bool {
        let n = self.n() as i64;
        self.window.iter().zip(1..).all(|(&v, i)| i <= v && v <= i + n)
    }

    /// `Λ(f) = {i in [n] : f(i) > n}`.
    pub fn anti_excedance_positions(&self) -> Vec<usize> {
        let n = self.n() as i64;
        (1..).zip(&self.window).filter(|(_, &v)| v > n).map(|(i, _)| i).collect()
    }

    /// `χ(f) = [f(0)+1, f(1)+1, ..., f(n-1)+1]`.
    pub fn cyclic_shift(&self) -> AffinePermutation {
        AffinePermutation { window: (0..self.n() as i64).map(|i| self.evaluate(i) + 1).collect() }
    }

    /// The underlying finite permutation `i ↦ f(i) mod n` (values in `[n]`).
    pub fn reduce(&self) -> Permutation {
        let n = self.n() as i64;
        let images = self.window.iter().map(|&v| ((v - 1).rem_euclid(n) + 1) as usize).collect();
        Permutation::new(images).expect("window is a bijection mod n")
    }

    pub fn to_decorated(&self) -> DecoratedPermutation {
        let n = self.n() as i64;
        let white = (1..).zip(&self.window).filter(|&(i, &v)| v == i + n).map(|(i, _)| i as usize).collect();
        DecoratedPermutation { perm: self.reduce(), white }
    }

    pub fn from_decorated(d: &DecoratedPermutation) -> AffinePermutation {
        let n = d.perm.n();
        let window = (1..=n)
            .map(|i| {
                let v = d.perm.get(i);
                let lifted = if v > i {
                    v
                } else if v < i || d.white.contains(&i) {
                    v + n
                } else {
                    v
                };
                lifted as i64
            })
            .collect();
        AffinePermutation { window }
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.window.iter().join(","))
    }
}

impl FromStr for AffinePermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AffinePermutation::new(parse_list::<i64>(s)?)
    }
}

/// A permutation whose fixed points are colored; `white` lists the white ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDecorated", into = "RawDecorated")]
pub struct DecoratedPermutation {
    perm: Permutation,
    white: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawDecorated {
    perm: Permutation,
    white: Vec<usize>,
}

impl TryFrom<RawDecorated> for DecoratedPermutation {
    type Error = Error;

    fn try_from(raw: RawDecorated) -> Result<Self> {
        DecoratedPermutation::new(raw.perm, raw.white)
    }
}

impl From<DecoratedPermutation> for RawDecorated {
    fn from(d: DecoratedPermutation) -> Self {
        RawDecorated { perm: d.perm, white: d.white }
    }
}

impl DecoratedPermutation {
    pub fn new(perm: Permutation, white: Vec<usize>) -> Result<Self> {
        let white = validate_subset(&white, perm.n())?;
        if let Some(&bad) = white.iter().find(|&&i| perm.get(i) != i) {
            return Err(Error::InvalidSubset(format!("{bad} is not a fixed point of {perm}")));
        }
        Ok(DecoratedPermutation { perm, white })
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn white(&self) -> &[usize] {
        &self.white
    }

    /// `i` with `π^{-1}(i) > i`, plus white fixed points.
    pub fn anti_excedance_count(&self) -> usize {
        let inv = self.perm.inverse();
        (1..=self.perm.n()).filter(|&i| inv.get(i) > i).count() + self.white.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(v: &[i64]) -> AffinePermutation {
        AffinePermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_collisions_mod_n() {
        assert!(AffinePermutation::new(vec![1, 4, 3]).is_err());
        assert!(AffinePermutation::new(vec![]).is_err());
        assert!(AffinePermutation::new(vec![0, 2, 4]).is_ok());
    }

    #[test]
    fn evaluation() {
        let f = a(&[3, 6, 5, 9, 7]);
        assert_eq!(f.evaluate(0), 2);
        assert_eq!(f.evaluate(4), 9);
        assert_eq!(a(&[3, 4, 5]).evaluate(7), 9);
        assert_eq!(a(&[3, 4, 5]).evaluate(-2), 0);
    }

    #[test]
    fn averages() {
        assert_eq!(AffinePermutation::identity(4).av().unwrap(), 0);
        assert_eq!(a(&[3, 4, 5]).av().unwrap(), 2);
        assert_eq!(a(&[3, 6, 5, 9, 7]).av().unwrap(), 3);
        // Distinct residues force Σ(f(i) - i) ≡ 0 mod n, so a valid window never errors.
        assert_eq!(a(&[2, 1, 6]).av().unwrap(), 1);
        assert_eq!(a(&[-1, 2, 5, 4]).av().unwrap(), 0);
    }

    #[test]
    fn lengths() {
        for n in 1..6 {
            for k in 0..=n {
                assert_eq!(AffinePermutation::top(k, n).length(), 0);
                for lambda in crate::perms::k_subsets(n, k) {
                    let f = AffinePermutation::min_for(&lambda, n).unwrap();
                    assert_eq!(f.length(), k * (n - k), "{f}");
                }
            }
        }
        assert_eq!(a(&[4, 3, 5]).length(), 1);
        // Unbounded elements still terminate: t_32 has one inversion class.
        assert_eq!(a(&[1, 0, 5]).length(), 3);
    }

    #[test]
    fn composition() {
        let f = a(&[3, 4, 5]);
        assert_eq!(f.compose(&AffinePermutation::identity(3)), f);
        let t12 = AffinePermutation::reflection(1, 2, 3).unwrap();
        assert_eq!(f.compose(&t12), a(&[4, 3, 5]));
        let t32 = AffinePermutation::reflection(3, 2, 3).unwrap();
        assert_eq!(a(&[4, 3, 5]).compose(&t32), a(&[4, 2, 6]));
        assert_eq!(a(&[4, 3, 5]).times_reflection(3, 2).unwrap(), a(&[4, 2, 6]));
        let g = a(&[3, 6, 5, 9, 7]);
        assert_eq!(g.compose(&g.inverse()), AffinePermutation::identity(5));
        assert_eq!(g.inverse().compose(&g), AffinePermutation::identity(5));
    }

    #[test]
    fn reflections() {
        assert_eq!(AffinePermutation::reflection(1, 2, 3).unwrap(), a(&[2, 1, 3]));
        assert_eq!(AffinePermutation::reflection(3, 2, 3).unwrap(), a(&[1, 0, 5]));
        // i - n = -1 lands at position 1; [0,2,5,4] would collide mod 4.
        assert_eq!(AffinePermutation::reflection(3, 1, 4).unwrap(), a(&[-1, 2, 5, 4]));
        assert!(AffinePermutation::new(vec![0, 2, 5, 4]).is_err());
        assert!(AffinePermutation::reflection(2, 2, 3).is_err());
        assert!(AffinePermutation::reflection(0, 2, 3).is_err());
        assert!(AffinePermutation::reflection(4, 2, 3).is_err());
        for i in 1..=4 {
            for j in 1..=4 {
                if i != j {
                    let t = AffinePermutation::reflection(i, j, 4).unwrap();
                    assert_eq!(t.compose(&t), AffinePermutation::identity(4));
                    assert_eq!(t.av().unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn boundedness() {
        assert!(AffinePermutation::top(2, 3).is_bounded());
        assert!(!a(&[1, 0, 5]).is_bounded());
        assert!(a(&[3, 6, 5, 9, 7]).is_bounded());
    }

    #[test]
    fn anti_excedances() {
        assert_eq!(a(&[3, 6, 5, 9, 7]).anti_excedance_positions(), vec![2, 4, 5]);
        assert_eq!(AffinePermutation::top(4, 4).anti_excedance_positions(), vec![1, 2, 3, 4]);
        assert_eq!(a(&[2, 5, 4, 7]).anti_excedance_positions(), vec![2, 4]);
    }

    #[test]
    fn cyclic_shifts() {
        for k in 0..=4 {
            let top = AffinePermutation::top(k, 4);
            assert_eq!(top.cyclic_shift(), top);
        }
        let f = a(&[2, 5, 4, 7]);
        let g = f.cyclic_shift();
        assert_eq!(g, a(&[4, 3, 6, 5]));
        assert!(g.is_bounded());
        assert_eq!(g.av().unwrap(), 2);
        let mut h = f.clone();
        for _ in 0..4 {
            h = h.cyclic_shift();
        }
        assert_eq!(h, f);
    }

    #[test]
    fn decorated_conversion() {
        let d = AffinePermutation::min_for(&[2, 3], 3).unwrap().to_decorated();
        assert_eq!(d.perm(), &Permutation::identity(3));
        assert_eq!(d.white(), &[2, 3]);
        assert_eq!(a(&[1, 5, 6]).to_decorated(), d);

        let d = a(&[4, 3, 5]).to_decorated();
        assert_eq!(d.perm(), &Permutation::new(vec![1, 3, 2]).unwrap());
        assert_eq!(d.white(), &[1]);
        assert_eq!(AffinePermutation::from_decorated(&d), a(&[4, 3, 5]));

        let black = DecoratedPermutation::new(Permutation::identity(3), vec![]).unwrap();
        assert_eq!(AffinePermutation::from_decorated(&black), AffinePermutation::identity(3));
        let cyc = DecoratedPermutation::new(Permutation::new(vec![2, 3, 1]).unwrap(), vec![]).unwrap();
        assert_eq!(AffinePermutation::from_decorated(&cyc), a(&[2, 3, 4]));

        assert!(DecoratedPermutation::new(Permutation::new(vec![2, 1, 3]).unwrap(), vec![1]).is_err());
    }

    #[test]
    fn json_shapes() {
        let f = a(&[2, 5, 4, 7]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"n":4,"window":[2,5,4,7]}"#);
        assert_eq!(serde_json::from_str::<AffinePermutation>(&s).unwrap(), f);
        assert!(serde_json::from_str::<AffinePermutation>(r#"{"n":3,"window":[2,5,4,7]}"#).is_err());
        let d = DecoratedPermutation::new(Permutation::identity(3), vec![2, 3]).unwrap();
        assert_eq!(serde_json::to_string(&d).unwrap(), r#"{"perm":[1,2,3],"white":[2,3]}"#);
        assert!(serde_json::from_str::<DecoratedPermutation>(r#"{"perm":[2,1,3],"white":[1]}"#).is_err());
    }
}
