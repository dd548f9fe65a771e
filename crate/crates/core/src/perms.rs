//! The finite symmetric group `S_n` in one-line notation, with the ordinary
//! Bruhat order and the `k`-Bruhat order.
//!
//! All interfaces are 1-indexed: `p.get(i)` is `p(i)` for `i` in `1..=n`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation { n, images });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// `[n, n-1, ..., 1]`, the top of the Bruhat order.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    /// The long cycle `c = [2, 3, ..., n, 1]`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation { images: (1..=n).map(|i| i % n + 1).collect() }
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(|images| Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `p(i)` for `i` in `1..=n`.
    pub fn get(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation { images: other.images.iter().map(|&j| self.get(j)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `self · s_{p,q}`: swaps the entries at positions `p` and `q`.
    pub fn swap_positions(&self, p: usize, q: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(p - 1, q - 1);
        Permutation { images }
    }

    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .sum()
    }

    /// Bruhat covers `p·s_{ij} ⋖ p` with `i < j`, by exhaustive transposition scan.
    pub fn bruhat_covers_below(&self) -> Vec<(Permutation, (usize, usize))> {
        let n = self.n();
        let len = self.length();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let q = self.swap_positions(i, j);
                if q.length() + 1 == len {
                    out.push((q, (i, j)));
                }
            }
        }
        out
    }

    /// Increasing on positions `1..=k` and on `k+1..=n`.
    pub fn is_k_grassmannian(&self, k: usize) -> bool {
        let (head, tail) = self.images.split_at(k.min(self.n()));
        head.windows(2).all(|w| w[0] < w[1]) && tail.windows(2).all(|w| w[0] < w[1])
    }

    /// The `k`-Grassmannian permutation `w_λ` whose first `k` values are `λ`.
    pub fn grassmannian_from_subset(lambda: &[usize], n: usize) -> Result<Permutation> {
        let lambda = validate_subset(lambda, n)?;
        let rest = (1..=n).filter(|v| lambda.binary_search(v).is_err());
        let images = lambda.iter().copied().chain(rest).collect();
        Ok(Permutation { images })
    }

    /// The `k`-Bruhat order test `self ≤_k other`.
    pub fn k_bruhat_leq(&self, other: &Permutation, k: usize) -> bool {
        let (u, v) = (&self.images, &other.images);
        if u.len() != v.len() || k > u.len() {
            return false;
        }
        let n = u.len();
        if (0..k).any(|i| u[i] > v[i]) || (k..n).any(|j| u[j] < v[j]) {
            return false;
        }
        let order_kept = |range: std::ops::Range<usize>| {
            range.tuple_combinations().all(|(i, j)| u[i] > u[j] || v[i] < v[j])
        };
        order_kept(0..k) && order_kept(k..n)
    }

    /// `k`-Bruhat covers `self ⋖_k self·s_{p,q}` with `p ≤ k < q`.
    pub fn k_bruhat_covers_above(&self, k: usize) -> Vec<(Permutation, (usize, usize))> {
        let n = self.n();
        let mut out = Vec::new();
        for p in 1..=k.min(n) {
            for q in k + 1..=n {
                let (lo, hi) = (self.get(p), self.get(q));
                if lo > hi {
                    continue;
                }
                if (p + 1..q).any(|r| lo < self.get(r) && self.get(r) < hi) {
                    continue;
                }
                out.push((self.swap_positions(p, q), (p, q)));
            }
        }
        out
    }

    /// Number of maximal chains `u = x_0 ⋖_k x_1 ⋖_k ... ⋖_k x_m = w`.
    pub fn k_bruhat_interval_maximal_chains(
        u: &Permutation,
        w: &Permutation,
        k: usize,
    ) -> Result<BigUint> {
        check_k_bruhat_below(u, w, k)?;
        let mut memo = HashMap::new();
        Ok(count_up(u, w, k, &mut memo))
    }

    /// Explicit listing of the maximal chains of `[u, w]_k`, bottom first.
    pub fn k_bruhat_interval_chains(
        u: &Permutation,
        w: &Permutation,
        k: usize,
    ) -> Result<Vec<Vec<Permutation>>> {
        check_k_bruhat_below(u, w, k)?;
        let mut out = Vec::new();
        let mut stack = vec![u.clone()];
        list_up(w, k, &mut stack, &mut out);
        Ok(out)
    }
}

fn check_k_bruhat_below(u: &Permutation, w: &Permutation, k: usize) -> Result<()> {
    if u.k_bruhat_leq(w, k) {
        Ok(())
    } else {
        Err(Error::NotKBruhatBelow { u: u.to_string(), v: w.to_string(), k })
    }
}

fn count_up(
    x: &Permutation,
    w: &Permutation,
    k: usize,
    memo: &mut HashMap<Permutation, BigUint>,
) -> BigUint {
    if x == w {
        return BigUint::one();
    }
    if let Some(c) = memo.get(x) {
        return c.clone();
    }
    let mut total = BigUint::zero();
    for (y, _) in x.k_bruhat_covers_above(k) {
        if y.k_bruhat_leq(w, k) {
            total += count_up(&y, w, k, memo);
        }
    }
    memo.insert(x.clone(), total.clone());
    total
}

fn list_up(w: &Permutation, k: usize, stack: &mut Vec<Permutation>, out: &mut Vec<Vec<Permutation>>) {
    let x = stack.last().expect("chain stack is never empty").clone();
    if &x == w {
        out.push(stack.clone());
        return;
    }
    for (y, _) in x.k_bruhat_covers_above(k) {
        if y.k_bruhat_leq(w, k) {
            stack.push(y);
            list_up(w, k, stack, out);
            stack.pop();
        }
    }
}

/// Sorts and validates a subset of `[n]`.
pub fn validate_subset(lambda: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut s = lambda.to_vec();
    s.sort_unstable();
    if s.iter().any(|&v| v == 0 || v > n) {
        return Err(Error::InvalidSubset(format!("{lambda:?} is not a subset of [1..{n}]")));
    }
    if s.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidSubset(format!("{lambda:?} has repeated entries")));
    }
    Ok(s)
}

/// All `k`-subsets of `[n]`, each sorted, in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..=n).combinations(k)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `2,4,1,3` or `[2,4,1,3]`.
    fn from_str(s: &str) -> Result<Self> {
        let images = parse_list::<usize>(s)?;
        Permutation::new(images)
    }
}

pub(crate) fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}"))))
        .collect()
}
