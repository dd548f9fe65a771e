//! Independent reference computations for the integration and acceptance
//! tests. Nothing here calls the library's enumeration, cover, weight or
//! chain-sum routines; only the polynomial type is shared.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use cbruhat::IntPoly;
use num_bigint::BigUint;

pub type Window = Vec<i64>;

/// `f(i)` for any integer `i`, from the window.
pub fn eval(w: &[i64], i: i64) -> i64 {
    let n = w.len() as i64;
    w[(i - 1).rem_euclid(n) as usize] + n * (i - 1).div_euclid(n)
}

/// Inversions `(i, j)` with `i` in `[n]`, `i < j`, `f(i) > f(j)`, counted by
/// scanning far enough for any window with `|f(i) - i| <= 3n`.
pub fn brute_length(w: &[i64]) -> usize {
    let n = w.len() as i64;
    let mut count = 0;
    for i in 1..=n {
        for j in i + 1..=i + 8 * n {
            if eval(w, i) > eval(w, j) {
                count += 1;
            }
        }
    }
    count
}

/// Every window with `i <= f(i) <= i + n`, residues distinct, and shift `kn`.
pub fn brute_bounded(k: usize, n: usize) -> Vec<Window> {
    let n_i = n as i64;
    let mut out = Vec::new();
    let mut w = Vec::with_capacity(n);
    fn rec(k: i64, n: i64, w: &mut Vec<i64>, out: &mut Vec<Window>) {
        let i = w.len() as i64 + 1;
        if i > n {
            let shift: i64 = w.iter().zip(1..).map(|(v, i)| v - i).sum();
            if shift == k * n {
                out.push(w.clone());
            }
            return;
        }
        for v in i..=i + n {
            if w.iter().any(|&u| (u - v).rem_euclid(n) == 0) {
                continue;
            }
            w.push(v);
            rec(k, n, w, out);
            w.pop();
        }
    }
    rec(k as i64, n_i, &mut w, &mut out);
    out.sort();
    out
}

/// Composition `(f ∘ g)` on windows.
pub fn compose(f: &[i64], g: &[i64]) -> Window {
    g.iter().map(|&x| eval(f, x)).collect()
}

pub fn inverse(f: &[i64]) -> Window {
    let n = f.len() as i64;
    let mut out = vec![0; f.len()];
    for (i, &v) in (1..).zip(f) {
        let r = (v - 1).rem_euclid(n);
        out[r as usize] = i - n * (v - 1).div_euclid(n);
    }
    out
}

/// If `t` is an affine transposition, the swapped pair `a < b` with `a` in `[n]`.
pub fn as_affine_transposition(t: &[i64]) -> Option<(i64, i64)> {
    let moved: Vec<i64> = (1..=t.len() as i64).filter(|&p| eval(t, p) != p).collect();
    if moved.len() != 2 {
        return None;
    }
    let p = moved[0];
    let q = eval(t, p);
    if eval(t, q) != p {
        return None;
    }
    let (a, b) = (p.min(q), p.max(q));
    let n = t.len() as i64;
    // Normalize so the smaller swapped point lies in [n].
    let shift = (a - 1).div_euclid(n) * n;
    Some((a - shift, b - shift))
}

/// Weight of the cover obtained by swapping `a < b`: sum of `a_c` over the
/// residues of `a, a+1, ..., b-1`.
pub fn residue_weight(a: i64, b: i64, n: usize) -> IntPoly {
    assert!(b - a < n as i64, "swap span must be below n");
    let mut p = IntPoly::zero(n);
    for c in a..b {
        let r = (c - 1).rem_euclid(n as i64) as usize + 1;
        p.add_assign(&IntPoly::var(n, r)).unwrap();
    }
    p
}

/// Oracle poset: elements from [`brute_bounded`], covers `g ⋖ f` whenever
/// `ℓ(g) = ℓ(f) + 1` and `f^{-1} g` is an affine transposition.
pub struct OraclePoset {
    pub n: usize,
    pub elements: Vec<Window>,
    pub length: Vec<usize>,
    /// `(upper, lower, weight)` by element index.
    pub covers: Vec<(usize, usize, IntPoly)>,
}

impl OraclePoset {
    pub fn new(k: usize, n: usize) -> Self {
        let elements = brute_bounded(k, n);
        let length: Vec<usize> = elements.iter().map(|w| brute_length(w)).collect();
        let mut covers = Vec::new();
        for (fi, f) in elements.iter().enumerate() {
            let finv = inverse(f);
            for (gi, g) in elements.iter().enumerate() {
                if length[gi] != length[fi] + 1 {
                    continue;
                }
                if let Some((a, b)) = as_affine_transposition(&compose(&finv, g)) {
                    covers.push((fi, gi, residue_weight(a, b, n)));
                }
            }
        }
        OraclePoset { n, elements, length, covers }
    }

    pub fn top(&self) -> usize {
        (0..self.elements.len()).min_by_key(|&e| self.length[e]).unwrap()
    }

    pub fn below(&self, e: usize) -> impl Iterator<Item = &(usize, usize, IntPoly)> {
        self.covers.iter().filter(move |c| c.0 == e)
    }

    /// Every maximal chain from the top, listed explicitly.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![self.top()];
        self.extend(&mut stack, &mut out);
        out
    }

    fn extend(&self, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *stack.last().unwrap();
        let mut any = false;
        for c in self.below(last) {
            any = true;
            stack.push(c.1);
            self.extend(stack, out);
            stack.pop();
        }
        if !any {
            out.push(stack.clone());
        }
    }

    pub fn chain_weight(&self, chain: &[usize]) -> IntPoly {
        let mut w = IntPoly::one(self.n);
        for pair in chain.windows(2) {
            let c = self.covers.iter().find(|c| c.0 == pair[0] && c.1 == pair[1]).unwrap();
            w = w.mul(&c.2).unwrap();
        }
        w
    }

    /// Sum over explicitly listed maximal chains of their weight products.
    pub fn brute_chain_sum(&self) -> IntPoly {
        let mut total = IntPoly::zero(self.n);
        for chain in self.maximal_chains() {
            total.add_assign(&self.chain_weight(&chain)).unwrap();
        }
        total
    }

    /// Cover set as window pairs.
    pub fn cover_windows(&self) -> BTreeSet<(Window, Window)> {
        self.covers.iter().map(|c| (self.elements[c.0].clone(), self.elements[c.1].clone())).collect()
    }
}

/// `n!` as an integer.
pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Derangement numbers `D(0) = 1, D(1) = 0, D(m) = (m-1)(D(m-1) + D(m-2))`.
pub fn derangements(m: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::from(1u32), BigUint::from(0u32));
    if m == 0 {
        return a;
    }
    for i in 2..=m {
        let next = BigUint::from(i - 1) * (&a + &b);
        a = b;
        b = next;
    }
    b
}

/// Decorated permutations of `[n]`: choose the fixed points, derange the rest,
/// color each fixed point two ways.
pub fn decorated_total(n: u64) -> BigUint {
    (0..=n).map(|j| binomial(n, j) * derangements(n - j) * BigUint::from(2u32).pow(j as u32)).sum()
}

/// Permutations of `[n]` as 1-indexed image vectors.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !cur.contains(&v) {
                cur.push(v);
                rec(n, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, &mut cur, &mut out);
    out
}

/// `u ≤_k v` straight from the three defining conditions.
pub fn k_leq(u: &[usize], v: &[usize], k: usize) -> bool {
    let n = u.len();
    (0..k).all(|i| u[i] <= v[i])
        && (k..n).all(|j| u[j] >= v[j])
        && (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let same_side = j < k || i >= k;
                !same_side || !(u[i] < u[j]) || v[i] < v[j]
            })
        })
}

/// Covers of `≤_k` by transitive reduction of the order relation.
pub fn k_covers_by_reduction(n: usize, k: usize) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let perms = all_perms(n);
    let mut out = BTreeSet::new();
    for u in &perms {
        for v in &perms {
            if u == v || !k_leq(u, v, k) {
                continue;
            }
            let between = perms.iter().any(|w| w != u && w != v && k_leq(u, w, k) && k_leq(w, v, k));
            if !between {
                out.insert((u.clone(), v.clone()));
            }
        }
    }
    out
}

/// Number of saturated chains from `u` up to `v` along `covers`.
pub fn k_interval_chain_count(covers: &BTreeSet<(Vec<usize>, Vec<usize>)>, u: &[usize], v: &[usize]) -> BigUint {
    let mut memo: BTreeMap<Vec<usize>, BigUint> = BTreeMap::new();
    fn go(
        x: &[usize],
        v: &[usize],
        covers: &BTreeSet<(Vec<usize>, Vec<usize>)>,
        memo: &mut BTreeMap<Vec<usize>, BigUint>,
    ) -> BigUint {
        if x == v {
            return BigUint::from(1u32);
        }
        if let Some(c) = memo.get(x) {
            return c.clone();
        }
        let total = covers.iter().filter(|(a, _)| a == x).map(|(_, b)| go(b, v, covers, memo)).sum::<BigUint>();
        memo.insert(x.to_vec(), total.clone());
        total
    }
    go(u, v, covers, &mut memo)
}

/// Catalan numbers, the tableau counts of a `2 × m` rectangle.
pub fn catalan(m: u64) -> BigUint {
    binomial(2 * m, m) / BigUint::from(m + 1)
}
