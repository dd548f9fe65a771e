//! The circular Bruhat order `CB(k,n)`: bounded affine permutations of average
//! shift `k`, ordered dually to length.
//!
//! Elements are indexed in lexicographic window order. A cover edge
//! `(upper, lower, i, j)` means `lower = upper · t_{ij}` and
//! `length(lower) = length(upper) + 1`. Rank is `k(n-k) - length`.

use std::collections::HashMap;
use std::fmt::Write as _;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::affine::AffinePermutation;
use crate::error::{Error, Result};
use crate::perms::{k_subsets, validate_subset, Permutation};
use crate::polyweights::cover_weight;
use crate::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cover {
    pub upper: usize,
    pub lower: usize,
    pub i: usize,
    pub j: usize,
}

impl Cover {
    pub fn weight(&self, n: usize) -> IntPoly {
        cover_weight(self.i, self.j, n).expect("cover labels are distinct indices in [n]")
    }

    /// Only `i > j` covers carry `a_n`.
    pub fn is_n_good(&self) -> bool {
        self.i > self.j
    }
}

#[derive(Clone, Debug)]
pub struct CBPoset {
    k: usize,
    n: usize,
    lambda: Option<Vec<usize>>,
    elements: Vec<AffinePermutation>,
    covers: Vec<Cover>,
    rank: Vec<usize>,
    index: HashMap<AffinePermutation, usize>,
    down: Vec<Vec<usize>>,
    up: Vec<Vec<usize>>,
}

pub fn check_params(k: usize, n: usize) -> Result<()> {
    if n == 0 || k > n {
        return Err(Error::InvalidParameters(format!("need 0 <= k <= n and n >= 1, got k={k}, n={n}")));
    }
    Ok(())
}

/// All elements of `CB(k,n)`, sorted by window.
///
/// Walks `S_n`, colors fixed points in every way, keeps decorated permutations
/// with `k` anti-excedances and lifts them to windows.
pub fn enumerate(k: usize, n: usize) -> Result<Vec<AffinePermutation>> {
    check_params(k, n)?;
    let mut out = Vec::new();
    for perm in Permutation::all(n) {
        let inv = perm.inverse();
        let base = (1..=n).filter(|&i| inv.get(i) > i).count();
        let fixed: Vec<usize> = (1..=n).filter(|&i| perm.get(i) == i).collect();
        if base > k || base + fixed.len() < k {
            continue;
        }
        for white in fixed.iter().copied().combinations(k - base) {
            let d = crate::affine::DecoratedPermutation::new(perm.clone(), white)?;
            out.push(AffinePermutation::from_decorated(&d));
        }
    }
    out.sort();
    Ok(out)
}

/// Covers `f·t_{ij} ⋖ f` in `CB(k,n)`: bounded products one longer than `f`.
pub fn covers_below(f: &AffinePermutation) -> Vec<(AffinePermutation, (usize, usize))> {
    let n = f.n();
    let len = f.length();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let g = f.times_reflection(i, j).expect("i != j in [n]");
            if g.is_bounded() && g.length() == len + 1 {
                out.push((g, (i, j)));
            }
        }
    }
    out
}

/// A lower neighbor together with its transposition label.
type LabeledCover = (AffinePermutation, (usize, usize));

impl CBPoset {
    pub fn build(k: usize, n: usize) -> Result<CBPoset> {
        let elements = enumerate(k, n)?;
        let index: HashMap<_, _> = elements.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        let top_rank = k * (n - k);
        let per_element: Vec<(usize, Vec<LabeledCover>)> = elements
            .par_iter()
            .map(|f| (f.length(), covers_below(f)))
            .collect();

        let mut rank = Vec::with_capacity(elements.len());
        let mut covers = Vec::new();
        for (upper, (len, below)) in per_element.into_iter().enumerate() {
            if len > top_rank {
                return Err(Error::Inconsistent(format!(
                    "{} has length {len} > k(n-k) = {top_rank}",
                    elements[upper]
                )));
            }
            rank.push(top_rank - len);
            for (g, (i, j)) in below {
                let lower = *index.get(&g).ok_or_else(|| {
                    Error::Inconsistent(format!("{} · t_({i},{j}) = {g} is not in CB({k},{n})", elements[upper]))
                })?;
                covers.push(Cover { upper, lower, i, j });
            }
        }
        covers.sort();
        let p = CBPoset::assemble(k, n, None, elements, covers, rank);
        p.validate()?;
        Ok(p)
    }

    fn assemble(
        k: usize,
        n: usize,
        lambda: Option<Vec<usize>>,
        elements: Vec<AffinePermutation>,
        covers: Vec<Cover>,
        rank: Vec<usize>,
    ) -> CBPoset {
        let index = elements.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        let mut down = vec![Vec::new(); elements.len()];
        let mut up = vec![Vec::new(); elements.len()];
        for (e, c) in covers.iter().enumerate() {
            down[c.upper].push(e);
            up[c.lower].push(e);
        }
        CBPoset { k, n, lambda, elements, covers, rank, index, down, up }
    }

    fn validate(&self) -> Result<()> {
        let (k, n) = (self.k, self.n);
        let fail = |msg: String| Err(Error::Inconsistent(msg));
        for f in &self.elements {
            if !f.is_bounded() || f.av()? != k as i64 || f.anti_excedance_positions().len() != k {
                return fail(format!("{f} is not a bounded element with {k} anti-excedances"));
            }
        }
        let top_rank = self.max_rank();
        let tops: Vec<_> = (0..self.len()).filter(|&e| self.rank[e] == top_rank).collect();
        if tops.len() != 1 || self.elements[tops[0]] != AffinePermutation::top(k, n) {
            return fail(format!("expected a unique top element, found {}", tops.len()));
        }
        let mins: Vec<_> = (0..self.len()).filter(|&e| self.rank[e] == 0).map(|e| &self.elements[e]).collect();
        let expected: Vec<_> = k_subsets(n, k)
            .map(|l| AffinePermutation::min_for(&l, n))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .sorted()
            .collect();
        if mins.len() != expected.len() || mins.iter().zip(&expected).any(|(a, b)| *a != b) {
            return fail(format!("rank-0 elements {} do not match the minimal elements", mins.len()));
        }
        for c in &self.covers {
            if self.rank[c.upper] != self.rank[c.lower] + 1 {
                return fail(format!("cover {c:?} does not drop rank by one"));
            }
        }
        for e in 0..self.len() {
            if self.rank[e] > 0 && self.down[e].is_empty() {
                return fail(format!("{} has positive rank but nothing below", self.elements[e]));
            }
        }
        Ok(())
    }

    /// The fiber `CB(k,n)_λ` (elements with `Λ(f) = λ`) with its `n`-good covers.
    pub fn fiber_subposet(&self, lambda: &[usize]) -> Result<CBPoset> {
        let lambda = validate_subset(lambda, self.n)?;
        if lambda.len() != self.k {
            return Err(Error::InvalidSubset(format!("|{lambda:?}| != k = {}", self.k)));
        }
        let keep: Vec<usize> =
            (0..self.len()).filter(|&e| self.elements[e].anti_excedance_positions() == lambda).collect();
        let remap: HashMap<usize, usize> = keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let covers = self
            .covers
            .iter()
            .filter(|c| c.is_n_good())
            .filter_map(|c| {
                let upper = *remap.get(&c.upper)?;
                let lower = *remap.get(&c.lower)?;
                Some(Cover { upper, lower, i: c.i, j: c.j })
            })
            .collect();
        let elements = keep.iter().map(|&e| self.elements[e].clone()).collect();
        let rank = keep.iter().map(|&e| self.rank[e]).collect();
        Ok(CBPoset::assemble(self.k, self.n, Some(lambda), elements, covers, rank))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Some(λ)` for a fiber built by [`fiber_subposet`](Self::fiber_subposet).
    pub fn lambda(&self) -> Option<&[usize]> {
        self.lambda.as_deref()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[AffinePermutation] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &AffinePermutation {
        &self.elements[idx]
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn rank(&self, idx: usize) -> usize {
        self.rank[idx]
    }

    pub fn max_rank(&self) -> usize {
        self.k * (self.n - self.k)
    }

    pub fn index_of(&self, f: &AffinePermutation) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn top(&self) -> usize {
        self.index_of(&AffinePermutation::top(self.k, self.n)).expect("f_top is always present")
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.rank[e] == 0).collect()
    }

    /// Covers with `idx` as the upper element.
    pub fn covers_below(&self, idx: usize) -> impl Iterator<Item = &Cover> {
        self.down[idx].iter().map(move |&e| &self.covers[e])
    }

    /// Covers with `idx` as the lower element.
    pub fn covers_above(&self, idx: usize) -> impl Iterator<Item = &Cover> {
        self.up[idx].iter().map(move |&e| &self.covers[e])
    }

    /// Element indices grouped by rank, index 0 holding rank 0.
    pub fn levels(&self) -> Vec<Vec<usize>> {
        let mut levels = vec![Vec::new(); self.max_rank() + 1];
        for e in 0..self.len() {
            levels[self.rank[e]].push(e);
        }
        levels
    }

    pub fn to_json(&self) -> Value {
        let elements: Vec<Value> = self
            .elements
            .iter()
            .zip(&self.rank)
            .map(|(f, r)| json!({"window": f.window(), "rank": r, "decorated": f.to_decorated()}))
            .collect();
        let mut v = json!({
            "k": self.k,
            "n": self.n,
            "elements": elements,
            "covers": self.covers,
        });
        if let Some(l) = &self.lambda {
            v["lambda"] = json!(l);
        }
        v
    }

    /// Graphviz rendering: edges point down and carry weights like `a1+a3`.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let name = match &self.lambda {
            Some(l) => format!("CB({},{})_{{{}}}", self.k, self.n, l.iter().join(",")),
            None => format!("CB({},{})", self.k, self.n),
        };
        writeln!(s, "digraph \"{name}\" {{").unwrap();
        writeln!(s, "  rankdir=TB;").unwrap();
        writeln!(s, "  node [shape=plaintext];").unwrap();
        for (e, f) in self.elements.iter().enumerate() {
            writeln!(s, "  n{e} [label=\"{f}\"];").unwrap();
        }
        for c in &self.covers {
            let w = c.weight(self.n).to_string().replace(' ', "");
            writeln!(s, "  n{} -> n{} [label=\"{w}\"];", c.upper, c.lower).unwrap();
        }
        for level in self.levels().iter().rev() {
            if level.len() > 1 {
                let ids = level.iter().map(|e| format!("n{e};")).join(" ");
                writeln!(s, "  {{ rank=same; {ids} }}").unwrap();
            }
        }
        writeln!(s, "}}").unwrap();
        s
    }
}
