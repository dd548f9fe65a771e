//! Young diagrams in a `k × m` rectangle, the lattice `L(k, m)`, and two
//! independent routes to the number of standard Young tableaux of the
//! rectangle.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perms::{k_subsets, validate_subset, Permutation};

/// Default cap on `k·m` for the chain-counting route.
pub const DEFAULT_BOX_CAP: usize = 16;

/// Row lengths, weakly decreasing, zero-padded to exactly `k` rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    /// Validates shape and fit inside `rows.len() × m`.
    pub fn new(rows: Vec<usize>, m: usize) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameters(format!("{rows:?} is not weakly decreasing")));
        }
        if rows.first().is_some_and(|&r| r > m) {
            return Err(Error::InvalidParameters(format!("{rows:?} does not fit in width {m}")));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty(k: usize) -> Self {
        YoungDiagram { rows: vec![0; k] }
    }

    pub fn rectangle(k: usize, m: usize) -> Self {
        YoungDiagram { rows: vec![m; k] }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Diagrams obtained by adding one box, staying within width `m`.
    pub fn covers_above(&self, m: usize) -> Vec<YoungDiagram> {
        (0..self.rows.len())
            .filter(|&r| self.rows[r] < m && (r == 0 || self.rows[r - 1] > self.rows[r]))
            .map(|r| {
                let mut rows = self.rows.clone();
                rows[r] += 1;
                YoungDiagram { rows }
            })
            .collect()
    }

    /// Containment order.
    pub fn contains(&self, other: &YoungDiagram) -> bool {
        self.rows.len() == other.rows.len() && self.rows.iter().zip(&other.rows).all(|(a, b)| a >= b)
    }
}

/// `p(λ)` with `p_i = (n-k) - λ_i + i`, for `λ = {λ_1 < ... < λ_k}`.
pub fn partition_from_subset(lambda: &[usize], k: usize, n: usize) -> Result<YoungDiagram> {
    let lambda = validate_subset(lambda, n)?;
    if lambda.len() != k {
        return Err(Error::InvalidSubset(format!("|{lambda:?}| != k = {k}")));
    }
    let rows = lambda.iter().enumerate().map(|(idx, &l)| (n - k) + (idx + 1) - l).collect();
    Ok(YoungDiagram { rows })
}

/// Inverse of [`partition_from_subset`]: `λ_i = (n-k) - p_i + i`.
pub fn subset_from_partition(y: &YoungDiagram, n: usize) -> Result<Vec<usize>> {
    let k = y.rows.len();
    if k > n || y.rows.first().is_some_and(|&r| r > n - k) {
        return Err(Error::InvalidParameters(format!("{:?} does not fit in {k}x{}", y.rows, n.saturating_sub(k))));
    }
    Ok(y.rows.iter().enumerate().map(|(idx, &p)| (n - k) + (idx + 1) - p).collect())
}

/// All diagrams in the `k × m` rectangle, in lexicographic row order.
pub fn all_diagrams(k: usize, m: usize) -> Vec<YoungDiagram> {
    fn rec(k: usize, bound: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if prefix.len() == k {
            out.push(YoungDiagram { rows: prefix.clone() });
            return;
        }
        for r in 0..=bound {
            prefix.push(r);
            rec(k, r, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, m, &mut Vec::new(), &mut out);
    out
}

/// `(km)! / Π hook(a, b)` with `hook(a, b) = (k - a) + (m - b) + 1`.
pub fn syt_count_hook(k: usize, m: usize) -> BigUint {
    let mut num = BigUint::one();
    for t in 2..=k * m {
        num *= BigUint::from(t);
    }
    let mut den = BigUint::one();
    for a in 1..=k {
        for b in 1..=m {
            den *= BigUint::from((k - a) + (m - b) + 1);
        }
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Maximal chains from the empty diagram to the full `k × m` rectangle in
/// `L(k, m)`, by memoized recursion.
pub fn syt_count_chains(k: usize, m: usize, box_cap: usize) -> Result<BigUint> {
    if k * m > box_cap {
        return Err(Error::CapExceeded { what: "k*m boxes", value: k * m, cap: box_cap });
    }
    fn rec(y: &YoungDiagram, m: usize, target: usize, memo: &mut HashMap<YoungDiagram, BigUint>) -> BigUint {
        if y.size() == target {
            return BigUint::one();
        }
        if let Some(v) = memo.get(y) {
            return v.clone();
        }
        let total = y.covers_above(m).iter().map(|z| rec(z, m, target, memo)).sum::<BigUint>();
        memo.insert(y.clone(), total.clone());
        total
    }
    Ok(rec(&YoungDiagram::empty(k), m, k * m, &mut HashMap::new()))
}

/// Checks that `w_λ ↦ Y_{p(λ)}` is a bijection from the `k`-Grassmannian
/// permutations onto `L(k, n-k)` taking `k`-Bruhat covers to reversed
/// containment covers, and that the Grassmannians are exactly `[id, w_max]_k`.
pub fn verify_grassmannian_anti_isomorphism(k: usize, n: usize) -> std::result::Result<(), String> {
    if k > n || n == 0 {
        return Err(format!("invalid parameters k={k}, n={n}"));
    }
    let m = n - k;
    let id = Permutation::identity(n);
    let top: Vec<usize> = (m + 1..=n).collect();
    let w_max = Permutation::grassmannian_from_subset(&top, n).map_err(|e| e.to_string())?;

    let interval: Vec<Permutation> =
        Permutation::all(n).filter(|u| id.k_bruhat_leq(u, k) && u.k_bruhat_leq(&w_max, k)).collect();
    let grass: Vec<Permutation> = Permutation::all(n).filter(|u| u.is_k_grassmannian(k)).collect();
    if interval != grass {
        return Err(format!(
            "[id, w_max]_{k} has {} elements but there are {} Grassmannians",
            interval.len(),
            grass.len()
        ));
    }

    let mut image = HashMap::new();
    for lambda in k_subsets(n, k) {
        let w = Permutation::grassmannian_from_subset(&lambda, n).map_err(|e| e.to_string())?;
        let y = partition_from_subset(&lambda, k, n).map_err(|e| e.to_string())?;
        if subset_from_partition(&y, n).map_err(|e| e.to_string())? != lambda {
            return Err(format!("p(λ) does not invert for λ = {lambda:?}"));
        }
        image.insert(w, y);
    }
    let mut diagrams: Vec<_> = image.values().cloned().collect();
    diagrams.sort();
    if diagrams != all_diagrams(k, m) {
        return Err("λ ↦ p(λ) is not onto L(k, n-k)".into());
    }

    for (w, y) in &image {
        let mut up: Vec<YoungDiagram> = w
            .k_bruhat_covers_above(k)
            .into_iter()
            .filter(|(v, _)| v.is_k_grassmannian(k))
            .map(|(v, _)| image[&v].clone())
            .collect();
        up.sort();
        // Covers above w in the k-Bruhat order must be exactly the diagrams y covers.
        let mut down: Vec<YoungDiagram> =
            all_diagrams(k, m).into_iter().filter(|z| z.covers_above(m).contains(y)).collect();
        down.sort();
        if up != down {
            return Err(format!("covers of {w} do not match covers below {:?}", y.rows()));
        }
    }
    Ok(())
}
