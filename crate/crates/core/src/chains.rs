//! Weighted maximal-chain sums on `CB(k,n)` and the checks built on them.
//!
//! A downward-saturated chain with maximal element `f` runs from `f` down to a
//! rank-0 element. `δ_r(f)` counts those whose covers are all `r`-good.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::affine::AffinePermutation;
use crate::cbposet::CBPoset;
use crate::error::{Error, Result};
use crate::perms::{k_subsets, validate_subset, Permutation};
use crate::polyweights::{interval_weight, is_r_good};
use crate::young::{syt_count_chains, syt_count_hook, DEFAULT_BOX_CAP};
use crate::IntPoly;

/// Outcome of a check: `Err` carries the first counterexample found.
pub type Verdict<T = ()> = std::result::Result<T, String>;

/// Default largest `n` for the `S_n` chain-sum check.
pub const DEFAULT_STEMBRIDGE_CAP: usize = 4;

/// Per-element chain data: `weights[e]` is the weighted sum over saturated
/// chains from `f_top` down to `e`; `delta[e][r-1]` is `δ_r(e)`.
#[derive(Clone, Debug)]
pub struct ChainSumTable {
    pub weights: Vec<IntPoly>,
    pub delta: Vec<Vec<BigUint>>,
}

impl ChainSumTable {
    pub fn compute(p: &CBPoset) -> ChainSumTable {
        ChainSumTable { weights: chain_weights(p), delta: delta_table(p) }
    }

    pub fn delta(&self, e: usize, r: usize) -> &BigUint {
        &self.delta[e][r - 1]
    }

    pub fn weight(&self, e: usize) -> &IntPoly {
        &self.weights[e]
    }
}

/// `W(f_top) = 1`, `W(g) = Σ_{g ⋖ f} W(f)·wt(g ⋖ f)`, swept by descending rank.
pub fn chain_weights(p: &CBPoset) -> Vec<IntPoly> {
    let n = p.n();
    let mut w: Vec<IntPoly> = vec![IntPoly::zero(n); p.len()];
    w[p.top()] = IntPoly::one(n);
    let levels = p.levels();
    for level in levels.iter().rev().skip(1) {
        let computed: Vec<(usize, IntPoly)> = level
            .par_iter()
            .map(|&e| {
                let mut acc = IntPoly::zero(n);
                for c in p.covers_above(e) {
                    let term = w[c.upper].mul(&c.weight(n)).expect("same variable count");
                    acc.add_assign(&term).expect("same variable count");
                }
                (e, acc)
            })
            .collect();
        for (e, poly) in computed {
            w[e] = poly;
        }
    }
    w
}

/// `δ_r` for every element and every `r` in `[n]`, swept by ascending rank.
pub fn delta_table(p: &CBPoset) -> Vec<Vec<BigUint>> {
    let n = p.n();
    let mut delta: Vec<Vec<BigUint>> = vec![Vec::new(); p.len()];
    let levels = p.levels();
    for (rank, level) in levels.iter().enumerate() {
        let computed: Vec<(usize, Vec<BigUint>)> = level
            .par_iter()
            .map(|&e| {
                if rank == 0 {
                    return (e, vec![BigUint::one(); n]);
                }
                let mut row = vec![BigUint::zero(); n];
                for c in p.covers_below(e) {
                    for (r, slot) in (1..=n).zip(row.iter_mut()) {
                        if is_r_good(c.i, c.j, n, r as i64) {
                            *slot += &delta[c.lower][r - 1];
                        }
                    }
                }
                (e, row)
            })
            .collect();
        for (e, row) in computed {
            delta[e] = row;
        }
    }
    delta
}

/// Sum over maximal chains of the product of cover weights.
pub fn weighted_chain_sum(p: &CBPoset) -> IntPoly {
    let w = chain_weights(p);
    let mut total = IntPoly::zero(p.n());
    for e in p.minimal_elements() {
        total.add_assign(&w[e]).expect("same variable count");
    }
    total
}

/// `δ_r(f)` for a single element.
pub fn delta(p: &CBPoset, f: &AffinePermutation, r: usize) -> Result<BigUint> {
    let e = p.index_of(f).ok_or_else(|| Error::InvalidParameters(format!("{f} is not in the poset")))?;
    if r == 0 || r > p.n() {
        return Err(Error::InvalidParameters(format!("r = {r} outside [1, {}]", p.n())));
    }
    Ok(delta_table(p)[e][r - 1].clone())
}

/// Explicit saturated chains from `e` down to rank 0 (as element indices, `e`
/// first), optionally restricted to `r`-good covers.
pub fn downward_saturated_chains(p: &CBPoset, e: usize, r: Option<i64>) -> Vec<Vec<usize>> {
    fn rec(p: &CBPoset, r: Option<i64>, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let top = *stack.last().expect("non-empty");
        if p.rank(top) == 0 {
            out.push(stack.clone());
            return;
        }
        for c in p.covers_below(top) {
            if r.is_some_and(|r| !is_r_good(c.i, c.j, p.n(), r)) {
                continue;
            }
            stack.push(c.lower);
            rec(p, r, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(p, r, &mut vec![e], &mut out);
    out
}

pub fn verify_delta_independence(p: &CBPoset, table: &ChainSumTable) -> Verdict {
    for (e, row) in table.delta.iter().enumerate() {
        if let Some(r) = row.iter().position(|d| d != &row[0]) {
            return Err(format!(
                "δ_1({}) = {} but δ_{}({}) = {}",
                p.element(e),
                row[0],
                r + 1,
                p.element(e),
                row[r]
            ));
        }
    }
    Ok(())
}

/// `Σ δ(f t_ij)·wt(f t_ij ⋖ f) = δ(f)·(a1 + ... + an)` at element `e`, with `δ = δ_1`.
///
/// `None` at rank 0, where the left side is an empty sum.
pub fn verify_induct_identity(p: &CBPoset, table: &ChainSumTable, e: usize) -> Option<bool> {
    if p.rank(e) == 0 {
        return None;
    }
    let n = p.n();
    let mut lhs = IntPoly::zero(n);
    for c in p.covers_below(e) {
        let d = BigInt::from(table.delta(c.lower, 1).clone());
        lhs.add_assign(&c.weight(n).scale(&d)).expect("same variable count");
    }
    let rhs = IntPoly::sum_of_vars(n).scale(&BigInt::from(table.delta(e, 1).clone()));
    Some(lhs == rhs)
}

pub fn verify_induct_all(p: &CBPoset, table: &ChainSumTable) -> Verdict<usize> {
    let mut checked = 0;
    for e in 0..p.len() {
        match verify_induct_identity(p, table, e) {
            Some(true) => checked += 1,
            Some(false) => return Err(format!("identity fails at {}", p.element(e))),
            None => {}
        }
    }
    Ok(checked)
}

/// `δ_n(f_top)`.
pub fn n_good_maximal_chain_count(p: &CBPoset, table: &ChainSumTable) -> BigUint {
    table.delta(p.top(), p.n()).clone()
}

/// `f_u = u · t_k · w_λ^{-1}`: `f_u(w_λ(i)) = u(i) + n` for `i <= k`, `u(i)` otherwise.
pub fn f_u(u: &Permutation, lambda: &[usize]) -> Result<AffinePermutation> {
    let n = u.n();
    let lambda = validate_subset(lambda, n)?;
    let k = lambda.len();
    let w = Permutation::grassmannian_from_subset(&lambda, n)?;
    if !u.k_bruhat_leq(&w, k) {
        return Err(Error::NotKBruhatBelow { u: u.to_string(), v: w.to_string(), k });
    }
    let mut window = vec![0i64; n];
    for i in 1..=n {
        let v = u.get(i) + if i <= k { n } else { 0 };
        window[w.get(i) - 1] = v as i64;
    }
    AffinePermutation::new(window)
}

/// `u_f = f · w_λ · t_k^{-1}` with `λ = Λ(f)`; returns `(u_f, λ)`.
pub fn u_f(f: &AffinePermutation) -> Result<(Permutation, Vec<usize>)> {
    if !f.is_bounded() {
        return Err(Error::InvalidParameters(format!("{f} is not bounded")));
    }
    let n = f.n();
    let lambda = f.anti_excedance_positions();
    let k = lambda.len();
    let w = Permutation::grassmannian_from_subset(&lambda, n)?;
    let images = (1..=n)
        .map(|i| {
            let v = f.evaluate(w.get(i) as i64) - if i <= k { n as i64 } else { 0 };
            v as usize
        })
        .collect();
    Ok((Permutation::new(images)?, lambda))
}

/// `u ↦ f_u` is a cover-reversing bijection `(S_{n,λ}, ≤_k) → (CB(k,n)_λ, ≤_γ)`
/// with two-sided inverse `f ↦ u_f`.
pub fn verify_anti_isomorphism(p: &CBPoset, lambda: &[usize]) -> Verdict {
    let (k, n) = (p.k(), p.n());
    let fiber = p.fiber_subposet(lambda).map_err(|e| e.to_string())?;
    let w = Permutation::grassmannian_from_subset(lambda, n).map_err(|e| e.to_string())?;
    let ideal: Vec<Permutation> = Permutation::all(n).filter(|u| u.k_bruhat_leq(&w, k)).collect();
    if ideal.len() != fiber.len() {
        return Err(format!("|S_n,λ| = {} but |CB_λ| = {}", ideal.len(), fiber.len()));
    }

    let mut image = HashMap::new();
    for u in &ideal {
        let f = f_u(u, lambda).map_err(|e| e.to_string())?;
        let e = fiber.index_of(&f).ok_or_else(|| format!("f_u = {f} for u = {u} is not in the fiber"))?;
        let (back, l) = u_f(&f).map_err(|e| e.to_string())?;
        if &back != u || l != fiber.lambda().unwrap_or_default() {
            return Err(format!("u_(f_u) = {back} != u = {u}"));
        }
        if image.insert(u.clone(), e).is_some() {
            return Err(format!("{u} listed twice"));
        }
    }
    let mut hit: Vec<usize> = image.values().copied().collect();
    hit.sort_unstable();
    hit.dedup();
    if hit.len() != fiber.len() {
        return Err("u ↦ f_u is not injective".into());
    }
    for f in fiber.elements() {
        let (u, _) = u_f(f).map_err(|e| e.to_string())?;
        let back = f_u(&u, lambda).map_err(|e| e.to_string())?;
        if &back != f {
            return Err(format!("f_(u_f) = {back} != f = {f}"));
        }
    }

    let mut from_k: Vec<(usize, usize)> = Vec::new();
    for u in &ideal {
        for (v, _) in u.k_bruhat_covers_above(k) {
            if let Some(&fv) = image.get(&v) {
                // u ⋖_k v must become f_v ⋖_γ f_u.
                from_k.push((image[u], fv));
            }
        }
    }
    let mut from_gamma: Vec<(usize, usize)> = fiber.covers().iter().map(|c| (c.upper, c.lower)).collect();
    from_k.sort_unstable();
    from_gamma.sort_unstable();
    if from_k != from_gamma {
        let missing = from_gamma.iter().find(|c| !from_k.contains(c)).or_else(|| from_k.iter().find(|c| !from_gamma.contains(c)));
        return Err(match missing {
            Some(&(a, b)) => format!("cover {} ⋗ {} not matched", fiber.element(a), fiber.element(b)),
            None => "cover multiplicities differ".into(),
        });
    }
    Ok(())
}

/// `δ_n(f)` equals the number of maximal chains of `[u_f, w_f]_k`.
pub fn verify_corollary_chains(p: &CBPoset, table: &ChainSumTable, e: usize) -> Verdict {
    let f = p.element(e);
    let (u, lambda) = u_f(f).map_err(|e| e.to_string())?;
    let w = Permutation::grassmannian_from_subset(&lambda, p.n()).map_err(|e| e.to_string())?;
    let count = Permutation::k_bruhat_interval_maximal_chains(&u, &w, p.k()).map_err(|e| e.to_string())?;
    let d = table.delta(e, p.n());
    if &count == d {
        Ok(())
    } else {
        Err(format!("δ_n({f}) = {d} but [{u}, {w}]_{} has {count} maximal chains", p.k()))
    }
}

/// For each `f`: `c·(u_f w_f^{-1})·c^{-1} = u_χ(f) w_χ(f)^{-1}`, and the
/// intervals `[u_f, w_f]_k`, `[u_χ(f), w_χ(f)]_k` have equally many maximal chains.
pub fn verify_bs_consequence(p: &CBPoset) -> Verdict {
    let (k, n) = (p.k(), p.n());
    let c = Permutation::long_cycle(n);
    let c_inv = c.inverse();
    let data = |f: &AffinePermutation| -> Verdict<(Permutation, Permutation)> {
        let (u, lambda) = u_f(f).map_err(|e| e.to_string())?;
        let w = Permutation::grassmannian_from_subset(&lambda, n).map_err(|e| e.to_string())?;
        Ok((u, w))
    };
    for f in p.elements() {
        let g = f.cyclic_shift();
        if p.index_of(&g).is_none() {
            return Err(format!("χ({f}) = {g} left the poset"));
        }
        let (u, w) = data(f)?;
        let (x, y) = data(&g)?;
        let lhs = c.compose(&u.compose(&w.inverse())).compose(&c_inv);
        let rhs = x.compose(&y.inverse());
        if lhs != rhs {
            return Err(format!("conjugation identity fails at {f}: {lhs} vs {rhs}"));
        }
        let a = Permutation::k_bruhat_interval_maximal_chains(&u, &w, k).map_err(|e| e.to_string())?;
        let b = Permutation::k_bruhat_interval_maximal_chains(&x, &y, k).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("[u_f, w_f] has {a} chains but the shifted interval has {b} at {f}"));
        }
    }
    Ok(())
}

/// Both sides of the main identity: the chain sum and `f(k,n)·(a1+...+an)^{k(n-k)}`.
pub fn main_theorem_sides(p: &CBPoset) -> (IntPoly, IntPoly) {
    let (k, n) = (p.k(), p.n());
    let lhs = weighted_chain_sum(p);
    let f = BigInt::from(syt_count_hook(k, n - k));
    let rhs = IntPoly::sum_of_vars(n).pow((k * (n - k)) as u32).scale(&f);
    (lhs, rhs)
}

/// Returns the number of terms on the left side when the identity holds.
pub fn verify_main_theorem(p: &CBPoset) -> Verdict<usize> {
    let (lhs, rhs) = main_theorem_sides(p);
    if lhs == rhs {
        Ok(lhs.num_terms())
    } else {
        let diff = lhs.sub(&rhs).expect("same variable count");
        Err(format!("chain sum differs from f(k,n)·(Σa)^(k(n-k)) by {diff}"))
    }
}

/// `δ_n(f_top) = f(k,n)` by both the hook formula and the Young-lattice chain count.
pub fn verify_lemma_count(p: &CBPoset, table: &ChainSumTable) -> Verdict<BigUint> {
    let (k, m) = (p.k(), p.n() - p.k());
    let d = n_good_maximal_chain_count(p, table);
    let hook = syt_count_hook(k, m);
    let chains = syt_count_chains(k, m, DEFAULT_BOX_CAP.max(k * m)).map_err(|e| e.to_string())?;
    if d == hook && hook == chains {
        Ok(d)
    } else {
        Err(format!("δ_n(f_top) = {d}, hook formula {hook}, lattice chains {chains}"))
    }
}

/// Sum over maximal chains of the Bruhat order on `S_n` with weights
/// `a_i + ... + a_{j-1}` on `π s_ij ⋖ π`.
pub fn stembridge_chain_sum(n: usize) -> IntPoly {
    let elements: Vec<Permutation> = Permutation::all(n).collect();
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut order: Vec<usize> = (0..elements.len()).collect();
    order.sort_by_key(|&e| std::cmp::Reverse(elements[e].length()));
    let mut w = vec![IntPoly::zero(n); elements.len()];
    w[index[&Permutation::longest(n)]] = IntPoly::one(n);
    for e in order {
        let here = w[e].clone();
        if here.is_zero() {
            continue;
        }
        for (lower, (i, j)) in elements[e].bruhat_covers_below() {
            let term = here.mul(&interval_weight(i, j, n)).expect("same variable count");
            w[index[&lower]].add_assign(&term).expect("same variable count");
        }
    }
    w[index[&Permutation::identity(n)]].clone()
}

/// `C(n,2)! / (1^{n-1} 2^{n-2} ... (n-1)^1) · Π_{i<j} (a_i + ... + a_{j-1})`.
pub fn stembridge_closed_form(n: usize) -> IntPoly {
    let r = n * n.saturating_sub(1) / 2;
    let num: BigUint = (1..=r).map(BigUint::from).product();
    let den: BigUint = (1..n).map(|i| BigUint::from(i).pow((n - i) as u32)).product();
    assert!((&num % &den).is_zero(), "Stembridge coefficient must be integral");
    let mut prod = IntPoly::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            prod = prod.mul(&interval_weight(i, j, n)).expect("same variable count");
        }
    }
    prod.scale(&BigInt::from(num / den))
}

pub fn verify_stembridge(n: usize, cap: usize) -> Verdict<usize> {
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    if n > cap {
        return Err(format!("n = {n} exceeds the Stembridge cap {cap}"));
    }
    let lhs = stembridge_chain_sum(n);
    let rhs = stembridge_closed_form(n);
    if lhs == rhs {
        Ok(lhs.num_terms())
    } else {
        Err(format!("S_{n}: chain sum {lhs} vs closed form {rhs}"))
    }
}

/// Every `λ` of the poset's `k`.
pub fn verify_anti_isomorphism_all(p: &CBPoset) -> Verdict<usize> {
    let mut count = 0;
    for lambda in k_subsets(p.n(), p.k()) {
        verify_anti_isomorphism(p, &lambda).map_err(|e| format!("λ = {lambda:?}: {e}"))?;
        count += 1;
    }
    Ok(count)
}

pub fn verify_corollary_all(p: &CBPoset, table: &ChainSumTable) -> Verdict<usize> {
    for e in 0..p.len() {
        verify_corollary_chains(p, table, e)?;
    }
    Ok(p.len())
}
