//! Brute-force verifiers that share no code with the engine.
//!
//! Everything is done with explicit (Laurent) polynomials in finitely many
//! variables: Schur polynomials are generated from semistandard tableaux,
//! decompositions are found by repeatedly subtracting the character of the
//! lexicographically largest monomial, and plethysms are expanded over
//! multisets or subsets of weights. Nothing here calls Littlewood–Richardson
//! code, so agreement with the engine is a genuine cross-check.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combination::Combination;
use crate::diagrams::{binomial, Partition};
use crate::error::{Error, Result};
use crate::grothendieck::{Decomposition, SimpleIndex};
use crate::plethysm::Power;
use crate::poset::QuadIndex;
use crate::symfunc::SymFunc;

/// Largest diagram [`expand_schur`] accepts.
pub const SCHUR_GUARD: usize = 8;

pub type Exponents = Vec<i32>;

/// A Laurent polynomial with integer coefficients in `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl MonomialPoly {
    pub fn zero(nvars: usize) -> Self {
        MonomialPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exps: Exponents, c: BigInt) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// `x_1 + ⋯ + x_n`.
    pub fn power_sum_one(nvars: usize) -> Self {
        Self::from_weights(nvars, (0..nvars).map(|i| unit(nvars, i, 1)))
    }

    /// `x_1^-1 + ⋯ + x_n^-1`.
    pub fn dual_power_sum_one(nvars: usize) -> Self {
        Self::from_weights(nvars, (0..nvars).map(|i| unit(nvars, i, -1)))
    }

    /// The sum of the given monomials, each with coefficient one.
    pub fn from_weights(nvars: usize, weights: impl IntoIterator<Item = Exponents>) -> Self {
        let mut p = Self::zero(nvars);
        for w in weights {
            p.add_term(w, BigInt::one());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Exponents, c: BigInt) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut acc: HashMap<Exponents, BigInt> = HashMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e: Exponents = a.iter().zip(b).map(|(i, j)| i + j).collect();
                *acc.entry(e).or_default() += x * y;
            }
        }
        MonomialPoly { nvars: self.nvars, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Sum of all coefficients, i.e. the value at `x_i = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplies by `(x_1 ⋯ x_n)^k`.
    pub fn shift(&self, k: i32) -> Self {
        MonomialPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|x| x + k).collect(), c.clone())).collect(),
        }
    }

    /// Invariance under permutations within each block of consecutive variables.
    pub fn is_symmetric_in(&self, blocks: &[usize]) -> bool {
        assert_eq!(blocks.iter().sum::<usize>(), self.nvars);
        let mut start = 0;
        for &b in blocks {
            for i in start + 1..start + b {
                for (e, c) in &self.terms {
                    let mut f = e.clone();
                    f.swap(i - 1, i);
                    if self.coeff(&f) != *c {
                        return false;
                    }
                }
            }
            start += b;
        }
        true
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_symmetric_in(&[self.nvars])
    }
}

fn unit(nvars: usize, i: usize, v: i32) -> Exponents {
    let mut e = vec![0; nvars];
    e[i] = v;
    e
}

/// Calls `visit` with the entries of every semistandard tableau of shape `lam`
/// with entries in `0..n`, in row reading order.
fn for_each_ssyt(lam: &Partition, n: usize, mut visit: impl FnMut(&[usize])) {
    let cells: Vec<(usize, usize)> = lam.boxes().collect();
    let rows = lam.len();
    let col_len: Vec<usize> = (0..lam.part(0) as usize).map(|c| (0..rows).filter(|&r| lam.part(r) as usize > c).count()).collect();
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; lam.part(r) as usize]).collect();
    let mut entries = vec![0usize; cells.len()];
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        col_len: &[usize],
        n: usize,
        grid: &mut [Vec<usize>],
        entries: &mut [usize],
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if idx == cells.len() {
            visit(entries);
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = if c > 0 { grid[r][c - 1] } else { 0 };
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        let below = col_len[c] - r - 1;
        if n < below + 1 {
            return;
        }
        let hi = n - 1 - below;
        for v in lo..=hi {
            grid[r][c] = v;
            entries[idx] = v;
            go(idx + 1, cells, col_len, n, grid, entries, visit);
        }
    }
    if lam.len() > n {
        return;
    }
    go(0, &cells, &col_len, n, &mut grid, &mut entries, &mut visit);
}

fn schur_poly(lam: &Partition, n: usize) -> MonomialPoly {
    let mut acc: HashMap<Exponents, BigInt> = HashMap::new();
    for_each_ssyt(lam, n, |entries| {
        let mut e = vec![0; n];
        for &v in entries {
            e[v] += 1;
        }
        *acc.entry(e).or_default() += 1;
    });
    MonomialPoly { nvars: n, terms: acc.into_iter().collect() }
}

/// The Schur polynomial `s_lam(x_1, …, x_n)`.
pub fn expand_schur(lam: &Partition, n: usize) -> Result<MonomialPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one variable".into()));
    }
    if lam.degree() > SCHUR_GUARD {
        return Err(Error::SizeGuard { what: "schur expansion", size: lam.degree(), guard: SCHUR_GUARD });
    }
    Ok(schur_poly(lam, n))
}

/// `s_delta` evaluated at the given monomials `z_1, …, z_D`.
pub fn schur_of_weights(delta: &Partition, nvars: usize, weights: &[Exponents]) -> MonomialPoly {
    let mut acc: HashMap<Exponents, BigInt> = HashMap::new();
    for_each_ssyt(delta, weights.len(), |entries| {
        let mut e = vec![0; nvars];
        for &v in entries {
            for (x, w) in e.iter_mut().zip(&weights[v]) {
                *x += w;
            }
        }
        *acc.entry(e).or_default() += 1;
    });
    MonomialPoly { nvars, terms: acc.into_iter().collect() }
}

/// The irreducible character with dominant weight `w` (entries may be negative).
fn irreducible(w: &[i32]) -> MonomialPoly {
    let Some(&low) = w.last() else {
        return MonomialPoly::one(0);
    };
    let shifted: Vec<u32> = w.iter().map(|x| (x - low) as u32).collect();
    let lam = Partition::new(shifted).expect("dominant weight");
    schur_poly(&lam, w.len()).shift(low)
}

/// Decomposes a polynomial symmetric in each block into products of
/// irreducible characters, keyed by one dominant weight per block.
pub fn decompose_blocks(p: &MonomialPoly, blocks: &[usize]) -> Result<Combination<Vec<Exponents>>> {
    if !p.is_symmetric_in(blocks) {
        return Err(Error::NotSymmetric);
    }
    let mut rest = p.clone();
    let mut out = Combination::new();
    while let Some((top, c)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        let mut parts = Vec::new();
        let mut ch = MonomialPoly::one(0);
        let mut start = 0;
        for &b in blocks {
            let w = top[start..start + b].to_vec();
            debug_assert!(w.windows(2).all(|x| x[0] >= x[1]));
            ch = tensor_vars(&ch, &irreducible(&w));
            parts.push(w);
            start += b;
        }
        rest = rest.sub(&MonomialPoly { nvars: ch.nvars, terms: ch.terms.into_iter().map(|(e, x)| (e, x * &c)).collect() });
        out.add(parts, c);
    }
    Ok(out)
}

/// The product of polynomials in disjoint variable sets.
fn tensor_vars(a: &MonomialPoly, b: &MonomialPoly) -> MonomialPoly {
    let mut out = MonomialPoly::zero(a.nvars + b.nvars);
    for (x, c) in &a.terms {
        for (y, d) in &b.terms {
            let mut e = x.clone();
            e.extend(y);
            out.add_term(e, c * d);
        }
    }
    out
}

fn to_partition(w: &[i32]) -> Result<Partition> {
    if w.iter().any(|x| x.is_negative()) {
        return Err(Error::InvalidArgument("weight has negative entries".into()));
    }
    Partition::new(w.iter().map(|&x| x as u32).collect())
}

/// Schur expansion of a symmetric polynomial. Coefficients may be negative
/// for virtual characters.
pub fn decompose_into_schur(p: &MonomialPoly) -> Result<SymFunc> {
    let d = decompose_blocks(p, &[p.nvars])?;
    let mut terms = Vec::new();
    for (w, c) in &d {
        terms.push((to_partition(&w[0])?, c.clone()));
    }
    Ok(SymFunc::from_terms(terms))
}

/// Expansion of a polynomial symmetric in `x_1..x_a` and in `y_1..y_b` as
/// `Σ c s_alpha(x) s_beta(y)`.
pub fn decompose_bisymmetric(p: &MonomialPoly, a: usize, b: usize) -> Result<Combination<(Partition, Partition)>> {
    let d = decompose_blocks(p, &[a, b])?;
    let mut out = Combination::new();
    for (w, c) in &d {
        out.add((to_partition(&w[0])?, to_partition(&w[1])?), c.clone());
    }
    Ok(out)
}

/// The `(mu, nu)` label of a dominant `GL(n)` weight: `nu` its positive part,
/// `mu` its negated negative part.
pub fn rational_label(w: &[i32]) -> (Partition, Partition) {
    let nu = Partition::new(w.iter().filter(|x| **x > 0).map(|&x| x as u32).collect()).expect("dominant");
    let mu = Partition::new(w.iter().rev().filter(|x| **x < 0).map(|&x| (-x) as u32).collect()).expect("dominant");
    (mu, nu)
}

/// Decomposition of a Laurent character into rational irreducibles labeled `(mu, nu)`.
pub fn decompose_rational(p: &MonomialPoly) -> Result<Combination<(Partition, Partition)>> {
    let d = decompose_blocks(p, &[p.nvars])?;
    Ok(d.map_keys(|w| rational_label(&w[0])))
}

/// `V^{⊗n} ⊗ (V*)^{⊗m}` for `GL(N)`, decomposed into `V_{mu,nu}`.
pub fn stable_mixed_tensor(m: usize, n: usize, big_n: usize) -> Result<Combination<(Partition, Partition)>> {
    let required = 2 * (m + n);
    if big_n < required.max(1) {
        return Err(Error::Unstable { n: big_n, required: required.max(1) });
    }
    let ch = MonomialPoly::power_sum_one(big_n).pow(n).mul(&MonomialPoly::dual_power_sum_one(big_n).pow(m));
    decompose_rational(&ch)
}

/// `[W^{⊗k}] = Σ_{|lam|=k} f^lam [W_lam]`, from `(x_1+⋯+x_k)^k`.
pub fn tensor_power(k: usize) -> Result<Combination<Partition>> {
    let vars = k.max(1);
    let ch = MonomialPoly::power_sum_one(vars).pow(k);
    let d = decompose_into_schur(&ch)?;
    Ok(d.terms().iter().map(|(l, c)| (l.clone(), c.clone())).fold(Combination::new(), |mut acc, (l, c)| {
        acc.add(l, c);
        acc
    }))
}

/// The space to which [`brute_force_plethysm`] applies the outer functor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inner {
    Sym2,
    Ext2,
    /// `x ⊗ y` with `dim x = a`, `dim y = b`.
    Tensor(usize, usize),
}

/// The weights of the inner space and the variable blocks they live in.
fn inner_weights(inner: Inner, n: usize) -> (Vec<Exponents>, Vec<usize>) {
    match inner {
        Inner::Sym2 | Inner::Ext2 => {
            let strict = inner == Inner::Ext2;
            let mut ws = Vec::new();
            for i in 0..n {
                for j in i..n {
                    if strict && i == j {
                        continue;
                    }
                    let mut e = vec![0; n];
                    e[i] += 1;
                    e[j] += 1;
                    ws.push(e);
                }
            }
            (ws, vec![n])
        }
        Inner::Tensor(a, b) => {
            let mut ws = Vec::new();
            for i in 0..a {
                for j in 0..b {
                    let mut e = vec![0; a + b];
                    e[i] = 1;
                    e[a + j] = 1;
                    ws.push(e);
                }
            }
            (ws, vec![a, b])
        }
    }
}

/// Character of `S^k` or `Λ^k` of a space with the given weights.
pub fn power_character(outer: Power, k: usize, nvars: usize, weights: &[Exponents]) -> MonomialPoly {
    let mut acc: HashMap<Exponents, BigInt> = HashMap::new();
    fn go(
        start: usize,
        left: usize,
        repeat: bool,
        weights: &[Exponents],
        cur: &mut Exponents,
        acc: &mut HashMap<Exponents, BigInt>,
    ) {
        if left == 0 {
            *acc.entry(cur.clone()).or_default() += 1;
            return;
        }
        for i in start..weights.len() {
            for (x, w) in cur.iter_mut().zip(&weights[i]) {
                *x += w;
            }
            go(if repeat { i } else { i + 1 }, left - 1, repeat, weights, cur, acc);
            for (x, w) in cur.iter_mut().zip(&weights[i]) {
                *x -= w;
            }
        }
    }
    go(0, k, outer == Power::Symmetric, weights, &mut vec![0; nvars], &mut acc);
    MonomialPoly { nvars, terms: acc.into_iter().collect() }
}

/// `S^k` or `Λ^k` of `S²`, `Λ²` (of an `n`-dimensional space) or of a tensor
/// product, expanded over weights and decomposed. Keys hold one diagram per
/// variable block.
pub fn brute_force_plethysm(outer: Power, k: usize, inner: Inner, n: usize) -> Result<Combination<Vec<Partition>>> {
    let (weights, blocks) = inner_weights(inner, n);
    let degree = if matches!(inner, Inner::Tensor(..)) { k } else { 2 * k };
    if degree > SCHUR_GUARD {
        return Err(Error::SizeGuard { what: "oracle plethysm", size: degree, guard: SCHUR_GUARD });
    }
    let nvars: usize = blocks.iter().sum();
    let ch = power_character(outer, k, nvars, &weights);
    let d = decompose_blocks(&ch, &blocks)?;
    let mut out = Combination::new();
    for (w, c) in &d {
        let parts = w.iter().map(|x| to_partition(x)).collect::<Result<Vec<_>>>()?;
        out.add(parts, c.clone());
    }
    Ok(out)
}

/// Drops the block structure of a single-block result.
pub fn single_block(c: &Combination<Vec<Partition>>) -> Combination<Partition> {
    c.map_keys(|v| v[0].clone())
}

/// `[S_delta(W_* ⊗ W)]` as thick indices, from the character of `S_delta` at
/// the weights `x_i y_j` with `vars` variables on each side.
pub fn schur_functor_of_f(delta: &Partition, vars: usize) -> Result<Decomposition> {
    let (weights, _) = inner_weights(Inner::Tensor(vars, vars), 0);
    let ch = schur_of_weights(delta, 2 * vars, &weights);
    let d = decompose_bisymmetric(&ch, vars, vars)?;
    Ok(d.map_keys(|(x, y)| SimpleIndex::thick(x.clone(), y.clone())))
}

/// `Ext^q` into `W_{*alpha} ⊗ W_beta` read off the socle of
/// `Λ^q(W_* ⊗ W) ⊗ W_{*alpha} ⊗ W_beta`, computed from characters.
pub fn thick_ext_by_characters(alpha: &Partition, beta: &Partition, q: usize) -> Result<Combination<(Partition, Partition)>> {
    let vars = alpha.len().max(beta.len()) + q;
    let (weights, _) = inner_weights(Inner::Tensor(vars, vars), 0);
    let ext = power_character(Power::Exterior, q, 2 * vars, &weights);
    let twist = tensor_vars(&schur_poly(alpha, vars), &schur_poly(beta, vars));
    decompose_bisymmetric(&ext.mul(&twist), vars, vars)
}

/// Composition factors of `J_q` rebuilt from characters alone:
/// `V* = V_* + W_*` and `V_*^* = V + W` in the Grothendieck group, thin
/// parts from [`stable_mixed_tensor`] and thick parts from [`tensor_power`].
pub fn reconstruct_j(q: &QuadIndex) -> Result<Decomposition> {
    let mut out = Decomposition::new();
    for a in 0..=q.m {
        for b in 0..=q.n {
            let weight = BigInt::from(binomial(q.m, a) * binomial(q.n, b));
            let left = tensor_power(q.l + q.m - a)?;
            let right = tensor_power(q.p + q.n - b)?;
            let thin = stable_mixed_tensor(a, b, (2 * (a + b)).max(1))?;
            for (lam, x) in &left {
                for ((mu, nu), y) in &thin {
                    for (pi, z) in &right {
                        let s = SimpleIndex::new(lam.clone(), mu.clone(), nu.clone(), pi.clone());
                        out.add(s, &weight * x * y * z);
                    }
                }
            }
        }
    }
    Ok(out)
}
