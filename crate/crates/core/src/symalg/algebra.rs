//! Group algebras `ℚ[S_{n_1} × ⋯ × S_{n_r}]` with exact coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::perm::Perm;

/// An element of a product of symmetric groups, one permutation per factor.
pub type GroupElement = Vec<Perm>;

#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    sizes: Vec<usize>,
    coeffs: BTreeMap<GroupElement, BigRational>,
}

impl GroupAlgebraElement {
    pub fn zero(sizes: &[usize]) -> Self {
        GroupAlgebraElement { sizes: sizes.to_vec(), coeffs: BTreeMap::new() }
    }

    pub fn one(sizes: &[usize]) -> Self {
        Self::basis(sizes.iter().map(|&n| Perm::identity(n)).collect())
    }

    pub fn basis(g: GroupElement) -> Self {
        let sizes = g.iter().map(Perm::size).collect();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(g, BigRational::one());
        GroupAlgebraElement { sizes, coeffs }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn coeffs(&self) -> &BTreeMap<GroupElement, BigRational> {
        &self.coeffs
    }

    pub fn coeff(&self, g: &GroupElement) -> BigRational {
        self.coeffs.get(g).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, g: GroupElement, c: BigRational) {
        debug_assert!(g.iter().map(Perm::size).eq(self.sizes.iter().copied()));
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(g) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let mut out = Self::zero(&self.sizes);
        for (g, c) in &self.coeffs {
            out.add_term(g.clone(), c * k);
        }
        out
    }

    /// `self ⊗ other` in the product of the two groups.
    pub fn outer(&self, other: &Self) -> Self {
        let mut sizes = self.sizes.clone();
        sizes.extend(&other.sizes);
        let mut out = Self::zero(&sizes);
        for (g, a) in &self.coeffs {
            for (h, b) in &other.coeffs {
                let mut gh = g.clone();
                gh.extend(h.iter().cloned());
                out.add_term(gh, a * b);
            }
        }
        out
    }

    /// The coefficient vector, for rank computations.
    pub fn to_vector(&self) -> Vec<(GroupElement, BigRational)> {
        self.coeffs.iter().map(|(g, c)| (g.clone(), c.clone())).collect()
    }
}

fn compose(g: &GroupElement, h: &GroupElement) -> GroupElement {
    g.iter().zip(h).map(|(a, b)| a.compose(b)).collect()
}

impl Mul for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn mul(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        assert_eq!(self.sizes, rhs.sizes, "group algebra factors differ");
        let mut acc: BTreeMap<GroupElement, BigRational> = BTreeMap::new();
        for (g, a) in &self.coeffs {
            for (h, b) in &rhs.coeffs {
                *acc.entry(compose(g, h)).or_insert_with(BigRational::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        GroupAlgebraElement { sizes: self.sizes.clone(), coeffs: acc }
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = self.clone();
        for (g, c) in &rhs.coeffs {
            out.add_term(g.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn sub(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = self.clone();
        for (g, c) in &rhs.coeffs {
            out.add_term(g.clone(), -c.clone());
        }
        out
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for p in g {
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

/// Every element of `S_{sizes[0]} × ⋯`.
pub fn group_elements(sizes: &[usize]) -> Vec<GroupElement> {
    let mut out: Vec<GroupElement> = vec![Vec::new()];
    for &n in sizes {
        let perms = Perm::all(n);
        out = out
            .into_iter()
            .flat_map(|g| {
                perms.iter().map(move |p| {
                    let mut g = g.clone();
                    g.push(p.clone());
                    g
                })
            })
            .collect();
    }
    out
}

/// `Σ_{g ∈ H} sign(g)^alt · g` over the subgroup `H ⊂ S_n` preserving each block.
pub(crate) fn block_sum(n: usize, blocks: &[Vec<usize>], alternating: bool) -> GroupAlgebraElement {
    let mut block_of = vec![usize::MAX; n];
    for (b, cells) in blocks.iter().enumerate() {
        for &c in cells {
            block_of[c] = b;
        }
    }
    let mut out = GroupAlgebraElement::zero(&[n]);
    for p in Perm::all(n) {
        if (0..n).all(|i| block_of[p.apply(i)] == block_of[i]) {
            let c = if alternating && p.sign() < 0 { -BigInt::one() } else { BigInt::one() };
            out.add_term(vec![p], BigRational::from_integer(c));
        }
    }
    out
}
