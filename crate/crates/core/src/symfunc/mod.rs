//! Schur-basis arithmetic.
//!
//! [`SymFunc`] is a finitely supported integer combination of Schur functions
//! `s_lam`. Multiplication goes through Littlewood–Richardson coefficients,
//! which are memoized in-process and optionally persisted with [`cache`].

pub mod cache;
mod lr;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::config;
use crate::diagrams::Partition;
use crate::error::Result;

pub use lr::{clear_memo, count_lr_tableaux, lr_coefficient, lr_expand};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SymFunc {
    terms: BTreeMap<Partition, BigInt>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        SymFunc::schur(Partition::empty())
    }

    pub fn schur(lam: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lam, BigInt::one());
        SymFunc { terms }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut f = SymFunc::zero();
        for (lam, c) in terms {
            f.add_term(lam, c.into());
        }
        f
    }

    pub fn add_term(&mut self, lam: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lam) {
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

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, lam: &Partition) -> BigInt {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient is positive, i.e. the value is an honest
    /// character rather than a virtual one.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Partition::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, k: &BigInt) -> SymFunc {
        if k.is_zero() {
            return SymFunc::zero();
        }
        SymFunc { terms: self.terms.iter().map(|(l, c)| (l.clone(), c * k)).collect() }
    }

    /// Drops every term whose diagram has more than `rows` rows, i.e. evaluates
    /// at a space of dimension `rows`.
    pub fn truncate_rows(&self, rows: usize) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().filter(|(l, _)| l.len() <= rows).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    /// Bilinear extension of `s_mu * s_nu = sum c^lam_{mu,nu} s_lam`.
    pub fn product(&self, other: &SymFunc) -> Result<SymFunc> {
        config::check_degree(self.max_degree() + other.max_degree())?;
        let mut out = SymFunc::zero();
        for (mu, a) in &self.terms {
            for (nu, b) in &other.terms {
                let ab = a * b;
                for (lam, c) in lr_expand(mu, nu)? {
                    out.add_term(lam, &ab * BigInt::from(c));
                }
            }
        }
        Ok(out)
    }
}

/// `s_mu * s_nu` as a [`SymFunc`].
pub fn schur_product(a: &SymFunc, b: &SymFunc) -> Result<SymFunc> {
    a.product(b)
}

/// `(e_k, h_k)`, the characters of the exterior and symmetric powers.
pub fn elementary_homogeneous(k: usize) -> Result<(SymFunc, SymFunc)> {
    config::check_degree(k)?;
    Ok((SymFunc::schur(Partition::column(k)), SymFunc::schur(Partition::row(k))))
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), c.clone());
        }
    }
}

impl SubAssign<&SymFunc> for SymFunc {
    fn sub_assign(&mut self, rhs: &SymFunc) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), -c);
        }
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.scale(&BigInt::from(-1))
    }
}

/// Panics when the degree cap is exceeded; use [`SymFunc::product`] to handle it.
impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        self.product(rhs).expect("product exceeds the degree cap")
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "s{lam}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{partitions_of, partitions_up_to};
    use num_bigint::BigUint;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_slice(parts).unwrap()
    }

    fn s(parts: &[u32]) -> SymFunc {
        SymFunc::schur(p(parts))
    }

    #[test]
    fn product_examples() {
        assert_eq!(&s(&[1]) * &s(&[1]), &s(&[2]) + &s(&[1, 1]));
        let expected = SymFunc::from_terms([(p(&[3, 1]), 1), (p(&[2, 2]), 1), (p(&[2, 1, 1]), 1)]);
        assert_eq!(&s(&[2, 1]) * &s(&[1]), expected);
        assert_eq!(&s(&[3, 1]) * &SymFunc::one(), s(&[3, 1]));
    }

    #[test]
    fn elementary_homogeneous_examples() {
        let (e0, h0) = elementary_homogeneous(0).unwrap();
        assert_eq!((e0, h0), (SymFunc::one(), SymFunc::one()));
        let (e1, h1) = elementary_homogeneous(1).unwrap();
        assert_eq!((e1, h1), (s(&[1]), s(&[1])));
        let (e3, h3) = elementary_homogeneous(3).unwrap();
        assert_eq!((e3, h3), (s(&[1, 1, 1]), s(&[3])));
    }

    #[test]
    fn alternating_cauchy_kernel_vanishes() {
        for d in 1..=8 {
            let mut total = SymFunc::zero();
            for i in 0..=d {
                let (e, _) = elementary_homogeneous(i).unwrap();
                let (_, h) = elementary_homogeneous(d - i).unwrap();
                let term = &e * &h;
                if i % 2 == 0 {
                    total += &term;
                } else {
                    total -= &term;
                }
            }
            assert!(total.is_zero(), "d = {d}: {total}");
        }
    }

    #[test]
    fn dimension_consistency() {
        for mu in partitions_up_to(5) {
            for nu in partitions_up_to(5) {
                let prod = &SymFunc::schur(mu.clone()) * &SymFunc::schur(nu.clone());
                for n in 1..=5 {
                    let lhs = mu.gl_dimension(n) * nu.gl_dimension(n);
                    let rhs: BigUint = prod
                        .terms()
                        .iter()
                        .map(|(l, c)| c.to_biguint().unwrap() * l.gl_dimension(n))
                        .sum();
                    assert_eq!(lhs, rhs, "{mu} {nu} N={n}");
                }
            }
        }
    }

    #[test]
    fn product_is_commutative_and_associative() {
        let a = &s(&[2, 1]) + &s(&[1]);
        let b = &s(&[1, 1]) - &s(&[2]);
        let c = s(&[1]);
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn degree_cap_refusal() {
        let big = SymFunc::schur(partitions_of(7)[0].clone());
        let err = big.product(&big).unwrap_err();
        assert!(err.is_limit());
        assert!(err.to_string().contains("14"));
    }
}
