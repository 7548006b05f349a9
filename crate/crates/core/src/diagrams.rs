//! Young diagrams.
//!
//! A [`Partition`] is stored minimal-length (no trailing zeros), so equality
//! and hashing are canonical. Partitions are totally ordered by degree first
//! and then lexicographically with larger parts first, which fixes the order of
//! every rendered result in the crate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::syntax;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
    degree: usize,
}

impl Partition {
    /// The empty diagram.
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Builds a partition, dropping trailing zeros. Fails unless the parts are
    /// weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        let degree = parts.iter().map(|&p| p as usize).sum();
        Ok(Partition { parts, degree })
    }

    pub fn from_slice(parts: &[u32]) -> Result<Self> {
        Partition::new(parts.to_vec())
    }

    /// A single row of `k` boxes.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![k as u32], degree: k }
    }

    /// A single column of `k` boxes.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k], degree: k }
    }

    /// The hook `(a, 1^b)`: a row of length `a` followed by `b` single boxes.
    pub fn hook(a: usize, b: usize) -> Self {
        assert!(a >= 1 || b == 0, "hook needs a non-empty first row");
        let mut parts = Vec::with_capacity(b + 1);
        if a > 0 {
            parts.push(a as u32);
        }
        parts.extend(std::iter::repeat_n(1, b));
        Partition { parts, degree: a + b }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length, zero past the last row.
    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let mut parts = Vec::with_capacity(width);
        for col in 0..width as u32 {
            parts.push(self.parts.iter().take_while(|&&p| p > col).count() as u32);
        }
        Partition { parts, degree: self.degree }
    }

    /// All diagrams obtained by adding one box, in canonical order.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for row in 0..=self.parts.len() {
            if row == 0 || self.part(row) < self.part(row - 1) {
                let mut parts = self.parts.clone();
                if row == parts.len() {
                    parts.push(1);
                } else {
                    parts[row] += 1;
                }
                out.push(Partition { parts, degree: self.degree + 1 });
            }
        }
        out.sort();
        out
    }

    /// All diagrams obtained by removing one box, in canonical order.
    pub fn remove_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for row in 0..self.parts.len() {
            if self.part(row) > self.part(row + 1) {
                let mut parts = self.parts.clone();
                parts[row] -= 1;
                if parts[row] == 0 {
                    parts.pop();
                }
                out.push(Partition { parts, degree: self.degree - 1 });
            }
        }
        out.sort();
        out
    }

    /// Whether `other` fits inside `self` (needed for skew shapes).
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// Frobenius coordinates `(a_i | b_i)`: arm and leg lengths of the hooks
    /// with corner on the main diagonal.
    pub fn frobenius(&self) -> Vec<(u32, u32)> {
        let conj = self.conjugate();
        (0..self.parts.len())
            .take_while(|&i| self.parts[i] as usize > i)
            .map(|i| (self.parts[i] - i as u32 - 1, conj.parts[i] - i as u32 - 1))
            .collect()
    }

    /// Every diagonal hook has leg one longer than its arm.
    pub fn is_special(&self) -> bool {
        self.frobenius().iter().all(|&(a, b)| b == a + 1)
    }

    /// Arm plus leg plus one for the box in `row`, `col` (0-based).
    pub fn hook_length(&self, row: usize, col: usize) -> u32 {
        let arm = self.parts[row] - col as u32 - 1;
        let leg = self.parts[row + 1..].iter().take_while(|&&p| p as usize > col).count() as u32;
        arm + leg + 1
    }

    /// Iterator over the boxes as `(row, col)` pairs, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &p)| (0..p as usize).map(move |c| (r, c)))
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn standard_tableaux(&self) -> BigUint {
        let hooks: BigUint = self
            .boxes()
            .map(|(r, c)| BigUint::from(self.hook_length(r, c)))
            .product();
        factorial(self.degree) / hooks
    }

    /// Dimension of the Schur functor applied to an `n`-dimensional space,
    /// by the hook-content formula.
    pub fn gl_dimension(&self, n: usize) -> BigUint {
        if self.len() > n {
            return BigUint::zero();
        }
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (r, c) in self.boxes() {
            num *= BigUint::from(n + c - r);
            den *= BigUint::from(self.hook_length(r, c));
        }
        num / den
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        syntax::parse_partition(s)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).map(BigUint::from).product()
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// All partitions of `n` in canonical order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(prefix.clone()).expect("generated parts are decreasing"));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// All partitions of degree at most `n`, in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Dimension of the irreducible rational `GL(n)`-module whose highest weight
/// is `nu` padded with zeros and ending in `-mu` reversed, by the Weyl
/// dimension formula. Zero when the two diagrams do not fit in `n` rows.
pub fn mixed_gl_dimension(mu: &Partition, nu: &Partition, n: usize) -> BigUint {
    if mu.len() + nu.len() > n {
        return BigUint::zero();
    }
    let mut weight = vec![0i64; n];
    for (i, &p) in nu.parts().iter().enumerate() {
        weight[i] = p as i64;
    }
    for (i, &p) in mu.parts().iter().enumerate() {
        weight[n - 1 - i] = -(p as i64);
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= BigInt::from(weight[i] - weight[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    (num / den).to_biguint().expect("Weyl dimension is non-negative")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_slice(parts).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[1]).conjugate(), p(&[1]));
        assert_eq!(p(&[2, 1, 1]).conjugate(), p(&[3, 1]));
    }

    #[test]
    fn conjugate_matches_box_transpose() {
        for lam in partitions_up_to(10) {
            let mut cols = vec![0u32; lam.part(0) as usize];
            for (_, c) in lam.boxes() {
                cols[c] += 1;
            }
            assert_eq!(lam.conjugate().parts(), &cols[..]);
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn add_box_examples() {
        assert_eq!(Partition::empty().add_box(), vec![p(&[1])]);
        assert_eq!(p(&[1]).add_box(), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(p(&[2, 1]).add_box(), vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]);
    }

    #[test]
    fn add_and_remove_box_are_inverse() {
        for lam in partitions_up_to(8) {
            let added = lam.add_box();
            let mut distinct = lam.parts().to_vec();
            distinct.dedup();
            assert_eq!(added.len(), distinct.len() + 1, "{lam}");
            for q in added {
                assert!(q.remove_box().contains(&lam));
            }
        }
    }

    #[test]
    fn even_and_special() {
        assert!(p(&[4, 2]).is_even());
        assert!(!p(&[3, 1]).is_even());
        assert!(p(&[2, 1, 1]).is_special());
        assert!(!p(&[3, 1]).is_special());
        assert!(Partition::empty().is_special());
        assert_eq!(p(&[2, 1, 1]).frobenius(), vec![(1, 2)]);
    }

    /// Walks the diagonal boxes directly, counting arm and leg cells.
    fn special_by_inspection(lam: &Partition) -> bool {
        let mut i = 0;
        while (lam.part(i) as usize) > i {
            let arm = (lam.part(i) as usize) - i - 1;
            let mut leg = 0;
            while (lam.part(i + leg + 1) as usize) > i {
                leg += 1;
            }
            if leg != arm + 1 {
                return false;
            }
            i += 1;
        }
        true
    }

    #[test]
    fn special_agrees_with_inspection() {
        for lam in partitions_up_to(12) {
            assert_eq!(lam.is_special(), special_by_inspection(&lam), "{lam}");
        }
    }

    #[test]
    fn gl_dimension_examples() {
        assert_eq!(p(&[1]).gl_dimension(3), BigUint::from(3u32));
        assert_eq!(p(&[2, 1, 1]).gl_dimension(4), BigUint::from(15u32));
        assert_eq!(p(&[1, 1, 1]).gl_dimension(2), BigUint::zero());
    }

    #[test]
    fn standard_tableaux_counts() {
        assert_eq!(p(&[2, 1]).standard_tableaux(), BigUint::from(2u32));
        assert_eq!(p(&[3, 2]).standard_tableaux(), BigUint::from(5u32));
        let total: BigUint = partitions_of(5).iter().map(|l| l.standard_tableaux().pow(2)).sum();
        assert_eq!(total, factorial(5));
    }

    #[test]
    fn mixed_dimension_small_cases() {
        // adjoint of GL(n) has dimension n^2 - 1
        assert_eq!(mixed_gl_dimension(&p(&[1]), &p(&[1]), 5), BigUint::from(24u32));
        assert_eq!(mixed_gl_dimension(&Partition::empty(), &p(&[2]), 4), BigUint::from(10u32));
        assert_eq!(mixed_gl_dimension(&p(&[1, 1]), &Partition::empty(), 4), BigUint::from(6u32));
        assert_eq!(mixed_gl_dimension(&p(&[1, 1]), &p(&[1]), 2), BigUint::zero());
    }

    #[test]
    fn normalizes_and_rejects() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn canonical_order() {
        let mut v = partitions_of(3);
        v.reverse();
        v.sort();
        assert_eq!(v, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert!(p(&[5]) < p(&[1, 1, 1, 1, 1, 1]));
    }
}
