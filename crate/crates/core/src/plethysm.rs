//! Closed decompositions of symmetric and exterior powers.
//!
//! For a tensor product `x ⊗ y` the Cauchy identities give
//! `S^k(x⊗y) = ⊕ S_lam x ⊗ S_lam y` and `Λ^k(x⊗y) = ⊕ S_lam x ⊗ S_lam' y`
//! over `|lam| = k`. For `S²x` and `Λ²x` the four powers are indexed by even
//! partitions, their conjugates, special partitions and their conjugates,
//! each of degree `2k`.

use std::fmt;

use crate::combination::Combination;
use crate::config;
use crate::diagrams::{partitions_of, Partition};
use crate::error::Result;

/// A multiplicity map over pairs of diagrams.
pub type PairDecomposition = Combination<(Partition, Partition)>;

/// Which power functor is applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Power {
    Symmetric,
    Exterior,
}

impl fmt::Display for Power {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Power::Symmetric => "symmetric",
            Power::Exterior => "exterior",
        })
    }
}

/// `S^k(x⊗y)`: the pairs `(lam, lam)` with `|lam| = k`.
pub fn cauchy_sym(k: usize) -> Result<PairDecomposition> {
    config::check_degree(k)?;
    Ok(partitions_of(k).into_iter().map(|l| ((l.clone(), l), 1)).collect())
}

/// `Λ^k(x⊗y)`: the pairs `(lam, lam')` with `|lam| = k`.
pub fn cauchy_ext(k: usize) -> Result<PairDecomposition> {
    config::check_degree(k)?;
    Ok(partitions_of(k).into_iter().map(|l| {
        let c = l.conjugate();
        ((l, c), 1)
    }).collect())
}

/// Either Cauchy family.
pub fn cauchy(power: Power, k: usize) -> Result<PairDecomposition> {
    match power {
        Power::Symmetric => cauchy_sym(k),
        Power::Exterior => cauchy_ext(k),
    }
}

/// `S^k S²x` (even partitions) or `Λ^k S²x` (conjugates of special ones).
pub fn power_of_sym2(k: usize, power: Power) -> Result<Combination<Partition>> {
    config::check_degree(2 * k)?;
    let lams = partitions_of(2 * k).into_iter();
    Ok(match power {
        Power::Symmetric => lams.filter(Partition::is_even).map(|l| (l, 1)).collect(),
        Power::Exterior => lams.filter(Partition::is_special).map(|l| (l.conjugate(), 1)).collect(),
    })
}

/// `S^k Λ²x` (conjugates of even partitions) or `Λ^k Λ²x` (special ones).
pub fn power_of_ext2(k: usize, power: Power) -> Result<Combination<Partition>> {
    config::check_degree(2 * k)?;
    let lams = partitions_of(2 * k).into_iter();
    Ok(match power {
        Power::Symmetric => lams.filter(Partition::is_even).map(|l| (l.conjugate(), 1)).collect(),
        Power::Exterior => lams.filter(Partition::is_special).map(|l| (l, 1)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::binomial;
    use num_bigint::{BigInt, BigUint};

    fn p(parts: &[u32]) -> Partition {
        Partition::from_slice(parts).unwrap()
    }

    fn dim(c: &Combination<Partition>, n: usize) -> BigUint {
        c.iter().map(|(l, m)| m.to_biguint().unwrap() * l.gl_dimension(n)).sum()
    }

    #[test]
    fn examples() {
        let got: Vec<_> = cauchy_sym(3).unwrap().keys().cloned().collect();
        assert_eq!(got, vec![(p(&[3]), p(&[3])), (p(&[2, 1]), p(&[2, 1])), (p(&[1, 1, 1]), p(&[1, 1, 1]))]);
        let got: Vec<_> = cauchy_ext(2).unwrap().keys().cloned().collect();
        assert_eq!(got, vec![(p(&[2]), p(&[1, 1])), (p(&[1, 1]), p(&[2]))]);
        assert_eq!(cauchy_sym(0).unwrap(), Combination::singleton((Partition::empty(), Partition::empty())));

        let s2s2 = power_of_sym2(2, Power::Symmetric).unwrap();
        assert_eq!(s2s2.keys().cloned().collect::<Vec<_>>(), vec![p(&[4]), p(&[2, 2])]);
        assert_eq!(dim(&s2s2, 2), BigUint::from(6u32));
        let l2l2 = power_of_ext2(2, Power::Exterior).unwrap();
        assert_eq!(l2l2, Combination::singleton(p(&[2, 1, 1])));
        assert_eq!(dim(&l2l2, 4), BigUint::from(15u32));
        assert_eq!(power_of_sym2(0, Power::Exterior).unwrap(), Combination::singleton(Partition::empty()));
    }

    #[test]
    fn multiplicity_free() {
        for k in 0..=5 {
            for c in [cauchy_sym(k).unwrap(), cauchy_ext(k).unwrap()] {
                assert!(c.iter().all(|(_, m)| *m == BigInt::from(1)));
            }
        }
    }

    #[test]
    fn dimension_identities() {
        for k in 1..=4 {
            for n in 2..=5 {
                let sym = n * (n + 1) / 2;
                let ext = n * (n - 1) / 2;
                let s = |d: usize| binomial(d + k - 1, k);
                let e = |d: usize| binomial(d, k);
                assert_eq!(dim(&power_of_sym2(k, Power::Symmetric).unwrap(), n), s(sym), "S^{k} S^2, N={n}");
                assert_eq!(dim(&power_of_sym2(k, Power::Exterior).unwrap(), n), e(sym), "L^{k} S^2, N={n}");
                assert_eq!(dim(&power_of_ext2(k, Power::Symmetric).unwrap(), n), s(ext), "S^{k} L^2, N={n}");
                assert_eq!(dim(&power_of_ext2(k, Power::Exterior).unwrap(), n), e(ext), "L^{k} L^2, N={n}");
            }
        }
    }

    #[test]
    fn cauchy_dimension_identities() {
        for a in 1..=5 {
            for b in 1..=5 {
                for k in 0..=6 {
                    let sym: BigUint = cauchy_sym(k).unwrap().keys().map(|(x, y)| x.gl_dimension(a) * y.gl_dimension(b)).sum();
                    assert_eq!(sym, binomial(a * b + k - 1, k));
                    let ext: BigUint = cauchy_ext(k).unwrap().keys().map(|(x, y)| x.gl_dimension(a) * y.gl_dimension(b)).sum();
                    assert_eq!(ext, binomial(a * b, k));
                }
            }
        }
    }

    #[test]
    fn exterior_of_ext2_is_special() {
        for k in 0..=5 {
            let special: Vec<_> = partitions_of(2 * k).into_iter().filter(Partition::is_special).collect();
            let got: Vec<_> = power_of_ext2(k, Power::Exterior).unwrap().keys().cloned().collect();
            assert_eq!(got, special);
        }
    }
}
