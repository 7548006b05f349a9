//! Ext groups computed from the injective resolution of `ℂ`.
//!
//! The resolution is `0 → ℂ → I → F⊗I → Λ²F⊗I → ⋯` with `I_j = Λ^jF ⊗ I`,
//! whose socle is `Λ^jF = ⊕_{|γ|=j} W_{*γ} ⊗ W_{γ'}`. Tensoring with a purely
//! thick simple `T` keeps the resolution injective and minimal, which gives
//! Ext into thick targets. For general pairs only vanishing is decided, via
//! the defect.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::config;
use crate::diagrams::{partitions_of, Partition};
use crate::error::Result;
use crate::grothendieck::{tensor, tensor_simple, Decomposition, Generator, SimpleIndex};
use crate::plethysm;
use crate::poset::{self, QuadIndex};
use crate::symfunc::lr_coefficient;

/// The `j`-th term `Λ^jF ⊗ I` of the resolution together with its socle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionTerm {
    pub j: usize,
    pub socle: Decomposition,
}

impl ResolutionTerm {
    pub fn body(&self) -> String {
        format!("Λ^{}F ⊗ I", self.j)
    }
}

pub fn resolution_term(j: usize) -> Result<ResolutionTerm> {
    let socle = plethysm::cauchy_ext(j)?.map_keys(|(x, y)| SimpleIndex::thick(x.clone(), y.clone()));
    Ok(ResolutionTerm { j, socle })
}

/// `[Λ^iF ⊗ S^kF]`.
pub fn ext_sym_class(i: usize, k: usize) -> Result<Decomposition> {
    config::check_degree(2 * (i + k))?;
    let d = tensor_simple(&SimpleIndex::unit(), Generator::ExtF(i))?;
    tensor(&d, Generator::SymF(k))
}

/// `[S_{(a,1^b)} F]` for `a ≥ 1`, by `Σ_i (-1)^i [Λ^{b-i}F ⊗ S^{a+i}F]`.
pub fn hook_of_f(a: usize, b: usize) -> Result<Decomposition> {
    assert!(a >= 1, "a hook needs a first row");
    let mut out = Decomposition::new();
    for i in 0..=b {
        let term = ext_sym_class(b - i, a + i)?;
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.add_scaled(&term, &sign);
    }
    Ok(out)
}

/// The layer `K_j^k / K_j^{k-1}` of the kernel `K_j` of `Λ^jF⊗I → Λ^{j+1}F⊗I`:
/// the summand `S_{(k+1,1^{j-1})}F` of `Λ^jF ⊗ S^kF` for `j ≥ 1`, and `ℂ` or `0`
/// for `j = 0`.
pub fn kernel_layer(j: usize, k: usize) -> Result<Decomposition> {
    config::check_degree(2 * (j + k))?;
    if j == 0 {
        return Ok(if k == 0 { Decomposition::singleton(SimpleIndex::unit()) } else { Decomposition::new() });
    }
    hook_of_f(k + 1, j - 1)
}

/// `dim Ext^j(L_x, ℂ)`: one exactly when `x = (lam, ∅, ∅, lam')` with `|lam| = j`.
pub fn ext_to_trivial(x: &SimpleIndex, j: usize) -> u64 {
    let hit = x.is_thick() && x.lam.degree() == j && x.pi == x.lam.conjugate();
    u64::from(hit)
}

/// `dim Ext^q(L_x, W_{*alpha} ⊗ W_beta)`.
///
/// For thick `x = (lam, ∅, ∅, pi)` this is `Σ_{|γ|=q} c^lam_{alpha,γ} c^pi_{beta,γ'}`.
/// A simple with a nonempty thin part is incomparable with every thick index,
/// so the answer is zero.
pub fn ext_to_thick(x: &SimpleIndex, alpha: &Partition, beta: &Partition, q: usize) -> BigUint {
    if !x.is_thick()
        || x.lam.degree() != alpha.degree() + q
        || x.pi.degree() != beta.degree() + q
        || !x.lam.contains(alpha)
        || !x.pi.contains(beta)
    {
        return BigUint::zero();
    }
    partitions_of(q)
        .into_iter()
        .map(|g| {
            let a = lr_coefficient(&x.lam, alpha, &g);
            if a == 0 {
                return BigUint::zero();
            }
            BigUint::from(a) * BigUint::from(lr_coefficient(&x.pi, beta, &g.conjugate()))
        })
        .sum()
}

/// True when `Ext^q(L_s, L_t)` is forced to vanish because the defect from the
/// degree quadruple of `s` to that of `t` is undefined or different from `q`.
pub fn ext_vanishes(s: &SimpleIndex, t: &SimpleIndex, q: usize) -> bool {
    poset::defect(&s.quad(), &t.quad()) != Some(q)
}

/// What can be said about `dim Ext^q(L_s, L_t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtAnswer {
    Dimension(BigUint),
    /// Excluded by the defect; the dimension is zero.
    Vanishes,
    /// Not excluded, and no closed form is available for this pair.
    Undetermined,
}

impl fmt::Display for ExtAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtAnswer::Dimension(d) => write!(f, "{d}"),
            ExtAnswer::Vanishes => f.write_str("0 (defect)"),
            ExtAnswer::Undetermined => f.write_str("undetermined"),
        }
    }
}

pub fn ext_dimension(s: &SimpleIndex, t: &SimpleIndex, q: usize) -> ExtAnswer {
    if ext_vanishes(s, t, q) {
        return ExtAnswer::Vanishes;
    }
    if t.is_thick() {
        return ExtAnswer::Dimension(ext_to_thick(s, &t.lam, &t.pi, q));
    }
    ExtAnswer::Undetermined
}

/// `Σ_{i+k=d} (-1)^i [Λ^iF ⊗ S^kF]`, which vanishes for `d ≥ 1`.
pub fn euler_characteristic(d: usize) -> Result<Decomposition> {
    let mut out = Decomposition::new();
    for i in 0..=d {
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.add_scaled(&ext_sym_class(i, d - i)?, &sign);
    }
    Ok(out)
}

/// The defect from `x` to the unit, used to cross-check [`ext_to_trivial`].
pub fn defect_to_unit(x: &SimpleIndex) -> Option<usize> {
    poset::defect(&x.quad(), &QuadIndex::ZERO)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::partitions_up_to;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_slice(parts).unwrap()
    }

    fn idx(s: &str) -> SimpleIndex {
        s.parse().unwrap()
    }

    fn dec(items: &[&str]) -> Decomposition {
        items.iter().map(|s| (idx(s), 1)).collect()
    }

    #[test]
    fn resolution_examples() {
        assert_eq!(resolution_term(0).unwrap().socle, dec(&["[],[],[],[]"]));
        assert_eq!(resolution_term(1).unwrap().socle, dec(&["[1],[],[],[1]"]));
        assert_eq!(resolution_term(2).unwrap().socle, dec(&["[2],[],[],[1,1]", "[1,1],[],[],[2]"]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_layer(0, 0).unwrap(), dec(&["[],[],[],[]"]));
        assert!(kernel_layer(0, 3).unwrap().is_zero());
        assert_eq!(kernel_layer(1, 0).unwrap(), dec(&["[1],[],[],[1]"]));
        assert_eq!(kernel_layer(1, 1).unwrap(), dec(&["[2],[],[],[2]", "[1,1],[],[],[1,1]"]));
        assert_eq!(kernel_layer(2, 0).unwrap(), resolution_term(2).unwrap().socle);
    }

    #[test]
    fn kernel_layers_are_effective_and_complementary() {
        for j in 1..=3 {
            for k in 0..=3 {
                let kl = kernel_layer(j, k).unwrap();
                assert!(kl.is_effective() || kl.is_zero(), "K_{j}^{k} = {kl}");
                let mut image = ext_sym_class(j - 1, k + 1).unwrap();
                image.subtract(&kernel_layer(j - 1, k + 1).unwrap());
                assert_eq!(kl, image, "j={j} k={k}");
            }
        }
    }

    #[test]
    fn ext_trivial_examples() {
        assert_eq!(ext_to_trivial(&idx("[1],[],[],[1]"), 1), 1);
        assert_eq!(ext_to_trivial(&idx("[2],[],[],[2]"), 2), 0);
        assert_eq!(ext_to_trivial(&SimpleIndex::unit(), 0), 1);
        assert_eq!(ext_to_trivial(&idx("[1],[],[],[1]"), 2), 0);
    }

    #[test]
    fn ext_thick_examples() {
        let one = BigUint::one();
        assert_eq!(ext_to_thick(&idx("[1],[],[],[1]"), &Partition::empty(), &Partition::empty(), 1), one);
        let x = idx("[2,1],[],[],[3]");
        assert_eq!(ext_to_thick(&x, &x.lam, &x.pi, 0), one);
        assert_eq!(ext_to_thick(&idx("[2],[],[],[1,1]"), &p(&[1]), &p(&[1]), 1), one);
        assert!(ext_to_thick(&idx("[1],[1],[],[1]"), &Partition::empty(), &Partition::empty(), 1).is_zero());
    }

    #[test]
    fn thick_reduces_to_trivial() {
        for lam in partitions_up_to(5) {
            for pi in partitions_up_to(5) {
                let x = SimpleIndex::thick(lam.clone(), pi.clone());
                for q in 0..=5 {
                    let a = ext_to_thick(&x, &Partition::empty(), &Partition::empty(), q);
                    assert_eq!(a, BigUint::from(ext_to_trivial(&x, q)), "{x} q={q}");
                }
            }
        }
    }

    #[test]
    fn thick_matches_socle_of_twisted_resolution() {
        for alpha in partitions_up_to(2) {
            for beta in partitions_up_to(2) {
                let t = SimpleIndex::thick(alpha.clone(), beta.clone());
                for q in 0..=3 {
                    let mut socle = Decomposition::singleton(t.clone());
                    socle = tensor(&socle, Generator::ExtF(q)).unwrap();
                    for (x, c) in &socle {
                        assert_eq!(BigInt::from(ext_to_thick(x, &alpha, &beta, q)), *c, "{x} {t} q={q}");
                    }
                    for lam in partitions_of(alpha.degree() + q) {
                        for pi in partitions_of(beta.degree() + q) {
                            let x = SimpleIndex::thick(lam.clone(), pi.clone());
                            if !socle.contains(&x) {
                                assert!(ext_to_thick(&x, &alpha, &beta, q).is_zero());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn vanishing_examples() {
        let f = idx("[1],[],[],[1]");
        let unit = SimpleIndex::unit();
        assert!(ext_vanishes(&f, &unit, 2));
        assert!(!ext_vanishes(&f, &unit, 1));
        assert!(!ext_vanishes(&unit, &unit, 0));
        assert!(ext_vanishes(&idx("[],[1],[],[]"), &idx("[1],[],[],[]"), 0));
        assert_eq!(ext_dimension(&f, &unit, 1), ExtAnswer::Dimension(BigUint::one()));
        assert_eq!(ext_dimension(&idx("[],[1],[1],[]"), &idx("[],[1],[1],[]"), 0), ExtAnswer::Undetermined);
    }

    #[test]
    fn trivial_ext_matches_defect() {
        for lam in partitions_up_to(4) {
            let x = SimpleIndex::thick(lam.clone(), lam.conjugate());
            assert_eq!(ext_to_trivial(&x, lam.degree()), 1);
            assert_eq!(defect_to_unit(&x), Some(lam.degree()));
        }
    }

    #[test]
    fn euler_characteristic_vanishes() {
        for d in 1..=4 {
            assert!(euler_characteristic(d).unwrap().is_zero(), "d = {d}");
        }
        assert_eq!(euler_characteristic(0).unwrap(), dec(&["[],[],[],[]"]));
    }
}
