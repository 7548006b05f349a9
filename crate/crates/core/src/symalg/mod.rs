//! Symmetric-group-algebra computations behind the morphism spaces between
//! the injective objects `I_{l,m,n,p} = I ⊗ J_{l,m,n,p}`.
//!
//! Degree-zero endomorphisms form `ℚ[S_l × S_m × S_n × S_p]`; degree-one
//! morphisms come in three flavors (evaluation, left shift, right shift) and
//! are free or induced bimodules over these group algebras. Closed forms are
//! checked against explicit constructions: Young symmetrizers, ranks of right
//! ideals, and orbits of [`wiring::Wiring`]s.

pub mod algebra;
pub mod linalg;
pub mod perm;
pub mod wiring;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::config;
use crate::diagrams::{factorial, Partition};
use crate::error::{Error, Result};
use crate::poset::QuadIndex;

pub use algebra::{group_elements, GroupAlgebraElement, GroupElement};
pub use perm::Perm;
pub use wiring::{Shape, Wiring};

/// Largest diagram for which a Young symmetrizer is built explicitly.
pub const YOUNG_LIMIT: usize = 6;

fn group_order(q: &QuadIndex) -> BigUint {
    factorial(q.l) * factorial(q.m) * factorial(q.n) * factorial(q.p)
}

/// `dim End(I_q) = l! m! n! p!`.
pub fn end_dimension(q: &QuadIndex) -> BigUint {
    group_order(q)
}

/// The three kinds of degree-one morphisms out of `I_{l,m,n,p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// To `I_{l,m-1,n-1,p}` by evaluating a `V*` against a `V_*^*`.
    Contract,
    /// To `I_{l+1,m-1,n,p}` through `V* → W_*`.
    ShiftLeft,
    /// To `I_{l,m,n-1,p+1}` through `V_*^* → W`.
    ShiftRight,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::Contract, Flavor::ShiftLeft, Flavor::ShiftRight];

    pub fn target(self, q: &QuadIndex) -> Result<QuadIndex> {
        let inapplicable = |reason| Error::Inapplicable { flavor: self.name(), index: q.to_string(), reason };
        match self {
            Flavor::Contract if q.m == 0 || q.n == 0 => Err(inapplicable("needs m >= 1 and n >= 1")),
            Flavor::ShiftLeft if q.m == 0 => Err(inapplicable("needs m >= 1")),
            Flavor::ShiftRight if q.n == 0 => Err(inapplicable("needs n >= 1")),
            _ => Ok(self.shape().target(q).expect("checked above")),
        }
    }

    pub fn shape(self) -> Shape {
        match self {
            Flavor::Contract => Shape { left: 0, right: 0, pairs: 1 },
            Flavor::ShiftLeft => Shape { left: 1, right: 0, pairs: 0 },
            Flavor::ShiftRight => Shape { left: 0, right: 1, pairs: 0 },
        }
    }

    /// A generating morphism as a wiring.
    pub fn generator(self, q: &QuadIndex) -> Result<Wiring> {
        self.target(q)?;
        Ok(match self {
            Flavor::Contract => Wiring::contraction(q),
            Flavor::ShiftLeft => Wiring::shift_left(q),
            Flavor::ShiftRight => Wiring::shift_right(q),
        }
        .expect("applicability checked"))
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Contract => "contract",
            Flavor::ShiftLeft => "shift-left",
            Flavor::ShiftRight => "shift-right",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "contract" => Ok(Flavor::Contract),
            "shift-left" | "left" => Ok(Flavor::ShiftLeft),
            "shift-right" | "right" => Ok(Flavor::ShiftRight),
            _ => Err(Error::InvalidArgument(format!("unknown flavor `{s}` (expected contract, shift-left, shift-right)"))),
        }
    }
}

/// `dim Hom(I_q, I_{flavor(q)})` in degree one.
pub fn hom_dimension_deg1(q: &QuadIndex, flavor: Flavor) -> Result<BigUint> {
    flavor.target(q)?;
    Ok(match flavor {
        Flavor::Contract => group_order(q),
        Flavor::ShiftLeft => group_order(q) * BigUint::from(q.l + 1),
        Flavor::ShiftRight => group_order(q) * BigUint::from(q.p + 1),
    })
}

/// Number of wirings of the given shape out of `J_q`:
/// `m! n! (l+a)! (p+b)! / (a! b! c!)`.
pub fn wiring_count(q: &QuadIndex, shape: Shape) -> Option<BigUint> {
    shape.target(q)?;
    let num = factorial(q.m) * factorial(q.n) * factorial(q.l + shape.left) * factorial(q.p + shape.right);
    Some(num / (factorial(shape.left) * factorial(shape.right) * factorial(shape.pairs)))
}

/// `|S_q|`, from the orbit of the identity wiring under the source group.
pub fn explicit_end_dimension(q: &QuadIndex) -> Result<usize> {
    config::check_group("endomorphism orbit", q.total())?;
    Ok(wiring::orbit(&Wiring::identity(q), false).len())
}

/// Dimension of the bimodule generated by the flavor's generating morphism,
/// counted as an explicit orbit of wirings.
pub fn explicit_hom_dimension_deg1(q: &QuadIndex, flavor: Flavor) -> Result<usize> {
    config::check_group("degree-one orbit", q.total())?;
    Ok(wiring::orbit(&flavor.generator(q)?, true).len())
}

/// The right `ℚ[S_q]`-module generated by the flavor's generator alone.
pub fn explicit_right_orbit(q: &QuadIndex, flavor: Flavor) -> Result<usize> {
    config::check_group("degree-one orbit", q.total())?;
    Ok(wiring::orbit(&flavor.generator(q)?, false).len())
}

/// Closed form for the kernel of the composition of two evaluations:
/// `l! m! n! p! / 2`, defined for `m, n ≥ 2`.
pub fn quadratic_kernel_dim(q: &QuadIndex) -> Result<BigUint> {
    if q.m < 2 || q.n < 2 {
        return Err(Error::Inapplicable { flavor: "contract∘contract", index: q.to_string(), reason: "needs m >= 2 and n >= 2" });
    }
    Ok(group_order(q) / BigUint::from(2u32))
}

/// `1 - (m-1 m)(n-1 n)` in `ℚ[S_l × S_m × S_n × S_p]`.
pub fn quadratic_relation(q: &QuadIndex) -> Result<GroupAlgebraElement> {
    quadratic_kernel_dim(q)?;
    let sizes = [q.l, q.m, q.n, q.p];
    let t = vec![
        Perm::identity(q.l),
        Perm::transposition(q.m, q.m - 2, q.m - 1),
        Perm::transposition(q.n, q.n - 2, q.n - 1),
        Perm::identity(q.p),
    ];
    Ok(&GroupAlgebraElement::one(&sizes) - &GroupAlgebraElement::basis(t))
}

/// Computed and closed-form dimensions of the right ideal generated by
/// [`quadratic_relation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelCheck {
    pub computed: usize,
    pub expected: BigUint,
}

impl KernelCheck {
    pub fn holds(&self) -> bool {
        BigUint::from(self.computed) == self.expected
    }
}

pub fn quadratic_kernel_check(q: &QuadIndex) -> Result<KernelCheck> {
    let expected = quadratic_kernel_dim(q)?;
    config::check_group("quadratic kernel", q.total())?;
    let x = quadratic_relation(q)?;
    let sizes = [q.l, q.m, q.n, q.p];
    let vectors = group_elements(&sizes).into_iter().map(|g| (&x * &GroupAlgebraElement::basis(g)).to_vector());
    Ok(KernelCheck { computed: linalg::rank_of(vectors), expected })
}

fn check_young(lam: &Partition) -> Result<()> {
    config::check_group("young symmetrizer", lam.degree())?;
    if lam.degree() > YOUNG_LIMIT {
        return Err(Error::SizeGuard { what: "young symmetrizer", size: lam.degree(), guard: YOUNG_LIMIT });
    }
    Ok(())
}

/// `c_lam = (Σ_{rows} r)(Σ_{columns} sign(c) c)` for the row-reading filling.
pub fn young_symmetrizer(lam: &Partition) -> Result<GroupAlgebraElement> {
    check_young(lam)?;
    let n = lam.degree();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); lam.len()];
    let mut cols: Vec<Vec<usize>> = vec![Vec::new(); lam.part(0) as usize];
    for (cell, (r, c)) in lam.boxes().enumerate() {
        rows[r].push(cell);
        cols[c].push(cell);
    }
    let a = algebra::block_sum(n, &rows, false);
    let b = algebra::block_sum(n, &cols, true);
    Ok(&a * &b)
}

/// `n! / f^lam`, the scalar with `c_lam² = h c_lam`.
pub fn young_scalar(lam: &Partition) -> BigUint {
    factorial(lam.degree()) / lam.standard_tableaux()
}

/// Whether `c_lam² = (n!/f^lam) c_lam` holds exactly.
pub fn young_idempotency(lam: &Partition) -> Result<bool> {
    let c = young_symmetrizer(lam)?;
    let h = BigRational::from_integer(BigInt::from(young_scalar(lam)));
    Ok(&c * &c == c.scale(&h))
}

/// `dim (c_lam ⊗ c_pi) ℚ[S_l × S_p] (c_lam ⊗ c_pi)`.
pub fn corner_dimension(lam: &Partition, pi: &Partition) -> Result<usize> {
    config::check_group("corner algebra", lam.degree() + pi.degree())?;
    let e = young_symmetrizer(lam)?.outer(&young_symmetrizer(pi)?);
    let sizes = [lam.degree(), pi.degree()];
    let vectors = group_elements(&sizes).into_iter().map(|g| (&(&e * &GroupAlgebraElement::basis(g)) * &e).to_vector());
    Ok(linalg::rank_of(vectors))
}

/// `dim c_lam ℚ[S_n] c_mu`, zero for distinct shapes of the same size.
pub fn intertwiner_dimension(lam: &Partition, mu: &Partition) -> Result<usize> {
    if lam.degree() != mu.degree() {
        return Err(Error::InvalidArgument(format!("{lam} and {mu} have different sizes")));
    }
    let a = young_symmetrizer(lam)?;
    let b = young_symmetrizer(mu)?;
    let vectors = group_elements(&[lam.degree()]).into_iter().map(|g| (&(&a * &GroupAlgebraElement::basis(g)) * &b).to_vector());
    Ok(linalg::rank_of(vectors))
}

/// The six ways of composing two degree-one morphisms, grouped by the
/// degree-two target they reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Composition {
    ContractContract,
    LeftLeft,
    RightRight,
    ContractLeft,
    ContractRight,
    LeftRight,
}

impl Composition {
    pub const ALL: [Composition; 6] = [
        Composition::ContractContract,
        Composition::LeftLeft,
        Composition::RightRight,
        Composition::ContractLeft,
        Composition::ContractRight,
        Composition::LeftRight,
    ];

    /// The `(first, second)` flavor sequences whose composites land in the same space.
    pub fn paths(self) -> Vec<(Flavor, Flavor)> {
        use Flavor::*;
        match self {
            Composition::ContractContract => vec![(Contract, Contract)],
            Composition::LeftLeft => vec![(ShiftLeft, ShiftLeft)],
            Composition::RightRight => vec![(ShiftRight, ShiftRight)],
            Composition::ContractLeft => vec![(Contract, ShiftLeft), (ShiftLeft, Contract)],
            Composition::ContractRight => vec![(Contract, ShiftRight), (ShiftRight, Contract)],
            Composition::LeftRight => vec![(ShiftLeft, ShiftRight), (ShiftRight, ShiftLeft)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Composition::ContractContract => "contract-contract",
            Composition::LeftLeft => "left-left",
            Composition::RightRight => "right-right",
            Composition::ContractLeft => "contract-left",
            Composition::ContractRight => "contract-right",
            Composition::LeftRight => "left-right",
        }
    }
}

/// Dimension bookkeeping for one composition map `domain → codomain`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionAccount {
    pub kind: Composition,
    pub source: QuadIndex,
    /// `Σ dim(Hom_2 ⊗_{ℚ[S_mid]} Hom_1)` over the paths.
    pub domain: BigUint,
    /// Size of the orbit of the composite wiring.
    pub codomain: usize,
    /// The closed form, where one is known.
    pub stated_kernel: Option<BigUint>,
}

impl CompositionAccount {
    /// `domain - codomain`, the kernel dimension given surjectivity.
    pub fn kernel(&self) -> Option<BigUint> {
        let c = BigUint::from(self.codomain);
        (self.domain >= c).then(|| &self.domain - c)
    }
}

pub fn composition_account(kind: Composition, q: &QuadIndex) -> Result<CompositionAccount> {
    config::check_group("composition orbit", q.total())?;
    let mut domain = BigUint::default();
    let mut composite: Option<Wiring> = None;
    for (first, second) in kind.paths() {
        let mid = first.target(q)?;
        let second_dim = BigUint::from(explicit_hom_dimension_deg1(&mid, second)?);
        let first_dim = BigUint::from(explicit_hom_dimension_deg1(q, first)?);
        // the second Hom space is free as a right module over the middle group algebra
        domain += second_dim * first_dim / group_order(&mid);
        let w = first.generator(q)?.then(&second.generator(&mid)?).expect("composable");
        if let Some(prev) = &composite {
            if !wiring::orbit(prev, true).contains(&w) {
                return Err(Error::InvalidArgument(format!("composites of {} leave the orbit", kind.name())));
            }
        }
        composite.get_or_insert(w);
    }
    let codomain = wiring::orbit(&composite.expect("at least one path"), true).len();
    let stated_kernel = (kind == Composition::ContractContract).then(|| group_order(q) / BigUint::from(2u32));
    Ok(CompositionAccount { kind, source: *q, domain, codomain, stated_kernel })
}
