//! The orthogonal and symplectic analogue.
//!
//! Simples are `L_{lam,mu} = W_lam ⊗ V_{[mu]}` (orthogonal) or
//! `W_lam ⊗ V_{<mu>}` (symplectic), indexed by pairs `(l, m) = (|lam|, |mu|)`.
//! `I` has layers `S^k F` with `F = S²W` (orthogonal) or `Λ²W` (symplectic),
//! and the injective resolution of `ℂ` has socles `Λ^jF`, which live in
//! diagram degree `2j`.
//!
//! The order on pairs is generated by the steps `(l,m) ≺ (l-1,m+1)`
//! (projection onto `W`), `(l,m) ≺ (l,m+2)` (the invariant form) and
//! `(l,m) ≺ (l-2,m)` (the step carrying `Ext¹(F, ℂ)`). Equivalently
//! `l ≥ l'`, `m ≤ m'` and `l-l' ≡ m'-m (mod 2)`. Every step changes
//! `(l-l') + (m'-m)` by two, so the defect is half of it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::combination::Combination;
use crate::diagrams::Partition;
use crate::error::{Error, Result};
use crate::plethysm::{power_of_ext2, power_of_sym2, Power};
use crate::syntax;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OspKind {
    Orthogonal,
    Symplectic,
}

impl OspKind {
    pub fn other(self) -> OspKind {
        match self {
            OspKind::Orthogonal => OspKind::Symplectic,
            OspKind::Symplectic => OspKind::Orthogonal,
        }
    }
}

impl fmt::Display for OspKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OspKind::Orthogonal => "o",
            OspKind::Symplectic => "sp",
        })
    }
}

impl FromStr for OspKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "o" | "orthogonal" => Ok(OspKind::Orthogonal),
            "sp" | "symplectic" => Ok(OspKind::Symplectic),
            _ => Err(Error::InvalidArgument(format!("unknown kind `{s}` (expected o or sp)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OspIndex {
    pub kind: OspKind,
    pub lam: Partition,
    pub mu: Partition,
}

impl OspIndex {
    pub fn new(kind: OspKind, lam: Partition, mu: Partition) -> Self {
        OspIndex { kind, lam, mu }
    }

    /// Parses `lam,mu`, e.g. `[2,1,1],[]`.
    pub fn parse(kind: OspKind, s: &str) -> Result<Self> {
        let mut v = syntax::parse_partitions(s, 2)?.into_iter();
        let lam = v.next().expect("two partitions");
        let mu = v.next().expect("two partitions");
        Ok(OspIndex { kind, lam, mu })
    }

    pub fn pair(&self) -> (usize, usize) {
        (self.lam.degree(), self.mu.degree())
    }

    pub fn degree(&self) -> usize {
        self.lam.degree() + self.mu.degree()
    }
}

impl fmt::Display for OspIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{},{}", self.kind, self.lam, self.mu)
    }
}

/// `a ⪯ b` on degree pairs.
pub fn osp_leq(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 >= b.0 && a.1 <= b.1 && (a.0 - b.0) % 2 == (b.1 - a.1) % 2
}

/// `((l-l') + (m'-m)) / 2` for comparable pairs.
pub fn osp_defect(a: (usize, usize), b: (usize, usize)) -> Option<usize> {
    osp_leq(a, b).then(|| ((a.0 - b.0) + (b.1 - a.1)) / 2)
}

/// Longest chain from `a` to `b` by search over the interval's Hasse diagram.
pub fn osp_longest_chain(a: (usize, usize), b: (usize, usize)) -> Option<usize> {
    if !osp_leq(a, b) {
        return None;
    }
    let elems: Vec<(usize, usize)> = (b.0..=a.0)
        .flat_map(|l| (a.1..=b.1).map(move |m| (l, m)))
        .filter(|&c| osp_leq(a, c) && osp_leq(c, b))
        .collect();
    let mut memo: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    fn go(x: (usize, usize), b: (usize, usize), elems: &[(usize, usize)], memo: &mut BTreeMap<(usize, usize), usize>) -> usize {
        if x == b {
            return 0;
        }
        if let Some(&v) = memo.get(&x) {
            return v;
        }
        let above: Vec<_> = elems.iter().copied().filter(|&y| y != x && osp_leq(x, y)).collect();
        let best = above
            .iter()
            .filter(|&&y| !above.iter().any(|&z| z != y && osp_leq(z, y)))
            .map(|&y| go(y, b, elems, memo) + 1)
            .max()
            .expect("b lies above x");
        memo.insert(x, best);
        best
    }
    Some(go(a, b, &elems, &mut memo))
}

/// The layers `S^k F`, `k = 0..=kmax`, as decompositions of the `W` slot.
pub fn osp_layers_of_i(kind: OspKind, kmax: usize) -> Result<Vec<Combination<Partition>>> {
    (0..=kmax)
        .map(|k| match kind {
            OspKind::Orthogonal => power_of_sym2(k, Power::Symmetric),
            OspKind::Symplectic => power_of_ext2(k, Power::Symmetric),
        })
        .collect()
}

/// The socle `Λ^jF` of the `j`-th resolution term, as `W`-slot diagrams.
pub fn osp_resolution_socle(kind: OspKind, j: usize) -> Result<Combination<Partition>> {
    match kind {
        OspKind::Orthogonal => power_of_sym2(j, Power::Exterior),
        OspKind::Symplectic => power_of_ext2(j, Power::Exterior),
    }
}

/// `dim Ext^j(L_x, ℂ)`. One exactly when `mu = ∅` and `lam` has `2j` boxes and
/// is special (symplectic) or the conjugate of a special diagram (orthogonal).
pub fn osp_ext_to_trivial(x: &OspIndex, j: usize) -> u64 {
    if !x.mu.is_empty() || x.lam.degree() != 2 * j {
        return 0;
    }
    let hit = match x.kind {
        OspKind::Orthogonal => x.lam.conjugate().is_special(),
        OspKind::Symplectic => x.lam.is_special(),
    };
    u64::from(hit)
}

/// Swaps the kind and conjugates the `W` slot.
pub fn osp_conjugate(x: &OspIndex) -> OspIndex {
    OspIndex { kind: x.kind.other(), lam: x.lam.conjugate(), mu: x.mu.clone() }
}
