//! The index poset on quadruples `(l, m, n, p)` and its defect.
//!
//! A quadruple records the degrees of a simple `L_{lam,mu,nu,pi}`: `l = |lam|`,
//! `m = |mu|`, `n = |nu|`, `p = |pi|`. Two orders are provided.
//!
//! [`Order::Compatible`] (the default) requires `l ≥ l'`, `m ≤ m'`, `p ≥ p'`,
//! `n ≤ n'` and `l+m-n-p = l'+m'-n'-p'`. Its covers are the four elementary
//! steps `b - a ∈ {(-1,1,0,0), (0,0,1,-1), (0,1,1,0), (-1,0,0,-1)}`: the three
//! degree-one morphism types, plus the step along which `Ext¹(F, ℂ)` lives.
//!
//! [`Order::Strict`] adds `l+m ≤ l'+m'` and `p+n ≤ p'+n'`. It forbids the last
//! move, so for example `(1,0,0,1)` and `(0,0,0,0)` are incomparable there even
//! though `Ext¹(L_{(1),∅,∅,(1)}, ℂ) ≠ 0`.
//!
//! In both orders every saturated chain from `a` to `b` has length
//! `l-l'+n'-n`, which is what [`defect`] returns.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::syntax;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QuadIndex {
    pub l: usize,
    pub m: usize,
    pub n: usize,
    pub p: usize,
}

impl QuadIndex {
    pub const ZERO: QuadIndex = QuadIndex { l: 0, m: 0, n: 0, p: 0 };

    pub fn new(l: usize, m: usize, n: usize, p: usize) -> Self {
        QuadIndex { l, m, n, p }
    }

    pub fn total(&self) -> usize {
        self.l + self.m + self.n + self.p
    }

    /// The image under interchanging `V` and `V_*`.
    pub fn mirror(&self) -> QuadIndex {
        QuadIndex::new(self.p, self.n, self.m, self.l)
    }

    fn weight(&self) -> i64 {
        (self.l + self.m) as i64 - (self.n + self.p) as i64
    }
}

impl fmt::Display for QuadIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.l, self.m, self.n, self.p)
    }
}

impl FromStr for QuadIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = syntax::parse_integers(s, 4)?;
        Ok(QuadIndex::new(v[0] as usize, v[1] as usize, v[2] as usize, v[3] as usize))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Order {
    #[default]
    Compatible,
    Strict,
}

impl Order {
    /// `a ⪯ b`.
    pub fn leq(self, a: &QuadIndex, b: &QuadIndex) -> bool {
        let base = a.l >= b.l && a.m <= b.m && a.p >= b.p && a.n <= b.n && a.weight() == b.weight();
        match self {
            Order::Compatible => base,
            Order::Strict => base && a.l + a.m <= b.l + b.m && a.p + a.n <= b.p + b.n,
        }
    }

    /// The closed-form defect, or `None` when `a` and `b` are incomparable.
    pub fn defect(self, a: &QuadIndex, b: &QuadIndex) -> Option<usize> {
        self.leq(a, b).then(|| a.l - b.l + b.n - a.n)
    }

    /// Every element `c` with `a ⪯ c ⪯ b`, in lexicographic order.
    pub fn interval(self, a: &QuadIndex, b: &QuadIndex) -> Vec<QuadIndex> {
        if !self.leq(a, b) {
            return Vec::new();
        }
        let mut out = Vec::new();
        for l in b.l..=a.l {
            for m in a.m..=b.m {
                for n in a.n..=b.n {
                    for p in b.p..=a.p {
                        let c = QuadIndex::new(l, m, n, p);
                        if self.leq(a, &c) && self.leq(&c, b) {
                            out.push(c);
                        }
                    }
                }
            }
        }
        out
    }

    /// `a ≺ b` with nothing strictly in between.
    pub fn covers_pair(self, a: &QuadIndex, b: &QuadIndex) -> bool {
        a != b && self.interval(a, b).len() == 2
    }

    /// Immediate successors of `a` whose entries are at most `bound`.
    pub fn covers(self, a: &QuadIndex, bound: usize) -> Vec<QuadIndex> {
        let mut out = Vec::new();
        for l in 0..=a.l.min(bound) {
            for m in a.m..=bound {
                for n in a.n..=bound {
                    for p in 0..=a.p.min(bound) {
                        let b = QuadIndex::new(l, m, n, p);
                        if self.covers_pair(a, &b) {
                            out.push(b);
                        }
                    }
                }
            }
        }
        out
    }

    /// All saturated chains from `a` to `b`, each listed from `a` upwards.
    pub fn chains(self, a: &QuadIndex, b: &QuadIndex) -> Vec<Vec<QuadIndex>> {
        let elems = self.interval(a, b);
        if elems.is_empty() {
            return Vec::new();
        }
        let up = self.hasse(&elems);
        let mut out = Vec::new();
        let mut path = vec![*a];
        fn walk(
            at: QuadIndex,
            b: &QuadIndex,
            up: &BTreeMap<QuadIndex, Vec<QuadIndex>>,
            path: &mut Vec<QuadIndex>,
            out: &mut Vec<Vec<QuadIndex>>,
        ) {
            if at == *b {
                out.push(path.clone());
                return;
            }
            for &next in &up[&at] {
                path.push(next);
                walk(next, b, up, path, out);
                path.pop();
            }
        }
        walk(*a, b, &up, &mut path, &mut out);
        out
    }

    /// Length of the longest chain from `a` to `b`, found by dynamic programming
    /// over the Hasse diagram of the interval. Independent of [`Order::defect`].
    pub fn longest_chain(self, a: &QuadIndex, b: &QuadIndex) -> Option<usize> {
        let elems = self.interval(a, b);
        if elems.is_empty() {
            return None;
        }
        let up = self.hasse(&elems);
        let mut best: BTreeMap<QuadIndex, usize> = BTreeMap::new();
        fn longest(
            at: QuadIndex,
            b: &QuadIndex,
            up: &BTreeMap<QuadIndex, Vec<QuadIndex>>,
            best: &mut BTreeMap<QuadIndex, usize>,
        ) -> Option<usize> {
            if at == *b {
                return Some(0);
            }
            if let Some(&v) = best.get(&at) {
                return Some(v);
            }
            let v = up[&at].iter().filter_map(|&n| longest(n, b, up, best)).max().map(|v| v + 1)?;
            best.insert(at, v);
            Some(v)
        }
        longest(*a, b, &up, &mut best)
    }

    fn hasse(self, elems: &[QuadIndex]) -> BTreeMap<QuadIndex, Vec<QuadIndex>> {
        let mut up: BTreeMap<QuadIndex, Vec<QuadIndex>> = BTreeMap::new();
        for x in elems {
            let above: Vec<QuadIndex> = elems.iter().filter(|y| *y != x && self.leq(x, y)).copied().collect();
            let covers = above
                .iter()
                .filter(|y| !above.iter().any(|z| z != *y && self.leq(z, y)))
                .copied()
                .collect();
            up.insert(*x, covers);
        }
        up
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Order::Compatible => "compatible",
            Order::Strict => "strict",
        })
    }
}

impl FromStr for Order {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "compatible" => Ok(Order::Compatible),
            "strict" => Ok(Order::Strict),
            _ => Err(Error::InvalidArgument(format!("unknown order `{s}` (expected compatible or strict)"))),
        }
    }
}

/// `a ⪯ b` in the default order.
pub fn leq(a: &QuadIndex, b: &QuadIndex) -> bool {
    Order::default().leq(a, b)
}

/// The defect in the default order.
pub fn defect(a: &QuadIndex, b: &QuadIndex) -> Option<usize> {
    Order::default().defect(a, b)
}

/// The other closed form, `p-p'+m'-m`.
pub fn mirror_defect(a: &QuadIndex, b: &QuadIndex) -> i64 {
    a.p as i64 - b.p as i64 + b.m as i64 - a.m as i64
}

/// All quadruples with entries at most `bound`.
pub fn quadruples(bound: usize) -> impl Iterator<Item = QuadIndex> {
    (0..=bound).flat_map(move |l| {
        (0..=bound).flat_map(move |m| (0..=bound).flat_map(move |n| (0..=bound).map(move |p| QuadIndex::new(l, m, n, p))))
    })
}
