//! Composition factors of tensor products.
//!
//! A simple object `L_{lam,mu,nu,pi} = W_{*lam} ⊗ V_{mu,nu} ⊗ W_pi` is indexed by
//! a [`SimpleIndex`]. `mu` records the `V_*` part of the thin factor and `nu`
//! the `V` part. Everything here lives in the Grothendieck group: tensoring
//! with a [`Generator`] is computed on indices by Pieri-type box moves and
//! Littlewood–Richardson products, each move contributing multiplicity one.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::combination::Combination;
use crate::config;
use crate::diagrams::Partition;
use crate::error::{Error, Result};
use crate::plethysm::{self, Power};
use crate::poset::QuadIndex;
use crate::symfunc::lr_expand;
use crate::syntax;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SimpleIndex {
    pub lam: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub pi: Partition,
}

impl SimpleIndex {
    pub fn new(lam: Partition, mu: Partition, nu: Partition, pi: Partition) -> Self {
        SimpleIndex { lam, mu, nu, pi }
    }

    /// The unit object `ℂ`.
    pub fn unit() -> Self {
        SimpleIndex::default()
    }

    /// `W_{*lam} ⊗ W_pi`.
    pub fn thick(lam: Partition, pi: Partition) -> Self {
        SimpleIndex { lam, pi, ..Default::default() }
    }

    pub fn quad(&self) -> QuadIndex {
        QuadIndex::new(self.lam.degree(), self.mu.degree(), self.nu.degree(), self.pi.degree())
    }

    pub fn degree(&self) -> usize {
        self.quad().total()
    }

    pub fn is_thick(&self) -> bool {
        self.mu.is_empty() && self.nu.is_empty()
    }

    pub fn parts(&self) -> [&Partition; 4] {
        [&self.lam, &self.mu, &self.nu, &self.pi]
    }
}

impl fmt::Display for SimpleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.lam, self.mu, self.nu, self.pi)
    }
}

impl fmt::Debug for SimpleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({self})")
    }
}

impl FromStr for SimpleIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut v = syntax::parse_partitions(s, 4)?.into_iter();
        let mut next = || v.next().expect("four partitions");
        Ok(SimpleIndex::new(next(), next(), next(), next()))
    }
}

/// Composition factors with multiplicity, or a signed class when produced by
/// alternating sums.
pub type Decomposition = Combination<SimpleIndex>;

/// The objects one can tensor with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `V*`, an extension of `W_*` by `V_*`.
    DualV,
    /// `V_*^*`, an extension of `W` by `V`.
    DualVLower,
    V,
    VLower,
    W,
    WLower,
    /// `Q`, an extension of `F` by `ℂ`.
    Q,
    /// `F = W_* ⊗ W`.
    F,
    SymF(usize),
    SymQ(usize),
    ExtF(usize),
}

impl Generator {
    /// Number of boxes the generator can add.
    pub fn degree(&self) -> usize {
        match *self {
            Generator::Q | Generator::F => 2,
            Generator::SymF(k) | Generator::SymQ(k) | Generator::ExtF(k) => 2 * k,
            _ => 1,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::DualV => f.write_str("V*"),
            Generator::DualVLower => f.write_str("V**"),
            Generator::V => f.write_str("V"),
            Generator::VLower => f.write_str("V_*"),
            Generator::W => f.write_str("W"),
            Generator::WLower => f.write_str("W_*"),
            Generator::Q => f.write_str("Q"),
            Generator::F => f.write_str("F"),
            Generator::SymF(k) => write!(f, "S{k}F"),
            Generator::SymQ(k) => write!(f, "S{k}Q"),
            Generator::ExtF(k) => write!(f, "L{k}F"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fixed = match s {
            "V*" => Some(Generator::DualV),
            "V**" => Some(Generator::DualVLower),
            "V" => Some(Generator::V),
            "V_*" => Some(Generator::VLower),
            "W" => Some(Generator::W),
            "W_*" => Some(Generator::WLower),
            "Q" => Some(Generator::Q),
            "F" => Some(Generator::F),
            _ => None,
        };
        if let Some(g) = fixed {
            return Ok(g);
        }
        let bad = || Error::Parse {
            token: s.to_string(),
            position: 0,
            message: "expected one of V*, V**, V, V_*, W, W_*, Q, F, S<k>F, S<k>Q, L<k>F".into(),
        };
        if s.len() < 3 {
            return Err(bad());
        }
        let k: usize = s[1..s.len() - 1].parse().map_err(|_| bad())?;
        match (&s[..1], &s[s.len() - 1..]) {
            ("S", "F") => Ok(Generator::SymF(k)),
            ("S", "Q") => Ok(Generator::SymQ(k)),
            ("L", "F") => Ok(Generator::ExtF(k)),
            _ => Err(bad()),
        }
    }
}

fn box_moves(s: &SimpleIndex, out: &mut Decomposition, slot: usize, add: bool) {
    let part = s.parts()[slot];
    let moved = if add { part.add_box() } else { part.remove_box() };
    for new in moved {
        let mut t = s.clone();
        match slot {
            0 => t.lam = new,
            1 => t.mu = new,
            2 => t.nu = new,
            _ => t.pi = new,
        }
        out.add(t, 1);
    }
}

fn thick_pairs(s: &SimpleIndex, pairs: &plethysm::PairDecomposition, out: &mut Decomposition) -> Result<()> {
    for ((x, y), c) in pairs {
        let left = lr_expand(&s.lam, x)?;
        let right = lr_expand(&s.pi, y)?;
        for (lam, a) in &left {
            for (pi, b) in &right {
                let t = SimpleIndex::new(lam.clone(), s.mu.clone(), s.nu.clone(), pi.clone());
                out.add(t, c * BigInt::from(*a) * BigInt::from(*b));
            }
        }
    }
    Ok(())
}

/// Composition factors of `g ⊗ L_s`.
pub fn tensor_simple(s: &SimpleIndex, g: Generator) -> Result<Decomposition> {
    config::check_degree(s.degree() + g.degree())?;
    let mut out = Decomposition::new();
    match g {
        Generator::WLower => box_moves(s, &mut out, 0, true),
        Generator::W => box_moves(s, &mut out, 3, true),
        Generator::VLower => {
            box_moves(s, &mut out, 1, true);
            box_moves(s, &mut out, 2, false);
        }
        Generator::V => {
            box_moves(s, &mut out, 2, true);
            box_moves(s, &mut out, 1, false);
        }
        Generator::DualV => {
            out.extend(&tensor_simple(s, Generator::VLower)?);
            out.extend(&tensor_simple(s, Generator::WLower)?);
        }
        Generator::DualVLower => {
            out.extend(&tensor_simple(s, Generator::V)?);
            out.extend(&tensor_simple(s, Generator::W)?);
        }
        Generator::F => return tensor_simple(s, Generator::SymF(1)),
        Generator::Q => return tensor_simple(s, Generator::SymQ(1)),
        Generator::SymF(k) => thick_pairs(s, &plethysm::cauchy(Power::Symmetric, k)?, &mut out)?,
        Generator::ExtF(k) => thick_pairs(s, &plethysm::cauchy(Power::Exterior, k)?, &mut out)?,
        Generator::SymQ(k) => {
            for j in 0..=k {
                out.extend(&tensor_simple(s, Generator::SymF(j))?);
            }
        }
    }
    Ok(out)
}

/// Composition factors of `g ⊗ X` for `X` with class `d`.
pub fn tensor(d: &Decomposition, g: Generator) -> Result<Decomposition> {
    let mut out = Decomposition::new();
    for (s, c) in d {
        out.add_scaled(&tensor_simple(s, g)?, c);
    }
    Ok(out)
}

/// Composition factors of `L_start ⊗ g_1 ⊗ ... ⊗ g_r`.
pub fn decompose_word(start: &SimpleIndex, word: &[Generator]) -> Result<Decomposition> {
    let mut d = Decomposition::singleton(start.clone());
    for &g in word {
        d = tensor(&d, g)?;
    }
    Ok(d)
}

/// The canonical generator word of `J_{l,m,n,p} = W_*^l ⊗ V*^m ⊗ V_*^*^n ⊗ W^p`.
pub fn j_word(q: &QuadIndex) -> Vec<Generator> {
    let mut word = vec![Generator::WLower; q.l];
    word.extend(std::iter::repeat_n(Generator::DualV, q.m));
    word.extend(std::iter::repeat_n(Generator::DualVLower, q.n));
    word.extend(std::iter::repeat_n(Generator::W, q.p));
    word
}

fn j_memo() -> &'static RwLock<HashMap<QuadIndex, Decomposition>> {
    static MEMO: OnceLock<RwLock<HashMap<QuadIndex, Decomposition>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Composition factors of `J_{l,m,n,p}`.
pub fn decompose_j(q: &QuadIndex) -> Result<Decomposition> {
    config::check_degree(q.total())?;
    if let Some(d) = j_memo().read().expect("J memo poisoned").get(q) {
        return Ok(d.clone());
    }
    let d = decompose_word(&SimpleIndex::unit(), &j_word(q))?;
    j_memo().write().expect("J memo poisoned").insert(*q, d.clone());
    Ok(d)
}

/// The socle `L_{l,m,n,p}` of `J_{l,m,n,p}`: the factors of full degree.
pub fn socle_of(q: &QuadIndex) -> Result<Decomposition> {
    Ok(decompose_j(q)?.filter(|s| s.quad() == *q))
}

/// The layers `S^k F`, `k = 0..=kmax`, of the socle filtration of `I`.
pub fn layers_of_i(kmax: usize) -> Result<Vec<Decomposition>> {
    (0..=kmax)
        .map(|k| Ok(plethysm::cauchy_sym(k)?.map_keys(|(x, y)| SimpleIndex::thick(x.clone(), y.clone()))))
        .collect()
}

/// Composition factors of `S^k Q`, the `k`-th truncation of `I`.
pub fn sym_q(k: usize) -> Result<Decomposition> {
    tensor_simple(&SimpleIndex::unit(), Generator::SymQ(k))
}

/// Composition factors of `S^k Q ⊗ J_q`, the `k`-th truncation of `I_q`.
pub fn truncated_hull(q: &QuadIndex, k: usize) -> Result<Decomposition> {
    config::check_degree(q.total() + 2 * k)?;
    tensor(&decompose_j(q)?, Generator::SymQ(k))
}
