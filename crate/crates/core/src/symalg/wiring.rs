//! Morphisms between the objects `J_{l,m,n,p}` drawn as wirings.
//!
//! A wiring sends each source tensorand either to a target tensorand of a
//! compatible kind (`W_* → W_*`, `V* → V*` or its quotient `W_*`,
//! `V_*^* → V_*^*` or its quotient `W`, `W → W`) or pairs a `V*` with a
//! `V_*^*` through the evaluation. Every target tensorand is hit exactly once.
//! Distinct wirings are linearly independent, so a Hom space spanned by the
//! orbit of one wiring under the two symmetric-group actions has dimension
//! equal to the orbit size.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use super::perm::Perm;
use crate::poset::QuadIndex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    WLower,
    DualV,
    DualVLower,
    W,
}

const KINDS: [Kind; 4] = [Kind::WLower, Kind::DualV, Kind::DualVLower, Kind::W];

fn counts(q: &QuadIndex) -> [usize; 4] {
    [q.l, q.m, q.n, q.p]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    /// Goes to the given tensorand of the target.
    To(Kind, usize),
    /// Evaluated against the source tensorand with this global position.
    Pair(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wiring {
    source: QuadIndex,
    target: QuadIndex,
    ends: Vec<End>,
}

/// Counts of projections `V* → W_*`, projections `V_*^* → W`, and evaluations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    pub left: usize,
    pub right: usize,
    pub pairs: usize,
}

impl Shape {
    pub fn target(&self, s: &QuadIndex) -> Option<QuadIndex> {
        let m = s.m.checked_sub(self.left + self.pairs)?;
        let n = s.n.checked_sub(self.right + self.pairs)?;
        Some(QuadIndex::new(s.l + self.left, m, n, s.p + self.right))
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} left, {} right, {} evaluations", self.left, self.right, self.pairs)
    }
}

fn kind_of(q: &QuadIndex, global: usize) -> (Kind, usize) {
    let mut rest = global;
    for (k, c) in KINDS.iter().zip(counts(q)) {
        if rest < c {
            return (*k, rest);
        }
        rest -= c;
    }
    panic!("slot {global} out of range for {q}");
}

fn global_of(q: &QuadIndex, kind: Kind, pos: usize) -> usize {
    let c = counts(q);
    c[..kind as usize].iter().sum::<usize>() + pos
}

impl Wiring {
    /// The identity of `J_q`.
    pub fn identity(q: &QuadIndex) -> Self {
        let ends = (0..q.total())
            .map(|g| {
                let (k, i) = kind_of(q, g);
                End::To(k, i)
            })
            .collect();
        Wiring { source: *q, target: *q, ends }
    }

    /// Evaluates the last `V*` against the last `V_*^*`; the identity elsewhere.
    pub fn contraction(q: &QuadIndex) -> Option<Self> {
        if q.m == 0 || q.n == 0 {
            return None;
        }
        let target = QuadIndex::new(q.l, q.m - 1, q.n - 1, q.p);
        let a = global_of(q, Kind::DualV, q.m - 1);
        let b = global_of(q, Kind::DualVLower, q.n - 1);
        let mut w = Wiring::identity(q);
        w.target = target;
        w.ends[a] = End::Pair(b);
        w.ends[b] = End::Pair(a);
        Some(w)
    }

    /// Projects the last `V*` onto a new last `W_*`.
    pub fn shift_left(q: &QuadIndex) -> Option<Self> {
        if q.m == 0 {
            return None;
        }
        let mut w = Wiring::identity(q);
        w.target = QuadIndex::new(q.l + 1, q.m - 1, q.n, q.p);
        w.ends[global_of(q, Kind::DualV, q.m - 1)] = End::To(Kind::WLower, q.l);
        Some(w)
    }

    /// Projects the last `V_*^*` onto a new last `W`.
    pub fn shift_right(q: &QuadIndex) -> Option<Self> {
        if q.n == 0 {
            return None;
        }
        let mut w = Wiring::identity(q);
        w.target = QuadIndex::new(q.l, q.m, q.n - 1, q.p + 1);
        w.ends[global_of(q, Kind::DualVLower, q.n - 1)] = End::To(Kind::W, q.p);
        Some(w)
    }

    pub fn source(&self) -> QuadIndex {
        self.source
    }

    pub fn target(&self) -> QuadIndex {
        self.target
    }

    pub fn shape(&self) -> Shape {
        let mut s = Shape { left: 0, right: 0, pairs: 0 };
        for (g, e) in self.ends.iter().enumerate() {
            match (kind_of(&self.source, g).0, e) {
                (Kind::DualV, End::To(Kind::WLower, _)) => s.left += 1,
                (Kind::DualVLower, End::To(Kind::W, _)) => s.right += 1,
                (Kind::DualV, End::Pair(_)) => s.pairs += 1,
                _ => {}
            }
        }
        s
    }

    /// Checks kinds, pairing symmetry and bijectivity onto the target.
    pub fn is_valid(&self) -> bool {
        if self.ends.len() != self.source.total() {
            return false;
        }
        let mut hit = BTreeSet::new();
        let tc = counts(&self.target);
        for (g, e) in self.ends.iter().enumerate() {
            let (k, _) = kind_of(&self.source, g);
            match *e {
                End::To(tk, i) => {
                    let ok = matches!(
                        (k, tk),
                        (Kind::WLower, Kind::WLower)
                            | (Kind::DualV, Kind::DualV | Kind::WLower)
                            | (Kind::DualVLower, Kind::DualVLower | Kind::W)
                            | (Kind::W, Kind::W)
                    );
                    if !ok || i >= tc[tk as usize] || !hit.insert((tk, i)) {
                        return false;
                    }
                }
                End::Pair(h) => {
                    let kinds = (k, kind_of(&self.source, h).0);
                    let ok = matches!(kinds, (Kind::DualV, Kind::DualVLower) | (Kind::DualVLower, Kind::DualV));
                    if !ok || self.ends.get(h) != Some(&End::Pair(g)) {
                        return false;
                    }
                }
            }
        }
        hit.len() == self.target.total()
    }

    /// `self ∘ sigma` for `sigma` in the source group, one permutation per kind.
    pub fn precompose(&self, sigma: &[Perm; 4]) -> Wiring {
        let q = &self.source;
        let act = |g: usize| {
            let (k, i) = kind_of(q, g);
            global_of(q, k, sigma[k as usize].apply(i))
        };
        let inv: Vec<usize> = {
            let mut inv = vec![0; q.total()];
            for g in 0..q.total() {
                inv[act(g)] = g;
            }
            inv
        };
        let ends = (0..q.total())
            .map(|g| match self.ends[act(g)] {
                End::Pair(h) => End::Pair(inv[h]),
                e => e,
            })
            .collect();
        Wiring { source: self.source, target: self.target, ends }
    }

    /// `tau ∘ self` for `tau` in the target group.
    pub fn postcompose(&self, tau: &[Perm; 4]) -> Wiring {
        let ends = self
            .ends
            .iter()
            .map(|e| match *e {
                End::To(k, i) => End::To(k, tau[k as usize].apply(i)),
                e => e,
            })
            .collect();
        Wiring { source: self.source, target: self.target, ends }
    }

    /// `next ∘ self`; `None` unless `next` starts where `self` ends.
    pub fn then(&self, next: &Wiring) -> Option<Wiring> {
        if next.source != self.target {
            return None;
        }
        let mid = &self.target;
        let mut from_mid = vec![usize::MAX; mid.total()];
        for (g, e) in self.ends.iter().enumerate() {
            if let End::To(k, i) = *e {
                from_mid[global_of(mid, k, i)] = g;
            }
        }
        let ends = self
            .ends
            .iter()
            .map(|e| match *e {
                End::Pair(h) => End::Pair(h),
                End::To(k, i) => match next.ends[global_of(mid, k, i)] {
                    End::To(k2, i2) => End::To(k2, i2),
                    End::Pair(z) => End::Pair(from_mid[z]),
                },
            })
            .collect();
        Some(Wiring { source: self.source, target: next.target, ends })
    }
}

fn group_generators(q: &QuadIndex) -> Vec<[Perm; 4]> {
    let c = counts(q);
    let ids: [Perm; 4] = std::array::from_fn(|k| Perm::identity(c[k]));
    let mut out = Vec::new();
    for k in 0..4 {
        for g in Perm::generators(c[k]) {
            let mut e = ids.clone();
            e[k] = g;
            out.push(e);
        }
    }
    out
}

/// The orbit of `w` under the source group and, when `both_sides`, the target group.
pub fn orbit(w: &Wiring, both_sides: bool) -> BTreeSet<Wiring> {
    let right = group_generators(&w.source);
    let left = if both_sides { group_generators(&w.target) } else { Vec::new() };
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        let moved = right.iter().map(|g| x.precompose(g)).chain(left.iter().map(|g| x.postcompose(g)));
        for y in moved {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_valid() {
        let q = QuadIndex::new(1, 2, 2, 1);
        for w in [
            Wiring::identity(&q),
            Wiring::contraction(&q).unwrap(),
            Wiring::shift_left(&q).unwrap(),
            Wiring::shift_right(&q).unwrap(),
        ] {
            assert!(w.is_valid(), "{w:?}");
            for x in orbit(&w, true) {
                assert!(x.is_valid());
                assert_eq!(x.shape(), w.shape());
            }
        }
        assert!(Wiring::contraction(&QuadIndex::new(1, 1, 0, 0)).is_none());
    }

    #[test]
    fn composition_of_contractions() {
        let q = QuadIndex::new(0, 2, 2, 0);
        let a = Wiring::contraction(&q).unwrap();
        let b = Wiring::contraction(&a.target()).unwrap();
        let ab = a.then(&b).unwrap();
        assert!(ab.is_valid());
        assert_eq!(ab.shape(), Shape { left: 0, right: 0, pairs: 2 });
        assert_eq!(ab.target(), QuadIndex::ZERO);
        assert_eq!(orbit(&ab, true).len(), 2);
    }
}
