//! Permutations in one-line notation, acting on `0..n`.

use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// Builds a permutation from its images. Panics unless `images` is a
    /// permutation of `0..images.len()`.
    pub fn from_images(images: Vec<u8>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(!std::mem::replace(&mut seen[i as usize], true), "not a permutation: {images:?}");
        }
        Perm(images)
    }

    /// The transposition of `i` and `j` in `S_n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Perm::identity(n);
        p.0.swap(i, j);
        p
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i32 {
        let mut seen = vec![false; self.0.len()];
        let mut sign = 1;
        for start in 0..self.0.len() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            if len > 0 && len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// All of `S_n` in lexicographic order of the image lists.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Perm(cur.clone()));
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// Adjacent transpositions generating `S_n`.
    pub fn generators(n: usize) -> Vec<Perm> {
        (1..n).map(|i| Perm::transposition(n, i - 1, i)).collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_laws() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().filter(|p| p.sign() == 1).count(), 12);
        for a in &all {
            assert!(a.compose(&a.inverse()).is_identity());
            for b in &all {
                assert_eq!(a.compose(b).sign(), a.sign() * b.sign());
            }
        }
        let s = Perm::transposition(3, 0, 1);
        let t = Perm::transposition(3, 1, 2);
        assert_eq!(s.compose(&t).apply(2), 0);
        assert_eq!(Perm::all(0).len(), 1);
    }
}
