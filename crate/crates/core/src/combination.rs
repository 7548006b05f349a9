//! Finitely supported integer combinations over an ordered key type.
//!
//! Used both for honest decompositions (all coefficients positive) and for
//! signed Grothendieck-group elements. Keys iterate in their `Ord` order, so
//! rendering is canonical.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, BigInt>,
}

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Combination { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(key: K) -> Self {
        let mut c = Self::new();
        c.add(key, BigInt::one());
        c
    }

    pub fn add(&mut self, key: K, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn add_scaled(&mut self, other: &Combination<K>, k: &BigInt) {
        for (key, c) in &other.terms {
            self.add(key.clone(), c * k);
        }
    }

    pub fn extend(&mut self, other: &Combination<K>) {
        self.add_scaled(other, &BigInt::one());
    }

    pub fn subtract(&mut self, other: &Combination<K>) {
        self.add_scaled(other, &-BigInt::one());
    }

    pub fn get(&self, key: &K) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn contains(&self, key: &K) -> bool {
        self.terms.contains_key(key)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient is positive.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, BigInt> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Keeps only the terms whose key satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Combination { terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, c)| (k.clone(), c.clone())).collect() }
    }

    /// Applies `f` to every key, merging coefficients of keys that collide.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> Combination<L> {
        let mut out = Combination::new();
        for (k, c) in &self.terms {
            out.add(f(k), c.clone());
        }
        out
    }

    /// Coefficients as `u64` where they fit.
    pub fn small_coefficients(&self) -> Option<Vec<(&K, u64)>> {
        self.terms.iter().map(|(k, c)| c.to_u64().map(|c| (k, c))).collect()
    }
}

impl<K: Ord + Clone> FromIterator<(K, u64)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (K, u64)>>(iter: I) -> Self {
        let mut c = Combination::new();
        for (k, m) in iter {
            c.add(k, m);
        }
        c
    }
}

impl<'a, K: Ord> IntoIterator for &'a Combination<K> {
    type Item = (&'a K, &'a BigInt);
    type IntoIter = btree_map::Iter<'a, K, BigInt>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + fmt::Display> fmt::Display for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
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
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, c)| (k, c.to_string()))).finish()
    }
}
