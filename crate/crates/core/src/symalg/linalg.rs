//! Exact rank computations over the rationals.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use num_rational::BigRational;
use num_traits::Zero;

pub type SparseVector = BTreeMap<usize, BigRational>;

/// Incremental row echelon form. Each stored row has a pivot entry `1` and no
/// entry in the pivot column of any earlier row.
#[derive(Default)]
pub struct Echelon {
    rows: Vec<(usize, SparseVector)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: SparseVector) -> bool {
        for (pivot, row) in &self.rows {
            let Some(c) = v.get(pivot).cloned() else { continue };
            for (col, x) in row {
                let entry = v.entry(*col).or_insert_with(BigRational::zero);
                *entry -= &c * x;
                if entry.is_zero() {
                    v.remove(col);
                }
            }
        }
        let Some((&pivot, lead)) = v.iter().next() else { return false };
        let lead = lead.clone();
        for x in v.values_mut() {
            *x /= &lead;
        }
        self.rows.push((pivot, v));
        true
    }
}

/// Assigns dense column numbers to arbitrary keys.
pub struct Columns<K> {
    index: HashMap<K, usize>,
}

impl<K: Eq + Hash + Clone> Columns<K> {
    pub fn new() -> Self {
        Columns { index: HashMap::new() }
    }

    pub fn column(&mut self, key: &K) -> usize {
        let next = self.index.len();
        *self.index.entry(key.clone()).or_insert(next)
    }
}

impl<K: Eq + Hash + Clone> Default for Columns<K> {
    fn default() -> Self {
        Self::new()
    }
}

/// Rank of a family of vectors given as coefficient maps over a common key type.
pub fn rank_of<K, I>(vectors: I) -> usize
where
    K: Eq + Hash + Clone,
    I: IntoIterator<Item = Vec<(K, BigRational)>>,
{
    let mut cols = Columns::new();
    let mut ech = Echelon::new();
    for v in vectors {
        let sparse: SparseVector = v.into_iter().map(|(k, c)| (cols.column(&k), c)).filter(|(_, c)| !c.is_zero()).collect();
        ech.insert(sparse);
    }
    ech.rank()
}
