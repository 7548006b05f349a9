//! Littlewood–Richardson coefficients by tableau enumeration.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::config;
use crate::diagrams::{partitions_of, Partition};
use crate::error::Result;

use super::cache;

type Key = (Partition, Partition, Partition);

fn memo() -> &'static RwLock<HashMap<Key, u64>> {
    static MEMO: OnceLock<RwLock<HashMap<Key, u64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

type ProductKey = (Partition, Partition);
type ProductMemo = RwLock<HashMap<ProductKey, Vec<(Partition, u64)>>>;

fn product_memo() -> &'static ProductMemo {
    static MEMO: OnceLock<ProductMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Orders the two factors so that the first has at least the degree of the
/// second; the skew shape `lam / first` is then as small as possible.
fn canonical(lam: &Partition, mu: &Partition, nu: &Partition) -> Key {
    let (a, b) = if (mu.degree(), mu) >= (nu.degree(), nu) { (mu, nu) } else { (nu, mu) };
    (lam.clone(), a.clone(), b.clone())
}

pub(crate) fn memo_insert(key: Key, value: u64) {
    memo().write().expect("lr memo poisoned").insert(key, value);
}

pub(crate) fn memo_entries() -> Vec<(Key, u64)> {
    let map = memo().read().expect("lr memo poisoned");
    let mut v: Vec<_> = map.iter().map(|(k, &c)| (k.clone(), c)).collect();
    v.sort();
    v
}

/// Drops every memoized coefficient. Mostly useful in tests.
pub fn clear_memo() {
    memo().write().expect("lr memo poisoned").clear();
    product_memo().write().expect("product memo poisoned").clear();
}

/// The multiplicity of `s_lam` in `s_mu * s_nu`.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lam.degree() != mu.degree() + nu.degree() || !lam.contains(mu) || !lam.contains(nu) {
        return 0;
    }
    let key = canonical(lam, mu, nu);
    if let Some(&c) = memo().read().expect("lr memo poisoned").get(&key) {
        return c;
    }
    let c = count_lr_tableaux(&key.0, &key.1, &key.2);
    cache::record(&key, c);
    memo_insert(key, c);
    c
}

/// Counts LR tableaux of skew shape `lam / mu` and content `nu`: rows weakly
/// increasing, columns strictly increasing, and reverse reading word a lattice
/// word. No memoization.
pub fn count_lr_tableaux(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lam.degree() != mu.degree() + nu.degree() || !lam.contains(mu) {
        return 0;
    }
    if nu.is_empty() {
        return 1;
    }
    let cells: Vec<(usize, usize)> = (0..lam.len())
        .flat_map(|r| (mu.part(r) as usize..lam.part(r) as usize).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = (0..lam.len()).map(|r| vec![0; lam.part(r) as usize]).collect();
    let mut counts = vec![0u32; nu.len()];
    let mut total = 0u64;
    fill(0, &cells, lam, mu, nu, &mut grid, &mut counts, &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn fill(
    idx: usize,
    cells: &[(usize, usize)],
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    grid: &mut [Vec<u32>],
    counts: &mut [u32],
    total: &mut u64,
) {
    if idx == cells.len() {
        *total += 1;
        return;
    }
    let (r, c) = cells[idx];
    let max_row = if c + 1 < lam.part(r) as usize { grid[r][c + 1] } else { u32::MAX };
    let min_col = if r > 0 && c >= mu.part(r - 1) as usize { grid[r - 1][c] + 1 } else { 1 };
    let top = (nu.len() as u32).min(r as u32 + 1).min(max_row);
    for v in min_col..=top {
        let i = (v - 1) as usize;
        if counts[i] >= nu.parts()[i] || (i > 0 && counts[i] >= counts[i - 1]) {
            continue;
        }
        counts[i] += 1;
        grid[r][c] = v;
        fill(idx + 1, cells, lam, mu, nu, grid, counts, total);
        counts[i] -= 1;
    }
    grid[r][c] = 0;
}

/// Expands `s_mu * s_nu` as `(lam, c^lam_{mu,nu})` pairs in canonical order.
pub fn lr_expand(mu: &Partition, nu: &Partition) -> Result<Vec<(Partition, u64)>> {
    let degree = mu.degree() + nu.degree();
    config::check_degree(degree)?;
    let key = if mu >= nu { (mu.clone(), nu.clone()) } else { (nu.clone(), mu.clone()) };
    if let Some(v) = product_memo().read().expect("product memo poisoned").get(&key) {
        return Ok(v.clone());
    }
    let max_rows = mu.len() + nu.len();
    let max_width = mu.part(0) + nu.part(0);
    let out: Vec<(Partition, u64)> = partitions_of(degree)
        .into_iter()
        .filter(|lam| lam.len() <= max_rows && lam.part(0) <= max_width)
        .filter_map(|lam| {
            let c = lr_coefficient(&lam, mu, nu);
            (c > 0).then_some((lam, c))
        })
        .collect();
    product_memo().write().expect("product memo poisoned").insert(key, out.clone());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::partitions_up_to;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_slice(parts).unwrap()
    }

    #[test]
    fn examples() {
        for lam in partitions_up_to(5) {
            assert_eq!(lr_coefficient(&lam, &lam, &Partition::empty()), 1);
        }
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[1]), &p(&[1])), 0);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[4, 2, 2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn symmetry_and_conjugation_uncached() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                for k in 0..=n {
                    for mu in partitions_of(k) {
                        for nu in partitions_of(n - k) {
                            let c = count_lr_tableaux(&lam, &mu, &nu);
                            assert_eq!(c, count_lr_tableaux(&lam, &nu, &mu), "{lam} {mu} {nu}");
                            let cc = count_lr_tableaux(&lam.conjugate(), &mu.conjugate(), &nu.conjugate());
                            assert_eq!(c, cc, "{lam} {mu} {nu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pieri_one_box() {
        let lam = p(&[2, 1]);
        let got: Vec<_> = lr_expand(&lam, &p(&[1])).unwrap().into_iter().map(|(l, _)| l).collect();
        assert_eq!(got, lam.add_box());
    }
}
