//! Engine results recomputed by the brute-force oracle.

use mackey::combination::Combination;
use mackey::diagrams::{mixed_gl_dimension, partitions_of, partitions_up_to, Partition};
use mackey::ext;
use mackey::grothendieck::{self, Generator, SimpleIndex};
use mackey::oracle::{self, Inner, MonomialPoly};
use mackey::ospcat::{self, OspIndex, OspKind};
use mackey::plethysm::{self, Power};
use mackey::poset::{self, quadruples, QuadIndex};
use mackey::symalg;
use mackey::symfunc::{self, SymFunc};
use num_bigint::{BigInt, BigUint};
use num_traits::One;

fn p(parts: &[u32]) -> Partition {
    Partition::from_slice(parts).unwrap()
}

fn idx(s: &str) -> SimpleIndex {
    s.parse().unwrap()
}

fn q(s: &str) -> QuadIndex {
    s.parse().unwrap()
}

fn decomposition(terms: &[&str]) -> grothendieck::Decomposition {
    terms.iter().map(|s| (idx(s), 1u64)).collect()
}

/// `s_mu * s_nu` from monomials in `|mu| + |nu|` variables.
fn oracle_product(mu: &Partition, nu: &Partition) -> SymFunc {
    let n = (mu.degree() + nu.degree()).max(1);
    let a = oracle::expand_schur(mu, n).unwrap();
    let b = oracle::expand_schur(nu, n).unwrap();
    oracle::decompose_into_schur(&a.mul(&b)).unwrap()
}

/// The character of `V_{(1),(1)}`, i.e. `(Σx)(Σ1/x) - 1`.
fn adjoint(n: usize) -> MonomialPoly {
    let prod = MonomialPoly::power_sum_one(n).mul(&MonomialPoly::dual_power_sum_one(n));
    prod.sub(&MonomialPoly::one(n))
}

#[test]
fn derived_diagram_examples() {
    assert_eq!(p(&[2, 1, 1]).conjugate(), p(&[3, 1]));
    assert_eq!(p(&[2, 1]).add_box(), vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]);
    assert!(p(&[2, 1, 1]).is_special());
    assert!(!p(&[3, 1]).is_special());
    let poly = oracle::expand_schur(&p(&[2, 1, 1]), 4).unwrap();
    assert_eq!(poly.coefficient_sum(), BigInt::from(15));
    assert_eq!(p(&[2, 1, 1]).gl_dimension(4), BigUint::from(15u32));
    let single = oracle::single_block(&oracle::brute_force_plethysm(Power::Exterior, 1, Inner::Ext2, 4).unwrap());
    let specials: Vec<Partition> = partitions_of(4).into_iter().filter(Partition::is_special).collect();
    let from_oracle = oracle::single_block(&oracle::brute_force_plethysm(Power::Exterior, 2, Inner::Ext2, 4).unwrap());
    assert_eq!(from_oracle.keys().cloned().collect::<Vec<_>>(), specials);
    assert_eq!(single, Combination::singleton(p(&[1, 1])));
}

#[test]
fn derived_product_examples() {
    let prod = oracle_product(&p(&[1]), &p(&[2]));
    assert_eq!(prod.coeff(&p(&[2, 1])), BigInt::one());
    assert_eq!(symfunc::lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[2])), 1);
    let one = SymFunc::schur(p(&[1]));
    assert_eq!(&one * &one, oracle_product(&p(&[1]), &p(&[1])));
    let pieri = &SymFunc::schur(p(&[2, 1])) * &one;
    assert_eq!(pieri, oracle_product(&p(&[2, 1]), &p(&[1])));
    let by_add_box = SymFunc::from_terms(p(&[2, 1]).add_box().into_iter().map(|l| (l, 1)));
    assert_eq!(pieri, by_add_box);
}

#[test]
fn derived_plethysm_examples() {
    let s2s2 = plethysm::power_of_sym2(2, Power::Symmetric).unwrap();
    let l2l2 = plethysm::power_of_ext2(2, Power::Exterior).unwrap();
    let o_s = oracle::single_block(&oracle::brute_force_plethysm(Power::Symmetric, 2, Inner::Sym2, 3).unwrap());
    let o_l = oracle::single_block(&oracle::brute_force_plethysm(Power::Exterior, 2, Inner::Ext2, 4).unwrap());
    assert_eq!(s2s2, o_s);
    assert_eq!(l2l2, o_l);
    let dim2: BigUint = s2s2.keys().map(|l| l.gl_dimension(2)).sum();
    assert_eq!(dim2, BigUint::from(6u32));
    assert_eq!(p(&[2, 1, 1]).gl_dimension(4), BigUint::from(15u32));
}

#[test]
fn derived_tensor_example() {
    let engine = grothendieck::tensor_simple(&idx("[],[1],[1],[]"), Generator::V).unwrap();
    assert_eq!(engine, decomposition(&["[],[1],[2],[]", "[],[1],[1,1],[]", "[],[],[1],[]"]));
    for n in 4..=6 {
        let ch = adjoint(n).mul(&MonomialPoly::power_sum_one(n));
        let o = oracle::decompose_rational(&ch).unwrap();
        let from_oracle = o.map_keys(|(mu, nu)| SimpleIndex::new(Partition::empty(), mu.clone(), nu.clone(), Partition::empty()));
        assert_eq!(engine, from_oracle, "N={n}");
    }
}

#[test]
fn derived_j_and_socle_examples() {
    let want = decomposition(&["[],[1],[1],[]", "[],[],[],[]", "[1],[],[1],[]", "[],[1],[],[1]", "[1],[],[],[1]"]);
    let engine = grothendieck::decompose_j(&q("0,1,1,0")).unwrap();
    assert_eq!(engine, want);
    assert_eq!(oracle::reconstruct_j(&q("0,1,1,0")).unwrap(), want);
    assert_eq!(grothendieck::socle_of(&q("0,1,1,0")).unwrap(), decomposition(&["[],[1],[1],[]"]));
}

#[test]
fn derived_poset_examples() {
    assert!(poset::leq(&q("1,0,0,1"), &q("0,1,1,0")));
    assert!(!poset::leq(&q("0,1,0,0"), &q("1,0,0,0")));
    let order = poset::Order::default();
    assert_eq!(poset::defect(&q("1,0,0,1"), &q("0,1,1,0")), Some(2));
    assert_eq!(order.longest_chain(&q("1,0,0,1"), &q("0,1,1,0")), Some(2));
    let chains = order.chains(&q("1,0,0,1"), &q("0,1,1,0"));
    assert!(chains.iter().any(|c| c == &[q("1,0,0,1"), q("0,1,0,1"), q("0,1,1,0")]));
    assert!(chains.iter().all(|c| c.len() == 3));
    let covers = order.covers(&QuadIndex::ZERO, 2);
    assert!(covers.contains(&q("0,1,1,0")));
    assert!(!covers.contains(&q("0,2,2,0")));
}

#[test]
fn kernel_layer_examples_against_characters() {
    // Λ^1F ⊗ S^1F splits into the one-row hook S²F, the kernel, and Λ²F, which
    // maps isomorphically onto the next resolution term
    let s2f = oracle::schur_functor_of_f(&p(&[2]), 2).unwrap();
    let l2f = oracle::schur_functor_of_f(&p(&[1, 1]), 2).unwrap();
    assert_eq!(ext::kernel_layer(1, 1).unwrap(), s2f);
    assert_eq!(l2f, decomposition(&["[1,1],[],[],[2]", "[2],[],[],[1,1]"]));
    assert_eq!(ext::resolution_term(2).unwrap().socle, l2f);
    let mut total = s2f.clone();
    total.extend(&l2f);
    assert_eq!(ext::ext_sym_class(1, 1).unwrap(), total);
}

#[test]
fn kernel_layers_against_characters() {
    for j in 1..=3 {
        for k in 0..=4 - j.min(2) {
            let hook = Partition::hook(k + 1, j - 1);
            let o = oracle::schur_functor_of_f(&hook, hook.degree()).unwrap();
            assert_eq!(ext::kernel_layer(j, k).unwrap(), o, "j={j} k={k}");
        }
    }
}

#[test]
fn derived_ext_examples() {
    let e = Partition::empty();
    assert_eq!(ext::ext_to_thick(&idx("[1],[],[],[1]"), &e, &e, 1), BigUint::one());
    let by_characters = oracle::thick_ext_by_characters(&e, &e, 1).unwrap();
    assert_eq!(by_characters.get(&(p(&[1]), p(&[1]))), BigInt::one());
    let x = idx("[2],[],[],[1,1]");
    assert_eq!(ext::ext_to_thick(&x, &p(&[1]), &p(&[1]), 1), BigUint::one());
    let twisted = oracle::thick_ext_by_characters(&p(&[1]), &p(&[1]), 1).unwrap();
    assert_eq!(twisted.get(&(p(&[2]), p(&[1, 1]))), BigInt::one());
}

#[test]
fn thick_ext_against_characters() {
    for a in partitions_up_to(2) {
        for b in partitions_up_to(2) {
            for q in 0..=2 {
                let o = oracle::thick_ext_by_characters(&a, &b, q).unwrap();
                for lam in partitions_of(a.degree() + q) {
                    for pi in partitions_of(b.degree() + q) {
                        let x = SimpleIndex::thick(lam.clone(), pi.clone());
                        let engine = BigInt::from(ext::ext_to_thick(&x, &a, &b, q));
                        assert_eq!(engine, o.get(&(lam.clone(), pi.clone())), "{x} {a} {b} q={q}");
                    }
                }
            }
        }
    }
}

#[test]
fn derived_symalg_examples() {
    let lam = p(&[2, 1]);
    assert_eq!(symalg::young_scalar(&lam), BigUint::from(3u32));
    assert!(symalg::young_idempotency(&lam).unwrap());
    let check = symalg::quadratic_kernel_check(&q("0,2,2,1")).unwrap();
    assert_eq!(check.computed, 2);
    assert!(check.holds());
}

#[test]
fn derived_osp_examples() {
    assert!(ospcat::osp_leq((1, 0), (0, 1)));
    assert_eq!(ospcat::osp_defect((1, 0), (0, 1)), Some(1));
    assert_eq!(ospcat::osp_longest_chain((1, 0), (0, 1)), Some(1));
    assert!(!ospcat::osp_leq((0, 1), (1, 0)));
    let special = oracle::single_block(&oracle::brute_force_plethysm(Power::Exterior, 2, Inner::Ext2, 4).unwrap());
    assert!(special.contains(&p(&[2, 1, 1])));
    let x = OspIndex::new(OspKind::Symplectic, p(&[2, 1, 1]), Partition::empty());
    let y = OspIndex::new(OspKind::Orthogonal, p(&[3, 1]), Partition::empty());
    assert_eq!(ospcat::osp_ext_to_trivial(&x, 2), 1);
    assert_eq!(ospcat::osp_ext_to_trivial(&y, 2), 1);
    let conj = ospcat::osp_conjugate(&OspIndex::new(OspKind::Orthogonal, p(&[2]), Partition::empty()));
    assert_eq!(conj, OspIndex::new(OspKind::Symplectic, p(&[1, 1]), Partition::empty()));
}

#[test]
fn derived_oracle_examples() {
    let s2 = oracle::expand_schur(&p(&[2]), 2).unwrap();
    let want = oracle::decompose_into_schur(&s2).unwrap();
    assert_eq!(want, SymFunc::schur(p(&[2])));
    assert_eq!(s2.terms().len(), 3);
    let sq = MonomialPoly::power_sum_one(2).pow(2);
    assert_eq!(oracle::decompose_into_schur(&sq).unwrap(), &SymFunc::schur(p(&[2])) + &SymFunc::schur(p(&[1, 1])));
    let adj = oracle::stable_mixed_tensor(1, 1, 4).unwrap();
    assert_eq!(adj.len(), 2);
}

#[test]
fn gl_dimension_counts_tableaux() {
    for lam in partitions_up_to(6) {
        for n in 1..=5 {
            let poly = oracle::expand_schur(&lam, n).unwrap();
            assert_eq!(poly.coefficient_sum(), BigInt::from(lam.gl_dimension(n)), "{lam} N={n}");
        }
    }
}

#[test]
fn schur_product_matches_monomial_expansion() {
    for d in 0..=6 {
        for a in 0..=d {
            for mu in partitions_of(a) {
                for nu in partitions_of(d - a) {
                    let engine = SymFunc::schur(mu.clone()).product(&SymFunc::schur(nu.clone())).unwrap();
                    assert_eq!(engine, oracle_product(&mu, &nu), "{mu} * {nu}");
                }
            }
        }
    }
}

#[test]
fn exterior_powers_of_ext2_are_the_special_diagrams() {
    for k in 0..=5 {
        let got: Vec<Partition> = plethysm::power_of_ext2(k, Power::Exterior).unwrap().keys().cloned().collect();
        let want: Vec<Partition> = partitions_of(2 * k).into_iter().filter(Partition::is_special).collect();
        assert_eq!(got, want, "k={k}");
    }
}

#[test]
fn j_matches_stable_dimensions() {
    for q in quadruples(4).filter(|q| q.total() <= 4) {
        let d = grothendieck::decompose_j(&q).unwrap();
        let n = (2 * (q.m + q.n)).max(1);
        for big_n in [n, n + 1] {
            for c in 1..=3usize {
                for w_star in 1..=3usize {
                    let total: BigUint = d
                        .iter()
                        .map(|(s, mult)| {
                            mult.to_biguint().unwrap()
                                * s.lam.gl_dimension(w_star)
                                * mixed_gl_dimension(&s.mu, &s.nu, big_n)
                                * s.pi.gl_dimension(c)
                        })
                        .sum();
                    let want = BigUint::from(w_star).pow(q.l as u32)
                        * BigUint::from(big_n + w_star).pow(q.m as u32)
                        * BigUint::from(big_n + c).pow(q.n as u32)
                        * BigUint::from(c).pow(q.p as u32);
                    assert_eq!(total, want, "{q} N={big_n} c={c} d={w_star}");
                }
            }
        }
    }
}

#[test]
fn thin_part_of_j_is_the_mixed_tensor_space() {
    for m in 0..=4 {
        for n in 0..=4 - m {
            let d = grothendieck::decompose_j(&QuadIndex::new(0, m, n, 0)).unwrap();
            let thin = d.filter(|s| s.lam.is_empty() && s.pi.is_empty()).map_keys(|s| (s.mu.clone(), s.nu.clone()));
            let want = oracle::stable_mixed_tensor(m, n, (2 * (m + n)).max(1)).unwrap();
            assert_eq!(thin, want, "m={m} n={n}");
        }
    }
}
