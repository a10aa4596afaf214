//! Brute-force oracles and invariants on small shapes.

use std::collections::HashSet;

use proptest::prelude::*;
use schur_antipode::expansion::{enumerate_chains, enumerate_tuples};
use schur_antipode::polynomials::{closed_form_antipode_poly, rspp_poly, skew_schur_poly, takeuchi_antipode_poly};
use schur_antipode::shapes::{conjugate, contains, intermediate_partitions, skew_cells};
use schur_antipode::tableaux::{enumerate_rspp, enumerate_ssyt, is_rspp, is_ssyt};
use schur_antipode::verify::shapes_up_to;
use schur_antipode::{Partition, Polynomial, SkewShape, Tableau};

/// Every filling of `shape` with entries in `1..=max`, in lexicographic
/// order of row-major values.
fn all_fillings(shape: &SkewShape, max: u32) -> Vec<Tableau> {
    let n = shape.size();
    let total = (max as usize).pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut values = vec![0; n];
            for slot in values.iter_mut().rev() {
                *slot = (code % max as usize) as u32 + 1;
                code /= max as usize;
            }
            Tableau::new(shape.clone(), values).unwrap()
        })
        .collect()
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn conjugation_is_involutive() {
    for lam in Partition::all_up_to(8) {
        assert_eq!(conjugate(&conjugate(&lam)), lam);
        assert_eq!(conjugate(&lam).size(), lam.size());
    }
}

#[test]
fn skew_cell_count() {
    for shape in shapes_up_to(7) {
        assert_eq!(skew_cells(&shape).len(), shape.outer().size() - shape.inner().size());
    }
}

#[test]
fn intermediates_match_brute_force() {
    for shape in shapes_up_to(6) {
        let (mu, lam) = (shape.inner(), shape.outer());
        let got: HashSet<Partition> = intermediate_partitions(mu, lam).unwrap().into_iter().collect();
        let brute: HashSet<Partition> = Partition::all_up_to(lam.size())
            .into_iter()
            .filter(|nu| contains(mu, nu) && contains(nu, lam))
            .collect();
        assert_eq!(got, brute, "{shape}");
    }
}

#[test]
fn ssyt_and_rspp_enumeration_match_filters() {
    for shape in shapes_up_to(7).into_iter().filter(|s| s.size() <= 5) {
        for max in 1..=3 {
            let all = all_fillings(&shape, max);
            let ssyt: Vec<Tableau> = all.iter().filter(|t| is_ssyt(t)).cloned().collect();
            let rspp: Vec<Tableau> = all.iter().filter(|t| is_rspp(t)).cloned().collect();
            assert_eq!(enumerate_ssyt(&shape, max).collect::<Vec<_>>(), ssyt, "{shape} ≤{max}");
            assert_eq!(enumerate_rspp(&shape, max).collect::<Vec<_>>(), rspp, "{shape} ≤{max}");
        }
    }
}

#[test]
fn staircase_ssyt_count() {
    let shape = SkewShape::straight(p(&[2, 1]));
    let brute = all_fillings(&shape, 3).into_iter().filter(is_ssyt).count();
    assert_eq!(brute, 8);
    assert_eq!(enumerate_ssyt(&shape, 3).count(), brute);
}

#[test]
fn reversal_maps_rspp_to_conjugate_ssyt() {
    for shape in shapes_up_to(6) {
        for n in 1..=4u32 {
            let image: HashSet<Tableau> = enumerate_rspp(&shape, n)
                .map(|r| r.map_values(|v| n + 1 - v).unwrap().transpose())
                .collect();
            let target: HashSet<Tableau> = enumerate_ssyt(&shape.conjugate(), n).collect();
            assert_eq!(image, target, "{shape} N={n}");
        }
    }
}

#[test]
fn tuple_count_is_sum_of_products() {
    for shape in shapes_up_to(5) {
        for n in 1..=3u32 {
            let expect: usize = enumerate_chains(shape.inner(), shape.outer())
                .unwrap()
                .map(|ch| {
                    ch.step_shapes()
                        .map(|s| enumerate_ssyt(&s, n).count())
                        .product::<usize>()
                })
                .sum();
            let got = enumerate_tuples(shape.inner(), shape.outer(), n).unwrap().count();
            assert_eq!(got, expect, "{shape}");
        }
    }
}

#[test]
fn tuples_are_distinct_and_concat_is_injective() {
    for shape in shapes_up_to(5) {
        let tuples: Vec<_> = enumerate_tuples(shape.inner(), shape.outer(), 2).unwrap().collect();
        let distinct: HashSet<_> = tuples.iter().cloned().collect();
        assert_eq!(distinct.len(), tuples.len());
        let tags: HashSet<_> = tuples
            .iter()
            .map(|t| {
                let tag = t.concat();
                (tag.tableau.values().to_vec(), tag.block_index.clone())
            })
            .collect();
        assert_eq!(tags.len(), tuples.len());
        for t in &tuples {
            assert_eq!(&t.concat().to_tuple().unwrap(), t);
        }
    }
}

#[test]
fn chains_are_strict_and_unique() {
    for shape in shapes_up_to(5) {
        let chains: Vec<_> = enumerate_chains(shape.inner(), shape.outer()).unwrap().collect();
        let distinct: HashSet<_> = chains.iter().cloned().collect();
        assert_eq!(distinct.len(), chains.len());
        for ch in &chains {
            assert_eq!(ch.bottom(), shape.inner());
            assert_eq!(ch.top(), shape.outer());
            for w in ch.steps().windows(2) {
                assert!(w[0] != w[1] && contains(&w[0], &w[1]));
            }
        }
    }
}

#[test]
fn single_cell_product_splits_into_schur_functions() {
    let s1 = skew_schur_poly(&SkewShape::straight(p(&[1])), 2).unwrap();
    let s2 = skew_schur_poly(&SkewShape::straight(p(&[2])), 2).unwrap();
    let s11 = skew_schur_poly(&SkewShape::straight(p(&[1, 1])), 2).unwrap();
    let expect = Polynomial::from_terms(2, [(vec![2, 0], 1), (vec![1, 1], 2), (vec![0, 2], 1)]).unwrap();
    assert_eq!(s1.mul(&s1).unwrap(), expect);
    assert_eq!(s2.add(&s11).unwrap(), expect);
}

#[test]
fn generating_functions_are_symmetric() {
    for shape in shapes_up_to(5) {
        for n in 2..=3 {
            assert!(skew_schur_poly(&shape, n).unwrap().is_symmetric(), "{shape}");
            assert!(rspp_poly(&shape, n).unwrap().is_symmetric(), "{shape}");
        }
    }
}

#[test]
fn both_sides_vanish_together() {
    // a row of λ/μ longer than N is a column of λᵗ/μᵗ taller than N
    for shape in shapes_up_to(6) {
        for n in 1..=3usize {
            let longest_row = (1..=shape.outer().len())
                .map(|r| shape.outer().row_len(r) - shape.inner().row_len(r))
                .max()
                .unwrap_or(0);
            let closed = closed_form_antipode_poly(&shape, n).unwrap();
            let takeuchi = takeuchi_antipode_poly(&shape, n).unwrap();
            if longest_row > n {
                assert!(closed.is_zero(), "{shape} N={n}");
                assert!(takeuchi.is_zero(), "{shape} N={n}");
            }
        }
    }
}

fn arb_partition(max_size: usize) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(|n| {
        let all = Partition::all_of_size(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn json_round_trip(lam in arb_partition(7), seed in 0usize..1000, n in 1u32..4) {
        let mus = intermediate_partitions(&Partition::empty(), &lam).unwrap();
        let mu = mus[seed % mus.len()].clone();
        let tuples: Vec<_> = enumerate_tuples(&mu, &lam, n).unwrap().take(50).collect();
        for t in tuples {
            let s = serde_json::to_string(&t).unwrap();
            prop_assert_eq!(serde_json::from_str::<schur_antipode::TableauTuple>(&s).unwrap(), t);
        }
        let shape = SkewShape::new(lam, mu).unwrap();
        let poly = skew_schur_poly(&shape, n as usize).unwrap();
        let s = serde_json::to_string(&poly).unwrap();
        prop_assert_eq!(serde_json::from_str::<Polynomial>(&s).unwrap(), poly);
    }

    #[test]
    fn multiplication_distributes(
        a in proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -5i64..5), 0..6),
        b in proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -5i64..5), 0..6),
        c in proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -5i64..5), 0..6),
        point in proptest::collection::vec(-3i64..4, 3),
    ) {
        let a = Polynomial::from_terms(3, a).unwrap();
        let b = Polynomial::from_terms(3, b).unwrap();
        let c = Polynomial::from_terms(3, c).unwrap();
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            lhs.eval(&point).unwrap(),
            a.eval(&point).unwrap() * (b.eval(&point).unwrap() + c.eval(&point).unwrap())
        );
    }
}
