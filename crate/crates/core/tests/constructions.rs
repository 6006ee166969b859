//! Group rings, quaternion algebras and the Δ matrices.

use std::collections::BTreeSet;

use cering::center::center_by_exhaustion;
use cering::constructions::quotient_ring;
use cering::modarith::gcd;
use cering::subgroup::two_sided_ideal_generated;
use cering::{
    center, class_sum_center, group_ring, matrix_delta, matrix_delta_element, quaternion_algebra,
    quaternion_center_formula, Element, GroupTable, QuaternionParams, Ring,
};
use proptest::prelude::*;

fn set(xs: &[Element]) -> BTreeSet<Element> {
    xs.iter().cloned().collect()
}

#[test]
fn class_sums_span_the_center() {
    let groups = [
        GroupTable::q8(),
        GroupTable::cyclic(3).unwrap(),
        GroupTable::elementary_abelian_2(2).unwrap(),
        GroupTable::product(&GroupTable::q8(), &GroupTable::cyclic(2).unwrap()).unwrap(),
    ];
    for n in 2..=4 {
        for g in &groups {
            let gr = group_ring(&Ring::zn(n).unwrap(), g).unwrap();
            if gr.ring().order() > 1 << 16 {
                continue;
            }
            let sums = class_sum_center(&gr).unwrap();
            assert_eq!(set(sums.elements()), set(center(gr.ring()).elements()), "Z{n}[{}]", g.order());
        }
    }
}

#[test]
fn z2q8_center_has_order_32_and_contains_the_real_class_sums() {
    let gr = group_ring(&Ring::zn(2).unwrap(), &GroupTable::q8()).unwrap();
    let r = gr.ring();
    let c = center(r);
    assert_eq!(c.len(), 32);
    let sum = |names: &[&str]| {
        names.iter().map(|n| gr.named(n).unwrap()).fold(r.zero(), |acc, x| r.add(&acc, &x))
    };
    for class in [&["e"][..], &["a^2"], &["a", "a^3"], &["b", "a^2b"], &["ab", "a^3b"]] {
        assert!(c.contains(&sum(class)), "{class:?}");
    }
    // b and a^3 b are not conjugate in Q8, so this sum is not central.
    assert!(!r.is_central(&sum(&["b", "a^3b"])));
}

#[test]
fn least_ideal_of_z2q8_is_spanned_by_the_group_sum() {
    let gr = group_ring(&Ring::zn(2).unwrap(), &GroupTable::q8()).unwrap();
    let r = gr.ring();
    let hat = gr.group_sum().unwrap();
    let ideal = two_sided_ideal_generated(r, std::slice::from_ref(&hat));
    assert_eq!(ideal.len(), 2);
    assert!(r.is_central(&hat));
    assert!(r.is_zero(&r.mul(&hat, &hat)));
    let q = quotient_ring(r, &ideal).unwrap();
    assert_eq!(q.ring.order(), 128);
}

#[test]
fn matrix_delta_has_a_noncentral_idempotent() {
    for n in [3, 9] {
        let r = matrix_delta(n).unwrap();
        assert_eq!(r.order(), u64::from(n).pow(4));
        let half = i64::from(n + 1) / 2;
        let e = matrix_delta_element(n, [half, 1, 1, 0]);
        assert!(r.contains(&e));
        assert_eq!(r.mul(&e, &e), e);
        assert!(!r.is_central(&e));
    }
}

fn units(n: u64) -> Vec<i64> {
    (1..n).filter(|&a| gcd(a, n) == 1).map(|a| a as i64).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quaternion_center_formula_matches_brute_force(n in 2u64..10, i in 0usize..8, j in 0usize..8) {
        let us = units(n);
        let (a, b) = (us[i % us.len()], us[j % us.len()]);
        let q = quaternion_algebra(&QuaternionParams::over_zn(n, a, b).unwrap()).unwrap();
        prop_assert_eq!(q.ring.order(), n.pow(4));
        let brute = set(center_by_exhaustion(&q.ring).elements());
        prop_assert_eq!(&set(quaternion_center_formula(&q).unwrap().elements()), &brute);
        prop_assert_eq!(&set(center(&q.ring).elements()), &brute);
    }

    #[test]
    fn quaternion_units_square_to_the_parameters(n in 2u64..12, i in 0usize..8, j in 0usize..8) {
        let us = units(n);
        let (a, b) = (us[i % us.len()], us[j % us.len()]);
        let q = quaternion_algebra(&QuaternionParams::over_zn(n, a, b).unwrap()).unwrap();
        let r = &q.ring;
        let one = r.one().unwrap().clone();
        let (iu, ju) = (r.basis(1), r.basis(2));
        let k = r.mul(&iu, &ju);
        let scalar = |t: i64| r.scale(t.rem_euclid(n as i64) as u64, &one);
        prop_assert_eq!(r.mul(&iu, &iu), scalar(a));
        prop_assert_eq!(r.mul(&ju, &ju), scalar(b));
        prop_assert_eq!(r.mul(&ju, &iu), r.neg(&k));
        prop_assert_eq!(r.mul(&k, &k), scalar(-a * b));
    }
}
