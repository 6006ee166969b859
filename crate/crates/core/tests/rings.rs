//! Ring tables, ideals and annihilators against naive oracles.

use std::collections::BTreeSet;

use cering::corpus::small_corpus;
use cering::ideals::{all_ideals, nilpotency_index, IdealCap};
use cering::modarith::gcd;
use cering::subgroup::{left_annihilator, right_annihilator, right_ideal_generated, two_sided_ideal_generated};
use cering::{center, Element, Ring, Side};
use proptest::prelude::*;

/// Every ring axiom, checked over all triples.
fn table_axioms_hold(add: &[Vec<usize>], mul: &[Vec<usize>], zero: usize) -> bool {
    let m = add.len();
    let idx = 0..m;
    for x in idx.clone() {
        if add[x][zero] != x || add[zero][x] != x {
            return false;
        }
        if !(0..m).any(|y| add[x][y] == zero) {
            return false;
        }
        for y in idx.clone() {
            if add[x][y] != add[y][x] {
                return false;
            }
            for z in idx.clone() {
                if add[add[x][y]][z] != add[x][add[y][z]]
                    || mul[mul[x][y]][z] != mul[x][mul[y][z]]
                    || mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]
                    || mul[add[x][y]][z] != add[mul[x][z]][mul[y][z]]
                {
                    return false;
                }
            }
        }
    }
    true
}

fn zn_tables(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let add = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
    let mul = (0..n).map(|x| (0..n).map(|y| (x * y) % n).collect()).collect();
    (add, mul)
}

fn small_rings() -> Vec<Ring> {
    small_corpus(64).unwrap().into_iter().map(|e| e.ring).collect()
}

/// Closure of `seed` under addition, negation and right multiplication by every element.
fn naive_right_ideal(ring: &Ring, seed: &[Element]) -> BTreeSet<Element> {
    let all: Vec<Element> = ring.elements().collect();
    let mut set: BTreeSet<Element> = BTreeSet::from([ring.zero()]);
    set.extend(seed.iter().cloned());
    loop {
        let cur: Vec<Element> = set.iter().cloned().collect();
        let before = set.len();
        for x in &cur {
            for y in &cur {
                set.insert(ring.add(x, y));
            }
            for r in &all {
                set.insert(ring.mul(x, r));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_tables_are_accepted_exactly_when_they_form_a_ring(
        m in 2usize..4,
        seed in prop::collection::vec(0usize..16, 32),
    ) {
        let (add, base_mul) = zn_tables(m);
        let mul: Vec<Vec<usize>> = (0..m)
            .map(|x| (0..m).map(|y| if seed[x * m + y] < 10 { base_mul[x][y] } else { seed[x * m + y] % m }).collect())
            .collect();
        let expected = table_axioms_hold(&add, &mul, 0);
        prop_assert_eq!(Ring::from_tables(&add, &mul, 0, None).is_ok(), expected);
    }

    #[test]
    fn random_additions_are_accepted_exactly_when_they_form_a_ring(
        seed in prop::collection::vec(0usize..3, 9),
    ) {
        let add: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|y| seed[x * 3 + y]).collect()).collect();
        let mul = vec![vec![0; 3]; 3];
        let expected = table_axioms_hold(&add, &mul, 0);
        prop_assert_eq!(Ring::from_tables(&add, &mul, 0, None).is_ok(), expected);
    }

    #[test]
    fn zn_tables_round_trip(n in 2usize..12) {
        let (add, mul) = zn_tables(n);
        let r = Ring::from_tables(&add, &mul, 0, None).unwrap();
        prop_assert_eq!(r.order(), n as u64);
        prop_assert!(r.is_unital());
        prop_assert_eq!(r.characteristic(), n as u64);
    }

    #[test]
    fn direct_sum_characteristic_is_lcm(a in 2u64..20, b in 2u64..20) {
        let s = Ring::direct_sum(&Ring::zn(a).unwrap(), &Ring::zn(b).unwrap()).unwrap();
        prop_assert_eq!(s.order(), a * b);
        prop_assert_eq!(s.characteristic(), a * b / gcd(a, b));
        prop_assert!(s.is_unital());
    }

    #[test]
    fn right_ideal_generation_matches_closure(ring_ix in 0usize..100, picks in prop::collection::vec(0u64..1 << 20, 1..3)) {
        let rings = small_rings();
        let ring = &rings[ring_ix % rings.len()];
        let seed: Vec<Element> = picks.iter().map(|p| ring.element_at(p % ring.order())).collect();
        let fast: BTreeSet<Element> = right_ideal_generated(ring, &seed).elements().iter().cloned().collect();
        prop_assert_eq!(fast, naive_right_ideal(ring, &seed));
    }

    #[test]
    fn annihilators_match_their_definition(ring_ix in 0usize..100, picks in prop::collection::vec(0u64..1 << 20, 1..3)) {
        let rings = small_rings();
        let ring = &rings[ring_ix % rings.len()];
        let set: Vec<Element> = picks.iter().map(|p| ring.element_at(p % ring.order())).collect();
        let left = left_annihilator(ring, &set);
        let right = right_annihilator(ring, &set);
        for x in ring.elements() {
            prop_assert_eq!(left.contains(&x), set.iter().all(|s| ring.is_zero(&ring.mul(&x, s))));
            prop_assert_eq!(right.contains(&x), set.iter().all(|s| ring.is_zero(&ring.mul(s, &x))));
        }
        prop_assert!(left.is_left_ideal());
        prop_assert!(right.is_right_ideal());
    }

    #[test]
    fn nilpotency_index_matches_powers(ring_ix in 0usize..100, pick in 0u64..1 << 20) {
        let rings = small_rings();
        let ring = &rings[ring_ix % rings.len()];
        let a = ring.element_at(pick % ring.order());
        let naive = (1..=ring.order() as u32 + 1).find(|&k| ring.is_zero(&ring.pow(&a, k)));
        prop_assert_eq!(nilpotency_index(ring, &a), naive);
    }
}

#[test]
fn ideal_lattice_contains_every_principal_ideal() {
    for ring in small_rings().iter().filter(|r| r.order() <= 32) {
        let lattice = all_ideals(ring, Side::TwoSided, IdealCap::with_order(64)).unwrap();
        for x in ring.elements() {
            let p = two_sided_ideal_generated(ring, &[x]);
            assert!(lattice.iter().any(|i| i.elements() == p.elements()), "{}", ring.label());
        }
        for i in &lattice {
            assert!(i.is_two_sided());
        }
    }
}

#[test]
fn center_matches_brute_force_on_the_small_corpus() {
    for ring in small_rings() {
        let brute: BTreeSet<Element> = ring
            .elements()
            .filter(|x| ring.elements().all(|y| ring.mul(x, &y) == ring.mul(&y, x)))
            .collect();
        let fast: BTreeSet<Element> = center(&ring).elements().iter().cloned().collect();
        assert_eq!(fast, brute, "{}", ring.label());
    }
}
