//! Predicates against brute-force definitions, plus certificate soundness.

use cering::corpus::small_corpus;
use cering::laws::{check_laws, LawCap};
use cering::semiring::{is_ce_semiring, make_semiring, semiring_center, verify_semiring_certificate};
use cering::{
    center, is_centrally_essential, is_centrally_rational, is_commutative, is_reduced, is_semiprime,
    is_strongly_bounded, verify_certificate, Element, Ring, ScanConfig, Semiring, Side, Variant, Witness,
};
use proptest::prelude::*;

fn rings(max: u64) -> Vec<(String, Ring)> {
    small_corpus(max).unwrap().into_iter().map(|e| (e.name, e.ring)).collect()
}

/// The definition read literally: commutative, or every non-central `a`
/// has central `c` with `ac` central and non-zero.
fn ce_by_definition(r: &Ring) -> bool {
    let c: Vec<Element> = center(r).elements().to_vec();
    r.is_commutative()
        || r.elements().filter(|a| !r.is_central(a)).all(|a| {
            c.iter().any(|x| {
                let p = r.mul(&a, x);
                !r.is_zero(&p) && r.is_central(&p)
            })
        })
}

fn ce(r: &Ring, v: Variant) -> bool {
    let cert = is_centrally_essential(r, v, &ScanConfig::exhaustive(1 << 16)).unwrap();
    verify_certificate(r, &cert).unwrap();
    cert.holds
}

#[test]
fn ce_matches_the_definition() {
    for (name, r) in rings(256) {
        assert_eq!(ce(&r, Variant::Nonunital), ce_by_definition(&r), "{name}");
    }
}

#[test]
fn variants_agree_on_unital_rings() {
    for (name, r) in rings(256) {
        if r.is_unital() {
            let v = ce(&r, Variant::Nonunital);
            assert_eq!(ce(&r, Variant::Unital), v, "{name}");
            assert_eq!(ce(&r, Variant::ElementCondition), v, "{name}");
        } else {
            assert!(is_centrally_essential(&r, Variant::Unital, &ScanConfig::exhaustive(1 << 16)).is_err());
        }
    }
    // Zero multiplication: commutative, yet no element has a non-zero multiple.
    let z = Ring::zero_multiplication(3).unwrap();
    assert!(ce(&z, Variant::Nonunital));
    assert!(!ce(&z, Variant::ElementCondition));
}

#[test]
fn known_verdicts() {
    let by = |n: &str| cering::corpus::by_name(n).unwrap().unwrap();
    assert!(ce(&by("z2q8"), Variant::Nonunital));
    assert!(!ce(&by("z3q8"), Variant::Nonunital));
    assert!(!ce(&by("m2_z2"), Variant::Nonunital));
    assert!(!ce(&by("matrix_delta_z3"), Variant::Nonunital));
    // Characteristic 4 still admits central multipliers.
    assert!(ce(&by("z4q8"), Variant::Nonunital));
}

#[test]
fn witnesses_do_not_depend_on_thread_count() {
    let r = cering::corpus::by_name("z3q8").unwrap().unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| is_centrally_essential(&r, Variant::Nonunital, &ScanConfig::exhaustive(1 << 16)).unwrap())
    };
    assert_eq!(run(1), run(4));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ce_of_direct_sum_is_conjunction(i in 0usize..64, j in 0usize..64) {
        let rs = rings(64);
        let (a, b) = (&rs[i % rs.len()].1, &rs[j % rs.len()].1);
        prop_assume!(a.order() * b.order() <= 1 << 12);
        let s = Ring::direct_sum(a, b).unwrap();
        prop_assert_eq!(ce(&s, Variant::Nonunital), ce(a, Variant::Nonunital) && ce(b, Variant::Nonunital));
    }
}

#[test]
fn every_certificate_verifies_and_negated_verdicts_do_not() {
    for (name, r) in rings(256) {
        let certs = [
            is_commutative(&r),
            is_centrally_essential(&r, Variant::Nonunital, &ScanConfig::exhaustive(1 << 16)).unwrap(),
            is_semiprime(&r, 1 << 16).unwrap(),
            is_reduced(&r, 1 << 16).unwrap(),
            is_centrally_rational(&r, 1 << 16).unwrap(),
            is_strongly_bounded(&r, Side::Right, 1 << 16).unwrap(),
        ];
        for cert in certs {
            verify_certificate(&r, &cert).unwrap_or_else(|e| panic!("{name}: {e}"));
            let mut flipped = cert.clone();
            flipped.holds = !flipped.holds;
            assert!(verify_certificate(&r, &flipped).is_err(), "{name}: flipped {:?} accepted", cert.property);
        }
    }
}

#[test]
fn forged_refutation_is_rejected() {
    let r = cering::corpus::by_name("z2q8").unwrap().unwrap();
    let mut cert = is_centrally_essential(&r, Variant::Nonunital, &ScanConfig::exhaustive(1 << 16)).unwrap();
    let a = r.elements().find(|x| !r.is_central(x)).unwrap();
    cert.holds = false;
    cert.witness = Witness::NoCentralMultiplier { a };
    assert!(verify_certificate(&r, &cert).is_err());
}

#[test]
fn reduced_implies_semiprime_and_commutative_implies_rational() {
    for (name, r) in rings(256) {
        let reduced = is_reduced(&r, 1 << 16).unwrap().holds;
        let semiprime = is_semiprime(&r, 1 << 16).unwrap().holds;
        assert!(!reduced || semiprime, "{name}");
        assert_eq!(is_centrally_rational(&r, 1 << 16).unwrap().holds, r.is_commutative(), "{name}");
    }
}

#[test]
fn ideal_laws_have_no_violations_on_small_rings() {
    for (name, r) in rings(128) {
        for law in check_laws(&r, LawCap::default()).unwrap() {
            assert!(law.violations.is_empty(), "{name}: {} {:?}", law.law, law.violations);
        }
    }
}

#[test]
fn semiring_adapter_agrees_with_rings() {
    for (name, r) in rings(64) {
        let s = Semiring::from_ring(&r).unwrap();
        let mut c: Vec<usize> = center(&r).elements().iter().map(|x| r.index_of(x) as usize).collect();
        c.sort_unstable();
        assert_eq!(semiring_center(&s), c, "{name}");
        let cert = is_ce_semiring(&s);
        verify_semiring_certificate(&s, &cert).unwrap();
        assert_eq!(cert.holds, ce(&r, Variant::Nonunital), "{name}");
        let back: Semiring = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
    }
}

proptest! {
    #[test]
    fn semiring_tables_are_validated(seed in prop::collection::vec(0usize..3, 18)) {
        let add: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|y| seed[x * 3 + y]).collect()).collect();
        let mul: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|y| seed[9 + x * 3 + y]).collect()).collect();
        let ok = (0..3).all(|x| add[0][x] == x && mul[0][x] == 0 && mul[x][0] == 0)
            && (0..3).all(|x| (0..3).all(|y| {
                add[x][y] == add[y][x]
                    && (0..3).all(|z| {
                        add[add[x][y]][z] == add[x][add[y][z]]
                            && mul[mul[x][y]][z] == mul[x][mul[y][z]]
                            && mul[x][add[y][z]] == add[mul[x][y]][mul[x][z]]
                            && mul[add[x][y]][z] == add[mul[x][z]][mul[y][z]]
                    })
            }));
        prop_assert_eq!(make_semiring(&add, &mul, 0, None).is_ok(), ok);
    }
}
