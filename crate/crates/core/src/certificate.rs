//! Verdicts with evidence, and an independent checker.
//!
//! The checker deliberately avoids the search code in [`crate::predicates`]:
//! centers are recomputed by commutation tests, ideals by naive closure over
//! all ring elements, and positive multiplier schedules are replayed
//! element by element.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::center::center;
use crate::ring::{Element, ElementSet, Ring};
use crate::subgroup::Side;

/// Which form of central essentiality is being decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Commutative, or every non-central `a` has a central multiplier.
    Nonunital,
    /// Every non-zero `a` has a central multiplier; the ring must be unital.
    Unital,
    /// The unital element condition applied without requiring an identity.
    ElementCondition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Every element was examined.
    Exhaustive,
    /// A bounded or targeted scan that found a counterexample.
    Refutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Property {
    Commutative,
    CentrallyEssential { variant: Variant },
    /// The right ideal generated by `generators` is essential.
    EssentialRightIdeal { generators: Vec<Element> },
    /// The submodule spanned by `generators` is essential; needs the module
    /// to re-check (see [`crate::module::verify_module_certificate`]).
    EssentialSubmodule { generators: Vec<Element> },
    Semiprime,
    Reduced,
    CentrallyRational,
    StronglyBounded { side: Side },
    Semisubtractive,
}

/// A central multiplier in a positive schedule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Multiplier {
    /// `d·1` in a unital ring.
    Scalar(u64),
    Element(Element),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// All pairs of additive generators commute.
    Commutative,
    NonCommuting { a: Element, b: Element },
    /// Every element that needs one has a multiplier in `schedule`; products
    /// land in the span of `center_generators`.
    CentralMultipliers { center_generators: Vec<Element>, schedule: Vec<Multiplier> },
    /// `a` is non-central (or non-zero) and `a c` is never a non-zero central element.
    NoCentralMultiplier { a: Element },
    /// A positive verdict with no compact evidence; the checker rescans.
    Exhausted,
    /// `Za + aR` meets the ideal only in zero.
    PrincipalMiss { a: Element },
    /// The two-sided ideal generated by `a` squares to zero.
    SquareZeroIdeal { a: Element },
    Nilpotent { a: Element, index: u32 },
    /// No central `c` and integer `n` give `xc + nx` central with `yc + ny != 0`.
    NotRational { x: Element, y: Element },
    /// The principal one-sided ideal of `a` contains no non-zero two-sided ideal.
    NoIdealInside { a: Element },
    /// Semiring elements with neither `a + x = b` nor `b + x = a`.
    NotSubtractive { a: Element, b: Element },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub property: Property,
    pub holds: bool,
    pub mode: Mode,
    pub witness: Witness,
    /// Elements (or element pairs) examined by the search.
    pub examined: u64,
}

impl Certificate {
    pub(crate) fn new(property: Property, holds: bool, mode: Mode, witness: Witness, examined: u64) -> Self {
        Certificate { property, holds, mode, witness, examined }
    }
}

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("certificate rejected: {0}")]
pub struct Rejected(pub String);

fn reject<T>(msg: impl Into<String>) -> Result<T, Rejected> {
    Err(Rejected(msg.into()))
}

/// Largest ring the checker enumerates in full.
pub const CHECK_CAP: u64 = 1 << 22;

/// Largest ring for the quadratic naive rescans (ideal closures).
pub const NAIVE_CAP: u64 = 4096;

fn need_order(ring: &Ring, cap: u64) -> Result<(), Rejected> {
    if ring.order() > cap {
        return reject(format!("ring of order {} is beyond the checker's limit {cap}", ring.order()));
    }
    Ok(())
}

fn member(ring: &Ring, x: &Element) -> Result<(), Rejected> {
    if !ring.contains(x) {
        return reject(format!("{x:?} is not an element of the ring"));
    }
    Ok(())
}

/// Above this order the checker trusts the kernel-based center, which the
/// tests compare against brute force on smaller rings.
const BRUTE_CENTER_CAP: u64 = 1 << 16;

/// Center as an explicit set, by commutation tests when the ring is small
/// enough and by the linear-algebra route otherwise.
fn checked_center(ring: &Ring) -> Vec<Element> {
    if ring.order() <= BRUTE_CENTER_CAP {
        ring.elements().filter(|x| ring.is_central(x)).collect()
    } else {
        center(ring).elements().to_vec()
    }
}

fn span(ring: &Ring, gens: &[Element]) -> Vec<Element> {
    let mut seen: HashSet<Element> = HashSet::from([ring.zero()]);
    let mut out = vec![ring.zero()];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let y = ring.add(&out[i], g);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

/// `Za + aR` (right), `Za + Ra` (left) or `Za + aR + Ra + RaR` (two-sided),
/// built by enumerating all products with ring elements.
pub fn naive_principal(ring: &Ring, a: &Element, side: Side) -> BTreeSet<Element> {
    let all: Vec<Element> = ring.elements().collect();
    let mut gens = vec![a.clone()];
    let (right, left) = match side {
        Side::Right => (true, false),
        Side::Left => (false, true),
        Side::TwoSided => (true, true),
    };
    for r in &all {
        if right {
            gens.push(ring.mul(a, r));
        }
        if left {
            gens.push(ring.mul(r, a));
        }
        if right && left {
            for s in &all {
                gens.push(ring.mul(&ring.mul(r, a), s));
            }
        }
    }
    let mut seen = HashSet::new();
    gens.retain(|g| seen.insert(g.clone()));
    span(ring, &gens).into_iter().collect()
}

/// Whether the principal one-sided ideal `p` contains the two-sided ideal of
/// one of its non-zero elements. Two-sided ideals are memoized in `cache`.
fn contains_nonzero_ideal(
    ring: &Ring,
    p: &BTreeSet<Element>,
    cache: &mut HashMap<Element, BTreeSet<Element>>,
) -> bool {
    p.iter().filter(|x| !ring.is_zero(x)).any(|x| {
        cache
            .entry(x.clone())
            .or_insert_with(|| naive_principal(ring, x, Side::TwoSided))
            .is_subset(p)
    })
}

/// Right ideal generated by a set, by closing under products with all elements.
fn naive_right_ideal(ring: &Ring, seed: &[Element]) -> BTreeSet<Element> {
    let all: Vec<Element> = ring.elements().collect();
    let mut set: BTreeSet<Element> = span(ring, seed).into_iter().collect();
    loop {
        let mut gens: Vec<Element> = set.iter().cloned().collect();
        for x in set.iter() {
            gens.extend(all.iter().map(|r| ring.mul(x, r)));
        }
        let next: BTreeSet<Element> = span(ring, &gens).into_iter().collect();
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

fn first_noncommuting(ring: &Ring, a: &Element) -> Option<Element> {
    ring.gens().iter().find(|g| ring.mul(a, g) != ring.mul(g, a)).cloned()
}

/// Check `cert` against `ring` without reusing the search that produced it.
pub fn verify_certificate(ring: &Ring, cert: &Certificate) -> Result<(), Rejected> {
    use Property as P;
    use Witness as W;
    match (&cert.property, &cert.witness) {
        (_, W::NonCommuting { a, b }) => {
            member(ring, a)?;
            member(ring, b)?;
            if cert.holds && cert.property != P::Commutative {
                return reject("a non-commuting pair cannot prove this property");
            }
            if ring.mul(a, b) == ring.mul(b, a) {
                return reject("the witness pair commutes");
            }
            let ok = matches!(cert.property, P::Commutative | P::CentrallyRational) && !cert.holds;
            if !ok {
                return reject("non-commuting pair used for an unrelated property");
            }
            Ok(())
        }
        (P::Commutative | P::CentrallyEssential { variant: Variant::Nonunital }, W::Commutative) => {
            if !cert.holds {
                return reject("commutativity evidence with a negative verdict");
            }
            match ring.noncommuting_generators() {
                None => Ok(()),
                Some((a, b)) => reject(format!("generators {a:?} and {b:?} do not commute")),
            }
        }
        (P::CentrallyEssential { variant }, W::CentralMultipliers { center_generators, schedule }) => {
            if !cert.holds {
                return reject("multiplier schedule with a negative verdict");
            }
            verify_schedule(ring, *variant, center_generators, schedule)
        }
        (P::CentrallyEssential { variant }, W::NoCentralMultiplier { a }) => {
            if cert.holds {
                return reject("refutation evidence with a positive verdict");
            }
            member(ring, a)?;
            if ring.is_zero(a) {
                return reject("the witness is zero");
            }
            match variant {
                Variant::Unital if !ring.is_unital() => return reject("unital variant on a non-unital ring"),
                Variant::Nonunital if first_noncommuting(ring, a).is_none() => {
                    return reject("the witness is central")
                }
                _ => {}
            }
            let c = checked_center(ring);
            let set = ElementSet::new(ring, &c);
            for x in &c {
                if ring.is_zero(x) {
                    continue;
                }
                let p = ring.mul(a, x);
                if !ring.is_zero(&p) && set.contains(ring, &p.0) {
                    return reject(format!("{x:?} is a central multiplier for the witness"));
                }
            }
            Ok(())
        }
        (P::EssentialRightIdeal { generators }, W::PrincipalMiss { a }) => {
            need_order(ring, NAIVE_CAP)?;
            member(ring, a)?;
            if cert.holds || ring.is_zero(a) {
                return reject("principal miss needs a negative verdict and a non-zero witness");
            }
            let ideal = naive_right_ideal(ring, generators);
            let principal = naive_principal(ring, a, Side::Right);
            match principal.iter().find(|x| !ring.is_zero(x) && ideal.contains(x)) {
                Some(x) => reject(format!("{x:?} lies in both ideals")),
                None => Ok(()),
            }
        }
        (P::Semiprime, W::SquareZeroIdeal { a }) => {
            need_order(ring, NAIVE_CAP)?;
            member(ring, a)?;
            if cert.holds || ring.is_zero(a) {
                return reject("square-zero evidence needs a negative verdict and a non-zero witness");
            }
            let ideal: Vec<Element> = naive_principal(ring, a, Side::TwoSided).into_iter().collect();
            for x in &ideal {
                for y in &ideal {
                    if !ring.is_zero(&ring.mul(x, y)) {
                        return reject("the ideal generated by the witness does not square to zero");
                    }
                }
            }
            Ok(())
        }
        (P::Reduced, W::Nilpotent { a, index }) => {
            member(ring, a)?;
            if cert.holds || ring.is_zero(a) || *index == 0 {
                return reject("nilpotent evidence needs a negative verdict and a non-zero witness");
            }
            if !ring.is_zero(&ring.pow(a, *index)) {
                return reject("the witness power is not zero");
            }
            Ok(())
        }
        (P::CentrallyRational, W::NotRational { x, y }) => {
            member(ring, x)?;
            member(ring, y)?;
            if cert.holds || ring.is_zero(y) {
                return reject("irrationality evidence needs a negative verdict and non-zero y");
            }
            let c = checked_center(ring);
            let set = ElementSet::new(ring, &c);
            for k in 0..ring.characteristic() {
                let (kx, ky) = (ring.scale(k, x), ring.scale(k, y));
                for z in &c {
                    let p = ring.add(&ring.mul(x, z), &kx);
                    let q = ring.add(&ring.mul(y, z), &ky);
                    if set.contains(ring, &p.0) && !ring.is_zero(&q) {
                        return reject(format!("c = {z:?}, n = {k} satisfies the rationality condition"));
                    }
                }
            }
            Ok(())
        }
        (P::StronglyBounded { side }, W::NoIdealInside { a }) => {
            need_order(ring, NAIVE_CAP)?;
            member(ring, a)?;
            if cert.holds || ring.is_zero(a) {
                return reject("needs a negative verdict and a non-zero witness");
            }
            let sides: &[Side] = match side {
                Side::TwoSided => &[Side::Right, Side::Left],
                Side::Right => &[Side::Right],
                Side::Left => &[Side::Left],
            };
            // the witness must fail for at least one of the requested sides
            let mut cache = HashMap::new();
            for &s in sides {
                let p = naive_principal(ring, a, s);
                if !contains_nonzero_ideal(ring, &p, &mut cache) {
                    return Ok(());
                }
            }
            reject("the principal ideal of the witness contains a non-zero ideal")
        }
        (property, W::Exhausted) => {
            if !cert.holds || cert.mode != Mode::Exhaustive {
                return reject("exhaustion evidence needs an exhaustive positive verdict");
            }
            rescan(ring, property)
        }
        (property, witness) => reject(format!("witness {witness:?} does not fit property {property:?}")),
    }
}

fn verify_schedule(
    ring: &Ring,
    variant: Variant,
    center_generators: &[Element],
    schedule: &[Multiplier],
) -> Result<(), Rejected> {
    need_order(ring, CHECK_CAP)?;
    if variant == Variant::Unital && !ring.is_unital() {
        return reject("unital variant on a non-unital ring");
    }
    for g in center_generators {
        member(ring, g)?;
        if let Some(h) = first_noncommuting(ring, g) {
            return reject(format!("claimed central generator {g:?} does not commute with {h:?}"));
        }
    }
    // Every claimed central element is genuinely central, so landing in this
    // span is enough; it may be smaller than the true center.
    let c = span(ring, center_generators);
    let set = ElementSet::new(ring, &c);
    let mut elems: Vec<Element> = Vec::with_capacity(schedule.len());
    let mut scalars: Vec<u64> = Vec::new();
    for m in schedule {
        match m {
            Multiplier::Scalar(d) => {
                let one = match ring.one() {
                    Some(one) => one,
                    None => return reject("scalar multiplier in a non-unital ring"),
                };
                if ring.is_zero(&ring.scale(*d, one)) {
                    return reject(format!("scalar multiplier {d} is zero"));
                }
                scalars.push(*d);
            }
            Multiplier::Element(x) => {
                member(ring, x)?;
                if ring.is_zero(x) || !set.contains(ring, &x.0) {
                    return reject(format!("multiplier {x:?} is zero or not in the claimed center"));
                }
                elems.push(x.clone());
            }
        }
    }
    let mut p = vec![0u32; ring.width()];
    let zero = ring.zero().0;
    let modulus = ring.as_structure().map(|s| s.modulus() as u64);
    let mut failure: Option<Element> = None;
    ring.for_each_in_range(0, ring.order(), |_, a| {
        if failure.is_some() || a == zero.as_slice() {
            return;
        }
        if variant == Variant::Nonunital && set.contains(ring, a) {
            return;
        }
        for &d in &scalars {
            // a (d·1) = d a by distributivity
            match modulus {
                Some(n) => {
                    for (o, &x) in p.iter_mut().zip(a) {
                        *o = (x as u64 * d % n) as u32;
                    }
                }
                None => p.copy_from_slice(&ring.scale(d, &Element(a.to_vec())).0),
            }
            if p != zero && set.contains(ring, &p) {
                return;
            }
        }
        for x in &elems {
            ring.mul_into(a, &x.0, &mut p);
            if p != zero && set.contains(ring, &p) {
                return;
            }
        }
        failure = Some(Element(a.to_vec()));
    });
    match failure {
        Some(a) => reject(format!("no scheduled multiplier works for {a:?}")),
        None => Ok(()),
    }
}

/// Naive re-derivation of a positive exhaustive verdict.
fn rescan(ring: &Ring, property: &Property) -> Result<(), Rejected> {
    let nonzero = || ring.elements().filter(|x| !ring.is_zero(x));
    match property {
        Property::Commutative => verify_certificate(
            ring,
            &Certificate::new(Property::Commutative, true, Mode::Exhaustive, Witness::Commutative, 0),
        ),
        Property::Reduced => {
            need_order(ring, CHECK_CAP)?;
            for a in nonzero() {
                let mut p = a.clone();
                for _ in 0..ring.order() {
                    if ring.is_zero(&p) {
                        return reject(format!("{a:?} is nilpotent"));
                    }
                    p = ring.mul(&p, &a);
                }
            }
            Ok(())
        }
        Property::Semiprime => {
            // (a) squares to zero iff a x a = 0 for every x in R with 1 adjoined
            need_order(ring, NAIVE_CAP)?;
            let all: Vec<Element> = ring.elements().collect();
            for a in nonzero() {
                if !ring.is_zero(&ring.mul(&a, &a)) {
                    continue;
                }
                if all.iter().all(|x| ring.is_zero(&ring.mul(&ring.mul(&a, x), &a))) {
                    return reject(format!("the ideal generated by {a:?} squares to zero"));
                }
            }
            Ok(())
        }
        Property::EssentialRightIdeal { generators } => {
            need_order(ring, 1024)?;
            let ideal = naive_right_ideal(ring, generators);
            for a in nonzero() {
                if !naive_principal(ring, &a, Side::Right).iter().any(|x| !ring.is_zero(x) && ideal.contains(x)) {
                    return reject(format!("the right ideal generated by {a:?} misses the ideal"));
                }
            }
            Ok(())
        }
        Property::CentrallyRational => {
            need_order(ring, 1024)?;
            let c = checked_center(ring);
            let set = ElementSet::new(ring, &c);
            let all: Vec<Element> = ring.elements().collect();
            for x in &all {
                let pairs: Vec<(Element, u64)> = (0..ring.characteristic())
                    .flat_map(|k| c.iter().map(move |z| (z.clone(), k)))
                    .filter(|(z, k)| set.contains(ring, &ring.add(&ring.mul(x, z), &ring.scale(*k, x)).0))
                    .collect();
                for y in all.iter().filter(|y| !ring.is_zero(y)) {
                    if !pairs.iter().any(|(z, k)| !ring.is_zero(&ring.add(&ring.mul(y, z), &ring.scale(*k, y)))) {
                        return reject(format!("pair {x:?}, {y:?} fails"));
                    }
                }
            }
            Ok(())
        }
        Property::StronglyBounded { side } => {
            need_order(ring, 512)?;
            let sides: &[Side] = match side {
                Side::TwoSided => &[Side::Right, Side::Left],
                Side::Right => &[Side::Right],
                Side::Left => &[Side::Left],
            };
            let mut cache = HashMap::new();
            for a in nonzero() {
                for &s in sides {
                    let p = naive_principal(ring, &a, s);
                    if !contains_nonzero_ideal(ring, &p, &mut cache) {
                        return reject(format!("principal ideal of {a:?} contains no non-zero ideal"));
                    }
                }
            }
            Ok(())
        }
        other => reject(format!("no rescan for {other:?}")),
    }
}
