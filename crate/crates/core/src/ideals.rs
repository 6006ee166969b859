//! Nilpotency, idempotents and bounded enumeration of ideal lattices.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::center::center;
use crate::error::{Error, Result};
use crate::modarith::prime_factors;
use crate::ring::{Element, Ring};
use crate::subgroup::{additive_closure, ideal_generated, require_ideal, AdditiveSubgroup, Side};

/// Least `k` with `a^k = 0`, or `None` when the powers cycle away from zero.
pub fn nilpotency_index(ring: &Ring, a: &Element) -> Option<u32> {
    let mut seen = HashSet::new();
    let mut p = a.clone();
    let mut k = 1u32;
    loop {
        if ring.is_zero(&p) {
            return Some(k);
        }
        if !seen.insert(p.clone()) {
            return None;
        }
        p = ring.mul(&p, a);
        k += 1;
    }
}

/// `I^k` for `k = 1, 2, ..` until it stabilises; true iff it reaches zero.
pub fn is_nilpotent_subgroup(ring: &Ring, ideal: &AdditiveSubgroup) -> Result<bool> {
    if !(ideal.is_right_ideal() || ideal.is_left_ideal()) {
        return Err(Error::NotAnIdeal { side: "one-sided" });
    }
    Ok(nilpotency_class(ring, ideal).is_some())
}

/// Least `k` with `I^k = 0`, when `I` is nilpotent.
pub fn nilpotency_class(ring: &Ring, ideal: &AdditiveSubgroup) -> Option<usize> {
    let mut power = ideal.clone();
    let mut k = 1;
    while !power.is_zero() {
        let products: Vec<Element> = power
            .generators()
            .iter()
            .flat_map(|x| ideal.generators().iter().map(move |y| ring.mul(x, y)))
            .collect();
        let next = additive_closure(ring, &products);
        if next.len() == power.len() {
            return None;
        }
        power = next;
        k += 1;
    }
    Some(k)
}

/// True iff `x y = 0` for all `x, y` in the subgroup.
pub fn squares_to_zero(ring: &Ring, sub: &AdditiveSubgroup) -> bool {
    let g = sub.generators();
    g.iter().all(|x| g.iter().all(|y| ring.is_zero(&ring.mul(x, y))))
}

pub fn idempotents(ring: &Ring, cap: u64) -> Result<Vec<Element>> {
    ring.require_order_at_most(cap, "idempotent scan")?;
    Ok((0..ring.order())
        .into_par_iter()
        .map(|i| ring.element_at(i))
        .filter(|e| &ring.mul(e, e) == e)
        .collect())
}

pub fn central_idempotents(ring: &Ring, cap: u64) -> Result<Vec<Element>> {
    let c = center(ring);
    Ok(idempotents(ring, cap)?.into_iter().filter(|e| c.contains(e)).collect())
}

/// Bounds for [`all_ideals`].
#[derive(Debug, Clone, Copy)]
pub struct IdealCap {
    /// Largest ring order accepted.
    pub max_order: u64,
    /// Largest number of ideals before giving up.
    pub max_ideals: usize,
}

impl IdealCap {
    pub fn default_for(side: Side) -> Self {
        match side {
            Side::TwoSided => IdealCap { max_order: 64, max_ideals: 100_000 },
            _ => IdealCap { max_order: 32, max_ideals: 100_000 },
        }
    }

    pub fn with_order(max_order: u64) -> Self {
        IdealCap { max_order, max_ideals: 100_000 }
    }
}

/// Every ideal of the requested kind, in order of size then elements.
///
/// Principal ideals are generated for every element; the lattice is then
/// closed under sums until no new ideal appears. Every ideal of a finite
/// ring is a sum of principal ones, so the fixpoint is the full lattice.
pub fn all_ideals(ring: &Ring, side: Side, cap: IdealCap) -> Result<Vec<AdditiveSubgroup>> {
    ring.require_order_at_most(cap.max_order, "ideal enumeration")?;
    let principal: Vec<AdditiveSubgroup> = (0..ring.order())
        .into_par_iter()
        .map(|i| ideal_generated(ring, &[ring.element_at(i)], side))
        .collect();
    let mut index: HashMap<Vec<Element>, usize> = HashMap::new();
    let mut lattice: Vec<AdditiveSubgroup> = Vec::new();
    for p in principal {
        if !index.contains_key(p.elements()) {
            index.insert(p.elements().to_vec(), lattice.len());
            lattice.push(p);
        }
    }
    let mut frontier: Vec<usize> = (0..lattice.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            for j in 0..lattice.len() {
                if i == j || lattice[i].is_subset_of(&lattice[j]) || lattice[j].is_subset_of(&lattice[i]) {
                    continue;
                }
                let s = lattice[i].sum(ring, &lattice[j]);
                if !index.contains_key(s.elements()) {
                    if lattice.len() >= cap.max_ideals {
                        return Err(Error::CapExceeded {
                            what: "ideal lattice size".into(),
                            needed: lattice.len() as u64 + 1,
                            cap: cap.max_ideals as u64,
                        });
                    }
                    index.insert(s.elements().to_vec(), lattice.len());
                    next.push(lattice.len());
                    lattice.push(s);
                }
            }
        }
        frontier = next;
    }
    for ideal in &lattice {
        require_ideal(ideal, side)?;
    }
    lattice.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.elements().cmp(b.elements())));
    Ok(lattice)
}

/// Minimal non-zero two-sided ideals, in order of size then elements.
///
/// A minimal ideal `I` has prime exponent (`pI` is a smaller ideal), so only
/// elements with `p x = 0` for a prime `p` are used as generators.
pub fn minimal_two_sided_ideals(ring: &Ring, cap: u64) -> Result<Vec<AdditiveSubgroup>> {
    ring.require_order_at_most(cap, "minimal ideal search")?;
    let primes = prime_factors(ring.characteristic());
    let candidates: Vec<Element> = ring
        .elements()
        .filter(|x| !ring.is_zero(x) && primes.iter().any(|&p| ring.is_zero(&ring.scale(p, x))))
        .collect();
    let mut seen: HashSet<Vec<Element>> = HashSet::new();
    let mut principal = Vec::new();
    for x in &candidates {
        // an ideal of prime order is generated by each of its non-zero elements
        if principal.iter().any(|p: &AdditiveSubgroup| is_prime(p.len() as u64) && p.contains(x)) {
            continue;
        }
        let p = ideal_generated(ring, std::slice::from_ref(x), Side::TwoSided);
        if seen.insert(p.elements().to_vec()) {
            principal.push(p);
        }
    }
    let mut minimal = minimal_nonzero(&principal);
    minimal.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.elements().cmp(b.elements())));
    Ok(minimal)
}

fn is_prime(n: u64) -> bool {
    n > 1 && prime_factors(n) == [n]
}

/// Non-zero members of the list that contain no other non-zero member.
pub fn minimal_nonzero(ideals: &[AdditiveSubgroup]) -> Vec<AdditiveSubgroup> {
    let nonzero: Vec<&AdditiveSubgroup> = ideals.iter().filter(|i| !i.is_zero()).collect();
    nonzero
        .iter()
        .filter(|i| !nonzero.iter().any(|j| j.len() < i.len() && j.is_subset_of(i)))
        .map(|i| (*i).clone())
        .collect()
}
