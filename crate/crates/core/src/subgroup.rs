//! Additive subgroups, generated ideals and annihilators.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::modarith::left_kernel;
use crate::ring::{Element, Repr, Ring};

/// Which multiplications an ideal is closed under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Right,
    Left,
    TwoSided,
}

impl Side {
    fn right(self) -> bool {
        matches!(self, Side::Right | Side::TwoSided)
    }

    fn left(self) -> bool {
        matches!(self, Side::Left | Side::TwoSided)
    }
}

/// A finite additive subgroup with explicit, sorted elements.
///
/// The ideal flags are only ever set after verification against the ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdditiveSubgroup {
    gens: Vec<Element>,
    elements: Vec<Element>,
    right_ideal: bool,
    left_ideal: bool,
}

impl std::fmt::Debug for AdditiveSubgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AdditiveSubgroup")
            .field("order", &self.elements.len())
            .field("gens", &self.gens)
            .field("right_ideal", &self.right_ideal)
            .field("left_ideal", &self.left_ideal)
            .finish()
    }
}

/// Incremental closure under addition.
struct Closure<'r> {
    ring: &'r Ring,
    set: HashSet<Element>,
    list: Vec<Element>,
    gens: Vec<Element>,
}

impl<'r> Closure<'r> {
    fn new(ring: &'r Ring) -> Self {
        let zero = ring.zero();
        let mut set = HashSet::new();
        set.insert(zero.clone());
        Closure { ring, set, list: vec![zero], gens: Vec::new() }
    }

    /// Adds `g`; returns false when it was already inside.
    fn extend(&mut self, g: &Element) -> bool {
        if self.set.contains(g) {
            return false;
        }
        self.gens.push(g.clone());
        let base = self.list.clone();
        let mut mult = g.clone();
        // k g lies in the grown set only once it lies in the old one
        while !self.set.contains(&mult) {
            for s in &base {
                let t = self.ring.add(s, &mult);
                if self.set.insert(t.clone()) {
                    self.list.push(t);
                }
            }
            mult = self.ring.add(&mult, g);
        }
        true
    }

    fn finish(mut self) -> AdditiveSubgroup {
        self.list.sort();
        AdditiveSubgroup { gens: self.gens, elements: self.list, right_ideal: false, left_ideal: false }
    }
}

impl AdditiveSubgroup {
    pub fn zero(ring: &Ring) -> Self {
        Closure::new(ring).finish().with_flags_verified(ring)
    }

    /// The whole ring as a two-sided ideal.
    pub fn whole(ring: &Ring) -> Self {
        additive_closure(ring, ring.gens())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    /// Elements in canonical order.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn generators(&self) -> &[Element] {
        &self.gens
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn is_right_ideal(&self) -> bool {
        self.right_ideal
    }

    pub fn is_left_ideal(&self) -> bool {
        self.left_ideal
    }

    pub fn is_two_sided(&self) -> bool {
        self.right_ideal && self.left_ideal
    }

    pub fn is_ideal(&self, side: Side) -> bool {
        (!side.right() || self.right_ideal) && (!side.left() || self.left_ideal)
    }

    pub fn is_subset_of(&self, other: &AdditiveSubgroup) -> bool {
        self.len() <= other.len() && self.elements.iter().all(|x| other.contains(x))
    }

    /// Set flags by checking generator products against ring generators.
    pub fn with_flags_verified(mut self, ring: &Ring) -> Self {
        let closed = |right: bool| {
            self.gens.iter().all(|s| {
                ring.gens().iter().all(|r| {
                    let p = if right { ring.mul(s, r) } else { ring.mul(r, s) };
                    self.contains(&p)
                })
            })
        };
        let (right, left) = (closed(true), closed(false));
        self.right_ideal = right;
        self.left_ideal = left;
        self
    }

    /// Elements common to both subgroups, as a subgroup.
    pub fn intersection(&self, ring: &Ring, other: &AdditiveSubgroup) -> AdditiveSubgroup {
        let common: Vec<Element> = self.elements.iter().filter(|x| other.contains(x)).cloned().collect();
        let mut c = Closure::new(ring);
        for x in &common {
            c.extend(x);
        }
        c.finish().with_flags_verified(ring)
    }

    /// Does the subgroup meet `other` in a non-zero element? Returns the first one.
    pub fn meets(&self, ring: &Ring, other: &AdditiveSubgroup) -> Option<Element> {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        small.elements.iter().find(|x| !ring.is_zero(x) && large.contains(x)).cloned()
    }

    pub fn sum(&self, ring: &Ring, other: &AdditiveSubgroup) -> AdditiveSubgroup {
        let mut c = Closure::new(ring);
        for g in self.gens.iter().chain(other.gens.iter()) {
            c.extend(g);
        }
        c.finish().with_flags_verified(ring)
    }
}

/// Smallest additive subgroup containing `seed`.
pub fn additive_closure(ring: &Ring, seed: &[Element]) -> AdditiveSubgroup {
    let mut c = Closure::new(ring);
    for g in seed {
        c.extend(g);
    }
    c.finish().with_flags_verified(ring)
}

/// The ideal generated by `seed`: closure under addition, negation, integer
/// multiples and multiplication by ring elements on the requested side(s).
pub fn ideal_generated(ring: &Ring, seed: &[Element], side: Side) -> AdditiveSubgroup {
    let mut c = Closure::new(ring);
    let mut queue: Vec<Element> = seed.iter().rev().cloned().collect();
    while let Some(x) = queue.pop() {
        if !c.extend(&x) {
            continue;
        }
        for r in ring.gens() {
            if side.right() {
                queue.push(ring.mul(&x, r));
            }
            if side.left() {
                queue.push(ring.mul(r, &x));
            }
        }
    }
    c.finish().with_flags_verified(ring)
}

/// `Za + aR + ...`: the right ideal generated by `seed`.
pub fn right_ideal_generated(ring: &Ring, seed: &[Element]) -> AdditiveSubgroup {
    ideal_generated(ring, seed, Side::Right)
}

pub fn left_ideal_generated(ring: &Ring, seed: &[Element]) -> AdditiveSubgroup {
    ideal_generated(ring, seed, Side::Left)
}

pub fn two_sided_ideal_generated(ring: &Ring, seed: &[Element]) -> AdditiveSubgroup {
    ideal_generated(ring, seed, Side::TwoSided)
}

/// `{ r : r s = 0 for all s in S }`.
pub fn left_annihilator(ring: &Ring, set: &[Element]) -> AdditiveSubgroup {
    annihilator(ring, set, true)
}

/// `{ r : s r = 0 for all s in S }`.
pub fn right_annihilator(ring: &Ring, set: &[Element]) -> AdditiveSubgroup {
    annihilator(ring, set, false)
}

fn annihilator(ring: &Ring, set: &[Element], left: bool) -> AdditiveSubgroup {
    let set: Vec<&Element> = set.iter().filter(|s| !ring.is_zero(s)).collect();
    if let Repr::Structure(sr) = ring.repr() {
        // r -> (r s)_s is Z_n-linear: solve for its kernel.
        let rows: Vec<Vec<u32>> = ring
            .gens()
            .iter()
            .map(|e| {
                let mut row = Vec::with_capacity(set.len() * ring.width());
                for s in &set {
                    let p = if left { ring.mul(e, s) } else { ring.mul(s, e) };
                    row.extend(p.0);
                }
                if row.is_empty() {
                    row.push(0);
                }
                row
            })
            .collect();
        let gens: Vec<Element> = left_kernel(sr.modulus(), &rows).into_iter().map(Element).collect();
        return additive_closure(ring, &gens);
    }
    let members: Vec<Element> = ring
        .elements()
        .filter(|r| {
            set.iter().all(|s| {
                let p = if left { ring.mul(r, s) } else { ring.mul(s, r) };
                ring.is_zero(&p)
            })
        })
        .collect();
    additive_closure(ring, &members)
}

/// Two-sided annihilator `{ r : r S = 0 and S r = 0 }`.
pub fn annihilator_two_sided(ring: &Ring, set: &[Element]) -> AdditiveSubgroup {
    let l = left_annihilator(ring, set);
    let r = right_annihilator(ring, set);
    l.intersection(ring, &r)
}

/// Require an ideal flag, mapping its absence to an error.
pub fn require_ideal(sub: &AdditiveSubgroup, side: Side) -> Result<()> {
    if sub.is_ideal(side) {
        Ok(())
    } else {
        Err(Error::NotAnIdeal {
            side: match side {
                Side::Right => "right",
                Side::Left => "left",
                Side::TwoSided => "two-sided",
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Ring {
        Ring::zn(n).unwrap()
    }

    fn el(v: &[u32]) -> Element {
        Element(v.to_vec())
    }

    #[test]
    fn closure_examples() {
        let r = z(6);
        assert_eq!(additive_closure(&r, &[r.zero()]).len(), 1);
        let s = additive_closure(&r, &[el(&[2])]);
        assert_eq!(s.elements(), &[el(&[0]), el(&[2]), el(&[4])]);
        assert!(s.is_two_sided());
    }

    #[test]
    fn generated_ideals() {
        let r = z(6);
        assert_eq!(right_ideal_generated(&r, &[el(&[1])]).len(), 6);
        let zm = Ring::zero_multiplication(2).unwrap();
        let v = zm.element_at(1);
        let i = right_ideal_generated(&zm, std::slice::from_ref(&v));
        assert_eq!(i.elements(), &[zm.zero(), v]);
    }

    #[test]
    fn annihilators() {
        let r = z(6);
        assert_eq!(left_annihilator(&r, &[r.zero()]).len(), 6);
        let a = left_annihilator(&r, &[el(&[2])]);
        assert_eq!(a.elements(), &[el(&[0]), el(&[3])]);
        assert!(a.is_left_ideal());
    }

    #[test]
    fn annihilator_routes_agree_on_table_ring() {
        let n = 6usize;
        let add: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
        let mul: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| (x * y) % n).collect()).collect();
        let t = Ring::from_tables(&add, &mul, 0, None).unwrap();
        let s = z(6);
        for a in 0..6u32 {
            let lt = left_annihilator(&t, &[el(&[a])]);
            let ls = left_annihilator(&s, &[el(&[a])]);
            assert_eq!(lt.elements(), ls.elements());
        }
    }

    #[test]
    fn sum_and_intersection() {
        let r = z(12);
        let a = additive_closure(&r, &[el(&[4])]);
        let b = additive_closure(&r, &[el(&[6])]);
        assert_eq!(a.sum(&r, &b).len(), 6);
        assert_eq!(a.intersection(&r, &b).len(), 1);
        assert!(a.meets(&r, &b).is_none());
    }
}
