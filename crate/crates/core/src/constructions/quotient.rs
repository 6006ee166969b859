//! Quotient rings `R / I` as Cayley-table rings.

use crate::error::Result;
use crate::ring::{Element, Ring};
use crate::subgroup::{require_ideal, AdditiveSubgroup, Side};

/// A quotient ring with the coset representatives it was built from.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: Ring,
    /// Smallest-index representative of each coset, in table order.
    pub representatives: Vec<Element>,
}

impl Quotient {
    /// Table index of the coset `x + I`.
    pub fn class_of(&self, ambient: &Ring, ideal: &AdditiveSubgroup, x: &Element) -> usize {
        let rep = representative(ambient, ideal, x);
        self.representatives.binary_search_by_key(&ambient.index_of(&rep), |r| ambient.index_of(r)).expect("coset")
    }
}

fn representative(ring: &Ring, ideal: &AdditiveSubgroup, x: &Element) -> Element {
    ideal.elements().iter().map(|i| ring.add(x, i)).min_by_key(|y| ring.index_of(y)).expect("ideal contains zero")
}

/// `R / I` for a two-sided ideal `I`; the ring order is capped at `1 << 12`.
pub fn quotient_ring(ring: &Ring, ideal: &AdditiveSubgroup) -> Result<Quotient> {
    require_ideal(ideal, Side::TwoSided)?;
    ring.require_order_at_most(1 << 12, "quotient ring")?;
    let mut reps: Vec<Element> =
        ring.elements().filter(|x| representative(ring, ideal, x) == *x).collect();
    reps.sort_by_key(|x| ring.index_of(x));
    let q = Quotient { ring: Ring::zero_ring(), representatives: reps };
    let class = |x: &Element| q.class_of(ring, ideal, x);
    let table = |f: &dyn Fn(&Element, &Element) -> Element| -> Vec<Vec<usize>> {
        q.representatives.iter().map(|x| q.representatives.iter().map(|y| class(&f(x, y))).collect()).collect()
    };
    let add = table(&|x, y| ring.add(x, y));
    let mul = table(&|x, y| ring.mul(x, y));
    let zero = class(&ring.zero());
    let one = ring.one().map(class);
    let quotient = Ring::from_tables(&add, &mul, zero, one)?.with_label(format!("{} / I", ring.label()));
    Ok(Quotient { ring: quotient, representatives: q.representatives })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroup::two_sided_ideal_generated;

    #[test]
    fn z12_mod_4() {
        let z12 = Ring::zn(12).unwrap();
        let i = two_sided_ideal_generated(&z12, &[Element(vec![4])]);
        let q = quotient_ring(&z12, &i).unwrap();
        assert_eq!(q.ring.order(), 4);
        assert_eq!(q.ring.characteristic(), 4);
        assert!(q.ring.is_unital());
    }
}
