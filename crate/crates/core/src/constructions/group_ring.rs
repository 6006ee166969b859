//! Group rings `RG`, class sums, fundamental ideals and the splitting of `RQ8`
//! when 2 is invertible.

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::modarith::{inv_mod, left_kernel};
use crate::ring::{Element, Ring};
use crate::subgroup::{additive_closure, two_sided_ideal_generated, AdditiveSubgroup};

/// A group ring together with its coefficient ring and group.
///
/// The basis element `e_p g` (coefficient basis `e_p`, group element `g`)
/// has index `g * rank(R) + p`.
#[derive(Debug, Clone)]
pub struct GroupRing {
    ring: Ring,
    coeff: Ring,
    group: GroupTable,
}

/// `RG` for a structure ring `R` and a finite group `G`.
pub fn group_ring(coeff: &Ring, group: &GroupTable) -> Result<GroupRing> {
    let sr = coeff
        .as_structure()
        .ok_or_else(|| Error::Unsupported("group ring coefficients must be a structure ring".into()))?;
    let s = sr.rank();
    let m = group.order();
    let rank = s.checked_mul(m).filter(|&r| r <= 256).ok_or(Error::Overflow)?;
    let mut c = vec![0u32; rank * rank * rank];
    for g in 0..m {
        for h in 0..m {
            let gh = group.mul(g, h);
            for p in 0..s {
                for q in 0..s {
                    for k in 0..s {
                        c[((g * s + p) * rank + h * s + q) * rank + gh * s + k] = sr.constant(p, q, k);
                    }
                }
            }
        }
    }
    let one = coeff.one().map(|u| {
        let mut v = vec![0u32; rank];
        v[group.identity() * s..group.identity() * s + s].copy_from_slice(&u.0);
        v
    });
    let ring = Ring::from_structure_constants(sr.modulus(), rank, c, one)?;
    let label = if group.order() == 8 && *group == GroupTable::q8() {
        format!("{}Q8", coeff.label().replace('_', ""))
    } else {
        format!("{}[G{}]", coeff.label(), group.order())
    };
    Ok(GroupRing { ring: ring.with_label(label), coeff: coeff.clone(), group: group.clone() })
}

impl GroupRing {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeff(&self) -> &Ring {
        &self.coeff
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    fn rank_of_coeff(&self) -> usize {
        self.coeff.width()
    }

    /// `sum_g r_g g` from coefficient elements.
    pub fn combination(&self, terms: &[(usize, Element)]) -> Element {
        let s = self.rank_of_coeff();
        let mut v = self.ring.zero();
        for (g, r) in terms {
            let mut w = vec![0u32; self.ring.width()];
            w[g * s..g * s + s].copy_from_slice(&r.0);
            v = self.ring.add(&v, &Element(w));
        }
        v
    }

    /// The group element `g` as `1_R g`.
    pub fn group_element(&self, g: usize) -> Result<Element> {
        let one = self.coeff.one().ok_or(Error::NotUnital)?.clone();
        Ok(self.combination(&[(g, one)]))
    }

    pub fn named(&self, name: &str) -> Result<Element> {
        let g = self
            .group
            .index_of_name(name)
            .ok_or_else(|| Error::Unsupported(format!("no group element named {name}")))?;
        self.group_element(g)
    }

    /// Sum of the given group elements, e.g. the whole group for `Q̂8`.
    pub fn subset_sum(&self, subset: &[usize]) -> Result<Element> {
        let one = self.coeff.one().ok_or(Error::NotUnital)?.clone();
        let terms: Vec<(usize, Element)> = subset.iter().map(|&g| (g, one.clone())).collect();
        Ok(self.combination(&terms))
    }

    pub fn group_sum(&self) -> Result<Element> {
        self.subset_sum(&(0..self.group.order()).collect::<Vec<_>>())
    }

    /// Coefficient of group element `g` (as an element of `R`).
    pub fn coefficient(&self, x: &Element, g: usize) -> Element {
        let s = self.rank_of_coeff();
        Element(x.0[g * s..g * s + s].to_vec())
    }
}

/// Span of `r K̂` over coefficient basis elements `r` and conjugacy classes `K`.
///
/// For a commutative coefficient ring this is the center of `RG`.
pub fn class_sum_center(gr: &GroupRing) -> Result<AdditiveSubgroup> {
    if !gr.coeff.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let mut gens = Vec::new();
    for class in gr.group.classes() {
        for e in gr.coeff.gens() {
            let terms: Vec<(usize, Element)> = class.iter().map(|&g| (g, e.clone())).collect();
            gens.push(gr.combination(&terms));
        }
    }
    Ok(additive_closure(&gr.ring, &gens))
}

/// The fundamental ideal `Δ(G, H)`: the two-sided ideal generated by `r h - r`
/// for coefficient basis elements `r` and `h` in `H`.
pub fn delta_ideal(gr: &GroupRing, subgroup: &[usize]) -> Result<AdditiveSubgroup> {
    if !gr.group.is_subgroup(subgroup) {
        return Err(Error::Unsupported("H is not a subgroup".into()));
    }
    let e = gr.group.identity();
    let mut gens = Vec::new();
    for &h in subgroup {
        if h == e {
            continue;
        }
        for r in gr.coeff.gens() {
            let x = gr.combination(&[(h, r.clone())]);
            let y = gr.combination(&[(e, r.clone())]);
            gens.push(gr.ring.sub(&x, &y));
        }
    }
    Ok(two_sided_ideal_generated(&gr.ring, &gens))
}

/// `RQ8 ≅ R(Q8/Q8') ⊕ Δ(Q8, Q8')` for `R = Z_n` with `n` odd.
#[derive(Debug, Clone)]
pub struct DeltaDecomposition {
    /// The group ring of the order-4 quotient.
    pub abelian_part: GroupRing,
    /// `Δ(Q8, Q8')` on the basis `f, af, bf, abf` with `f = (1 - a^2)/2`.
    pub delta: Ring,
    /// `f, af, bf, abf` inside `RQ8`.
    pub delta_basis: Vec<Element>,
    /// Images of the quotient's basis `ē, ā, b̄, āb̄` in `RQ8`: `g (1 - f)`.
    pub abelian_basis: Vec<Element>,
}

/// Split `RQ8` along the central idempotent `f = (1 - a^2)/2`.
///
/// The splitting is verified: the eight images form a `Z_n`-basis of `RQ8`
/// and the products of basis elements are preserved on both sides.
pub fn delta_decomposition(gr: &GroupRing) -> Result<DeltaDecomposition> {
    if gr.group != GroupTable::q8() {
        return Err(Error::Unsupported("delta decomposition is defined for Q8 only".into()));
    }
    let sr = gr
        .coeff
        .as_structure()
        .filter(|s| s.rank() == 1 && gr.coeff.is_unital())
        .ok_or_else(|| Error::Unsupported("coefficient ring must be Z_n".into()))?;
    let n = sr.modulus();
    let half = inv_mod(2, n as u64).ok_or_else(|| Error::NotInvertible("2".into()))? as u32;
    let ring = &gr.ring;
    let q = &gr.group;
    let one = gr.group_element(q.identity())?;
    let a2 = gr.named("a^2")?;
    let f = ring.scale(half as u64, &ring.sub(&one, &a2));
    let not_f = ring.sub(&one, &f);
    let reps: Vec<usize> = ["e", "a", "b", "ab"].iter().map(|s| q.index_of_name(s).unwrap()).collect();
    let delta_basis: Vec<Element> = reps.iter().map(|&g| ring.mul(&gr.group_element(g).unwrap(), &f)).collect();
    let abelian_basis: Vec<Element> =
        reps.iter().map(|&g| ring.mul(&gr.group_element(g).unwrap(), &not_f)).collect();

    // Coordinates of x in the delta basis: the coefficient of g is lambda_g / 2.
    let delta_coords = |x: &Element| -> Result<Vec<u32>> {
        let lam: Vec<u32> = reps
            .iter()
            .map(|&g| (2 * gr.coefficient(x, g).0[0] as u64 % n as u64) as u32)
            .collect();
        let mut back = ring.zero();
        for (l, b) in lam.iter().zip(&delta_basis) {
            back = ring.add(&back, &ring.scale(*l as u64, b));
        }
        if &back != x {
            return Err(Error::Unsupported("product left the delta component".into()));
        }
        Ok(lam)
    };
    let mut c = vec![0u32; 64];
    for i in 0..4 {
        for j in 0..4 {
            let p = ring.mul(&delta_basis[i], &delta_basis[j]);
            let lam = delta_coords(&p)?;
            for k in 0..4 {
                c[(i * 4 + j) * 4 + k] = lam[k];
            }
        }
    }
    let delta = Ring::from_structure_constants(n, 4, c, Some(vec![1, 0, 0, 0]))?
        .with_label(format!("Δ(Q8,Q8') over Z_{n}"));

    let quotient = q.quotient(q.derived_subgroup())?;
    let abelian_part = group_ring(&gr.coeff, &quotient)?;

    // bijectivity: the images have trivial kernel as a Z_n-linear map
    let rows: Vec<Vec<u32>> = abelian_basis.iter().chain(&delta_basis).map(|e| e.0.clone()).collect();
    if !left_kernel(n, &rows).is_empty() {
        return Err(Error::Unsupported("splitting images are not a basis".into()));
    }
    // multiplicativity on both components, and orthogonality between them
    let ab = abelian_part.ring();
    let embed_ab = |x: &Element| -> Element {
        let mut acc = ring.zero();
        for (k, b) in abelian_basis.iter().enumerate() {
            acc = ring.add(&acc, &ring.scale(x.0[k] as u64, b));
        }
        acc
    };
    let embed_delta = |x: &Element| -> Element {
        let mut acc = ring.zero();
        for (k, b) in delta_basis.iter().enumerate() {
            acc = ring.add(&acc, &ring.scale(x.0[k] as u64, b));
        }
        acc
    };
    for i in 0..4 {
        for j in 0..4 {
            let (x, y) = (ab.basis(i), ab.basis(j));
            if embed_ab(&ab.mul(&x, &y)) != ring.mul(&embed_ab(&x), &embed_ab(&y)) {
                return Err(Error::Unsupported("abelian component is not multiplicative".into()));
            }
            let (u, v) = (delta.basis(i), delta.basis(j));
            if embed_delta(&delta.mul(&u, &v)) != ring.mul(&embed_delta(&u), &embed_delta(&v)) {
                return Err(Error::Unsupported("delta component is not multiplicative".into()));
            }
            if !ring.is_zero(&ring.mul(&abelian_basis[i], &delta_basis[j]))
                || !ring.is_zero(&ring.mul(&delta_basis[j], &abelian_basis[i]))
            {
                return Err(Error::Unsupported("components are not orthogonal".into()));
            }
        }
    }
    Ok(DeltaDecomposition { abelian_part, delta, delta_basis, abelian_basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::center::center;
    use crate::ideals::is_nilpotent_subgroup;

    fn z(n: u64) -> Ring {
        Ring::zn(n).unwrap()
    }

    #[test]
    fn orders() {
        let z2q8 = group_ring(&z(2), &GroupTable::q8()).unwrap();
        assert_eq!(z2q8.ring().order(), 256);
        assert_eq!(z2q8.ring().label(), "Z2Q8");
        let z9q8 = group_ring(&z(9), &GroupTable::q8()).unwrap();
        assert_eq!(z9q8.ring().order(), 9u64.pow(8));
        let triv = group_ring(&z(2), &GroupTable::cyclic(1).unwrap()).unwrap();
        assert_eq!(triv.ring().order(), 2);
        assert!(triv.ring().is_commutative());
    }

    #[test]
    fn class_sums_span_the_center() {
        let z2q8 = group_ring(&z(2), &GroupTable::q8()).unwrap();
        let cs = class_sum_center(&z2q8).unwrap();
        assert_eq!(cs.len(), 32);
        assert_eq!(cs.elements(), center(z2q8.ring()).elements());
        let z4q8 = group_ring(&z(4), &GroupTable::q8()).unwrap();
        let cs = class_sum_center(&z4q8).unwrap();
        assert_eq!(cs.len(), 1024);
        assert_eq!(cs.elements(), center(z4q8.ring()).elements());
    }

    #[test]
    fn hat_q8_spans_two_sided_ideal() {
        let z2q8 = group_ring(&z(2), &GroupTable::q8()).unwrap();
        let hat = z2q8.group_sum().unwrap();
        let i = two_sided_ideal_generated(z2q8.ring(), std::slice::from_ref(&hat));
        assert_eq!(i.elements(), &[z2q8.ring().zero(), hat]);
        assert!(i.is_two_sided());
    }

    #[test]
    fn fundamental_ideals() {
        let z2q8 = group_ring(&z(2), &GroupTable::q8()).unwrap();
        let e = z2q8.group().identity();
        assert!(delta_ideal(&z2q8, &[e]).unwrap().is_zero());
        let all: Vec<usize> = (0..8).collect();
        let aug = delta_ideal(&z2q8, &all).unwrap();
        assert_eq!(aug.len(), 128);
        assert!(is_nilpotent_subgroup(z2q8.ring(), &aug).unwrap());
        assert!(delta_ideal(&z2q8, &[0, 1]).is_err());
    }

    #[test]
    fn delta_of_derived_subgroup_over_z9() {
        let z9q8 = group_ring(&z(9), &GroupTable::q8()).unwrap();
        let d = delta_ideal(&z9q8, z9q8.group().derived_subgroup()).unwrap();
        assert_eq!(d.len(), 9usize.pow(4));
        let dec = delta_decomposition(&z9q8).unwrap();
        for b in &dec.delta_basis {
            assert!(d.contains(b));
        }
        // f = 5 (1 - a^2)
        let f = &dec.delta_basis[0];
        assert_eq!(z9q8.coefficient(f, 0).0, vec![5]);
        assert_eq!(z9q8.coefficient(f, 2).0, vec![4]);
    }

    #[test]
    fn decomposition_orders_and_failures() {
        let z9q8 = group_ring(&z(9), &GroupTable::q8()).unwrap();
        let dec = delta_decomposition(&z9q8).unwrap();
        assert_eq!(dec.abelian_part.ring().order(), 9u64.pow(4));
        assert!(dec.abelian_part.ring().is_commutative());
        assert_eq!(dec.delta.order(), 9u64.pow(4));
        let z3q8 = group_ring(&z(3), &GroupTable::q8()).unwrap();
        assert!(delta_decomposition(&z3q8).is_ok());
        let z2q8 = group_ring(&z(2), &GroupTable::q8()).unwrap();
        assert!(matches!(delta_decomposition(&z2q8), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn group_ring_of_product_is_iterated_group_ring() {
        let q8 = GroupTable::q8();
        let c2 = GroupTable::cyclic(2).unwrap();
        let prod = GroupTable::product(&q8, &c2).unwrap();
        let direct = group_ring(&z(3), &prod).unwrap();
        let inner = group_ring(&z(3), &c2).unwrap();
        let iterated = group_ring(inner.ring(), &q8).unwrap();
        assert_eq!(
            direct.ring().as_structure().unwrap().constants(),
            iterated.ring().as_structure().unwrap().constants()
        );
    }
}
