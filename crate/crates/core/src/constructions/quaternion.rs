//! Generalized quaternion algebras `(a, b, A)` over a commutative ring `A`.
//!
//! The basis is `1, i, j, k` with `i^2 = a`, `j^2 = b`, `ij = -ji = k`,
//! `ik = -ki = aj` and `kj = -jk = bi`. Over a structure ring `A` of rank `s`
//! the basis element `e_p u` has index `u * s + p`.

use crate::error::{Error, Result};
use crate::ring::{Element, Ring};
use crate::subgroup::{additive_closure, left_annihilator, AdditiveSubgroup};

#[derive(Debug, Clone)]
pub struct QuaternionParams {
    pub base: Ring,
    pub a: Element,
    pub b: Element,
}

impl QuaternionParams {
    /// Parameters over `Z_n` with integer `a`, `b`.
    pub fn over_zn(n: u64, a: i64, b: i64) -> Result<Self> {
        let base = Ring::zn(n)?;
        let red = |x: i64| Element(vec![x.rem_euclid(n as i64) as u32]);
        Ok(QuaternionParams { a: red(a), b: red(b), base })
    }
}

/// A quaternion algebra with the parameters it was built from.
#[derive(Debug, Clone)]
pub struct Quaternion {
    pub ring: Ring,
    pub params: QuaternionParams,
}

fn find_inverse(base: &Ring, x: &Element) -> Option<Element> {
    let one = base.one()?;
    if base.order() > 1 << 20 {
        return None;
    }
    base.elements().find(|y| &base.mul(x, y) == one)
}

pub fn quaternion_algebra(params: &QuaternionParams) -> Result<Quaternion> {
    let base = &params.base;
    let sr = base
        .as_structure()
        .ok_or_else(|| Error::Unsupported("quaternion base must be a structure ring".into()))?;
    if !base.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let one = base.one().ok_or(Error::NotUnital)?.clone();
    for (name, x) in [("a", &params.a), ("b", &params.b)] {
        if !base.contains(x) || find_inverse(base, x).is_none() {
            return Err(Error::NotInvertible(name.into()));
        }
    }
    let (a, b) = (params.a.clone(), params.b.clone());
    let neg = |x: &Element| base.neg(x);
    let ab = base.mul(&a, &b);
    // unit products u v = scalar * w, units ordered 1, i, j, k
    let table: [[(Element, usize); 4]; 4] = [
        [(one.clone(), 0), (one.clone(), 1), (one.clone(), 2), (one.clone(), 3)],
        [(one.clone(), 1), (a.clone(), 0), (one.clone(), 3), (a.clone(), 2)],
        [(one.clone(), 2), (neg(&one), 3), (b.clone(), 0), (neg(&b), 1)],
        [(one.clone(), 3), (neg(&a), 2), (b.clone(), 1), (neg(&ab), 0)],
    ];
    let s = sr.rank();
    let rank = 4 * s;
    let mut c = vec![0u32; rank * rank * rank];
    for u in 0..4 {
        for v in 0..4 {
            let (scalar, w) = &table[u][v];
            for p in 0..s {
                for q in 0..s {
                    let prod = base.mul(&base.mul(&base.basis(p), &base.basis(q)), scalar);
                    for k in 0..s {
                        c[((u * s + p) * rank + v * s + q) * rank + w * s + k] = prod.0[k];
                    }
                }
            }
        }
    }
    let mut unit = vec![0u32; rank];
    unit[..s].copy_from_slice(&one.0);
    let ring = Ring::from_structure_constants(sr.modulus(), rank, c, Some(unit))?;
    let fmt = |x: &Element| if x.0.len() == 1 { x.0[0].to_string() } else { format!("{:?}", x.0) };
    let label = format!("({},{},{})", fmt(&a), fmt(&b), base.label());
    Ok(Quaternion { ring: ring.with_label(label), params: params.clone() })
}

impl Quaternion {
    /// `t u` for `t` in the base ring and `u` in `0..4` (for `1, i, j, k`).
    pub fn embed(&self, t: &Element, unit: usize) -> Element {
        let s = self.params.base.width();
        let mut v = vec![0u32; self.ring.width()];
        v[unit * s..unit * s + s].copy_from_slice(&t.0);
        Element(v)
    }

    /// Component of `x` along unit `u`, as a base-ring element.
    pub fn component(&self, x: &Element, unit: usize) -> Element {
        let s = self.params.base.width();
        Element(x.0[unit * s..unit * s + s].to_vec())
    }

    /// Images `t·1` of all base elements, in the base ring's canonical order.
    pub fn scalar_images(&self) -> Vec<Element> {
        self.params.base.elements().map(|t| self.embed(&t, 0)).collect()
    }
}

/// `Ann_A(2)`.
pub fn annihilator_of_two(base: &Ring) -> Result<AdditiveSubgroup> {
    let one = base.one().ok_or(Error::NotUnital)?;
    Ok(left_annihilator(base, &[base.scale(2, one)]))
}

/// `A·1 + I·i + I·j + I·k` with `I = Ann_A(2)`.
pub fn quaternion_center_formula(q: &Quaternion) -> Result<AdditiveSubgroup> {
    let base = &q.params.base;
    let ann = annihilator_of_two(base)?;
    let mut gens: Vec<Element> = base.gens().iter().map(|t| q.embed(t, 0)).collect();
    for unit in 1..4 {
        gens.extend(ann.generators().iter().map(|t| q.embed(t, unit)));
    }
    Ok(additive_closure(&q.ring, &gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::center::{center, center_by_exhaustion};

    #[test]
    fn small_quaternion_algebras() {
        let q = quaternion_algebra(&QuaternionParams::over_zn(2, 1, 1).unwrap()).unwrap();
        assert_eq!(q.ring.order(), 16);
        assert!(q.ring.is_commutative());
        let q = quaternion_algebra(&QuaternionParams::over_zn(3, -1, -1).unwrap()).unwrap();
        assert_eq!(q.ring.order(), 81);
        let (i, j) = (q.embed(&Element(vec![1]), 1), q.embed(&Element(vec![1]), 2));
        assert_ne!(q.ring.mul(&i, &j), q.ring.mul(&j, &i));
        let q = quaternion_algebra(&QuaternionParams::over_zn(4, 3, 3).unwrap()).unwrap();
        assert_eq!(q.ring.order(), 256);
    }

    #[test]
    fn relations_hold() {
        let q = quaternion_algebra(&QuaternionParams::over_zn(7, 3, 5).unwrap()).unwrap();
        let r = &q.ring;
        let t = |x: u32, u| q.embed(&Element(vec![x % 7]), u);
        let (i, j, k) = (t(1, 1), t(1, 2), t(1, 3));
        assert_eq!(r.mul(&i, &i), t(3, 0));
        assert_eq!(r.mul(&j, &j), t(5, 0));
        assert_eq!(r.mul(&i, &j), k);
        assert_eq!(r.mul(&j, &i), r.neg(&k));
        assert_eq!(r.mul(&i, &k), t(3, 2));
        assert_eq!(r.mul(&k, &i), r.neg(&t(3, 2)));
        assert_eq!(r.mul(&k, &j), t(5, 1));
        assert_eq!(r.mul(&j, &k), r.neg(&t(5, 1)));
    }

    #[test]
    fn non_invertible_parameters_are_rejected() {
        assert!(matches!(
            quaternion_algebra(&QuaternionParams::over_zn(4, 2, 1).unwrap()),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn center_formula_examples() {
        let q3 = quaternion_algebra(&QuaternionParams::over_zn(3, 1, 1).unwrap()).unwrap();
        assert_eq!(quaternion_center_formula(&q3).unwrap().len(), 3);
        let q2 = quaternion_algebra(&QuaternionParams::over_zn(2, 1, 1).unwrap()).unwrap();
        assert_eq!(quaternion_center_formula(&q2).unwrap().len(), 16);
        let q4 = quaternion_algebra(&QuaternionParams::over_zn(4, 1, 3).unwrap()).unwrap();
        let f = quaternion_center_formula(&q4).unwrap();
        assert_eq!(f.len(), 32);
        assert_eq!(f.elements(), center_by_exhaustion(&q4.ring).elements());
        assert_eq!(f.elements(), center(&q4.ring).elements());
    }
}
