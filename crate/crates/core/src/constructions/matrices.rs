//! Matrix presets: the 4×4 pattern ring `M_Δ`, full 2×2 matrices and 2×2
//! upper-triangular matrices.

use crate::error::{Error, Result};
use crate::modarith::inv_mod;
use crate::ring::{Element, Ring};

/// Row `r` of the pattern is a signed permutation of `(q0, q1, q2, q3)`.
const PATTERN: [[(usize, i8); 4]; 4] = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, -1), (0, 1), (3, 1), (2, -1)],
    [(2, -1), (3, -1), (0, 1), (1, 1)],
    [(3, -1), (2, 1), (1, -1), (0, 1)],
];

/// The 4×4 matrix over `Z_n` with first row `q` and the `M_Δ` sign pattern.
pub fn pattern_matrix(n: u32, q: [u32; 4]) -> [[u32; 4]; 4] {
    let mut m = [[0u32; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            let (idx, sign) = PATTERN[r][c];
            let v = q[idx] % n;
            m[r][c] = if sign > 0 { v } else { (n - v) % n };
        }
    }
    m
}

pub fn mat_mul(n: u32, x: &[[u32; 4]; 4], y: &[[u32; 4]; 4]) -> [[u32; 4]; 4] {
    let mut out = [[0u32; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            let s: u64 = (0..4).map(|k| x[r][k] as u64 * y[k][c] as u64).sum();
            out[r][c] = (s % n as u64) as u32;
        }
    }
    out
}

/// `M_Δ` over `Z_n` as a rank-4 structure ring on the pattern basis `E_0..E_3`
/// (`E_t` has first row the `t`-th unit vector). Products of pattern matrices
/// are checked to stay in the pattern.
pub fn matrix_delta(n: u32) -> Result<Ring> {
    if n < 2 {
        return Err(Error::BadModulus(n as u64));
    }
    inv_mod(2, n as u64).ok_or_else(|| Error::NotInvertible("2".into()))?;
    let unit = |t: usize| {
        let mut q = [0u32; 4];
        q[t] = 1;
        pattern_matrix(n, q)
    };
    let mut c = vec![0u32; 64];
    for i in 0..4 {
        for j in 0..4 {
            let p = mat_mul(n, &unit(i), &unit(j));
            let row = p[0];
            if pattern_matrix(n, row) != p {
                return Err(Error::Unsupported("pattern is not closed under products".into()));
            }
            for k in 0..4 {
                c[(i * 4 + j) * 4 + k] = row[k];
            }
        }
    }
    Ok(Ring::from_structure_constants(n, 4, c, Some(vec![1, 0, 0, 0]))?.with_label(format!("M_Δ(Z_{n})")))
}

/// Element of `matrix_delta(n)` with first row `q` (entries may be negative).
pub fn matrix_delta_element(n: u32, q: [i64; 4]) -> Element {
    Element(q.iter().map(|&x| x.rem_euclid(n as i64) as u32).collect())
}

/// Full matrix ring `M_2(R)` over a commutative structure ring `R`.
/// Basis `E_ab ⊗ e_p` has index `(2a + b) * rank(R) + p`.
pub fn matrix_ring(base: &Ring) -> Result<Ring> {
    let units = [(0, 0), (0, 1), (1, 0), (1, 1)];
    let label = format!("M_2({})", base.label());
    Ok(unit_matrix_ring(base, &units)?.with_label(label))
}

/// Upper-triangular 2×2 matrices over `R`; basis `E_00, E_01, E_11`.
pub fn upper_triangular(base: &Ring) -> Result<Ring> {
    let units = [(0, 0), (0, 1), (1, 1)];
    let label = format!("UT_2({})", base.label());
    Ok(unit_matrix_ring(base, &units)?.with_label(label))
}

fn unit_matrix_ring(base: &Ring, units: &[(usize, usize)]) -> Result<Ring> {
    let sr = base
        .as_structure()
        .ok_or_else(|| Error::Unsupported("matrix base must be a structure ring".into()))?;
    if !base.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let s = sr.rank();
    let m = units.len();
    let rank = m * s;
    let mut c = vec![0u32; rank * rank * rank];
    for (x, &(a, b)) in units.iter().enumerate() {
        for (y, &(c2, d)) in units.iter().enumerate() {
            if b != c2 {
                continue;
            }
            let z = units.iter().position(|&u| u == (a, d)).expect("closed set of units");
            for p in 0..s {
                for q in 0..s {
                    for k in 0..s {
                        c[((x * s + p) * rank + y * s + q) * rank + z * s + k] = sr.constant(p, q, k);
                    }
                }
            }
        }
    }
    let one = base.one().map(|u| {
        let mut v = vec![0u32; rank];
        for (x, &(a, b)) in units.iter().enumerate() {
            if a == b {
                v[x * s..x * s + s].copy_from_slice(&u.0);
            }
        }
        v
    });
    Ring::from_structure_constants(sr.modulus(), rank, c, one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::center::center;

    #[test]
    fn idempotent_e_over_z9() {
        let r = matrix_delta(9).unwrap();
        let e = matrix_delta_element(9, [5, 1, 1, 0]);
        assert_eq!(r.mul(&e, &e), e);
        assert!(!r.is_central(&e));
        let m = pattern_matrix(9, [5, 1, 1, 0]);
        assert_eq!(m[1], [8, 5, 0, 8]);
        assert_eq!(m[3], [0, 1, 8, 5]);
        assert_eq!(mat_mul(9, &m, &m), m);
    }

    #[test]
    fn pattern_closed_under_products() {
        // symbolic check via every pair of basis matrices over several moduli
        for n in [3u32, 5, 7, 9, 15] {
            assert!(matrix_delta(n).is_ok());
        }
        assert!(matches!(matrix_delta(4), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn two_by_two_presets() {
        let z2 = Ring::zn(2).unwrap();
        let m = matrix_ring(&z2).unwrap();
        assert_eq!(m.order(), 16);
        assert!(!m.is_commutative());
        assert_eq!(center(&m).len(), 2);
        let u = upper_triangular(&z2).unwrap();
        assert_eq!(u.order(), 8);
        assert!(!u.is_commutative());
    }
}

/// The isomorphism `M_Δ(Z_n) → Δ(Q8, Q8')`, `E_0, E_1, E_2, E_3 ↦ f, af, bf, -abf`,
/// checked on all products of basis elements. Returns the four images in `Z_nQ8`.
pub fn matrix_delta_isomorphism(n: u32) -> Result<Vec<Element>> {
    use crate::constructions::{delta_decomposition, group_ring};
    use crate::group::GroupTable;
    let m = matrix_delta(n)?;
    let gr = group_ring(&Ring::zn(n as u64)?, &GroupTable::q8())?;
    let dd = delta_decomposition(&gr)?;
    let r = gr.ring();
    let mut images = dd.delta_basis.clone();
    images[3] = r.neg(&images[3]);
    let image = |x: &Element| {
        x.0.iter().zip(&images).fold(r.zero(), |acc, (&k, b)| r.add(&acc, &r.scale(k as u64, b)))
    };
    for i in 0..4 {
        for j in 0..4 {
            let p = m.mul(&m.basis(i), &m.basis(j));
            if image(&p) != r.mul(&images[i], &images[j]) {
                return Err(Error::Unsupported(format!("basis product ({i}, {j}) is not preserved")));
            }
        }
    }
    Ok(images)
}

#[cfg(test)]
mod iso_tests {
    #[test]
    fn isomorphic_to_delta_component() {
        for n in [3, 5, 9] {
            super::matrix_delta_isomorphism(n).unwrap();
        }
    }
}
