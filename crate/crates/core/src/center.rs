//! The center `C(R) = { c : c x = x c for all x }`.

use rayon::prelude::*;

use crate::modarith::left_kernel;
use crate::ring::{Element, Repr, Ring};
use crate::subgroup::{additive_closure, AdditiveSubgroup};

/// Center of `ring`.
///
/// Structure rings solve the linear system `[c, e_j] = 0` over `Z_n`; direct
/// sums combine the centers of their summands; table rings and subrings are
/// scanned element by element.
pub fn center(ring: &Ring) -> AdditiveSubgroup {
    match ring.repr() {
        Repr::Structure(sr) => {
            let r = sr.rank();
            let n = sr.modulus();
            let rows: Vec<Vec<u32>> = (0..r)
                .map(|i| {
                    let mut row = Vec::with_capacity(r * r);
                    for j in 0..r {
                        for k in 0..r {
                            let d = sr.constant(i, j, k) + (n - sr.constant(j, i, k));
                            row.push(d % n);
                        }
                    }
                    row
                })
                .collect();
            let gens: Vec<Element> = left_kernel(n, &rows).into_iter().map(Element).collect();
            additive_closure(ring, &gens)
        }
        Repr::Sum(parts) => {
            let mut gens = Vec::new();
            let widths: Vec<usize> = parts.iter().map(|p| p.width()).collect();
            for (i, p) in parts.iter().enumerate() {
                for g in center(p).generators() {
                    let mut v = Vec::with_capacity(ring.width());
                    for (j, q) in parts.iter().enumerate() {
                        if i == j {
                            v.extend_from_slice(&g.0);
                        } else {
                            v.extend(q.zero().0);
                        }
                    }
                    debug_assert_eq!(v.len(), widths.iter().sum::<usize>());
                    gens.push(Element(v));
                }
            }
            additive_closure(ring, &gens)
        }
        Repr::Table(_) | Repr::Sub(_) => center_by_exhaustion(ring),
    }
}

/// Center by testing every element against the additive generators.
pub fn center_by_exhaustion(ring: &Ring) -> AdditiveSubgroup {
    let members: Vec<Element> = (0..ring.order())
        .into_par_iter()
        .map(|i| ring.element_at(i))
        .filter(|x| ring.is_central(x))
        .collect();
    additive_closure(ring, &members)
}
