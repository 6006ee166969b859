//! A named collection of small rings used by property tests and the CLI.

use crate::constructions::{
    delta_decomposition, delta_ideal, group_ring, matrix_delta, matrix_ring, quaternion_algebra, upper_triangular,
    QuaternionParams,
};
use crate::error::Result;
use crate::group::GroupTable;
use crate::ring::Ring;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub ring: Ring,
}

fn entry(name: &str, ring: Ring) -> CorpusEntry {
    CorpusEntry { name: name.to_string(), ring }
}

fn quaternion(n: u64, a: i64, b: i64) -> Result<Ring> {
    Ok(quaternion_algebra(&QuaternionParams::over_zn(n, a, b)?)?.ring)
}

/// Every corpus ring, smallest families first.
pub fn corpus() -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for n in 2..=12 {
        out.push(entry(&format!("z{n}"), Ring::zn(n)?));
    }
    for m in [2, 3, 4] {
        out.push(entry(&format!("zero_mult{m}"), Ring::zero_multiplication(m)?.with_label(format!("Z_{m}^0"))));
    }
    let (z2, z3) = (Ring::zn(2)?, Ring::zn(3)?);
    out.push(entry("m2_z2", matrix_ring(&z2)?));
    out.push(entry("m2_z3", matrix_ring(&z3)?));
    out.push(entry("ut2_z2", upper_triangular(&z2)?));
    out.push(entry("ut2_z3", upper_triangular(&z3)?));
    let q8 = GroupTable::q8();
    for n in [2, 3, 4] {
        out.push(entry(&format!("z{n}q8"), group_ring(&Ring::zn(n)?, &q8)?.ring().clone()));
    }
    let c2 = GroupTable::cyclic(2)?;
    out.push(entry("z2c2", group_ring(&z2, &c2)?.ring().clone()));
    out.push(entry("z2c2xc2", group_ring(&z2, &GroupTable::elementary_abelian_2(2)?)?.ring().clone()));
    for (n, a, b) in [(2, 1, 1), (3, -1, -1), (4, 1, 1), (4, -1, -1), (5, 2, 3), (6, -1, -1), (7, -1, -1), (8, 3, 5), (9, -1, -1)] {
        out.push(entry(&format!("quat_z{n}_{a}_{b}"), quaternion(n, a, b)?));
    }
    out.push(entry("matrix_delta_z3", matrix_delta(3)?));
    out.push(entry("matrix_delta_z9", matrix_delta(9)?));
    let z3q8 = group_ring(&z3, &q8)?;
    out.push(entry("delta_z3q8", delta_decomposition(&z3q8)?.delta));
    let z2q8 = group_ring(&z2, &q8)?;
    let aug = delta_ideal(&z2q8, &(0..8).collect::<Vec<_>>())?;
    out.push(entry("augmentation_z2q8", Ring::from_subgroup(z2q8.ring(), &aug)?.with_label("Δ(Q8) in Z_2Q8")));
    let center_ideal = delta_ideal(&z2q8, q8.derived_subgroup())?;
    out.push(entry("delta_center_z2q8", Ring::from_subgroup(z2q8.ring(), &center_ideal)?.with_label("Δ(Q8,Q8') in Z_2Q8")));
    out.push(entry("z2_plus_z3", Ring::direct_sum(&z2, &z3)?));
    out.push(entry("z2_plus_m2_z2", Ring::direct_sum(&z2, &matrix_ring(&z2)?)?));
    out.push(entry("z2q8_plus_z2", Ring::direct_sum(z2q8.ring(), &z2)?));
    out.push(entry("ut2_z2_plus_zero_mult2", Ring::direct_sum(&upper_triangular(&z2)?, &Ring::zero_multiplication(2)?)?));
    Ok(out)
}

/// Corpus rings with at most `max_order` elements.
pub fn small_corpus(max_order: u64) -> Result<Vec<CorpusEntry>> {
    Ok(corpus()?.into_iter().filter(|e| e.ring.order() <= max_order).collect())
}

/// Look up a corpus ring by name.
pub fn by_name(name: &str) -> Result<Option<Ring>> {
    Ok(corpus()?.into_iter().find(|e| e.name == name).map(|e| e.ring))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_large_and_named_uniquely() {
        let c = corpus().unwrap();
        assert!(c.len() >= 25);
        let mut names: Vec<&str> = c.iter().map(|e| e.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
        assert_eq!(by_name("z4q8").unwrap().unwrap().order(), 65536);
        assert_eq!(by_name("augmentation_z2q8").unwrap().unwrap().order(), 128);
    }
}
