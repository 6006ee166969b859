//! Structural laws relating central essentiality to ideals, checked on a
//! single finite ring by enumerating its ideal lattices.
//!
//! Every verdict used here is re-checked by [`verify_certificate`]; a
//! rejected certificate counts as a violation.

use std::fmt;

use serde::Serialize;

use crate::certificate::{verify_certificate, Certificate, Variant};
use crate::center::center;
use crate::constructions::quotient_ring;
use crate::error::{Error, Result};
use crate::ideals::{all_ideals, central_idempotents, IdealCap};
use crate::predicates::{is_centrally_essential, is_reduced, is_semiprime, minimal_right_ideals, ScanConfig};
use crate::ring::Ring;
use crate::subgroup::{left_annihilator, right_annihilator, right_ideal_generated, AdditiveSubgroup, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    /// In a CE ring, an ideal that is semiprime as a ring lies in the center.
    SemiprimeIdealCentral,
    /// In a CE ring, a right ideal that is semiprime as a ring is reduced and commutative.
    SemiprimeRightIdealReduced,
    /// In a CE ring, a minimal non-nilpotent right ideal is two-sided and central.
    MinimalNonNilpotentCentral,
    /// In a CE ring, a semiprime right ideal with zero annihilator is central.
    ZeroAnnihilatorCentral,
    /// `R = eR ⊕ (1-e)R` is CE iff both summands are; in a CE ring a minimal
    /// non-nilpotent right ideal `I` and `R/I` are CE.
    IdempotentSplit,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::SemiprimeIdealCentral => "semiprime-ideal-central",
            Law::SemiprimeRightIdealReduced => "semiprime-right-ideal-reduced",
            Law::MinimalNonNilpotentCentral => "minimal-non-nilpotent-central",
            Law::ZeroAnnihilatorCentral => "zero-annihilator-central",
            Law::IdempotentSplit => "idempotent-split",
        })
    }
}

/// Outcome of one law on one ring.
#[derive(Debug, Clone, Serialize)]
pub struct LawCheck {
    pub law: Law,
    /// Number of ideals (or idempotents) meeting the law's hypothesis.
    pub instances: usize,
    pub violations: Vec<String>,
}

/// Size limits for the ideal enumerations.
#[derive(Debug, Clone, Copy)]
pub struct LawCap {
    pub right: IdealCap,
    pub two_sided: IdealCap,
    /// Largest ring scanned by the CE search on sub-rings and quotients.
    pub scan: u64,
}

impl Default for LawCap {
    fn default() -> Self {
        LawCap { right: IdealCap::with_order(512), two_sided: IdealCap::with_order(512), scan: 1 << 16 }
    }
}

struct Ctx {
    cap: LawCap,
    center: AdditiveSubgroup,
    violations: Vec<String>,
}

impl Ctx {
    fn verified(&mut self, ring: &Ring, what: &str, cert: Certificate) -> bool {
        if let Err(e) = verify_certificate(ring, &cert) {
            self.violations.push(format!("{what}: {e}"));
        }
        cert.holds
    }

    fn ce(&mut self, ring: &Ring, what: &str) -> Result<bool> {
        let cert = is_centrally_essential(ring, Variant::Nonunital, &ScanConfig::exhaustive(self.cap.scan))?;
        Ok(self.verified(ring, what, cert))
    }

    fn semiprime(&mut self, sub: &Ring, what: &str) -> Result<bool> {
        let cert = is_semiprime(sub, self.cap.scan)?;
        Ok(self.verified(sub, what, cert))
    }

    fn central(&self, ideal: &AdditiveSubgroup) -> bool {
        ideal.is_subset_of(&self.center)
    }

    fn take(&mut self) -> Vec<String> {
        std::mem::take(&mut self.violations)
    }
}

fn as_ring(ring: &Ring, ideal: &AdditiveSubgroup) -> Result<Ring> {
    Ring::from_subgroup(ring, ideal)
}

/// Check every law on `ring`. Fails with a cap error when an enumeration
/// is out of range.
pub fn check_laws(ring: &Ring, cap: LawCap) -> Result<Vec<LawCheck>> {
    let mut ctx = Ctx { cap, center: center(ring), violations: Vec::new() };
    let ce = ctx.ce(ring, "ring")?;
    let two = all_ideals(ring, Side::TwoSided, cap.two_sided)?;
    let right = all_ideals(ring, Side::Right, cap.right)?;
    let mut out = Vec::new();

    let mut instances = 0;
    if ce {
        for ideal in two.iter().filter(|i| !i.is_zero()) {
            if ctx.semiprime(&as_ring(ring, ideal)?, "ideal")? {
                instances += 1;
                if !ctx.central(ideal) {
                    ctx.violations.push(format!("semiprime ideal of order {} is not central", ideal.len()));
                }
            }
        }
    }
    out.push(LawCheck { law: Law::SemiprimeIdealCentral, instances, violations: ctx.take() });

    let (mut reduced_instances, mut ann_instances) = (0, 0);
    let mut ann_violations = Vec::new();
    if ce {
        for ideal in right.iter().filter(|i| !i.is_zero()) {
            let sub = as_ring(ring, ideal)?;
            if !ctx.semiprime(&sub, "right ideal")? {
                continue;
            }
            reduced_instances += 1;
            let reduced = is_reduced(&sub, cap.scan)?;
            let reduced = ctx.verified(&sub, "right ideal", reduced);
            if !reduced || !sub.is_commutative() {
                ctx.violations.push(format!("semiprime right ideal of order {} is not reduced and commutative", ideal.len()));
            }
            let gens = ideal.generators();
            for (side, ann) in [("right", right_annihilator(ring, gens)), ("left", left_annihilator(ring, gens))] {
                if ann.is_zero() {
                    ann_instances += 1;
                    if !ctx.central(ideal) {
                        ann_violations.push(format!("right ideal of order {} with zero {side} annihilator is not central", ideal.len()));
                    }
                }
            }
        }
    }
    out.push(LawCheck { law: Law::SemiprimeRightIdealReduced, instances: reduced_instances, violations: ctx.take() });
    out.push(LawCheck { law: Law::ZeroAnnihilatorCentral, instances: ann_instances, violations: ann_violations });

    let minimal = minimal_right_ideals(ring, cap.right)?;
    let non_nilpotent: Vec<_> = minimal.iter().filter(|m| !m.nilpotent).collect();
    let mut instances = 0;
    if ce {
        for m in &non_nilpotent {
            instances += 1;
            if !m.two_sided || !m.central {
                ctx.violations.push(format!("minimal non-nilpotent right ideal of order {} is not central and two-sided", m.ideal.len()));
            }
        }
    }
    out.push(LawCheck { law: Law::MinimalNonNilpotentCentral, instances, violations: ctx.take() });

    let mut instances = 0;
    if let Some(one) = ring.one().cloned() {
        for e in central_idempotents(ring, cap.scan)? {
            if ring.is_zero(&e) || e == one {
                continue;
            }
            instances += 1;
            let f = ring.sub(&one, &e);
            let er = as_ring(ring, &right_ideal_generated(ring, std::slice::from_ref(&e)))?;
            let fr = as_ring(ring, &right_ideal_generated(ring, &[f]))?;
            let parts = ctx.ce(&er, "eR")? && ctx.ce(&fr, "(1-e)R")?;
            if parts != ce {
                ctx.violations.push(format!("split at {e:?}: ring CE = {ce}, summands CE = {parts}"));
            }
        }
    }
    if ce {
        for m in &non_nilpotent {
            if !m.two_sided {
                continue;
            }
            instances += 1;
            let i = as_ring(ring, &m.ideal)?;
            let q = quotient_ring(ring, &m.ideal)?;
            if !ctx.ce(&i, "I")? || !ctx.ce(&q.ring, "R/I")? {
                ctx.violations.push(format!("minimal ideal of order {} or its quotient is not CE", m.ideal.len()));
            }
        }
    }
    out.push(LawCheck { law: Law::IdempotentSplit, instances, violations: ctx.take() });
    Ok(out)
}

/// Cap errors from [`check_laws`] mean "out of range", not failure.
pub fn is_out_of_range(e: &Error) -> bool {
    e.is_cap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{group_ring, matrix_ring};
    use crate::group::GroupTable;

    fn clean(ring: &Ring) -> Vec<LawCheck> {
        let checks = check_laws(ring, LawCap::default()).unwrap();
        for c in &checks {
            assert!(c.violations.is_empty(), "{}: {:?}", c.law, c.violations);
        }
        checks
    }

    #[test]
    fn laws_on_small_rings() {
        let z6 = clean(&Ring::zn(6).unwrap());
        let split = z6.iter().find(|c| c.law == Law::IdempotentSplit).unwrap();
        assert!(split.instances >= 2);
        clean(&matrix_ring(&Ring::zn(2).unwrap()).unwrap());
        clean(&group_ring(&Ring::zn(2).unwrap(), &GroupTable::cyclic(2).unwrap()).unwrap().ring().clone());
    }
}
