//! Search for a nilpotent minimal ideal of a centrally essential ring that
//! is not contained in the center.

use std::fmt;
use std::str::FromStr;

use cering::ideals::{minimal_two_sided_ideals, squares_to_zero};
use cering::modarith::gcd;
use cering::{center, group_ring, is_centrally_essential, quaternion_algebra, verify_certificate, GroupTable, QuaternionParams, Ring, ScanConfig, Variant};

use crate::report::{timed, CheckRecord, Report, Verdict};
use crate::spec::{group_ring_spec, preset_spec, quaternion_spec, zn, GroupSpec, RingSpec};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `Z_n`, `2 <= n <= max_n`.
    Zn,
    /// `Z_n Q8`, `2 <= n <= max_n`.
    ZnQ8,
    /// Quaternion algebras over `Z_n` for every invertible pair.
    Quaternion,
    /// The named corpus; `max_n` is ignored.
    Corpus,
}

impl FromStr for Family {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "zn" => Ok(Family::Zn),
            "znq8" => Ok(Family::ZnQ8),
            "quaternion" => Ok(Family::Quaternion),
            "corpus" => Ok(Family::Corpus),
            other => Err(CliError::Usage(format!("unknown family {other}; expected zn, znq8, quaternion or corpus"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Zn => "zn",
            Family::ZnQ8 => "znq8",
            Family::Quaternion => "quaternion",
            Family::Corpus => "corpus",
        })
    }
}

fn instances(family: Family, max_n: u64) -> Result<Vec<(String, RingSpec, Ring)>, CliError> {
    let mut out = Vec::new();
    match family {
        Family::Zn => {
            for n in 2..=max_n {
                out.push((format!("Z{n}"), zn(n), Ring::zn(n)?));
            }
        }
        Family::ZnQ8 => {
            for n in 2..=max_n {
                let r = group_ring(&Ring::zn(n)?, &GroupTable::q8())?.ring().clone();
                out.push((format!("Z{n}Q8"), group_ring_spec(n, GroupSpec::Q8), r));
            }
        }
        Family::Quaternion => {
            for n in 2..=max_n {
                for a in (1..n).filter(|&a| gcd(a, n) == 1) {
                    for b in (1..n).filter(|&b| gcd(b, n) == 1) {
                        let (a, b) = (a as i64, b as i64);
                        let q = quaternion_algebra(&QuaternionParams::over_zn(n, a, b)?)?;
                        out.push((format!("Z{n}({a},{b})"), quaternion_spec(n, a, b), q.ring));
                    }
                }
            }
        }
        Family::Corpus => {
            for e in cering::corpus::corpus()? {
                out.push((e.name.clone(), preset_spec(&e.name), e.ring));
            }
        }
    }
    Ok(out)
}

fn examine(name: &str, spec: RingSpec, ring: &Ring, cap: u64) -> Result<CheckRecord, CliError> {
    let check = format!("minimal-ideal-search/{name}");
    let cert = match is_centrally_essential(ring, Variant::Nonunital, &ScanConfig::exhaustive(cap)) {
        Err(e) if e.is_cap() => return Ok(CheckRecord::new(check, Verdict::Skipped).with_detail(e.to_string())),
        other => other?,
    };
    verify_certificate(ring, &cert)?;
    if !cert.holds {
        return Ok(CheckRecord::new(check, Verdict::Skipped).with_evidence(spec, cert).with_detail("not centrally essential"));
    }
    let minimal = match minimal_two_sided_ideals(ring, cap) {
        Err(e) if e.is_cap() => return Ok(CheckRecord::new(check, Verdict::Skipped).with_detail(e.to_string())),
        other => other?,
    };
    let c = center(ring);
    let nilpotent: Vec<_> = minimal.iter().filter(|i| squares_to_zero(ring, i)).collect();
    let outside: Vec<_> = nilpotent.iter().filter(|i| !i.is_subset_of(&c)).collect();
    let rec = CheckRecord::new(check, Verdict::check(outside.is_empty())).with_evidence(spec, cert);
    Ok(match outside.first() {
        None => rec.with_detail(format!(
            "{} minimal ideals, {} nilpotent, all nilpotent ones central",
            minimal.len(),
            nilpotent.len()
        )),
        Some(i) => {
            let x = i.elements().iter().find(|x| !c.contains(x)).expect("non-central element");
            rec.with_detail(format!("counterexample: nilpotent minimal ideal of order {} contains non-central {:?}", i.len(), x.0))
        }
    })
}

/// Examine every instance of `family`; cap errors skip an instance.
pub fn run_search(family: Family, max_n: u64, cap: u64) -> Result<Report, CliError> {
    let records = instances(family, max_n)?
        .into_iter()
        .map(|(name, spec, ring)| {
            timed(|| {
                examine(&name, spec, &ring, cap)
                    .unwrap_or_else(|e| CheckRecord::new(format!("minimal-ideal-search/{name}"), Verdict::Error).with_detail(e.to_string()))
            })
        })
        .collect();
    Ok(Report::new(format!("search {family} {max_n}"), records))
}
