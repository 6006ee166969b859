//! Reports: one record per check, rendered as text or JSON.

use std::fmt::Write as _;
use std::time::Instant;

use cering::module::{verify_module_certificate, Module};
use cering::semiring::verify_semiring_certificate;
use cering::{verify_certificate, Certificate, Property, Witness};
use serde::{Deserialize, Serialize};

use crate::spec::{build, Built, RingSpec};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// The property holds.
    True,
    /// The property fails.
    False,
    /// A suite check or query succeeded.
    Pass,
    /// A suite check failed.
    Fail,
    /// Out of range for the configured caps.
    Skipped,
    Error,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b { Verdict::True } else { Verdict::False }
    }

    pub fn check(ok: bool) -> Self {
        if ok { Verdict::Pass } else { Verdict::Fail }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
            Verdict::Error => "error",
        }
    }
}

/// A certificate together with the ring it speaks about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub ring: RingSpec,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub verdict: Verdict,
    /// Short human-readable witness summary.
    pub witness: String,
    pub examined: u64,
    pub duration_ms: u64,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub evidence: Vec<Evidence>,
}

impl CheckRecord {
    pub fn new(check: impl Into<String>, verdict: Verdict) -> Self {
        CheckRecord {
            check: check.into(),
            verdict,
            witness: String::new(),
            examined: 0,
            duration_ms: 0,
            detail: String::new(),
            evidence: Vec::new(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    /// Attach a certificate; its witness becomes the summary when none is set.
    pub fn with_evidence(mut self, ring: RingSpec, certificate: Certificate) -> Self {
        self.examined += certificate.examined;
        if self.witness.is_empty() {
            self.witness = summarize(&certificate.witness);
        }
        self.evidence.push(Evidence { ring, certificate });
        self
    }

    pub fn failed(&self) -> bool {
        matches!(self.verdict, Verdict::Fail | Verdict::Error)
    }
}

/// Run `f` and stamp the record with its wall-clock time.
pub fn timed(f: impl FnOnce() -> CheckRecord) -> CheckRecord {
    let t = Instant::now();
    let mut r = f();
    r.duration_ms = t.elapsed().as_millis() as u64;
    r
}

pub fn summarize(w: &Witness) -> String {
    let el = |e: &cering::Element| format!("{:?}", e.0);
    match w {
        Witness::Commutative => "commutative".into(),
        Witness::NonCommuting { a, b } => format!("a={} b={} do not commute", el(a), el(b)),
        Witness::CentralMultipliers { center_generators, schedule } => {
            format!("{} center generators, {} multipliers", center_generators.len(), schedule.len())
        }
        Witness::NoCentralMultiplier { a } => format!("a={} has no central multiplier", el(a)),
        Witness::Exhausted => "exhausted".into(),
        Witness::PrincipalMiss { a } => format!("a={} generates a missing submodule", el(a)),
        Witness::SquareZeroIdeal { a } => format!("ideal of a={} squares to zero", el(a)),
        Witness::Nilpotent { a, index } => format!("a={} nilpotent of index {index}", el(a)),
        Witness::NotRational { x, y } => format!("x={} y={}", el(x), el(y)),
        Witness::NoIdealInside { a } => format!("a={} contains no non-zero ideal", el(a)),
        Witness::NotSubtractive { a, b } => format!("a={} b={}", el(a), el(b)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(command: impl Into<String>, checks: Vec<CheckRecord>) -> Self {
        Report { command: command.into(), checks }
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(CheckRecord::failed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(doc: &str) -> Result<Report, CliError> {
        serde_json::from_str(doc).map_err(|e| CliError::Parse { line: e.line(), column: e.column(), message: e.to_string() })
    }

    /// The report with durations zeroed, for comparing runs.
    pub fn without_timing(&self) -> Report {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.duration_ms = 0;
        }
        r
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.checks.iter().map(|c| c.check.len()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = write!(out, "{:width$}  {:7}  examined={:<9} {:>6}ms", c.check, c.verdict.as_str(), c.examined, c.duration_ms);
            if !c.witness.is_empty() {
                let _ = write!(out, "  {}", c.witness);
            }
            if !c.detail.is_empty() {
                let _ = write!(out, "  ({})", c.detail);
            }
            out.push('\n');
        }
        let failed = self.checks.iter().filter(|c| c.failed()).count();
        let skipped = self.checks.iter().filter(|c| c.verdict == Verdict::Skipped).count();
        let _ = writeln!(out, "{} checks, {failed} failed, {skipped} skipped", self.checks.len());
        out
    }
}

/// Re-verify one piece of evidence from scratch.
pub fn recheck_evidence(e: &Evidence) -> Result<(), CliError> {
    let cert = &e.certificate;
    match build(&e.ring)? {
        Built::Semiring(s) => verify_semiring_certificate(&s, cert)?,
        Built::Ring(r) => match cert.property {
            Property::EssentialSubmodule { .. } => verify_module_certificate(&Module::regular(&r)?, cert)?,
            _ => verify_certificate(&r, cert)?,
        },
    }
    Ok(())
}

/// Re-verify every certificate in a report. Returns one record per evidence item.
pub fn recheck(report: &Report) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for c in &report.checks {
        for (i, e) in c.evidence.iter().enumerate() {
            out.push(timed(|| {
                let name = format!("{}#{}", c.check, i);
                match recheck_evidence(e) {
                    Ok(()) => CheckRecord::new(name, Verdict::Pass),
                    Err(err) => CheckRecord::new(name, Verdict::Fail).with_detail(err.to_string()),
                }
            }));
        }
    }
    out
}
