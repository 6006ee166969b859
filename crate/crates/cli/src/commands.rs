//! Argument parsing and command dispatch.

use std::path::PathBuf;

use cering::ideals::{central_idempotents, idempotents, IdealCap};
use cering::predicates::{default_cap, minimal_right_ideals};
use cering::semiring::{
    is_ce_semiring, is_commutative_semiring, is_semisubtractive, semiring_center, verify_semiring_certificate,
};
use cering::subgroup::right_ideal_generated;
use cering::{
    center, is_centrally_essential, is_centrally_rational, is_commutative, is_essential_right_ideal, is_reduced,
    is_semiprime, is_strongly_bounded, verify_certificate, Certificate, ScanConfig, Side, Variant,
};
use clap::{Parser, Subcommand, ValueEnum};

use crate::report::{recheck, timed, CheckRecord, Report, Verdict};
use crate::search::{run_search, Family};
use crate::spec::{build, parse_elements, parse_ring_spec, Built, RingSpec};
use crate::suite::{run_suite, SuiteOptions};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "cering", version, about = "Decide structural properties of finite rings and semirings")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Worker threads; verdicts and witnesses do not depend on it.
    #[arg(long, global = true)]
    pub parallel: Option<usize>,
    /// Element cap for exhaustive scans.
    #[arg(long, global = true, env = "CERING_CAP")]
    pub cap: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// JSON report.
    #[value(alias = "json")]
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PropertyName {
    Center,
    Commutative,
    Ce,
    Essential,
    Semiprime,
    Reduced,
    CentrallyRational,
    StronglyBounded,
    Idempotents,
    MinimalRightIdeals,
    Semisubtractive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Refute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Right,
    Left,
    TwoSided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Nonunital,
    Unital,
    Element,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide one property of the ring or semiring in a spec file.
    Check {
        property: PropertyName,
        /// Spec file, `-` for stdin, or an inline JSON document.
        spec: String,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        /// Generators of the right ideal for `essential`, as JSON, e.g. `[[2]]`.
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, value_enum, default_value = "two-sided")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "nonunital")]
        variant: VariantArg,
        /// Elements tried first in refute mode, as JSON, e.g. `[[0,1,0,0]]`.
        #[arg(long)]
        targets: Option<String>,
    },
    /// Run the full verification suite.
    VerifyPaper {
        /// Only run checks whose name contains this substring.
        #[arg(long)]
        filter: Option<String>,
        /// Corrupt the quaternion group table (fault injection).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Look for a nilpotent minimal ideal of a centrally essential ring outside the center.
    Search {
        /// zn, znq8, quaternion or corpus.
        #[arg(long, default_value = "znq8")]
        family: String,
        #[arg(long, default_value_t = 4)]
        max_n: u64,
    },
    /// Print order, characteristic, unitality and center size.
    Describe { spec: String },
    /// Re-verify every certificate in a machine report.
    Recheck { report: PathBuf },
}

fn read_input(arg: &str) -> Result<String, CliError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        return Ok(std::io::read_to_string(std::io::stdin())?);
    }
    Ok(std::fs::read_to_string(arg)?)
}

fn load(arg: &str) -> Result<(RingSpec, Built), CliError> {
    let spec = parse_ring_spec(&read_input(arg)?)?;
    let built = build(&spec)?;
    Ok((spec, built))
}

fn side(s: SideArg) -> Side {
    match s {
        SideArg::Right => Side::Right,
        SideArg::Left => Side::Left,
        SideArg::TwoSided => Side::TwoSided,
    }
}

fn property_name(p: PropertyName) -> &'static str {
    match p {
        PropertyName::Center => "center",
        PropertyName::Commutative => "commutative",
        PropertyName::Ce => "ce",
        PropertyName::Essential => "essential",
        PropertyName::Semiprime => "semiprime",
        PropertyName::Reduced => "reduced",
        PropertyName::CentrallyRational => "centrally-rational",
        PropertyName::StronglyBounded => "strongly-bounded",
        PropertyName::Idempotents => "idempotents",
        PropertyName::MinimalRightIdeals => "minimal-right-ideals",
        PropertyName::Semisubtractive => "semisubtractive",
    }
}

fn certified(name: &str, spec: &RingSpec, cert: Certificate) -> CheckRecord {
    CheckRecord::new(name, Verdict::from_bool(cert.holds)).with_evidence(spec.clone(), cert)
}

#[allow(clippy::too_many_arguments)]
fn check(
    property: PropertyName,
    spec_arg: &str,
    mode: ModeArg,
    ideal: Option<&str>,
    side_arg: SideArg,
    variant: VariantArg,
    targets: Option<&str>,
    cap: u64,
) -> Result<CheckRecord, CliError> {
    let (spec, built) = load(spec_arg)?;
    let name = property_name(property).to_string();
    if let Built::Semiring(s) = &built {
        let cert = match property {
            PropertyName::Center => {
                let c = semiring_center(s);
                let names: Vec<&str> = c.iter().map(|&i| s.name(i)).collect();
                let mut r = CheckRecord::new(name, Verdict::Pass).with_detail(format!("{{{}}}", names.join(", ")));
                r.witness = format!("order {}", c.len());
                r.examined = s.order() as u64;
                return Ok(r);
            }
            PropertyName::Commutative => is_commutative_semiring(s),
            PropertyName::Ce => is_ce_semiring(s),
            PropertyName::Semisubtractive => is_semisubtractive(s),
            _ => return Err(CliError::Usage(format!("{name} is not available for semirings"))),
        };
        verify_semiring_certificate(s, &cert)?;
        return Ok(certified(&name, &spec, cert));
    }
    let ring = built.ring()?;
    let cert = match property {
        PropertyName::Center => {
            let c = center(ring);
            let gens: Vec<String> = c.generators().iter().map(|g| format!("{:?}", g.0)).collect();
            let mut r = CheckRecord::new(name, Verdict::Pass).with_detail(format!("generators {}", gens.join(" ")));
            r.witness = format!("order {}", c.len());
            return Ok(r);
        }
        PropertyName::Idempotents => {
            let all = idempotents(ring, cap)?;
            let central = central_idempotents(ring, cap)?;
            let mut r = CheckRecord::new(name, Verdict::Pass)
                .with_detail(all.iter().map(|e| format!("{:?}", e.0)).collect::<Vec<_>>().join(" "));
            r.witness = format!("{} idempotents, {} central", all.len(), central.len());
            r.examined = ring.order();
            return Ok(r);
        }
        PropertyName::MinimalRightIdeals => {
            let found = minimal_right_ideals(ring, IdealCap::with_order(cap.min(4096)))?;
            let parts: Vec<String> = found
                .iter()
                .map(|m| {
                    format!(
                        "order {} nilpotent={} two_sided={} central={}",
                        m.ideal.len(),
                        m.nilpotent,
                        m.two_sided,
                        m.central
                    )
                })
                .collect();
            let mut r = CheckRecord::new(name, Verdict::Pass).with_detail(parts.join("; "));
            r.witness = format!("{} minimal right ideals", found.len());
            return Ok(r);
        }
        PropertyName::Commutative => is_commutative(ring),
        PropertyName::Ce => {
            let variant = match variant {
                VariantArg::Nonunital => Variant::Nonunital,
                VariantArg::Unital => Variant::Unital,
                VariantArg::Element => Variant::ElementCondition,
            };
            let targets = targets.map(parse_elements).transpose()?.unwrap_or_default();
            let cfg = match mode {
                ModeArg::Exhaustive => ScanConfig::exhaustive(cap),
                ModeArg::Refute => ScanConfig::refute(cap).with_targets(targets),
            };
            is_centrally_essential(ring, variant, &cfg)?
        }
        PropertyName::Essential => {
            let gens = parse_elements(ideal.ok_or_else(|| CliError::Usage("essential needs --ideal".into()))?)?;
            for g in &gens {
                if !ring.contains(g) {
                    return Err(cering::Error::NotAnElement(g.0.clone()).into());
                }
            }
            is_essential_right_ideal(ring, &right_ideal_generated(ring, &gens), cap)?
        }
        PropertyName::Semiprime => is_semiprime(ring, cap)?,
        PropertyName::Reduced => is_reduced(ring, cap)?,
        PropertyName::CentrallyRational => is_centrally_rational(ring, cap)?,
        PropertyName::StronglyBounded => is_strongly_bounded(ring, side(side_arg), cap)?,
        PropertyName::Semisubtractive => return Err(CliError::Usage("semisubtractive needs a semiring".into())),
    };
    verify_certificate(ring, &cert)?;
    Ok(certified(&name, &spec, cert))
}

fn describe(spec_arg: &str) -> Result<CheckRecord, CliError> {
    let (_, built) = load(spec_arg)?;
    let r = match &built {
        Built::Semiring(s) => CheckRecord::new("describe", Verdict::Pass).with_detail(format!(
            "semiring order={} unital={} center={}",
            s.order(),
            s.one().is_some(),
            semiring_center(s).len()
        )),
        Built::Ring(ring) => CheckRecord::new("describe", Verdict::Pass).with_detail(format!(
            "{} order={} characteristic={} unital={} commutative={} center={}",
            ring.label(),
            ring.order(),
            ring.characteristic(),
            ring.is_unital(),
            ring.is_commutative(),
            center(ring).len()
        )),
    };
    Ok(r)
}

fn error_record(name: &str, e: &CliError) -> CheckRecord {
    let v = if e.is_cap() { Verdict::Skipped } else { Verdict::Error };
    CheckRecord::new(name, v).with_detail(e.to_string())
}

/// Run a parsed command. Returns the report and the exit status.
pub fn run(cli: &Cli) -> (Report, i32) {
    let cap = cli.cap.unwrap_or_else(default_cap);
    match &cli.command {
        Command::Check { property, spec, mode, ideal, side, variant, targets } => {
            let rec = timed(|| {
                check(*property, spec, *mode, ideal.as_deref(), *side, *variant, targets.as_deref(), cap)
                    .unwrap_or_else(|e| error_record(property_name(*property), &e))
            });
            let code = match rec.verdict {
                Verdict::True | Verdict::Pass => 0,
                Verdict::False | Verdict::Fail => 1,
                Verdict::Skipped | Verdict::Error => 2,
            };
            (Report::new("check", vec![rec]), code)
        }
        Command::VerifyPaper { filter, inject_fault } => {
            let opts = SuiteOptions { filter: filter.clone(), inject_fault: *inject_fault };
            match run_suite(&opts) {
                Ok(r) => {
                    let code = i32::from(r.failed());
                    (r, code)
                }
                Err(e) => (Report::new("verify-paper", vec![error_record("verify-paper", &e)]), 2),
            }
        }
        Command::Search { family, max_n } => {
            let result = family.parse::<Family>().and_then(|f| run_search(f, *max_n, cap));
            match result {
                Ok(r) => {
                    let code = i32::from(r.failed());
                    (r, code)
                }
                Err(e) => (Report::new("search", vec![error_record("search", &e)]), 2),
            }
        }
        Command::Describe { spec } => match describe(spec) {
            Ok(r) => (Report::new("describe", vec![r]), 0),
            Err(e) => (Report::new("describe", vec![error_record("describe", &e)]), 2),
        },
        Command::Recheck { report } => {
            let loaded = std::fs::read_to_string(report).map_err(CliError::from).and_then(|d| Report::from_json(&d));
            match loaded {
                Ok(r) => {
                    let out = Report::new("recheck", recheck(&r));
                    let code = i32::from(out.failed());
                    (out, code)
                }
                Err(e) => (Report::new("recheck", vec![error_record("recheck", &e)]), 2),
            }
        }
    }
}

/// Parse arguments, run, and render. Returns the exit status and the text to print.
pub fn execute<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let go = || run(&cli);
    let (report, code) = match cli.parallel {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(go),
            Err(e) => return (2, format!("cannot start {n} workers: {e}\n")),
        },
        None => go(),
    };
    let text = match cli.format {
        Format::Text => report.to_text(),
        Format::Machine => report.to_json() + "\n",
    };
    (code, text)
}
