//! The verification suite: every finite construction and theorem instance,
//! as named checks.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use cering::center::center_by_exhaustion;
use cering::constructions::{
    annihilator_of_two, class_sum_center, matrix_delta_isomorphism, quaternion_center_formula, quotient_ring,
};
use cering::corpus::{corpus, CorpusEntry};
use cering::ideals::{all_ideals, minimal_two_sided_ideals, squares_to_zero, IdealCap};
use cering::laws::{check_laws, LawCap};
use cering::modarith::{gcd, is_power_of_two};
use cering::module::{direct_sum_check, is_essential_submodule, verify_module_certificate, Module};
use cering::predicates::{constructive_multiplier, find_central_multiplier};
use cering::semiring::{
    example_order5, is_ce_semiring, is_commutative_semiring, is_semisubtractive, semiring_center,
    verify_semiring_certificate, Semiring,
};
use cering::subgroup::additive_closure;
use cering::{
    center, group_ring, is_centrally_essential, is_centrally_rational, matrix_delta, matrix_delta_element,
    quaternion_algebra, verify_certificate, Certificate, Element, GroupRing, GroupTable, QuaternionParams, Ring,
    ScanConfig, Side, Variant, Witness,
};
use rayon::prelude::*;

use crate::report::{timed, CheckRecord, Report, Verdict};
use crate::spec::{group_ring_spec, preset_spec, quaternion_spec, zn, GroupSpec, RingSpec};
use crate::CliError;

/// Options for a suite run.
#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    /// Only checks whose name contains this substring run.
    pub filter: Option<String>,
    /// Replace the quaternion group table by a corrupted copy.
    pub inject_fault: bool,
}

type Run = Box<dyn Fn(&SuiteOptions) -> Result<CheckRecord, CliError> + Send + Sync>;

/// A named check. `criterion` groups checks for the acceptance summary.
pub struct SuiteCheck {
    pub name: String,
    pub criterion: u8,
    run: Run,
}

impl SuiteCheck {
    fn new(
        name: impl Into<String>,
        criterion: u8,
        run: impl Fn(&SuiteOptions) -> Result<CheckRecord, CliError> + Send + Sync + 'static,
    ) -> Self {
        SuiteCheck { name: name.into(), criterion, run: Box::new(run) }
    }

    pub fn run(&self, opts: &SuiteOptions) -> CheckRecord {
        timed(|| match (self.run)(opts) {
            Ok(mut r) => {
                r.check = self.name.clone();
                r
            }
            Err(e) => CheckRecord::new(&self.name, Verdict::Error).with_detail(e.to_string()),
        })
    }
}

fn shared_corpus() -> Result<Arc<Vec<CorpusEntry>>, CliError> {
    static CORPUS: OnceLock<Arc<Vec<CorpusEntry>>> = OnceLock::new();
    if let Some(c) = CORPUS.get() {
        return Ok(c.clone());
    }
    let c = Arc::new(corpus()?);
    Ok(CORPUS.get_or_init(|| c).clone())
}

fn q8(opts: &SuiteOptions) -> Result<GroupTable, CliError> {
    let q = GroupTable::q8();
    if !opts.inject_fault {
        return Ok(q);
    }
    let mut rows = q.table_rows();
    rows[1].swap(2, 3);
    Ok(GroupTable::from_table(&rows, Some(q.names().to_vec()))?)
}

fn zq8(n: u64, opts: &SuiteOptions) -> Result<GroupRing, CliError> {
    Ok(group_ring(&Ring::zn(n)?, &q8(opts)?)?)
}

fn exhaustive_ce(ring: &Ring, cap: u64) -> Result<Certificate, CliError> {
    let cert = is_centrally_essential(ring, Variant::Nonunital, &ScanConfig::exhaustive(cap))?;
    verify_certificate(ring, &cert)?;
    Ok(cert)
}

/// Cheap refutation first; a full scan when that is inconclusive.
fn decide_ce(ring: &Ring) -> Result<Certificate, CliError> {
    let cert = match is_centrally_essential(ring, Variant::Nonunital, &ScanConfig::refute(2048)) {
        Err(e) if e.is_cap() => is_centrally_essential(ring, Variant::Nonunital, &ScanConfig::exhaustive(ring.order()))?,
        other => other?,
    };
    verify_certificate(ring, &cert)?;
    Ok(cert)
}

fn units(n: u64) -> Vec<i64> {
    (1..n).filter(|&a| gcd(a, n) == 1).map(|a| a as i64).collect()
}

fn set_eq(a: &cering::AdditiveSubgroup, b: &cering::AdditiveSubgroup) -> bool {
    a.elements() == b.elements()
}

fn ce_char2(opts: &SuiteOptions) -> Result<CheckRecord, CliError> {
    let gr = zq8(2, opts)?;
    let r = gr.ring();
    let cert = exhaustive_ce(r, r.order())?;
    let mut missing = Vec::new();
    for x in r.elements().filter(|x| !r.is_zero(x)) {
        let brute = find_central_multiplier(r, &x)?;
        let constructive = constructive_multiplier(&gr, &x)?;
        let ok = brute.is_some()
            && constructive.as_ref().is_some_and(|t| {
                !r.is_zero(&t.y) && r.is_central(&t.c) && r.is_central(&t.y) && r.mul(&x, &t.c) == t.y
            });
        if !ok {
            missing.push(x);
        }
    }
    let pass = cert.holds && missing.is_empty();
    Ok(CheckRecord::new("", Verdict::check(pass))
        .with_evidence(group_ring_spec(2, GroupSpec::Q8), cert)
        .with_detail(format!("{} non-zero elements without a multiplier", missing.len())))
}

fn center_class_sums(opts: &SuiteOptions) -> Result<CheckRecord, CliError> {
    let gr = zq8(2, opts)?;
    let r = gr.ring();
    let c = center(r);
    let names = [vec!["e"], vec!["a^2"], vec!["a", "a^3"], vec!["b", "a^2b"], vec!["ab", "a^3b"]];
    let listed: Vec<Element> = names
        .iter()
        .map(|ns| {
            let idx: Vec<usize> = ns.iter().map(|s| gr.group().index_of_name(s).expect("Q8 name")).collect();
            gr.subset_sum(&idx)
        })
        .collect::<Result<_, _>>()?;
    let span = additive_closure(r, &listed);
    let pass = c.len() == 32 && set_eq(&span, &c) && set_eq(&class_sum_center(&gr)?, &c) && set_eq(&center_by_exhaustion(r), &c);
    Ok(CheckRecord::new("", Verdict::check(pass)).with_detail(format!("|C| = {}, span of listed sums = {}", c.len(), span.len())))
}

fn minimal_ideal_quotient(opts: &SuiteOptions) -> Result<CheckRecord, CliError> {
    let gr = zq8(2, opts)?;
    let r = gr.ring();
    let hat = gr.group_sum()?;
    let minimal = minimal_two_sided_ideals(r, r.order())?;
    let only_hat = minimal.len() == 1 && minimal[0].elements().len() == 2 && minimal[0].contains(&hat);
    let ideal = &minimal[0];
    let nilpotent_central = squares_to_zero(r, ideal) && r.is_central(&hat);
    let q = quotient_ring(r, ideal)?;
    let cert = exhaustive_ce(&q.ring, q.ring.order())?;
    let pass = only_hat && nilpotent_central && !cert.holds;
    Ok(CheckRecord::new("", Verdict::check(pass))
        .with_detail(format!("least ideal {{0, sum of Q8}}; quotient of order {} CE = {}", q.ring.order(), cert.holds)))
}

fn hamiltonian_char2(_opts: &SuiteOptions) -> Result<CheckRecord, CliError> {
    let spec = group_ring_spec(2, GroupSpec::Product { factors: vec![GroupSpec::Q8, GroupSpec::Cyclic { n: 2 }] });
    let g = GroupTable::product(&GroupTable::q8(), &GroupTable::cyclic(2)?)?;
    let r = group_ring(&Ring::zn(2)?, &g)?.ring().clone();
    let cert = exhaustive_ce(&r, r.order())?;
    Ok(CheckRecord::new("", Verdict::check(cert.holds)).with_evidence(spec, cert))
}

fn ce_z3q8(opts: &SuiteOptions) -> Result<CheckRecord, CliError> {
    let gr = zq8(3, opts)?;
    let cert = exhaustive_ce(gr.ring(), gr.ring().order())?;
    Ok(CheckRecord::new("", Verdict::check(!cert.holds)).with_evidence(group_ring_spec(3, GroupSpec::Q8), cert))
}

fn ce_z9q8(opts: &SuiteOptions) -> Result<CheckRecord, CliError> {
    let gr = zq8(9, opts)?;
    let r = gr.ring();
    let f = r.scale(5, &r.sub(&gr.named("e")?, &gr.named("a^2")?));
    let af = r.mul(&gr.named("a")?, &f);
    let cert = is_centrally_essential(r, Variant::Nonunital, &ScanConfig::refute(0).with_targets(vec![af.clone()]))?;
    verify_certificate(r, &cert)?;
    let pass = !cert.holds && cert.witness == Witness::NoCentralMultiplier { a: af };
    Ok(CheckRecord::new("", Verdict::check(pass)).with_evidence(group_ring_spec(9, GroupSpec::Q8), cert))
}

fn ce_z4q8(opts: &SuiteOptions) -> Result<CheckRecord, CliError> {
    let gr = zq8(4, opts)?;
    let cert = exhaustive_ce(gr.ring(), gr.ring().order())?;
    Ok(CheckRecord::new("", Verdict::check(cert.holds))
        .with_evidence(group_ring_spec(4, GroupSpec::Q8), cert)
        .with_detail("centrally essential: every non-zero element has a central multiplier"))
}

/// For `x` outside `2R` take a central `c` in `Z_2Q8` with `x̄c̄` central
/// and non-zero; `2c` (lifted) works for `x`. For `x = 2y` use `c` for `y`.
fn z4q8_lifting(opts: &SuiteOptions) -> Result<CheckRecord, CliError> {
    let (g4, g2) = (zq8(4, opts)?, zq8(2, opts)?);
    let (r4, r2) = (g4.ring(), g2.ring());
    let reduce = |x: &Element| Element(x.0.iter().map(|v| v % 2).collect());
    let mut cache: HashMap<Element, Option<Element>> = HashMap::new();
    let mut failures = 0u64;
    let mut examined = 0u64;
    for x in r4.elements().filter(|x| !r4.is_zero(x)) {
        examined += 1;
        let (y, double) = if r2.is_zero(&reduce(&x)) {
            (Element(x.0.iter().map(|v| v / 2).collect()), false)
        } else {
            (x.clone(), true)
        };
        let yb = reduce(&y);
        let cb = match cache.get(&yb) {
            Some(c) => c.clone(),
            None => {
                let c = find_central_multiplier(r2, &yb)?.map(|(c, _)| c);
                cache.insert(yb, c.clone());
                c
            }
        };
        let Some(cb) = cb else {
            failures += 1;
            continue;
        };
        let lifted = Element(cb.0.clone());
        let m = if double { r4.scale(2, &lifted) } else { lifted };
        let p = r4.mul(&x, &m);
        if r4.is_zero(&m) || r4.is_zero(&p) || !r4.is_central(&m) || !r4.is_central(&p) {
            failures += 1;
        }
    }
    let mut rec = CheckRecord::new("", Verdict::check(failures == 0))
        .with_detail(format!("{failures} elements without a lifted multiplier"));
    rec.examined = examined;
    Ok(rec)
}

fn delta_component(_opts: &SuiteOptions) -> Result<CheckRecord, CliError> {
    let m = matrix_delta(9)?;
    let e = matrix_delta_element(9, [5, 1, 1, 0]);
    let idempotent = m.mul(&e, &e) == e && !m.is_central(&e);
    matrix_delta_isomorphism(9)?;
    let cert = decide_ce(&m)?;
    let pass = idempotent && !cert.holds;
    Ok(CheckRecord::new("", Verdict::check(pass))
        .with_evidence(RingSpec::MatrixDelta { n: 9 }, cert)
        .with_detail(format!("e^2 = e non-central: {idempotent}")))
}

fn quaternion_ce(n: u64) -> Result<CheckRecord, CliError> {
    let zn_ring = Ring::zn(n)?;
    let regular = Module::regular(&zn_ring)?;
    let ann = annihilator_of_two(&zn_ring)?;
    let ess = is_essential_submodule(&regular, &ann)?;
    verify_module_certificate(&regular, &ess)?;
    let lattice = all_ideals(&zn_ring, Side::TwoSided, IdealCap::with_order(64))?;
    let lattice_oracle = lattice.iter().filter(|i| !i.is_zero()).all(|i| i.meets(&zn_ring, &ann).is_some());
    let power = is_power_of_two(n);
    let mut rec = CheckRecord::new("", Verdict::Pass).with_evidence(zn(n), ess.clone());
    let mut mismatches = Vec::new();
    if ess.holds != lattice_oracle || ess.holds != power {
        mismatches.push("essential side disagrees with its oracles".to_string());
    }
    let mut pairs = 0;
    for &a in &units(n) {
        for &b in &units(n) {
            pairs += 1;
            let q = quaternion_algebra(&QuaternionParams::over_zn(n, a, b)?)?;
            let cert = decide_ce(&q.ring)?;
            if cert.holds != ess.holds {
                mismatches.push(format!("({a},{b})"));
            }
            rec = rec.with_evidence(quaternion_spec(n, a, b), cert);
        }
    }
    rec.verdict = Verdict::check(mismatches.is_empty());
    rec.witness = format!("CE = {} for all {pairs} pairs", ess.holds);
    Ok(rec.with_detail(if mismatches.is_empty() { String::new() } else { format!("mismatches: {}", mismatches.join(" ")) }))
}

fn quaternion_center(n: u64) -> Result<CheckRecord, CliError> {
    let mut bad = Vec::new();
    let mut pairs = 0;
    for &a in &units(n) {
        for &b in &units(n) {
            pairs += 1;
            let q = quaternion_algebra(&QuaternionParams::over_zn(n, a, b)?)?;
            let brute = center_by_exhaustion(&q.ring);
            if !set_eq(&brute, &quaternion_center_formula(&q)?) || !set_eq(&brute, &center(&q.ring)) {
                bad.push(format!("({a},{b})"));
            }
        }
    }
    Ok(CheckRecord::new("", Verdict::check(bad.is_empty())).with_detail(format!("{pairs} pairs, mismatches: {}", bad.len())))
}

fn rational_commutative(entry: &CorpusEntry) -> Result<CheckRecord, CliError> {
    let cert = is_centrally_rational(&entry.ring, entry.ring.order())?;
    verify_certificate(&entry.ring, &cert)?;
    let comm = entry.ring.is_commutative();
    Ok(CheckRecord::new("", Verdict::check(cert.holds == comm))
        .with_evidence(preset_spec(&entry.name), cert)
        .with_detail(format!("commutative = {comm}")))
}

fn ideal_laws(entry: &CorpusEntry) -> Result<CheckRecord, CliError> {
    match check_laws(&entry.ring, LawCap::default()) {
        Err(e) if e.is_cap() => Ok(CheckRecord::new("", Verdict::Skipped).with_detail(e.to_string())),
        Err(e) => Err(e.into()),
        Ok(laws) => {
            let violations: Vec<String> = laws.iter().flat_map(|l| l.violations.iter().map(move |v| format!("{}: {v}", l.law))).collect();
            let summary: Vec<String> = laws.iter().map(|l| format!("{}={}", l.law, l.instances)).collect();
            let mut rec = CheckRecord::new("", Verdict::check(violations.is_empty())).with_detail(if violations.is_empty() {
                summary.join(" ")
            } else {
                violations.join("; ")
            });
            rec.examined = laws.iter().map(|l| l.instances as u64).sum();
            Ok(rec)
        }
    }
}

fn semiring_order5(_opts: &SuiteOptions) -> Result<CheckRecord, CliError> {
    let s = example_order5();
    let n = |x: &str| s.index_of_name(x).expect("name");
    let center_ok = semiring_center(&s) == vec![n("0"), n("1"), n("c")];
    let comm = is_commutative_semiring(&s);
    let ce = is_ce_semiring(&s);
    let sub = is_semisubtractive(&s);
    for c in [&comm, &ce, &sub] {
        verify_semiring_certificate(&s, c)?;
    }
    let witness_ok = comm.witness
        == Witness::NonCommuting { a: Element(vec![n("a") as u32]), b: Element(vec![n("b") as u32]) };
    let round_trip: Semiring = serde_json::from_str(&serde_json::to_string(&s).expect("serialize")).expect("parse");
    let pass = center_ok && !comm.holds && witness_ok && ce.holds && sub.holds && round_trip == s;
    let spec = preset_spec("semiring_order5");
    Ok(CheckRecord::new("", Verdict::check(pass))
        .with_evidence(spec.clone(), ce)
        .with_evidence(spec.clone(), comm)
        .with_evidence(spec, sub))
}

fn semiring_adapter(_opts: &SuiteOptions) -> Result<CheckRecord, CliError> {
    let corpus = shared_corpus()?;
    let mut bad = Vec::new();
    let mut count = 0;
    for e in corpus.iter().filter(|e| e.ring.order() <= 64) {
        count += 1;
        let s = Semiring::from_ring(&e.ring)?;
        let ring_center: Vec<usize> = center(&e.ring).elements().iter().map(|x| e.ring.index_of(x) as usize).collect();
        let mut ring_center = ring_center;
        ring_center.sort_unstable();
        let ce_ring = exhaustive_ce(&e.ring, e.ring.order())?.holds;
        let ce_semi = is_ce_semiring(&s);
        verify_semiring_certificate(&s, &ce_semi)?;
        if semiring_center(&s) != ring_center || ce_semi.holds != ce_ring {
            bad.push(e.name.clone());
        }
    }
    Ok(CheckRecord::new("", Verdict::check(bad.is_empty())).with_detail(format!("{count} rings, disagreements: {bad:?}")))
}

fn direct_sum_essential(n: u64) -> Result<CheckRecord, CliError> {
    let q = quaternion_algebra(&QuaternionParams::over_zn(n, 1, 1)?)?;
    let r = direct_sum_check(&q)?;
    let mut rec = CheckRecord::new("", Verdict::check(r.violations.is_empty() && r.essential_tuples > 0)).with_detail(format!(
        "{} essential tuples, {} controls, {} violations",
        r.essential_tuples,
        r.control_tuples,
        r.violations.len()
    ));
    rec.examined = (r.essential_tuples + r.control_tuples) as u64;
    Ok(rec)
}

/// Every suite check, in report order.
pub fn suite() -> Result<Vec<SuiteCheck>, CliError> {
    let mut v = vec![
        SuiteCheck::new("ce-char2/Z2Q8", 1, ce_char2),
        SuiteCheck::new("ce-char2/Z2[Q8xC2]", 1, hamiltonian_char2),
        SuiteCheck::new("center-class-sums/Z2Q8", 2, center_class_sums),
        SuiteCheck::new("minimal-ideal-quotient/Z2Q8", 2, minimal_ideal_quotient),
        SuiteCheck::new("ce-odd/Z3Q8", 3, ce_z3q8),
        SuiteCheck::new("ce-odd/Z9Q8", 3, ce_z9q8),
        SuiteCheck::new("ce-char4/Z4Q8", 3, ce_z4q8),
        SuiteCheck::new("ce-char4-lifting/Z4Q8", 3, z4q8_lifting),
        SuiteCheck::new("delta-component/MDelta(Z9)", 4, delta_component),
    ];
    for n in 2..=32 {
        v.push(SuiteCheck::new(format!("quaternion-ce/Z{n}"), 5, move |_| quaternion_ce(n)));
    }
    for n in 2..=9 {
        v.push(SuiteCheck::new(format!("quaternion-center/Z{n}"), 6, move |_| quaternion_center(n)));
    }
    let corpus = shared_corpus()?;
    for (i, e) in corpus.iter().enumerate() {
        let c = corpus.clone();
        v.push(SuiteCheck::new(format!("rational-commutative/{}", e.name), 7, move |_| rational_commutative(&c[i])));
    }
    for (i, e) in corpus.iter().enumerate() {
        let c = corpus.clone();
        v.push(SuiteCheck::new(format!("ideal-laws/{}", e.name), 8, move |_| ideal_laws(&c[i])));
    }
    v.push(SuiteCheck::new("semiring/order5", 9, semiring_order5));
    v.push(SuiteCheck::new("semiring/ring-adapter", 9, semiring_adapter));
    for n in [4, 8] {
        v.push(SuiteCheck::new(format!("direct-sum-essential/Z{n}"), 10, move |_| direct_sum_essential(n)));
    }
    Ok(v)
}

/// Run the selected checks; results keep suite order whatever the thread count.
pub fn run_suite(opts: &SuiteOptions) -> Result<Report, CliError> {
    let checks: Vec<SuiteCheck> = suite()?
        .into_iter()
        .filter(|c| opts.filter.as_deref().is_none_or(|f| c.name.contains(f)))
        .collect();
    let records: Vec<CheckRecord> = checks.par_iter().map(|c| c.run(opts)).collect();
    Ok(Report::new("verify-paper", records))
}
