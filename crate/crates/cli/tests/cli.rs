use std::process::{Command, Output};

use cering_cli::spec::{build, parse_ring_spec, to_document, GroupSpec, RingSpec};
use cering_cli::{execute, Report, Verdict};
use proptest::prelude::*;

fn cering(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cering")).args(args).env_remove("CERING_CAP").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn machine(args: &[&str]) -> (i32, Report) {
    let mut full = vec!["cering", "--format", "machine"];
    full.extend_from_slice(args);
    let (code, text) = execute(full);
    (code, Report::from_json(&text).expect("machine output parses"))
}

const Z2Q8: &str = r#"{"kind": "group_ring", "coeff": {"kind": "zn", "n": 2}, "group": {"kind": "q8"}}"#;
const M2Z2: &str = r#"{"kind": "preset", "name": "m2_z2"}"#;

#[test]
fn ce_exit_codes() {
    assert_eq!(cering(&["check", "ce", Z2Q8]).status.code(), Some(0));
    let o = cering(&["check", "ce", M2Z2]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("has no central multiplier"));
}

#[test]
fn center_of_z2q8_has_order_32() {
    let (code, r) = machine(&["check", "center", Z2Q8]);
    assert_eq!(code, 0);
    assert_eq!(r.checks[0].witness, "order 32");
}

#[test]
fn cap_exceeded_is_exit_2() {
    let o = cering(&["--cap", "100", "check", "ce", Z2Q8]);
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_cering"))
        .args(["check", "ce", Z2Q8])
        .env("CERING_CAP", "10")
        .output()
        .expect("binary runs");
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("cap"));
}

#[test]
fn usage_errors_are_exit_2() {
    assert_eq!(cering(&["check", "bogus", Z2Q8]).status.code(), Some(2));
    assert_eq!(cering(&["check", "semisubtractive", Z2Q8]).status.code(), Some(2));
    assert_eq!(cering(&["check", "essential", Z2Q8]).status.code(), Some(2));
    assert_eq!(cering(&["search", "--family", "nope"]).status.code(), Some(2));
    assert_eq!(cering(&["check", "ce", "/nonexistent/spec.json"]).status.code(), Some(2));
}

#[test]
fn parse_errors_carry_positions() {
    let (code, r) = machine(&["check", "ce", "{\"kind\": \"zn\",\n \"n\": }"]);
    assert_eq!(code, 2);
    assert_eq!(r.checks[0].verdict, Verdict::Error);
    assert!(r.checks[0].detail.contains("line 2"), "{}", r.checks[0].detail);
    let (code, r) = machine(&["check", "ce", r#"{"kind": "zn", "n": 4, "extra": 1}"#]);
    assert_eq!(code, 2);
    assert!(r.checks[0].detail.contains("extra"));
}

#[test]
fn invalid_tables_are_rejected() {
    let spec = r#"{"kind": "table", "add": [[0,1],[1,0]], "mul": [[0,0],[0,0],[0,0]], "zero": 0}"#;
    assert_eq!(cering(&["check", "ce", spec]).status.code(), Some(2));
}

#[test]
fn spec_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.json");
    std::fs::write(&path, r#"{"kind": "quaternion", "base": {"kind": "zn", "n": 4}, "a": 3, "b": 3}"#).unwrap();
    let o = cering(&["describe", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("order=256") && text.contains("characteristic=4") && text.contains("center=32"), "{text}");
}

#[test]
fn essential_ideal_flag() {
    let z8 = r#"{"kind": "zn", "n": 8}"#;
    let z6 = r#"{"kind": "zn", "n": 6}"#;
    assert_eq!(cering(&["check", "essential", z8, "--ideal", "[[4]]"]).status.code(), Some(0));
    assert_eq!(cering(&["check", "essential", z6, "--ideal", "[[3]]"]).status.code(), Some(1));
    assert_eq!(cering(&["check", "essential", z6, "--ideal", "[[9]]"]).status.code(), Some(2));
}

#[test]
fn refute_mode_with_targets() {
    let z3q8 = r#"{"kind": "preset", "name": "z3q8"}"#;
    let (code, r) = machine(&["check", "ce", z3q8, "--mode", "refute", "--cap", "0", "--targets", "[[0,0,0,0,1,0,0,2]]"]);
    assert_eq!(code, 1);
    assert_eq!(r.checks[0].examined, 1);
}

#[test]
fn semiring_preset() {
    let s = r#"{"kind": "preset", "name": "semiring_order5"}"#;
    assert_eq!(cering(&["check", "ce", s]).status.code(), Some(0));
    assert_eq!(cering(&["check", "semisubtractive", s]).status.code(), Some(0));
    assert_eq!(cering(&["check", "commutative", s]).status.code(), Some(1));
    let (_, r) = machine(&["check", "center", s]);
    assert_eq!(r.checks[0].detail, "{0, 1, c}");
}

#[test]
fn filter_selects_checks() {
    let (code, r) = machine(&["verify-paper", "--filter", "ce-char2"]);
    assert_eq!(code, 0);
    assert_eq!(r.checks.len(), 2);
    assert!(r.checks.iter().all(|c| c.check.starts_with("ce-char2/") && c.verdict == Verdict::Pass));
}

#[test]
fn injected_fault_names_the_failure() {
    let o = cering(&["verify-paper", "--inject-fault", "--filter", "ce-char2/Z2Q8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("ce-char2/Z2Q8"));
}

#[test]
fn recheck_accepts_genuine_and_rejects_tampered_reports() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let (_, report) = machine(&["check", "ce", M2Z2]);
    std::fs::write(&path, report.to_json()).unwrap();
    assert_eq!(cering(&["recheck", path.to_str().unwrap()]).status.code(), Some(0));

    let (_, report) = machine(&["check", "ce", Z2Q8]);
    let tampered = report.to_json().replace(r#""holds": true"#, r#""holds": false"#);
    std::fs::write(&path, tampered).unwrap();
    assert_eq!(cering(&["recheck", path.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let run = |threads: &str| {
        let (_, r) = machine(&["--parallel", threads, "verify-paper", "--filter", "Z2Q8"]);
        r.without_timing()
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn search_examples() {
    let (code, r) = machine(&["search", "--family", "znq8", "--max-n", "4"]);
    assert_eq!(code, 0);
    let z2 = r.checks.iter().find(|c| c.check.ends_with("Z2Q8")).unwrap();
    assert!(z2.detail.contains("1 nilpotent, all nilpotent ones central"), "{}", z2.detail);
    let (code, r) = machine(&["search", "--family", "zn", "--max-n", "12"]);
    assert_eq!(code, 0);
    assert_eq!(r.checks.len(), 11);
    assert!(r.checks.iter().all(|c| c.witness == "commutative"));
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(cering(&["--help"]).status.code(), Some(0));
    assert_eq!(cering(&["--version"]).status.code(), Some(0));
}

fn leaf() -> impl Strategy<Value = RingSpec> {
    prop_oneof![
        (2u64..20).prop_map(|n| RingSpec::Zn { n }),
        prop::sample::select(vec!["z2q8", "m2_z2", "ut2_z3", "semiring_order5"])
            .prop_map(|n| RingSpec::Preset { name: n.to_string() }),
        (1u32..4).prop_map(|n| RingSpec::MatrixDelta { n }),
    ]
}

fn spec() -> impl Strategy<Value = RingSpec> {
    leaf().prop_recursive(2, 6, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..3).prop_map(|summands| RingSpec::DirectSum { summands }),
            (inner.clone(), -5i64..5, -5i64..5).prop_map(|(b, a, bb)| RingSpec::Quaternion { base: Box::new(b), a, b: bb }),
            inner.prop_map(|c| RingSpec::GroupRing { coeff: Box::new(c), group: GroupSpec::Cyclic { n: 2 } }),
        ]
    })
}

proptest! {
    #[test]
    fn documents_round_trip(s in spec()) {
        let doc = to_document(&s);
        prop_assert_eq!(parse_ring_spec(&doc).unwrap(), s);
    }

    #[test]
    fn z_n_describe_matches_n(n in 2u64..40) {
        let doc = format!(r#"{{"kind": "zn", "n": {n}}}"#);
        let built = build(&parse_ring_spec(&doc).unwrap()).unwrap();
        let r = built.ring().unwrap();
        prop_assert_eq!(r.order(), n);
        prop_assert_eq!(r.characteristic(), n);
    }
}
