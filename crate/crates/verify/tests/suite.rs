use ellq_verify::{register_builtin_checks, run_suite, select, Severity, Status, SuiteConfig, VerifyError};

#[test]
fn modulus_group_passes() {
    let report = run_suite(&SuiteConfig::new("lemma1", 40, 42)).unwrap();
    assert_eq!(report.checks.len(), 2);
    assert!(report.checks.iter().all(|c| c.status == Status::Pass));
    assert_eq!(report.exit_code(), 0);
}

#[test]
fn trivial_values_pass_and_printed_readings_are_flagged() {
    let report = run_suite(&SuiteConfig::new("thm7", 40, 7)).unwrap();
    for c in &report.checks {
        match c.severity {
            Severity::Normative => assert_eq!(c.status, Status::Pass, "{}", c.id),
            Severity::DiscrepancyAllowed => assert_eq!(c.status, Status::Discrepancy, "{}", c.id),
        }
    }
}

#[test]
fn unknown_selector_is_an_error() {
    match run_suite(&SuiteConfig::new("nosuch", 40, 42)) {
        Err(VerifyError::UnknownSelector(s)) => assert_eq!(s, "nosuch"),
        other => panic!("expected UnknownSelector, got {other:?}"),
    }
    // a prefix must end at a dot
    assert!(select("thm").is_err());
    assert_eq!(select("cf.m-series").unwrap().len(), 1);
}

#[test]
fn reports_are_deterministic() {
    let config = SuiteConfig::new("cf", 30, 3);
    let first = run_suite(&config).unwrap().to_json();
    let second = run_suite(&config).unwrap().to_json();
    assert_eq!(first, second);
    let other_seed = run_suite(&SuiteConfig::new("cf", 30, 4)).unwrap().to_json();
    assert_ne!(first, other_seed);
}

#[test]
fn registry_covers_every_group() {
    let checks = register_builtin_checks();
    assert!(checks.len() >= 25);
    for group in ["intro", "lemma1", "thm1", "rr", "thm3", "thm4", "thm6", "thm7", "thm8", "obs1", "deriv"] {
        assert!(select(group).is_ok(), "no checks for {group}");
    }
}
