//! Suite-level behavior through the public API: report shape, determinism,
//! and the JSON schema consumed by the command line front end.

use polybern::identity::{report_to_json, run_suite, FaultTarget, SuiteConfig};
use polybern::scalar::rat;

fn smoke_config() -> SuiteConfig {
    SuiteConfig {
        order: 7,
        k_min: -2,
        k_max: 3,
        symbolic: true,
        lambdas: vec![rat(1, 2), rat(-1, 3), rat(2, 1), rat(5, 7)],
        composition_budget: 100_000,
        fault: None,
    }
}

#[test]
fn smoke_suite_is_green_across_lambdas() {
    let report = run_suite(&smoke_config());
    // 15 λ-dependent checks × 5 representations + 1 classical check.
    assert_eq!(report.len(), 15 * 5 + 1);
    for check in &report {
        assert!(
            check.passed(),
            "{} [{}]: {:?}",
            check.name,
            check.params,
            check.counterexample
        );
    }
}

#[test]
fn report_json_schema_is_stable() {
    let config = SuiteConfig {
        order: 4,
        lambdas: vec![],
        ..smoke_config()
    };
    let json = report_to_json(&run_suite(&config));
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    let checks = parsed.as_array().unwrap();
    assert!(!checks.is_empty());
    for check in checks {
        let object = check.as_object().unwrap();
        assert!(object.contains_key("name"));
        assert!(object.contains_key("params"));
        assert_eq!(object.get("verdict").and_then(|v| v.as_str()), Some("pass"));
        // Passing checks omit the counterexample.
        assert!(!object.contains_key("counterexample"));
    }
}

#[test]
fn failing_check_serializes_its_counterexample() {
    let config = SuiteConfig {
        order: 4,
        lambdas: vec![],
        fault: Some(FaultTarget::DegStirling1Recurrence),
        ..smoke_config()
    };
    let json = report_to_json(&run_suite(&config));
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    let failing: Vec<&serde_json::Value> = parsed
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["verdict"] == "fail")
        .collect();
    assert_eq!(failing.len(), 1);
    let ce = &failing[0]["counterexample"];
    assert!(ce["location"].as_str().unwrap().contains("(n,k)"));
    assert_ne!(ce["lhs"], ce["rhs"]);
}

#[test]
fn two_runs_render_byte_identical_reports() {
    let a = report_to_json(&run_suite(&smoke_config()));
    let b = report_to_json(&run_suite(&smoke_config()));
    assert_eq!(a, b);
}
