//! The relation registry and suite runner.

use mbar::verify::{relation, relations, run_relation, run_suite, Params, SuiteOptions};
use mbar::Error;

#[test]
fn suite_passes_through_genus_five() {
    let report = run_suite(&SuiteOptions::new(5)).unwrap();
    let failures: Vec<String> = report.failures().map(|e| e.to_string()).collect();
    assert!(failures.is_empty(), "{failures:#?}");
    for r in relations() {
        assert!(report.count(r.name) > 0, "{} has no instances", r.name);
    }
}

#[test]
fn single_relations_run_by_name() {
    let e = run_relation("R1", &Params::new().with("g", 5)).unwrap();
    assert!(e.pass, "{e}");
    let e = run_relation("R7", &Params::new().with("g", 3).with("h", 2).with("parity", "odd")).unwrap();
    assert!(e.pass, "{e}");
}

#[test]
fn negative_flag_checks_pass_when_the_flag_is_false() {
    let e = run_relation("R17", &Params::new().with("g", 4).with("class", "residual")).unwrap();
    assert!(e.pass && e.mismatch.is_none(), "{e}");
}

#[test]
fn bad_requests_are_errors() {
    assert!(matches!(relation("R99"), Err(Error::UnknownRelation(_))));
    assert!(matches!(run_relation("R1", &Params::new().with("g", 3)), Err(Error::ParamOutOfRange(_))));
    assert!(matches!(run_relation("R1", &Params::new()), Err(Error::ParamOutOfRange(_))));
    assert!(run_suite(&SuiteOptions::new(2)).is_err());
    let only = SuiteOptions { only: Some("nope".into()), ..SuiteOptions::new(4) };
    assert!(matches!(run_suite(&only), Err(Error::UnknownRelation(_))));
}

#[test]
fn filtered_suite_matches_full_suite() {
    let full = run_suite(&SuiteOptions::new(4)).unwrap();
    for r in relations() {
        let only = SuiteOptions { only: Some(r.name.into()), ..SuiteOptions::new(4) };
        let part = run_suite(&only).unwrap();
        assert_eq!(part.entries.len(), full.count(r.name));
        assert!(part.entries.iter().all(|e| e.relation == r.name));
    }
}

#[test]
fn report_json_is_deterministic() {
    let a = run_suite(&SuiteOptions::new(4)).unwrap().to_json();
    let b = run_suite(&SuiteOptions::new(4)).unwrap().to_json();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries[0]["relation"], "R1");
    assert_eq!(entries[0]["params"]["g"], "4");
    assert_eq!(entries[0]["pass"], true);
}
