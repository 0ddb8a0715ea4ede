//! End-to-end runs of the `mbar` binary.

use std::process::{Command, Output};

use mbar::catalog::{build, ClassParams};
use mbar::io::from_json;
use mbar::maps::{parse_map_kind, pullback_chain, GluingMap};
use mbar::ModuliBase;

fn mbar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mbar")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = mbar(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn class_json_round_trips_and_is_deterministic() {
    let args = ["class", "--name", "weierstrass", "--g", "3", "--format", "json"];
    let text = stdout(&args);
    assert_eq!(text, stdout(&args));
    let a = from_json(&text).unwrap();
    assert_eq!(a, build("weierstrass", &ClassParams { g: 3, ..Default::default() }).unwrap());
    assert_eq!(stdout(&["class", "--name", "weierstrass", "--g", "3", "--format", "text"]), "6ψ − λ − 3δ_1 − δ_2\n");
}

#[test]
fn negative_weights_parse() {
    let text = stdout(&["class", "--name", "coupled", "--g", "3", "--d", "-2,1,1"]);
    let params = ClassParams { g: 3, d: Some(vec![-2, 1, 1]), ..Default::default() };
    assert_eq!(from_json(&text).unwrap(), build("coupled", &params).unwrap());
}

#[test]
fn other_formats_render() {
    let csv = stdout(&["class", "--name", "bn", "--g", "3", "--format", "csv"]);
    assert!(csv.starts_with("generator,i,S,c\nlambda,,,6\n"), "{csv}");
    let latex = stdout(&["class", "--name", "bn", "--g", "3", "--format", "latex"]);
    assert!(latex.contains("\\lambda"), "{latex}");
}

#[test]
fn pullback_composes_maps_in_order() {
    let specs = ["glue-tail:h=1,j=0,at=1", "forget:j=2"];
    let text = stdout(&["pullback", "--name", "residual", "--g", "4", "--map", specs[0], "--map", specs[1]]);
    let r = build("residual", &ClassParams { g: 4, ..Default::default() }).unwrap();
    let first = GluingMap::into_codomain(parse_map_kind(specs[0]).unwrap(), r.base()).unwrap();
    let second = GluingMap::into_codomain(parse_map_kind(specs[1]).unwrap(), first.domain()).unwrap();
    assert_eq!(second.domain(), ModuliBase::new(3, 2).unwrap());
    assert_eq!(from_json(&text).unwrap(), pullback_chain(&[second, first], &r).unwrap());
}

#[test]
fn counting_commands() {
    assert_eq!(stdout(&["dj", "--g", "4", "--kappa", "1,2,2"]), "68\n");
    assert_eq!(stdout(&["dj", "--g", "4", "--kappa", "1,2,2", "--ordered"]), "136\n");
    assert_eq!(stdout(&["plucker", "--r", "1", "--d", "3", "--g", "2"]), "8\n");
    assert_eq!(stdout(&["picdeg", "--g", "2", "--weights", "5,1"]), "50\n");
    assert_eq!(stdout(&["residue", "--j", "4", "--k", "3", "--m", "3", "--roots"]), "[1, 6, 3]\n2\n");
    assert_eq!(stdout(&["pair", "--name", "residual", "--g", "4", "--curve", "A"]), "120\n");
    assert_eq!(stdout(&["pair", "--name", "residual", "--g", "5", "--curve", "C_i", "--i", "2"]), "120\n");
}

#[test]
fn verify_reports_and_exits_zero() {
    let text = stdout(&["verify", "--suite", "R1", "--gmax", "5"]);
    assert!(text.ends_with("4/4 passed\n"), "{text}");
    let json = stdout(&["verify", "--suite", "R7", "--gmax", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    assert!(entries.iter().all(|e| e["relation"] == "R7" && e["pass"] == true));
}

#[test]
fn errors_exit_with_code_two() {
    for args in [
        &["class", "--name", "nope", "--g", "3"][..],
        &["class", "--g", "3"],
        &["class", "--name", "weierstrass", "--g", "3", "--parity", "odd-ish"],
        &["dj", "--g", "2", "--kappa", "2,2,2"],
        &["verify", "--suite", "R99"],
        &["verify", "--gmax", "2"],
        &["pullback", "--name", "residual", "--g", "4", "--map", "glue-tail:h=9,j=0,at=1"],
        &["picdeg", "--g", "2", "--weights", "5,x"],
    ] {
        let out = mbar(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn out_flag_writes_the_file() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("mbar-cli-out.json");
    let path_str = path.to_str().unwrap();
    let out = mbar(&["class", "--name", "diaz", "--g", "4", "--out", path_str]);
    assert!(out.status.success() && out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&["class", "--name", "diaz", "--g", "4"]));
}
