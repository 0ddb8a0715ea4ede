//! Browser bindings for the mbar library: catalog classes as JSON,
//! de Jonquières counts and the identity suite.
//!
//! Build with `wasm-pack build crates/mbar-web --target web --out-dir www/pkg`
//! and serve `crates/mbar-web/www`.

use mbar::catalog::{build, ClassParams, SpinParity};
use mbar::enumerative::{de_jonquieres, de_jonquieres_unlabelled};
use mbar::io::{format_rational, to_json_value, to_latex, to_unicode};
use mbar::verify::{run_suite, SuiteOptions};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("not an integer list: {s:?}")))
        .collect()
}

/// The class document with its Unicode and LaTeX renderings. Empty `d` and
/// `parity` strings mean the parameter is not given.
pub fn class_document(name: &str, g: u32, k: Option<u32>, h: Option<u32>, d: &str, parity: &str) -> Result<String, String> {
    let d = if d.trim().is_empty() { None } else { Some(parse_list(d)?) };
    let parity = if parity.is_empty() { None } else { Some(parity.parse::<SpinParity>().map_err(|e| e.to_string())?) };
    let a = build(name, &ClassParams { g, k, h, d, parity }).map_err(|e| e.to_string())?;
    let doc = json!({ "class": to_json_value(&a), "text": to_unicode(&a), "latex": to_latex(&a) });
    Ok(serde_json::to_string_pretty(&doc).expect("plain data serializes"))
}

pub fn dj_count(g: u32, kappa: &str, ordered: bool) -> Result<String, String> {
    let ks: Vec<u32> = parse_list(kappa)?;
    let count = if ordered { de_jonquieres(g, &ks) } else { de_jonquieres_unlabelled(g, &ks) };
    count.map(|c| format_rational(&c)).map_err(|e| e.to_string())
}

/// Pass counts and failing instances of the suite, as JSON.
pub fn verify_summary(suite: &str, gmax: u32) -> Result<String, String> {
    let only = (suite != "all").then(|| suite.to_string());
    let report = run_suite(&SuiteOptions { only, ..SuiteOptions::new(gmax) }).map_err(|e| e.to_string())?;
    let passed = report.entries.iter().filter(|e| e.pass).count();
    let failures: Vec<String> = report.failures().map(|e| e.to_string()).collect();
    let doc = json!({ "passed": passed, "total": report.entries.len(), "failures": failures });
    Ok(serde_json::to_string_pretty(&doc).expect("plain data serializes"))
}

#[wasm_bindgen]
pub fn class_json(name: &str, g: u32, k: Option<u32>, h: Option<u32>, d: &str, parity: &str) -> Result<String, JsError> {
    class_document(name, g, k, h, d, parity).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn dj(g: u32, kappa: &str, ordered: bool) -> Result<String, JsError> {
    dj_count(g, kappa, ordered).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify(suite: &str, gmax: u32) -> Result<String, JsError> {
    verify_summary(suite, gmax).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_document_has_all_renderings() {
        let text = class_document("weierstrass", 3, None, None, "", "").unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["text"], "6ψ − λ − 3δ_1 − δ_2");
        let a = mbar::io::from_json_value(v["class"].clone()).unwrap();
        assert_eq!(a, build("weierstrass", &ClassParams { g: 3, ..Default::default() }).unwrap());
    }

    #[test]
    fn weights_and_parity_are_parsed() {
        let text = class_document("coupled", 3, None, None, "-2, 2", "odd").unwrap();
        assert!(text.contains("\"class\""));
        assert!(class_document("coupled", 3, None, None, "-2,x", "").is_err());
        assert!(class_document("theta-char", 3, None, None, "", "sideways").is_err());
    }

    #[test]
    fn dj_counts() {
        assert_eq!(dj_count(4, "1,2,2", false).unwrap(), "68");
        assert_eq!(dj_count(4, "1,2,2", true).unwrap(), "136");
        assert!(dj_count(2, "2,2,2", false).is_err());
    }

    #[test]
    fn verify_summarizes() {
        let v: serde_json::Value = serde_json::from_str(&verify_summary("R1", 5).unwrap()).unwrap();
        assert_eq!(v["passed"], 4);
        assert_eq!(v["total"], 4);
        assert!(v["failures"].as_array().unwrap().is_empty());
        assert!(verify_summary("R99", 5).is_err());
    }
}
