//! JSON, CSV and LaTeX renderings of divisor classes.
//!
//! Rationals are written as "p" or "p/q" in lowest terms, so output is
//! byte-deterministic for a given class.

use num::{BigInt, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pic::{DivisorClass, Generator, ModuliBase, Q};

#[derive(Serialize, Deserialize)]
struct ClassDoc {
    g: u32,
    n: u32,
    lambda: String,
    psi: Vec<String>,
    delta0: String,
    boundary: Vec<BoundaryDoc>,
}

#[derive(Serialize, Deserialize)]
struct BoundaryDoc {
    i: u32,
    #[serde(rename = "S")]
    s: Vec<u32>,
    c: String,
}

pub fn format_rational(x: &Q) -> String {
    x.to_string()
}

pub fn parse_rational(s: &str) -> Result<Q> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
    match s.split_once('/') {
        None => Ok(Q::from_integer(int(s)?)),
        Some((p, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(int(p)?, d))
        }
    }
}

fn to_doc(a: &DivisorClass) -> ClassDoc {
    let base = a.base();
    ClassDoc {
        g: base.g,
        n: base.n,
        lambda: format_rational(a.lambda()),
        psi: a.psis().iter().map(format_rational).collect(),
        delta0: format_rational(a.delta0()),
        boundary: a
            .boundary()
            .iter()
            .map(|(k, c)| BoundaryDoc { i: k.genus(), s: k.set(), c: format_rational(c) })
            .collect(),
    }
}

fn from_doc(doc: ClassDoc) -> Result<DivisorClass> {
    let base = ModuliBase::new(doc.g, doc.n)?;
    if doc.psi.len() != base.n as usize {
        return Err(Error::ArityMismatch { expected: base.n as usize, got: doc.psi.len() });
    }
    let mut a = DivisorClass::zero(base);
    a.add_lambda(&parse_rational(&doc.lambda)?);
    for (j, c) in doc.psi.iter().enumerate() {
        a.add_psi(j as u32 + 1, &parse_rational(c)?);
    }
    a.add_delta0(&parse_rational(&doc.delta0)?);
    for e in doc.boundary {
        a.add_boundary(e.i as i64, &e.s, &parse_rational(&e.c)?)?;
    }
    Ok(a)
}

/// Compact JSON document for a class.
pub fn to_json(a: &DivisorClass) -> String {
    serde_json::to_string(&to_doc(a)).expect("plain data serializes")
}

pub fn to_json_pretty(a: &DivisorClass) -> String {
    serde_json::to_string_pretty(&to_doc(a)).expect("plain data serializes")
}

pub fn to_json_value(a: &DivisorClass) -> serde_json::Value {
    serde_json::to_value(to_doc(a)).expect("plain data serializes")
}

/// Parses a class document. Boundary keys may be given in either mirror form.
pub fn from_json(s: &str) -> Result<DivisorClass> {
    let doc: ClassDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    from_doc(doc)
}

pub fn from_json_value(v: serde_json::Value) -> Result<DivisorClass> {
    let doc: ClassDoc = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
    from_doc(doc)
}

fn all_generators(base: &ModuliBase) -> Vec<Generator> {
    let mut gens = vec![Generator::Lambda];
    gens.extend((1..=base.n).map(Generator::Psi));
    gens.push(Generator::Delta0);
    gens.extend(base.boundary_indices().into_iter().map(Generator::Boundary));
    gens
}

/// One CSV row per generator of the base, zeros included.
pub fn to_csv(a: &DivisorClass) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(["generator", "i", "S", "c"]).map_err(err)?;
    for gen in all_generators(&a.base()) {
        let c = format_rational(&a.coeff(&gen));
        let (i, s) = match gen {
            Generator::Boundary(b) => (
                b.genus().to_string(),
                b.set().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "),
            ),
            _ => (String::new(), String::new()),
        };
        w.write_record([gen.to_string(), i, s, c]).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn latex_rational(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", x.numer(), x.denom())
    }
}

/// Symbol for a generator. On M̄_{g,1} and M̄_g the boundary divisors are
/// written δ_i, with i the genus of the component carrying the point.
pub fn latex_generator(base: &ModuliBase, gen: &Generator) -> String {
    match gen {
        Generator::Lambda => "\\lambda".into(),
        Generator::Psi(_) if base.n == 1 => "\\psi".into(),
        Generator::Psi(j) => format!("\\psi_{{{j}}}"),
        Generator::Delta0 => "\\delta_{0}".into(),
        Generator::Boundary(b) if base.n <= 1 => format!("\\delta_{{{}}}", b.genus()),
        Generator::Boundary(b) => {
            let pts: Vec<String> = b.set().iter().map(|p| p.to_string()).collect();
            format!("\\delta_{{{}:\\{{{}\\}}}}", b.genus(), pts.join(","))
        }
    }
}

/// The class as a signed sum, e.g. `6\psi - \lambda - 3\delta_{1} - \delta_{2}`.
pub fn to_latex(a: &DivisorClass) -> String {
    let base = a.base();
    let mut terms = a.terms();
    // ψ terms come first, then λ, δ_0 and the boundary in key order.
    terms.sort_by_key(|(gen, _)| match gen {
        Generator::Psi(_) => (0, *gen),
        _ => (1, *gen),
    });
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (gen, c)) in terms.iter().enumerate() {
        let sym = latex_generator(&base, gen);
        let neg = c.is_negative();
        let mag = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&latex_rational(&mag));
        }
        out.push_str(&sym);
    }
    out
}

/// Plain-text rendering with Unicode symbols, e.g. `6ψ − λ − 3δ_1 − δ_2`,
/// in the same term order as [`to_latex`].
pub fn to_unicode(a: &DivisorClass) -> String {
    let base = a.base();
    let mut terms = a.terms();
    terms.sort_by_key(|(gen, _)| match gen {
        Generator::Psi(_) => (0, *gen),
        _ => (1, *gen),
    });
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (gen, c)) in terms.iter().enumerate() {
        let sym = match gen {
            Generator::Lambda => "λ".to_string(),
            Generator::Psi(_) if base.n == 1 => "ψ".to_string(),
            Generator::Psi(j) => format!("ψ_{j}"),
            Generator::Delta0 => "δ_0".to_string(),
            Generator::Boundary(b) if base.n <= 1 => format!("δ_{}", b.genus()),
            Generator::Boundary(b) => {
                let pts: Vec<String> = b.set().iter().map(|p| p.to_string()).collect();
                format!("δ_{{{}:{{{}}}}}", b.genus(), pts.join(","))
            }
        };
        let neg = c.is_negative();
        let mag = c.abs();
        if k == 0 {
            if neg {
                out.push('−');
            }
        } else {
            out.push_str(if neg { " − " } else { " + " });
        }
        if !mag.is_one() {
            if mag.is_integer() {
                out.push_str(&mag.to_string());
            } else {
                out.push_str(&format!("({mag})"));
            }
        }
        out.push_str(&sym);
    }
    out
}

/// A two-column tabular listing every generator with its coefficient.
pub fn to_latex_table(a: &DivisorClass) -> String {
    let base = a.base();
    let mut out = String::from("\\begin{tabular}{lr}\n\\hline\ngenerator & coefficient \\\\\n\\hline\n");
    for gen in all_generators(&base) {
        out.push_str(&format!("${}$ & ${}$ \\\\\n", latex_generator(&base, &gen), latex_rational(&a.coeff(&gen))));
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pic::{frac, q};

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("-3").unwrap(), q(-3));
        assert_eq!(parse_rational("2/4").unwrap(), frac(1, 2));
        assert_eq!(format_rational(&frac(-6, 4)), "-3/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn json_shape() {
        let base = ModuliBase::new(2, 2).unwrap();
        let mut a = DivisorClass::zero(base);
        a.add_lambda(&frac(1, 10));
        a.add_boundary(1, &[2], &q(-3)).unwrap();
        assert_eq!(
            to_json(&a),
            r#"{"g":2,"n":2,"lambda":"1/10","psi":["0","0"],"delta0":"0","boundary":[{"i":1,"S":[1],"c":"-3"}]}"#
        );
        assert_eq!(from_json(&to_json(&a)).unwrap(), a);
    }

    #[test]
    fn json_rejects_bad_keys() {
        let s = r#"{"g":3,"n":1,"lambda":"0","psi":["0"],"delta0":"0","boundary":[{"i":0,"S":[1],"c":"1"}]}"#;
        assert!(matches!(from_json(s), Err(Error::InvalidBoundary { .. })));
    }
}
