//! Registry of pullback identities between catalog classes, and a suite
//! runner that evaluates them exactly over parameter ranges.
//!
//! Each relation enumerates parameter instances and turns one instance into
//! a [`Check`]: usually an equality of two classes on the same base, built by
//! pulling one class back along the maps module and combining others from
//! the catalog. Multiplicities that come from a count are cross-checked
//! against the enumerative module where one is available.

use std::fmt;

use num::{BigInt, One, Zero};
use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::catalog::{self, SpinParity};
use crate::curves::{builtin_test_curve, pair};
use crate::enumerative::{picard_degree, plucker};
use crate::error::{Error, Result};
use crate::io::format_rational;
use crate::maps::{pullback, GluingMap};
use crate::pic::{canonical_index, frac, mask_of, pow2, q, raw_valid, DivisorClass, Generator, ModuliBase, Q};

/// Named parameters of one relation instance, in insertion order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Params(Vec<(&'static str, String)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    pub fn with(mut self, key: &'static str, value: impl fmt::Display) -> Self {
        self.0.push((key, value.to_string()));
        self
    }

    pub fn with_d(self, key: &'static str, d: &[i64]) -> Self {
        let s: Vec<String> = d.iter().map(|x| x.to_string()).collect();
        self.with(key, s.join(","))
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| v.as_str())
    }

    fn req(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| Error::ParamOutOfRange(format!("missing parameter {key}")))
    }

    fn u(&self, key: &str) -> Result<u32> {
        let v = self.req(key)?;
        v.parse().map_err(|_| Error::ParamOutOfRange(format!("{key}={v} is not a nonnegative integer")))
    }

    fn d(&self, key: &str) -> Result<Vec<i64>> {
        let v = self.req(key)?;
        v.split(',')
            .map(|t| t.trim().parse().map_err(|_| Error::ParamOutOfRange(format!("{key}={v} is not a weight list"))))
            .collect()
    }

    fn parity(&self) -> Result<SpinParity> {
        self.get("parity").map_or(Ok(SpinParity::Total), str::parse)
    }

    fn variant(&self) -> &str {
        self.get("variant").unwrap_or("")
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

/// What one relation instance asserts.
#[derive(Clone, Debug)]
pub enum Check {
    /// The two classes are equal.
    Equal(DivisorClass, DivisorClass),
    /// The two classes differ (used to show that a plausible variant fails).
    Differ(DivisorClass, DivisorClass),
    /// Two numbers are equal.
    Number(Q, Q),
    /// A predicate takes the expected value.
    Flag { value: bool, expected: bool },
}

/// Where a failed check went wrong.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Mismatch {
    pub generator: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Entry {
    pub relation: &'static str,
    pub params: Params,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} [{}]", if self.pass { "PASS" } else { "FAIL" }, self.relation, self.params)?;
        if let Some(m) = &self.mismatch {
            write!(f, " first difference at {}: {} vs {}", m.generator, m.lhs, m.rhs)?;
        }
        if let Some(e) = &self.error {
            write!(f, " error: {e}")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Report {
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn count(&self, relation: &str) -> usize {
        self.entries.iter().filter(|e| e.relation == relation).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{e}")?;
        }
        let passed = self.entries.iter().filter(|e| e.pass).count();
        write!(f, "{passed}/{} passed", self.entries.len())
    }
}

/// Ranges for [`run_suite`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteOptions {
    pub g_max: u32,
    pub n_max: u32,
    pub h_max: u32,
    /// Restrict to one relation by name.
    pub only: Option<String>,
}

impl SuiteOptions {
    pub fn new(g_max: u32) -> Self {
        SuiteOptions { g_max, n_max: 6, h_max: 4, only: None }
    }
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions::new(8)
    }
}

/// A registered identity.
pub struct Relation {
    pub name: &'static str,
    pub summary: &'static str,
    /// Catalog constructors the relation exercises, by registry name.
    pub classes: &'static [&'static str],
    instances: fn(&SuiteOptions) -> Vec<Params>,
    check: fn(&Params) -> Result<Check>,
}

impl Relation {
    pub fn instances(&self, opts: &SuiteOptions) -> Vec<Params> {
        (self.instances)(opts)
    }

    pub fn check(&self, p: &Params) -> Result<Check> {
        (self.check)(p)
    }
}

// ---------------------------------------------------------------------------
// Helpers

fn base(g: u32, n: u32) -> Result<ModuliBase> {
    ModuliBase::new(g, n)
}

/// Pullback along the tail-gluing map with the given domain.
fn glue(g: u32, n: u32, h: u32, j: u32, at: u32, a: &DivisorClass) -> Result<DivisorClass> {
    pullback(&GluingMap::glue_tail(base(g, n)?, h, j, at)?, a)
}

fn glue_closed(g: u32, n: u32, h: u32, at: u32, a: &DivisorClass) -> Result<DivisorClass> {
    pullback(&GluingMap::glue_closed_tail(base(g, n)?, h, at)?, a)
}

/// Pullback along the map forgetting point j of M̄_{g,n}.
fn forget(g: u32, n: u32, j: u32, a: &DivisorClass) -> Result<DivisorClass> {
    pullback(&GluingMap::forget_point(base(g, n)?, j)?, a)
}

/// Σ c·class over the terms, all on one base.
fn lin(terms: &[(Q, &DivisorClass)]) -> Result<DivisorClass> {
    let (_, first) = terms.first().expect("at least one term");
    terms.iter().try_fold(DivisorClass::zero(first.base()), |acc, (c, a)| acc.add_scaled(c, a))
}

fn qi(x: i64) -> Q {
    q(x)
}

fn qb(x: BigInt) -> Q {
    Q::from_integer(x)
}

fn w(g: u32) -> Result<DivisorClass> {
    catalog::weierstrass(g)
}

fn theta(g: u32, p: SpinParity) -> Result<DivisorClass> {
    catalog::theta_characteristic_locus(g, p)
}

fn coupled(g: u32, d: &[i64], p: SpinParity) -> Result<DivisorClass> {
    catalog::coupled_partition(g, d, p)
}

fn ones(n: u32) -> Vec<i64> {
    vec![1; n as usize]
}

fn parities(all_even: bool) -> Vec<SpinParity> {
    if all_even {
        vec![SpinParity::Total, SpinParity::Odd, SpinParity::Even]
    } else {
        vec![SpinParity::Total]
    }
}

fn other_parity(p: SpinParity) -> SpinParity {
    match p {
        SpinParity::Odd => SpinParity::Even,
        SpinParity::Even => SpinParity::Odd,
        SpinParity::Total => SpinParity::Total,
    }
}

/// Compositions of `total` into `parts` positive integers.
fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total - parts as i64 + 1 {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Zero-sum weight vectors used for the coupled relations: every sorted
/// vector of length 2..=4 with entries in ±1..±4 whose negative part is not
/// exactly {−2}, plus a few longer ones.
fn zero_sum_samples(n_max: u32) -> Vec<Vec<i64>> {
    fn rec(len: usize, min: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if acc.len() == len {
            if acc.iter().sum::<i64>() == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for x in min..=4 {
            if x != 0 {
                acc.push(x);
                rec(len, x, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    for len in 2..=4usize.min(n_max as usize) {
        rec(len, -4, &mut Vec::new(), &mut out);
    }
    for extra in [
        vec![-3, -1, 1, 1, 2],
        vec![-1, -1, -1, 1, 2],
        vec![-4, -2, 2, 2, 2],
        vec![-1, -1, -1, 1, 1, 1],
        vec![-2, -2, 1, 1, 1, 1],
        vec![-2, -2, -2, 2, 2, 2],
    ] {
        if extra.len() <= n_max as usize {
            out.push(extra);
        }
    }
    out.retain(|d| {
        let neg: Vec<i64> = d.iter().copied().filter(|&x| x < 0).collect();
        neg != [-2]
    });
    out
}

fn all_even(d: &[i64]) -> bool {
    d.iter().all(|x| x % 2 == 0)
}

// ---------------------------------------------------------------------------
// Relations on one-point spaces

fn r1_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    for g in 4..=o.g_max {
        v.push(Params::new().with("g", g));
        v.push(Params::new().with("g", g).with("variant", "multiplicity"));
    }
    v
}

fn r1_check(p: &Params) -> Result<Check> {
    let g = p.u("g")?;
    if g < 4 {
        return Err(Error::ParamOutOfRange(format!("R1 needs g ≥ 4, got {g}")));
    }
    if p.variant() == "multiplicity" {
        let (k, i) = (g as i64 - 1, 1);
        return Ok(Check::Number(qb(plucker(k, k + i, i)), qi(g as i64 * g as i64)));
    }
    let lhs = glue(g - 1, 1, 1, 0, 1, &catalog::residual(g)?)?;
    let diaz = forget(g - 1, 1, 1, &catalog::diaz(g - 1)?)?;
    let rhs = lin(&[(qi((g * g) as i64), &w(g - 1)?), (Q::one(), &diaz)])?;
    Ok(Check::Equal(lhs, rhs))
}

fn r2_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    for g in 2..o.g_max {
        for h in 2..=o.h_max {
            if g + h <= o.g_max {
                v.push(Params::new().with("g", g).with("h", h));
                v.push(Params::new().with("g", g).with("h", h).with("variant", "multiplicity"));
            }
        }
    }
    v
}

fn r2_check(p: &Params) -> Result<Check> {
    let (g, h) = (p.u("g")?, p.u("h")?);
    let gh = (g + h) as i64;
    if p.variant() == "multiplicity" {
        // Solutions of (g+h)p + Σ_{h−1} q_j ~ ⋯ on a genus-h curve, the q_j unordered.
        let mut ks = vec![gh];
        ks.extend(ones(h - 1));
        let ordered = qb(picard_degree(&ks, h)?);
        let labels: BigInt = (1..h as i64).map(BigInt::from).product();
        return Ok(Check::Number(ordered / qb(labels), qi(gh * gh * h as i64)));
    }
    let lhs = glue(g, 1, h, 0, 1, &catalog::residual(g + h)?)?;
    let mult = gh * gh * h as i64 - (h as i64 - 1);
    let rhs = lin(&[(qi(mult), &w(g)?), (Q::one(), &catalog::d1_mero(g, h)?)])?;
    Ok(Check::Equal(lhs, rhs))
}

fn r3_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    for g in 3..=o.g_max {
        for k in 0..g {
            for i in 1..g {
                let ok = if i < g - k {
                    g - i >= 3
                } else if i == g - k {
                    k >= 3
                } else {
                    g - i >= 2
                };
                if ok {
                    v.push(Params::new().with("g", g).with("k", k).with("i", i));
                }
                v.push(Params::new().with("g", g).with("k", k).with("i", i).with("variant", "multiplicity"));
            }
        }
    }
    if o.g_max >= 3 {
        v.push(Params::new().with("g", 3).with("k", 1).with("variant", "spin components"));
    }
    v
}

fn r3_check(p: &Params) -> Result<Check> {
    let (g, k) = (p.u("g")?, p.u("k")?);
    if p.variant() == "spin components" {
        let parts = theta(g, SpinParity::Odd)?.add(&theta(g, SpinParity::Even)?)?;
        return Ok(Check::Equal(catalog::d1_holo(g, k)?, parts));
    }
    let i = p.u("i")?;
    let (ki, ii) = (k as i64, i as i64);
    let ram = (ki + 1) * (ki + 1) * ii;
    if p.variant() == "multiplicity" {
        return Ok(Check::Number(qb(plucker(ki, ki + ii, ii)), qi(ram)));
    }
    if i == 0 || i >= g {
        return Err(Error::ParamOutOfRange(format!("R3 needs 0 < i < g, got i={i}")));
    }
    let lhs = glue(g - i, 1, i, 0, 1, &catalog::d1_holo(g, k)?)?;
    let gi = g - i;
    let rhs = if i < g - k {
        lin(&[(qi(ram), &w(gi)?), (Q::one(), &catalog::d1_holo(gi, k)?)])?
    } else if i == g - k {
        let diaz = forget(gi, 1, 1, &catalog::diaz(gi)?)?;
        lin(&[(qi(ram), &w(gi)?), (Q::one(), &diaz)])?
    } else {
        let h = k + i + 1 - g;
        lin(&[(qi(ram - (ki - g as i64 + ii)), &w(gi)?), (Q::one(), &catalog::d1_mero(gi, h)?)])?
    };
    Ok(Check::Equal(lhs, rhs))
}

fn r7_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    for g in 2..o.g_max {
        for h in 1..=o.h_max {
            if g + h <= o.g_max {
                for parity in ["odd", "even"] {
                    v.push(Params::new().with("g", g).with("h", h).with("parity", parity));
                    if h >= 2 {
                        v.push(Params::new().with("g", g).with("h", h).with("parity", parity).with("variant", "naive"));
                    }
                }
            }
        }
    }
    v
}

fn r7_check(p: &Params) -> Result<Check> {
    let (g, h, parity) = (p.u("g")?, p.u("h")?, p.parity()?);
    if parity == SpinParity::Total {
        return Err(Error::ParamOutOfRange("R7 needs parity odd or even".into()));
    }
    let lhs = glue(g, 1, h, 0, 1, &theta(g + h, parity)?)?;
    // The naive multiplicities 2^h ± 1 are right only for h = 1. The counts
    // of even and odd theta characteristics on the tail carry 2^{h−1}.
    let (same, cross) = (pow2(h as i64) + Q::one(), pow2(h as i64) - Q::one());
    let (same, cross) = if p.variant() == "naive" {
        (same, cross)
    } else {
        (pow2(h as i64 - 1) * same, pow2(h as i64 - 1) * cross)
    };
    let rhs = lin(&[(same, &theta(g, parity)?), (cross, &theta(g, other_parity(parity))?)])?;
    Ok(if p.variant() == "naive" { Check::Differ(lhs, rhs) } else { Check::Equal(lhs, rhs) })
}

fn r17_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    for g in 3..=o.g_max {
        let mut add = |class: &str, extra: Option<(&'static str, u32)>| {
            let mut p = Params::new().with("g", g).with("class", class);
            if let Some((key, val)) = extra {
                p = p.with(key, val);
            }
            v.push(p);
        };
        add("weierstrass", None);
        add("bn", None);
        add("combination", None);
        add("residual", None);
        for k in 0..g {
            add("d1-holo", Some(("k", k)));
        }
        for h in 2..=o.h_max {
            add("d1-mero", Some(("h", h)));
        }
        for parity in ["odd", "even", "total"] {
            v.push(Params::new().with("g", g).with("class", "theta-char").with("parity", parity));
        }
    }
    v
}

fn r17_check(p: &Params) -> Result<Check> {
    let g = p.u("g")?;
    let class = p.req("class")?;
    let (a, expected) = match class {
        "weierstrass" => (w(g)?, true),
        "bn" => (catalog::brill_noether(g)?, true),
        "combination" => (lin(&[(frac(2, 3), &catalog::brill_noether(g)?), (frac(5, 7), &w(g)?)])?, true),
        "residual" => (catalog::residual(g)?, false),
        // k = 0 is a multiple of W.
        "d1-holo" => {
            let k = p.u("k")?;
            (catalog::d1_holo(g, k)?, k == 0)
        }
        "d1-mero" => (catalog::d1_mero(g, p.u("h")?)?, false),
        // The even theta-null locus at g = 3 is the pulled-back hyperelliptic
        // locus, a multiple of BN.
        "theta-char" => {
            let parity = p.parity()?;
            (theta(g, parity)?, g == 3 && parity == SpinParity::Even)
        }
        other => return Err(Error::UnknownClass(other.to_string())),
    };
    Ok(Check::Flag { value: catalog::bn_coefficient_check(&a)?, expected })
}

fn r18_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    for g in 3..=o.g_max {
        for c in ["A.W", "A.R", "D.R", "E.R", "E.W"] {
            v.push(Params::new().with("g", g).with("pairing", c));
        }
        for i in 1..g {
            v.push(Params::new().with("g", g).with("i", i).with("pairing", "C.R"));
            v.push(Params::new().with("g", g).with("i", i).with("pairing", "C.W"));
            if i + 1 < g {
                v.push(Params::new().with("g", g).with("i", i).with("pairing", "B.R"));
            }
        }
    }
    v
}

fn r18_check(p: &Params) -> Result<Check> {
    let g = p.u("g")?;
    let gi = g as i64;
    let b = base(g, 1)?;
    let curve = |name: &str, params: &[u32]| builtin_test_curve(name, b, params);
    let r = catalog::residual(g)?;
    let which = p.req("pairing")?;
    let (lhs, rhs) = match which {
        "A.W" => (pair(&curve("A", &[])?, &w(g)?)?, qi((gi + 1) * gi * (gi - 1))),
        "A.R" => (pair(&curve("A", &[])?, &r)?, qi((gi + 1) * gi * (gi - 1) * (gi - 2))),
        "D.R" => {
            let ram: i64 = (2..gi).map(|i| (i - 1) * (gi * i - gi - i)).sum();
            (pair(&curve("D", &[])?, &r)?, qi(gi * gi * (gi - 1) * (gi - 2) + gi * ram))
        }
        "E.R" => (pair(&curve("E", &[])?, &r)?, Q::zero()),
        "E.W" => (pair(&curve("E", &[])?, &w(g)?)?, Q::zero()),
        "C.R" | "C.W" | "B.R" => {
            let i = p.u("i")?;
            let ii = i as i64;
            match which {
                "C.R" => (pair(&curve("C_i", &[i])?, &r)?, qi(gi * (gi * gi - 1) * (ii - 1))),
                // The point moves on the genus-i side, so it meets W at the
                // limits lying on that side.
                "C.W" => (pair(&curve("C_i", &[i])?, &w(g)?)?, qi((gi + 1) * (gi - 1) * ii)),
                _ => (
                    pair(&curve("B_i", &[i])?, &r)?,
                    qi(gi * (gi * gi * ii + gi * ii - gi + ii - 1) * (gi - ii) * (gi - ii - 1)),
                ),
            }
        }
        other => return Err(Error::ParamOutOfRange(format!("unknown pairing {other}"))),
    };
    Ok(Check::Number(lhs, rhs))
}

// ---------------------------------------------------------------------------
// Logan, theta-pullback and anti-ramification relations

fn r4_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    for g in 2..=o.g_max {
        v.push(Params::new().with("g", g));
        // The closed form holds for n ≥ i.
        for i in 1..g {
            for n in i..g {
                v.push(Params::new().with("g", g).with("i", i).with("n", n).with("variant", "B_{i,n}"));
            }
        }
    }
    v
}

fn r4_check(p: &Params) -> Result<Check> {
    let g = p.u("g")?;
    let top = catalog::logan_class(g, &ones(g))?;
    if p.variant() == "B_{i,n}" {
        let (i, n) = (p.u("i")?, p.u("n")?);
        let curve = builtin_test_curve("B_{i,n}", base(g, g)?, &[i, n])?;
        let (gi, ii, ni) = (g as i64, i as i64, n as i64);
        return Ok(Check::Number(pair(&curve, &top)?, qi((ni - ii) * (ii * ii + gi * ni - gi * ii - ii * ni - 1))));
    }
    if g < 2 {
        return Err(Error::ParamOutOfRange("R4 needs g ≥ 2".into()));
    }
    Ok(Check::Equal(glue(g, 1, 0, g - 1, 1, &top)?, w(g)?))
}

fn r5_instances(o: &SuiteOptions) -> Vec<Params> {
    (1..o.g_max).map(|g| Params::new().with("g", g)).collect()
}

fn r5_check(p: &Params) -> Result<Check> {
    let g = p.u("g")?;
    let lhs = glue(g, g, 1, 1, 1, &catalog::logan_class(g + 1, &ones(g + 1))?)?;
    Ok(Check::Equal(lhs, catalog::logan_class(g, &ones(g))?))
}

fn r6_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    let n_cap = o.n_max.min(4);
    // One pole, produced by a genus-h tail at the last point.
    for g in 1..o.g_max {
        for h in 1..=o.h_max {
            if g + h > o.g_max {
                continue;
            }
            for m in 1..n_cap {
                for d in compositions((g + h) as i64 - 1, m as usize) {
                    v.push(Params::new().with("variant", "one pole").with("g", g).with("h", h).with_d("d", &d));
                }
            }
        }
    }
    // Poles gathered on a rational tail, and tails of positive genus.
    for g in 1..=o.g_max {
        for poles in [vec![-1, -1], vec![-1, -2], vec![-2, -2], vec![-1, -1, -1]] {
            for m in 1..=2usize {
                if m + poles.len() > n_cap as usize {
                    continue;
                }
                let total = g as i64 - 1 - poles.iter().sum::<i64>();
                for d in compositions(total, m) {
                    let mut e = d.clone();
                    e.extend(&poles);
                    v.push(Params::new().with("variant", "poles on a tail").with("g", g).with_d("d", &e));
                    let mut swapped = e.clone();
                    swapped.swap(1, m);
                    v.push(Params::new().with("variant", "two-point reduction").with("g", g).with_d("d", &swapped));
                    for s in 1..e.len() as u32 {
                        for i in 1..g {
                            if genus_tail_weights(&e, s, i).is_none() {
                                continue;
                            }
                            v.push(
                                Params::new()
                                    .with("variant", "genus tail")
                                    .with("g", g)
                                    .with("i", i)
                                    .with("s", s)
                                    .with_d("d", &e),
                            );
                        }
                    }
                }
            }
        }
    }
    v
}

/// Weights left on the genus g−i side when the last s points ride on a
/// genus-i tail, if they still define a theta-pullback class.
fn genus_tail_weights(d: &[i64], s: u32, i: u32) -> Option<Vec<i64>> {
    let cut = d.len() - s as usize;
    let mut low: Vec<i64> = d[..cut].to_vec();
    low.push(d[cut..].iter().sum::<i64>() - i as i64);
    (!low.contains(&0) && low.iter().any(|&x| x < 0)).then_some(low)
}

fn r6_check(p: &Params) -> Result<Check> {
    let g = p.u("g")?;
    let d = p.d("d")?;
    let n = d.len() as u32;
    match p.variant() {
        "one pole" => {
            let h = p.u("h")?;
            let mut top = d.clone();
            top.push(1);
            let mut low = d.clone();
            low.push(-(h as i64));
            let lhs = glue(g, n + 1, h, 0, n + 1, &catalog::logan_class(g + h, &top)?)?;
            Ok(Check::Equal(lhs, catalog::theta_pullback_class(g, &low)?))
        }
        "poles on a tail" => {
            let m = d.iter().take_while(|&&x| x > 0).count() as u32;
            let mut merged: Vec<i64> = d[..m as usize].to_vec();
            merged.push(d[m as usize..].iter().sum());
            let lhs = glue(g, m + 1, 0, n - m - 1, m + 1, &catalog::theta_pullback_class(g, &d)?)?;
            Ok(Check::Equal(lhs, catalog::theta_pullback_class(g, &merged)?))
        }
        "two-point reduction" => {
            let pole = d[1];
            if pole >= 0 {
                return Err(Error::ParamOutOfRange("two-point reduction needs a pole at point 2".into()));
            }
            let lhs = glue(g, 2, 0, n - 2, 1, &catalog::theta_pullback_class(g, &d)?)?;
            Ok(Check::Equal(lhs, catalog::theta_pullback_class(g, &[g as i64 - 1 - pole, pole])?))
        }
        "genus tail" => {
            // The last s points ride on a genus-i tail attached to the rest.
            let (i, s) = (p.u("i")?, p.u("s")?);
            let low = genus_tail_weights(&d, s, i)
                .filter(|_| i < g)
                .ok_or_else(|| Error::ParamOutOfRange("genus tail leaves no pole or a zero weight".into()))?;
            let lhs = glue(g - i, n - s + 1, i, s - 1, n - s + 1, &catalog::theta_pullback_class(g, &d)?)?;
            Ok(Check::Equal(lhs, catalog::theta_pullback_class(g - i, &low)?))
        }
        other => Err(Error::ParamOutOfRange(format!("unknown R6 variant {other}"))),
    }
}

fn r8_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    for g in 3..=o.g_max {
        v.push(Params::new().with("g", g).with("variant", "rational tail"));
        if g < o.g_max {
            v.push(Params::new().with("g", g).with("variant", "elliptic tail"));
        }
        let b = ModuliBase::new(g, g - 1).expect("g ≥ 3");
        for i in 1..=g {
            for s in 1..i {
                if raw_valid(&b, i as i64, mask_of(&(1..=s).collect::<Vec<_>>()))
                    && raw_valid(&b, i as i64 - 1, mask_of(&(1..s).collect::<Vec<_>>()))
                {
                    v.push(Params::new().with("g", g).with("i", i).with("s", s).with("variant", "recursion"));
                }
            }
        }
    }
    v
}

fn r8_check(p: &Params) -> Result<Check> {
    let g = p.u("g")?;
    match p.variant() {
        "rational tail" => {
            let lhs = glue(g, 1, 0, g - 2, 1, &catalog::anti_ramification(g)?)?;
            Ok(Check::Equal(lhs, catalog::d1_holo(g, 1)?))
        }
        "elliptic tail" => {
            let lhs = glue(g, g, 1, 0, 1, &catalog::anti_ramification(g + 1)?)?;
            let rest = forget(g, g, 1, &catalog::anti_ramification(g)?)?;
            let rhs = lin(&[(qi(4), &catalog::logan_class(g, &ones(g))?), (Q::one(), &rest)])?;
            Ok(Check::Equal(lhs, rhs))
        }
        "recursion" => {
            // c_{i:s} − c_{i−1:s−1} = 4(i−s), read off the constructed class
            // on the representatives S = {1..s}. Applying it s times lands on
            // the s = 0 coefficients.
            let (i, s) = (p.u("i")?, p.u("s")?);
            let a = catalog::anti_ramification(g)?;
            let coeff = |i: u32, s: u32| -> Result<Q> {
                let key = canonical_index(&a.base(), i as i64, &(1..=s).collect::<Vec<_>>())?;
                Ok(a.coeff(&Generator::Boundary(key)))
            };
            Ok(Check::Number(coeff(i, s)? - coeff(i - 1, s - 1)?, qi(4 * (i as i64 - s as i64))))
        }
        other => Err(Error::ParamOutOfRange(format!("unknown R8 variant {other}"))),
    }
}

// ---------------------------------------------------------------------------
// Coupled partition relations

fn r9_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    for g in 2..=o.g_max {
        v.push(Params::new().with("g", g).with("variant", "rational tail"));
        for h in 1..=o.h_max {
            if g + h <= o.g_max {
                for at in 1..=2 {
                    v.push(Params::new().with("g", g).with("h", h).with("at", at).with("variant", "genus tail"));
                }
            }
        }
    }
    v
}

fn r9_check(p: &Params) -> Result<Check> {
    let g = p.u("g")?;
    let pair11 = [1, 1];
    if p.variant() == "rational tail" {
        let lhs = glue(g, 1, 0, 1, 1, &coupled(g, &pair11, SpinParity::Total)?)?;
        return Ok(Check::Equal(lhs, theta(g, SpinParity::Total)?));
    }
    let (h, at) = (p.u("h")?, p.u("at")?);
    let lhs = glue(g, 2, h, 0, at, &coupled(g + h, &pair11, SpinParity::Total)?)?;
    Ok(Check::Equal(lhs, coupled(g, &pair11, SpinParity::Total)?.scale(&pow2(2 * h as i64))))
}

fn r10_instances(o: &SuiteOptions) -> Vec<Params> {
    (2..o.g_max).map(|g| Params::new().with("g", g)).collect()
}

fn r10_check(p: &Params) -> Result<Check> {
    let g = p.u("g")?;
    let lhs = glue_closed(g, 3, 1, 1, &coupled(g + 1, &[1, 1], SpinParity::Total)?)?;
    let extra = forget(g, 3, 1, &coupled(g, &[1, 1], SpinParity::Total)?)?;
    // Three two-torsion points on the elliptic tail.
    let rhs = lin(&[(Q::one(), &coupled(g, &[-2, 1, 1], SpinParity::Total)?), (qi(3), &extra)])?;
    Ok(Check::Equal(lhs, rhs))
}

fn r11_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    for g in 2..=o.g_max {
        v.push(Params::new().with("g", g).with("variant", "rational tail"));
        if g < o.g_max {
            for parity in ["total", "odd", "even"] {
                v.push(Params::new().with("g", g).with("parity", parity).with("variant", "elliptic tail"));
            }
        }
    }
    v
}

fn r11_check(p: &Params) -> Result<Check> {
    let g = p.u("g")?;
    if p.variant() == "rational tail" {
        let lhs = glue(g, 2, 0, 1, 2, &coupled(g, &[-2, 1, 1], SpinParity::Total)?)?;
        return Ok(Check::Equal(lhs, coupled(g, &[-2, 2], SpinParity::Total)?));
    }
    let parity = p.parity()?;
    let lhs = glue_closed(g, 2, 1, 1, &theta(g + 1, parity)?)?;
    let extra = forget(g, 2, 1, &theta(g, parity)?)?;
    let rhs = lin(&[(Q::one(), &coupled(g, &[-2, 2], other_parity(parity))?), (qi(3), &extra)])?;
    Ok(Check::Equal(lhs, rhs))
}

fn r12_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    for g in 2..=o.g_max {
        for h in 2..=o.h_max.max(3) {
            for parity in parities(h % 2 == 0) {
                v.push(Params::new().with("g", g).with("h", h).with("parity", parity).with("variant", "rational tail"));
                for i in 1..g.saturating_sub(1) {
                    // The double pole of (−2,2) is not a general point for a
                    // genus tail, so that class is only glued at its zero.
                    for at in if h == 2 { 2..=2 } else { 1..=2 } {
                        v.push(
                            Params::new()
                                .with("g", g)
                                .with("h", h)
                                .with("parity", parity)
                                .with("i", i)
                                .with("at", at)
                                .with("variant", "genus tail"),
                        );
                    }
                }
            }
        }
    }
    v
}

fn r12_check(p: &Params) -> Result<Check> {
    let (g, h, parity) = (p.u("g")?, p.u("h")?, p.parity()?);
    let d = [-(h as i64), h as i64];
    if p.variant() == "rational tail" {
        // Zero-residue positions of the double zero on the rational tail:
        // one for h = 2, two for h ≥ 3.
        let places = crate::enumerative::count_distinct_nonzero_roots(&crate::enumerative::residue_polynomial(
            4,
            h as i64,
            h as i64,
        )?)?;
        let lhs = glue(g, 1, 0, 1, 1, &coupled(g, &d, parity)?)?;
        return Ok(Check::Equal(lhs, theta(g, parity)?.scale(&qi(places as i64))));
    }
    let (i, at) = (p.u("i")?, p.u("at")?);
    if i == 0 || i + 2 > g {
        return Err(Error::ParamOutOfRange(format!("R12 genus tail needs 1 ≤ i ≤ g−2, got i={i}")));
    }
    let lhs = glue(g - i, 2, i, 0, at, &coupled(g, &d, parity)?)?;
    let rhs = match parity {
        SpinParity::Total => coupled(g - i, &d, parity)?.scale(&pow2(2 * i as i64)),
        _ => {
            let half = pow2(i as i64 - 1);
            let same = &half * (pow2(i as i64) + Q::one());
            let cross = &half * (pow2(i as i64) - Q::one());
            lin(&[(same, &coupled(g - i, &d, parity)?), (cross, &coupled(g - i, &d, other_parity(parity))?)])?
        }
    };
    Ok(Check::Equal(lhs, rhs))
}

fn r13_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    let samples = zero_sum_samples(o.n_max);
    for g in 2..=o.g_max {
        for d in &samples {
            let n = d.len() as u32;
            for parity in parities(all_even(d)) {
                let base = || Params::new().with("g", g).with_d("d", d).with("parity", parity);
                v.push(base().with("variant", "all on a tail"));
                if n >= 3 {
                    for j in 1..=n {
                        v.push(base().with("variant", "one point off the tail").with("j", j));
                    }
                }
                for mask in 1u64..(1 << n) - 1 {
                    let s = mask.count_ones();
                    if s < 2 || s + 2 > n {
                        continue;
                    }
                    let ds: i64 = (0..n as usize).filter(|&k| mask >> k & 1 == 1).map(|k| d[k]).sum();
                    let rest: Vec<i64> = (0..n as usize).filter(|&k| mask >> k & 1 == 0).map(|k| d[k]).collect();
                    let mut neg: Vec<i64> = rest.iter().copied().filter(|&x| x < 0).collect();
                    if ds < 0 {
                        neg.push(ds);
                    }
                    let claimed = ds.abs() >= 3 && neg != [-2] || neg == [-2] && (ds == -2 || ds == 1);
                    if claimed {
                        v.push(base().with("variant", "subset on a tail").with("S", mask));
                    }
                }
                if n < o.n_max {
                    v.push(base().with("variant", "zero weight"));
                }
            }
        }
    }
    v
}

/// Moves the points of `mask` to the positions a rational tail at point
/// `at` of M̄_{g,n−|S|+1} produces: `at` first, then the new points n'+1..n.
fn tail_arrangement(d: &[i64], mask: u64, at: usize) -> (Vec<i64>, Vec<i64>) {
    let on: Vec<i64> = (0..d.len()).filter(|&k| mask >> k & 1 == 1).map(|k| d[k]).collect();
    let off: Vec<i64> = (0..d.len()).filter(|&k| mask >> k & 1 == 0).map(|k| d[k]).collect();
    let mut arranged = off.clone();
    arranged.insert(at - 1, on[0]);
    arranged.extend(&on[1..]);
    (arranged, on)
}

fn r13_check(p: &Params) -> Result<Check> {
    let (g, parity) = (p.u("g")?, p.parity()?);
    let d = p.d("d")?;
    let n = d.len() as u32;
    let th = || theta(g, parity);
    match p.variant() {
        "all on a tail" => {
            let lhs = glue(g, 1, 0, n - 1, 1, &coupled(g, &d, parity)?)?;
            Ok(Check::Equal(lhs, th()?.scale(&qi(2))))
        }
        "one point off the tail" => {
            // Point j stays on the curve as point 1; the others go on a tail at point 2.
            let j = p.u("j")? as usize;
            let (arranged, _) = tail_arrangement(&d, mask_of(&(1..=n).filter(|&k| k as usize != j).collect::<Vec<_>>()), 2);
            let dj = arranged[0];
            let lhs = glue(g, 2, 0, n - 2, 2, &coupled(g, &arranged, parity)?)?;
            let rhs = match dj {
                1 | -1 => coupled(g, &[1, 1], parity)?.scale(&qi(2)),
                2 => coupled(g, &[2, -2], parity)?.add(&forget(g, 2, 2, &th()?)?)?,
                -2 => coupled(g, &[-2, 2], parity)?.add(&forget(g, 2, 1, &th()?)?)?,
                _ => coupled(g, &[dj, -dj], parity)?,
            };
            Ok(Check::Equal(lhs, rhs))
        }
        "subset on a tail" => {
            let mask: u64 = p.req("S")?.parse().map_err(|_| Error::ParamOutOfRange("bad S".into()))?;
            let s = mask.count_ones();
            let (arranged, on) = tail_arrangement(&d, mask, 1);
            let ds: i64 = on.iter().sum();
            let mut low = vec![ds];
            low.extend((0..n as usize).filter(|&k| mask >> k & 1 == 0).map(|k| d[k]));
            let lhs = glue(g, n - s + 1, 0, s - 1, 1, &coupled(g, &arranged, parity)?)?;
            let mut rhs = coupled(g, &low, parity)?;
            if low.iter().filter(|&&x| x < 0).eq([-2].iter()) {
                // The double pole may also collide with the node: forget it.
                let pole = low.iter().position(|&x| x == -2).expect("pole present") as u32 + 1;
                let rest: Vec<i64> = low.iter().copied().filter(|&x| x != -2).collect();
                if rest == [1, 1] {
                    rhs = rhs.add(&forget(g, 3, pole, &coupled(g, &[1, 1], parity)?)?)?;
                }
            }
            Ok(Check::Equal(lhs, rhs))
        }
        "zero weight" => {
            let mut padded = vec![0];
            padded.extend(&d);
            let lhs = coupled(g, &padded, parity)?;
            Ok(Check::Equal(lhs, forget(g, n + 1, 1, &coupled(g, &d, parity)?)?))
        }
        other => Err(Error::ParamOutOfRange(format!("unknown R13 variant {other}"))),
    }
}

fn r16_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    for g in 2..=o.g_max {
        for h in 3..=o.h_max.max(3) + 2 {
            for parity in parities(h % 2 == 0) {
                v.push(Params::new().with("g", g).with("h", h).with("parity", parity));
            }
            v.push(Params::new().with("g", g).with("h", h).with("variant", "naive"));
            v.push(Params::new().with("g", g).with("h", h).with("variant", "difference quotient"));
        }
    }
    v
}

fn r16_check(p: &Params) -> Result<Check> {
    let (g, h) = (p.u("g")?, p.u("h")?);
    let hi = h as i64;
    if h < 3 {
        return Err(Error::ParamOutOfRange("R16 needs h ≥ 3".into()));
    }
    let parity = p.parity()?;
    let split = |parity| -> Result<(DivisorClass, DivisorClass)> {
        let fixed = coupled(g, &[-2, 2], parity)?.add(&forget(g, 2, 1, &theta(g, parity)?)?)?;
        Ok((fixed, catalog::d_infinity(g, parity)?))
    };
    match p.variant() {
        "difference quotient" => {
            let next = coupled(g, &[-(hi + 1), hi + 1], SpinParity::Total)?;
            let diff = next.sub(&coupled(g, &[-hi, hi], SpinParity::Total)?)?.scale(&Q::new(1.into(), (2 * hi + 1).into()));
            Ok(Check::Equal(diff, catalog::d_infinity(g, SpinParity::Total)?))
        }
        "naive" => {
            // Using h² in place of h² − 4 is off by exactly 4·D_∞.
            let (fixed, dinf) = split(SpinParity::Total)?;
            let naive = fixed.add_scaled(&qi(hi * hi), &dinf)?;
            let lhs = coupled(g, &[-hi, hi], SpinParity::Total)?.sub(&naive)?;
            Ok(Check::Equal(lhs, dinf.scale(&qi(-4))))
        }
        _ => {
            let (fixed, dinf) = split(parity)?;
            let rhs = fixed.add_scaled(&qi(hi * hi - 4), &dinf)?;
            Ok(Check::Equal(coupled(g, &[-hi, hi], parity)?, rhs))
        }
    }
}

// ---------------------------------------------------------------------------
// Pinch partition relations

fn r14_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    for g in 2..o.g_max {
        for h in 2..=o.h_max {
            if g + h > o.g_max {
                continue;
            }
            v.push(Params::new().with("g", g).with("h", h).with("variant", "two points"));
            if h >= 3 {
                v.push(Params::new().with("g", g).with("h", h).with("variant", "multiplicity"));
            }
            // One pole at point j, positive weights elsewhere.
            for n in 2..=o.n_max.min(4) {
                for rest in compositions(g as i64 - 2 + h as i64, n as usize - 1) {
                    for j in 1..=n {
                        let mut d = rest.clone();
                        d.insert(j as usize - 1, -(h as i64));
                        v.push(Params::new().with("g", g).with("h", h).with("j", j).with_d("d", &d).with("variant", "one pole"));
                    }
                }
            }
        }
    }
    v
}

fn r14_check(p: &Params) -> Result<Check> {
    let (g, h) = (p.u("g")?, p.u("h")?);
    let hi = h as i64;
    if p.variant() == "multiplicity" {
        return Ok(Check::Number(qb(plucker(1, hi, hi)), qi(4 * hi - 2)));
    }
    let (d, j) = if p.variant() == "two points" {
        (vec![-hi, g as i64 + hi - 2], 1)
    } else {
        (p.d("d")?, p.u("j")?)
    };
    let n = d.len() as u32;
    let idx = j as usize - 1;
    let mut top = d.clone();
    top[idx] = 1;
    let lhs = glue(g, n, h, 0, j, &catalog::pinch_partition(g + h, &top)?)?;
    let low = catalog::pinch_partition(g, &d)?;
    let rhs = if h >= 3 {
        let mut shifted = d.clone();
        shifted[idx] = 1 - hi;
        lin(&[(Q::one(), &low), (qi(4 * hi - 2), &catalog::theta_pullback_class(g, &shifted)?)])?
    } else {
        let mut rest = d.clone();
        rest.remove(idx);
        let logan = forget(g, n, j, &catalog::logan_class(g, &rest)?)?;
        // The number of solutions counted on the genus-2 tail.
        lin(&[(Q::one(), &low), (qi(7), &logan)])?
    };
    Ok(Check::Equal(lhs, rhs))
}

fn r15_instances(o: &SuiteOptions) -> Vec<Params> {
    let mut v = Vec::new();
    for g in 3..=o.g_max {
        for h in 2..=o.h_max + 2 {
            v.push(Params::new().with("g", g).with("h", h));
        }
    }
    v
}

fn r15_check(p: &Params) -> Result<Check> {
    let (g, h) = (p.u("g")?, p.u("h")?);
    let hi = h as i64;
    let lhs = glue(g, 1, 0, 1, 1, &catalog::pinch_partition(g, &[-hi, g as i64 + hi - 2])?)?;
    let mult = if h == 2 { 1 } else { 2 };
    let rhs = lin(&[(Q::one(), &catalog::d1_holo(g, 1)?), (qi(mult), &w(g)?)])?;
    Ok(Check::Equal(lhs, rhs))
}

static RELATIONS: &[Relation] = &[
    Relation {
        name: "R1",
        summary: "elliptic tail on M_{g-1,1}: pullback of R(g) = g^2 W(g-1) + forget^* Diaz(g-1)",
        classes: &["residual", "weierstrass", "diaz"],
        instances: r1_instances,
        check: r1_check,
    },
    Relation {
        name: "R2",
        summary: "genus-h tail: pullback of R(g+h) = ((g+h)^2 h - (h-1)) W(g) + D1_mero(g,h)",
        classes: &["residual", "weierstrass", "d1-mero"],
        instances: r2_instances,
        check: r2_check,
    },
    Relation {
        name: "R3",
        summary: "genus-i tail: pullback of D1_holo(g,k) in the three ranges of i against g-k",
        classes: &["d1-holo", "weierstrass", "diaz", "d1-mero", "theta-char"],
        instances: r3_instances,
        check: r3_check,
    },
    Relation {
        name: "R4",
        summary: "rational tail with all points: pullback of Logan(1^g) = W; B_{i,n} pairings",
        classes: &["logan", "weierstrass"],
        instances: r4_instances,
        check: r4_check,
    },
    Relation {
        name: "R5",
        summary: "elliptic tail with two points: pullback of Logan(1^{g+1}) = Logan(1^g)",
        classes: &["logan"],
        instances: r5_instances,
        check: r5_check,
    },
    Relation {
        name: "R6",
        summary: "theta-pullback classes from Logan classes and from merging poles",
        classes: &["logan", "theta-pullback"],
        instances: r6_instances,
        check: r6_check,
    },
    Relation {
        name: "R7",
        summary: "genus-h tail mixes the spin components with weights 2^{h-1}(2^h +- 1)",
        classes: &["theta-char"],
        instances: r7_instances,
        check: r7_check,
    },
    Relation {
        name: "R8",
        summary: "anti-ramification: rational tail gives D1_holo(g,1); elliptic tail gives 4 Logan + forget^*",
        classes: &["antiram", "d1-holo", "logan"],
        instances: r8_instances,
        check: r8_check,
    },
    Relation {
        name: "R9",
        summary: "coupled (1,1): rational tail gives the theta locus; genus-h tail gives 4^h",
        classes: &["coupled", "theta-char"],
        instances: r9_instances,
        check: r9_check,
    },
    Relation {
        name: "R10",
        summary: "closed elliptic tail: pullback of coupled (1,1) = coupled (-2,1,1) + 3 forget^* coupled (1,1)",
        classes: &["coupled"],
        instances: r10_instances,
        check: r10_check,
    },
    Relation {
        name: "R11",
        summary: "coupled (-2,2) from (-2,1,1), and from the theta locus with the spin components exchanged",
        classes: &["coupled", "theta-char"],
        instances: r11_instances,
        check: r11_check,
    },
    Relation {
        name: "R12",
        summary: "coupled (-h,h): rational tail gives 2 theta (1 when h=2); genus tails give 4^i and spin mixing",
        classes: &["coupled", "theta-char"],
        instances: r12_instances,
        check: r12_check,
    },
    Relation {
        name: "R13",
        summary: "general zero-sum coupled classes under rational tails, and the zero-weight convention",
        classes: &["coupled", "theta-char"],
        instances: r13_instances,
        check: r13_check,
    },
    Relation {
        name: "R14",
        summary: "pinch classes with one pole from a genus-h tail: (4h-2) theta-pullback, or 7 forget^* Logan when h=2",
        classes: &["pinch", "theta-pullback", "logan"],
        instances: r14_instances,
        check: r14_check,
    },
    Relation {
        name: "R15",
        summary: "rational tail on the two-point pinch class: D1_holo(g,1) + 2W (+W when h=2)",
        classes: &["pinch", "d1-holo", "weierstrass"],
        instances: r15_instances,
        check: r15_check,
    },
    Relation {
        name: "R16",
        summary: "coupled (-h,h) = coupled (-2,2) + forget^* theta + (h^2-4) D_inf",
        classes: &["coupled", "theta-char", "dinf"],
        instances: r16_instances,
        check: r16_check,
    },
    Relation {
        name: "R17",
        summary: "2c_psi + 6(g+3)g c_0 + g(g+1) c_lambda = 0 exactly for W, BN and their combinations",
        classes: &["weierstrass", "bn", "residual", "d1-holo", "d1-mero", "theta-char"],
        instances: r17_instances,
        check: r17_check,
    },
    Relation {
        name: "R18",
        summary: "test curve pairings against R and W",
        classes: &["residual", "weierstrass"],
        instances: r18_instances,
        check: r18_check,
    },
];

/// Every registered relation, in report order.
pub fn relations() -> &'static [Relation] {
    RELATIONS
}

pub fn relation(name: &str) -> Result<&'static Relation> {
    RELATIONS.iter().find(|r| r.name == name).ok_or_else(|| Error::UnknownRelation(name.to_string()))
}

fn evaluate(r: &Relation, p: &Params) -> Entry {
    let mut entry = Entry { relation: r.name, params: p.clone(), pass: false, mismatch: None, error: None };
    let check = match r.check(p) {
        Ok(c) => c,
        Err(e) => {
            entry.error = Some(e.to_string());
            return entry;
        }
    };
    let outcome: Result<(bool, Option<Mismatch>)> = (|| match check {
        Check::Equal(a, b) => Ok(match a.first_difference(&b)? {
            None => (true, None),
            Some((gen, x, y)) => (
                false,
                Some(Mismatch { generator: gen.to_string(), lhs: format_rational(&x), rhs: format_rational(&y) }),
            ),
        }),
        Check::Differ(a, b) => {
            let same = a.equals(&b)?;
            let m = same.then(|| Mismatch { generator: "all".into(), lhs: "equal".into(), rhs: "expected to differ".into() });
            Ok((!same, m))
        }
        Check::Number(x, y) => {
            let ok = x == y;
            Ok((ok, (!ok).then(|| Mismatch { generator: "value".into(), lhs: format_rational(&x), rhs: format_rational(&y) })))
        }
        Check::Flag { value, expected } => {
            let ok = value == expected;
            Ok((ok, (!ok).then(|| Mismatch { generator: "check".into(), lhs: value.to_string(), rhs: expected.to_string() })))
        }
    })();
    match outcome {
        Ok((pass, m)) => {
            entry.pass = pass;
            entry.mismatch = m;
        }
        Err(e) => entry.error = Some(e.to_string()),
    }
    entry
}

/// Evaluates one relation at one parameter point.
pub fn run_relation(name: &str, params: &Params) -> Result<Entry> {
    let r = relation(name)?;
    r.check(params)?;
    Ok(evaluate(r, params))
}

/// Runs every registered relation (or the one named in `opts.only`) over
/// its instances within the ranges. Entries are in registry order, then in
/// instance order, whatever order they were evaluated in.
pub fn run_suite(opts: &SuiteOptions) -> Result<Report> {
    if opts.g_max < 3 {
        return Err(Error::ParamOutOfRange(format!("suite needs g_max ≥ 3, got {}", opts.g_max)));
    }
    let selected: Vec<&Relation> = match &opts.only {
        None => RELATIONS.iter().collect(),
        Some(name) => vec![relation(name)?],
    };
    let jobs: Vec<(&Relation, Params)> =
        selected.iter().flat_map(|r| r.instances(opts).into_iter().map(move |p| (*r, p))).collect();
    let entries = jobs
        .par_iter()
        .map(|(r, p)| evaluate(r, p))
        .collect();
    Ok(Report { entries })
}
