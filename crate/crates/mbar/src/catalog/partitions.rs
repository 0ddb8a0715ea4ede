//! Classes indexed by a weight vector on the marked points: the Logan and
//! theta-pullback divisors, and the pinch partition divisors.

use super::tiling::{self, Regime};
use super::{base, pop, require_genus, weight_of, z, zq, Built};
use crate::error::{Error, Result};
use crate::pic::{DivisorClass, Q};

/// x(x+1)/2, i.e. C(x+1, 2) extended to all integers.
fn tri(x: i128) -> i128 {
    x * (x + 1) / 2
}

fn sum(d: &[i64]) -> i128 {
    d.iter().map(|&x| x as i128).sum()
}

fn points(d: &[i64]) -> Result<u32> {
    if d.is_empty() {
        return Err(Error::BadWeights("weight vector is empty".into()));
    }
    Ok(d.len() as u32)
}

fn mask_where(d: &[i64], pred: impl Fn(i64) -> bool) -> u64 {
    d.iter().enumerate().filter(|(_, &x)| pred(x)).fold(0, |m, (k, _)| m | 1 << k)
}

pub(crate) fn logan_built(g: u32, d: &[i64]) -> Result<Built> {
    require_genus(g, 1)?;
    let n = points(d)?;
    if d.iter().any(|&x| x < 1) || sum(d) != g as i128 {
        return Err(Error::BadWeights(format!("logan needs positive weights summing to g={g}, got {d:?}")));
    }
    let mut a = DivisorClass::zero(base(g, n)?);
    a.add_lambda(&z(-1));
    for (k, &x) in d.iter().enumerate() {
        a.add_psi(k as u32 + 1, &z(tri(x as i128)));
    }
    let regimes = [Regime::new("all", |i, s| Some(z(-tri((weight_of(d, s) - i as i128).abs()))))];
    let audit = tiling::fill("logan", &mut a, &regimes)?;
    Ok(Built { class: a, audit })
}

/// Closure of the locus where Σ d_j p_j moves in a pencil, for positive
/// weights summing to g.
pub fn logan_class(g: u32, d: &[i64]) -> Result<DivisorClass> {
    logan_built(g, d).map(|b| b.class)
}

pub(crate) fn theta_pullback_built(g: u32, d: &[i64]) -> Result<Built> {
    require_genus(g, 1)?;
    let n = points(d)?;
    if d.contains(&0) || sum(d) != g as i128 - 1 || d.iter().all(|&x| x > 0) {
        return Err(Error::BadWeights(format!(
            "theta-pullback needs nonzero weights summing to g−1={} with a negative entry, got {d:?}",
            g as i64 - 1
        )));
    }
    let b = base(g, n)?;
    let full = b.full_mask();
    let neg = mask_where(d, |x| x < 0);
    let mut a = DivisorClass::zero(b);
    a.add_lambda(&z(-1));
    for (k, &x) in d.iter().enumerate() {
        a.add_psi(k as u32 + 1, &z(tri(x as i128)));
    }
    let regimes = [
        Regime::new("poles off S", |i, s| {
            (s & neg == 0).then(|| z(-tri((weight_of(d, s) - i as i128).abs())))
        }),
        Regime::new("poles on both sides", |i, s| {
            (s & neg != 0 && full & !s & neg != 0).then(|| z(-tri(weight_of(d, s) - i as i128)))
        }),
    ];
    let audit = tiling::fill("theta-pullback", &mut a, &regimes)?;
    Ok(Built { class: a, audit })
}

/// Closure of the locus where Σ d_j p_j is an effective theta divisor
/// translate, for nonzero weights summing to g−1 with at least one pole.
pub fn theta_pullback_class(g: u32, d: &[i64]) -> Result<DivisorClass> {
    theta_pullback_built(g, d).map(|b| b.class)
}

/// The boundary coefficient shared by the anti-ramification and holomorphic
/// pinch classes, valid on the representative with weight x ≤ i−1.
fn pinch_holo_c(g: i128, i: i128, x: i128) -> i128 {
    (3 - 2 * g) * x * x + (4 * g * i + 2 * g - 10 * i + 1) * x - 2 * g * i * i + 7 * i * i - 2 * g * i - i - 2
}

pub(crate) fn anti_ramification_built(g: u32) -> Result<Built> {
    require_genus(g, 3)?;
    let gg = g as i128;
    let mut a = DivisorClass::zero(base(g, g - 1)?);
    a.add_lambda(&z(-4 * (gg - 7)));
    for k in 1..g {
        a.add_psi(k, &z(4 * (gg - 2)));
    }
    a.add_delta0(&z(-2));
    let regimes = [Regime::new("s<=i-1", move |i, s| {
        let (i, s) = (i as i128, pop(s));
        (s < i).then(|| z(pinch_holo_c(gg, i, s)))
    })];
    let audit = tiling::fill("antiram", &mut a, &regimes)?;
    Ok(Built { class: a, audit })
}

/// Closure of the locus of (C, p_1..p_{g−1}) with Σ p_j + 2q + Σ r_k in |K_C|
/// for some further points q, r_1..r_{g−3}.
pub fn anti_ramification(g: u32) -> Result<DivisorClass> {
    anti_ramification_built(g).map(|b| b.class)
}

pub(crate) fn pinch_built(g: u32, d: &[i64]) -> Result<Built> {
    let n = points(d)?;
    let negatives: Vec<usize> = (0..d.len()).filter(|&k| d[k] < 0).collect();
    match negatives.as_slice() {
        [] if sum(d) == g as i128 - 1 => pinch_holomorphic(g, n, d),
        [j] if d[*j] <= -2 && sum(d) == g as i128 - 2 => pinch_one_pole(g, n, d, *j),
        _ => Err(Error::UnsupportedWeights(format!(
            "pinch needs d ≥ 0 with Σd = g−1, or one entry ≤ −2 with Σd = g−2; got {d:?} at g={g}"
        ))),
    }
}

fn pinch_holomorphic(g: u32, n: u32, d: &[i64]) -> Result<Built> {
    require_genus(g, 3)?;
    let gg = g as i128;
    let mut a = DivisorClass::zero(base(g, n)?);
    a.add_lambda(&z(-4 * (gg - 7)));
    for (k, &x) in d.iter().enumerate() {
        let x = x as i128;
        a.add_psi(k as u32 + 1, &z((2 * gg * (x + 1) - 3 * x - 5) * x));
    }
    a.add_delta0(&z(-2));
    let regimes = [Regime::new("d_S<=i-1", |i, s| {
        let (i, x) = (i as i128, weight_of(d, s));
        (x < i).then(|| z(pinch_holo_c(gg, i, x)))
    })];
    let audit = tiling::fill("pinch", &mut a, &regimes)?;
    Ok(Built { class: a, audit })
}

fn pinch_one_pole(g: u32, n: u32, d: &[i64], j: usize) -> Result<Built> {
    require_genus(g, 2)?;
    let gg = g as i128;
    let double = d[j] == -2;
    let mut a = DivisorClass::zero(base(g, n)?);
    a.add_lambda(&z(if double { 27 - 4 * gg } else { 26 - 4 * gg }));
    for (k, &x) in d.iter().enumerate() {
        let x = x as i128;
        let c = if !double {
            z(2 * x * ((gg - 1) * x + gg - 2))
        } else if k == j {
            z(4 * gg)
        } else {
            zq((4 * gg * (x + 1) - 5 * x - 9) * x, 2)
        };
        a.add_psi(k as u32 + 1, &c);
    }
    a.add_delta0(&z(-2));
    let pole = 1u64 << j;
    let low = move |i: i128, x: i128| -> Q {
        if double {
            zq((5 - 4 * gg) * x * x + (8 * gg * i + 4 * gg - 18 * i + 3) * x - 4 * gg * i * i - 4 * gg * i + 13 * i * i - 3 * i - 4, 2)
        } else {
            z((2 - 2 * gg) * x * x + 2 * (2 * gg * i + gg - 4 * i + 1) * x - 2 * (gg * i * i + gg * i - 3 * i * i + i + 1))
        }
    };
    let high = move |i: i128, x: i128| -> Q {
        if double {
            zq((5 - 4 * gg) * x * x + (8 * gg * i - 4 * gg - 18 * i + 9) * x - 4 * gg * i * i + 4 * gg * i + 13 * i * i - 17 * i, 2)
        } else {
            z((2 - 2 * gg) * x * x + 2 * (2 * gg * i - gg - 4 * i + 2) * x - 2 * (gg * i * i - 3 * i * i - gg * i + 4 * i))
        }
    };
    let regimes = [
        Regime::new("d_S<=i-1", move |i, s| {
            let (i, x) = (i as i128, weight_of(d, s));
            (s & pole == 0 && x < i).then(|| low(i, x))
        }),
        Regime::new("d_S>=i", move |i, s| {
            let (i, x) = (i as i128, weight_of(d, s));
            (s & pole == 0 && x >= i).then(|| high(i, x))
        }),
    ];
    let audit = tiling::fill("pinch", &mut a, &regimes)?;
    Ok(Built { class: a, audit })
}

/// The pinch partition divisor D_{d,1^{g−3},2} (holomorphic, Σd = g−1) or
/// D_{d,1^{g−2},2} with one pole of order at least two (Σd = g−2).
pub fn pinch_partition(g: u32, d: &[i64]) -> Result<DivisorClass> {
    pinch_built(g, d).map(|b| b.class)
}
