//! Classes on M̄_{g,1} (and the Diaz divisor on M̄_g) whose boundary part is
//! a single sequence c_i on δ_i, the divisor whose genus-i side carries the point.

use num::{One, Zero};

use super::tiling::{self, Regime};
use super::{base, require_genus, z, zq, Built, SpinParity};
use crate::error::{Error, Result};
use crate::pic::{pow2, DivisorClass, Q};

/// A named coefficient formula for δ_i, or None outside its range.
type OnePointRegime<'a> = (&'static str, Box<dyn Fn(i128) -> Option<Q> + 'a>);

/// Assembles a class on (g,1) with boundary δ_i split into regimes over i.
fn one_point(
    ctor: &'static str,
    g: u32,
    lambda: Q,
    psi: Q,
    delta0: Q,
    regimes: Vec<OnePointRegime<'_>>,
) -> Result<Built> {
    let mut a = DivisorClass::zero(base(g, 1)?);
    a.add_lambda(&lambda);
    a.add_psi(1, &psi);
    a.add_delta0(&delta0);
    let regimes: Vec<Regime> = regimes
        .into_iter()
        .map(|(name, f)| Regime::new(name, move |i, s| if s == 1 { f(i as i128) } else { None }))
        .collect();
    let audit = tiling::fill(ctor, &mut a, &regimes)?;
    Ok(Built { class: a, audit })
}

pub(crate) fn weierstrass_built(g: u32) -> Result<Built> {
    require_genus(g, 2)?;
    let gg = g as i128;
    one_point(
        "weierstrass",
        g,
        z(-1),
        zq(gg * (gg + 1), 2),
        Q::zero(),
        vec![("all", Box::new(move |i| Some(zq(-(gg - i) * (gg - i + 1), 2))))],
    )
}

/// W = g(g+1)/2 ψ − λ − Σ (g−i)(g−i+1)/2 δ_i.
pub fn weierstrass(g: u32) -> Result<DivisorClass> {
    weierstrass_built(g).map(|b| b.class)
}

pub(crate) fn residual_built(g: u32) -> Result<Built> {
    require_genus(g, 3)?;
    let gg = g as i128;
    one_point(
        "residual",
        g,
        zq(gg * (3 * gg.pow(3) - 3 * gg + 2), 2),
        zq(gg * (gg + 1) * (gg - 2), 2),
        zq(gg * gg - gg.pow(4), 6),
        vec![(
            "all",
            Box::new(move |i| Some(zq(gg * (i - gg) * (gg * gg * i + gg * i - gg + i - 1), 2))),
        )],
    )
}

/// Closure of the locus of (C, p) such that K_C − (g−1)p is effective away from p.
pub fn residual(g: u32) -> Result<DivisorClass> {
    residual_built(g).map(|b| b.class)
}

pub(crate) fn diaz_built(g: u32) -> Result<Built> {
    require_genus(g, 3)?;
    let big = g as i128 + 1;
    let mut a = DivisorClass::zero(base(g, 0)?);
    a.add_lambda(&zq(big * (big + 1) * (3 * big * big - 3 * big + 2), 2));
    a.add_delta0(&zq(-big * big * (big - 1) * (big + 1), 6));
    let regimes = [Regime::new("all", move |i, _| {
        let i = i as i128;
        Some(zq(-big * i * (big - i - 1) * (big + 1) * (big + 1), 2))
    })];
    let audit = tiling::fill("diaz", &mut a, &regimes)?;
    Ok(Built { class: a, audit })
}

/// The divisor of curves with a point whose Weierstrass gap sequence is
/// exceptional, as a class on M̄_g (g ≥ 3).
pub fn diaz(g: u32) -> Result<DivisorClass> {
    diaz_built(g).map(|b| b.class)
}

pub(crate) fn d1_holo_built(g: u32, k: u32) -> Result<Built> {
    require_genus(g, 3)?;
    if k >= g {
        return Err(Error::ParamOutOfRange(format!("d1-holo needs 0 ≤ k ≤ g−1, got k={k}, g={g}")));
    }
    let (g, k) = (g as i128, k as i128);
    let k1 = k + 1;
    let low = move |i: i128| {
        let t = g - i;
        (i <= g - k).then(|| zq(-k1 * (i * (t + 1) * t * k1 + (t - k) * (k1 * t * t - (k * k + k + 1) * t - 2)), 2))
    };
    let high = move |i: i128| {
        (i > g - k).then(|| {
            let poly = -3 * g + g * g + 4 * i - g * i + 3 * k - 4 * g * k + g * g * k + 5 * i * k - g * i * k
                + 3 * k * k
                - 2 * g * k * k
                + 2 * i * k * k
                + k.pow(3);
            zq(-(g - i) * k1 * poly, 2)
        })
    };
    one_point(
        "d1-holo",
        g as u32,
        zq(k1 * (4 - 2 * g + 10 * k - 2 * g * k + 11 * k * k + 3 * k.pow(3)), 2),
        zq(k1 * (g - k) * (k1 * g * g - (k * k + k + 1) * g - 2), 2),
        zq(k1 * k1 - k1.pow(4), 6),
        vec![("i<=g-k", Box::new(low)), ("i>g-k", Box::new(high))],
    )
}

/// D¹ for the holomorphic signature (g−k, k+1, 1^{g−3}), the point at the zero of order g−k.
pub fn d1_holo(g: u32, k: u32) -> Result<DivisorClass> {
    d1_holo_built(g, k).map(|b| b.class)
}

pub(crate) fn d1_mero_built(g: u32, h: u32) -> Result<Built> {
    require_genus(g, 2)?;
    if h < 2 {
        return Err(Error::ParamOutOfRange(format!("d1-mero needs h ≥ 2, got {h}")));
    }
    let (g, h) = (g as i128, h as i128);
    let gh = g + h;
    // The residual coefficient pulled back along a genus-h tail, minus the
    // Weierstrass multiplicity ((g+h)²h − (h−1)) times W.
    let ci = move |i: i128| {
        let pulled = gh * (gh * gh * (i + h) + gh * (i + h) - g + i - 1);
        let weierstrass = (gh * gh * h - h + 1) * (g - i + 1);
        Some(zq((i - g) * (pulled - weierstrass), 2))
    };
    one_point(
        "d1-mero",
        g as u32,
        zq(
            (1 + gh) * (2 - 3 * g * g + 3 * g.pow(3) - 2 * h - 4 * g * h + 9 * g * g * h - h * h + 9 * g * h * h + 3 * h.pow(3)),
            2,
        ),
        zq(g * (gh + 1) * (h - 1) * (h * h + g * h + g + 1), 2),
        zq(gh * gh - gh.pow(4), 6),
        vec![("all", Box::new(ci))],
    )
}

/// D¹ for the meromorphic signature (−h, g+h, 1^{g−2}), the point at the pole.
pub fn d1_mero(g: u32, h: u32) -> Result<DivisorClass> {
    d1_mero_built(g, h).map(|b| b.class)
}

pub(crate) fn brill_noether_built(g: u32) -> Result<Built> {
    require_genus(g, 3)?;
    let gg = g as i128;
    one_point(
        "bn",
        g,
        z(gg + 3),
        Q::zero(),
        zq(-(gg + 1), 6),
        vec![("all", Box::new(move |i| Some(z(-i * (gg - i)))))],
    )
}

/// The pullback to M̄_{g,1} of the Brill–Noether divisor class.
pub fn brill_noether(g: u32) -> Result<DivisorClass> {
    brill_noether_built(g).map(|b| b.class)
}

/// Whether 2c_ψ + 6(g+3)g·c_0 + g(g+1)·c_λ vanishes, for a class on M̄_{g,1}.
pub fn bn_coefficient_check(a: &DivisorClass) -> Result<bool> {
    let b = a.base();
    if b.n != 1 {
        return Err(Error::BaseMismatch(b.g, b.n, b.g, 1));
    }
    let g = z(b.g as i128);
    let val = z(2) * a.psi(1) + z(6) * (&g + z(3)) * &g * a.delta0() + &g * (&g + Q::one()) * a.lambda();
    Ok(val.is_zero())
}

pub(crate) fn theta_built(g: u32, parity: SpinParity) -> Result<Built> {
    require_genus(g, 2)?;
    let gi = g as i64;
    let pre = pow2(gi - 3);
    let p2 = move |e: i128| pow2(e as i64);
    let odd_i = move |i: i128| (p2(i) + Q::one()) * (p2(g as i128 - i) - Q::one());
    let even_i = move |i: i128| (p2(i) - Q::one()) * (p2(g as i128 - i) - Q::one());
    let (lambda, psi, ci): (Q, Q, Box<dyn Fn(i128) -> Q>) = match parity {
        SpinParity::Odd => (pow2(gi) - Q::one(), z(2) * (pow2(gi) - Q::one()), Box::new(odd_i)),
        SpinParity::Even => (pow2(gi) + Q::one(), Q::zero(), Box::new(even_i)),
        SpinParity::Total => (
            z(2) * pow2(gi),
            z(2) * (pow2(gi) - Q::one()),
            Box::new(move |i| odd_i(i) + even_i(i)),
        ),
    };
    let d0 = -pow2(gi - 3) * z(if parity == SpinParity::Total { 2 } else { 1 });
    one_point(
        "theta-char",
        g,
        &pre * lambda,
        &pre * psi,
        &pre * d0,
        vec![("all", Box::new(move |i| Some(-&pre * ci(i))))],
    )
}

/// The locus of (C, p) with p in the support of an effective theta
/// characteristic of the requested parity.
pub fn theta_characteristic_locus(g: u32, parity: SpinParity) -> Result<DivisorClass> {
    theta_built(g, parity).map(|b| b.class)
}
