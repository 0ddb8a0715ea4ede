//! Coupled partition divisors D_{d,2^{g−1}} (Σd = 0) and D_{1,1,2^{g−2}},
//! their spin components, and the limit class D_∞.

use num::{One, Zero};

use super::tiling::{self, Regime};
use super::{base, require_genus, weight_of, z, Built, SpinParity};
use crate::error::{Error, Result};
use crate::pic::{pow2, DivisorClass, Q};

fn p2(e: u32) -> Q {
    pow2(e as i64)
}

/// Holds λ, ψ_j and δ_0 before the boundary is filled and everything is
/// multiplied by the common prefactor.
struct Parts {
    lambda: Q,
    psi: Vec<Q>,
    delta0: Q,
}

fn assemble(ctor: &'static str, g: u32, pre: &Q, parts: Parts, regimes: &[Regime<'_>]) -> Result<Built> {
    let mut a = DivisorClass::zero(base(g, parts.psi.len() as u32)?);
    a.add_lambda(&parts.lambda);
    for (k, c) in parts.psi.iter().enumerate() {
        a.add_psi(k as u32 + 1, c);
    }
    a.add_delta0(&parts.delta0);
    let audit = tiling::fill(ctor, &mut a, regimes)?;
    Ok(Built { class: a.scale(pre), audit })
}

fn holomorphic_pair(g: u32) -> Result<Built> {
    let parts = Parts { lambda: p2(g + 1), psi: vec![p2(g - 1), p2(g - 1)], delta0: -p2(g - 2) };
    let regimes = [
        Regime::new("{1,2}", move |i, s| (s == 0b11 && i < g).then(|| -p2(i + 1) * (p2(g - i) - Q::one()))),
        Regime::new("{1}", move |i, s| (s == 0b01 && i < g).then(|| -p2(g - 1))),
    ];
    assemble("coupled", g, &pow2(g as i64 - 3), parts, &regimes)
}

fn double_pole_simple_zeros(g: u32) -> Result<Built> {
    let parts = Parts { lambda: p2(g + 1), psi: vec![p2(g + 2), p2(g - 1), p2(g - 1)], delta0: -p2(g - 2) };
    let regimes = [
        Regime::new("{1,2,3}", move |i, s| (s == 0b111 && i < g).then(|| -p2(i + 1) * (p2(g - i) - Q::one()))),
        Regime::new("{2,3}", move |i, s| (s == 0b110 && i < g).then(|| -p2(i + 1) * (p2(g - i) + Q::one()))),
        Regime::new("{1,2},{1,3}", move |i, s| ((s == 0b011 || s == 0b101) && i < g).then(|| -p2(g - 1))),
    ];
    assemble("coupled", g, &pow2(g as i64 - 3), parts, &regimes)
}

fn double_pole_double_zero(g: u32, parity: SpinParity) -> Result<Built> {
    let one = Q::one();
    let (m, p) = (p2(g) - &one, p2(g) + &one);
    let parts = match parity {
        SpinParity::Total => Parts { lambda: p2(g + 1), psi: vec![p2(g + 2), z(2) * &p], delta0: -p2(g - 2) },
        SpinParity::Odd => Parts { lambda: m.clone(), psi: vec![z(2) * &m, Q::zero()], delta0: -pow2(g as i64 - 3) },
        SpinParity::Even => Parts { lambda: p.clone(), psi: vec![z(2) * &p, z(2) * &p], delta0: -pow2(g as i64 - 3) },
    };
    // Bracketed boundary coefficients for {1,2} and {2}: (2^i ± 1)(2^{g−i} ± 1).
    let c_all = move |i: u32| -> Q {
        match parity {
            SpinParity::Total => p2(i + 1) * (p2(g - i) - Q::one()),
            SpinParity::Odd => (p2(i) + Q::one()) * (p2(g - i) - Q::one()),
            SpinParity::Even => (p2(i) - Q::one()) * (p2(g - i) - Q::one()),
        }
    };
    let c_two = move |i: u32| -> Q {
        match parity {
            SpinParity::Total => p2(i + 1) * (p2(g - i) + Q::one()),
            SpinParity::Odd => (p2(i) - Q::one()) * (p2(g - i) + Q::one()),
            SpinParity::Even => (p2(i) + Q::one()) * (p2(g - i) + Q::one()),
        }
    };
    let regimes = [
        Regime::new("{1,2}", move |i, s| (s == 0b11 && i < g).then(|| -c_all(i))),
        Regime::new("{2}", move |i, s| (s == 0b10 && i >= 1 && i < g).then(|| -c_two(i))),
    ];
    assemble("coupled", g, &pow2(g as i64 - 3), parts, &regimes)
}

/// The general formula for Σd = 0 whose negative part is not exactly {−2}.
///
/// For a set S with d_S = 0 the formula is applied on the representative
/// whose point set carries no nonzero weight, when one exists; otherwise on
/// the representative of smaller genus (both give the same value when the
/// genera are equal).
fn general(g: u32, d: &[i64], parity: SpinParity) -> Result<Built> {
    let one = Q::one();
    let (m, p) = (p2(g) - &one, p2(g) + &one);
    let sq = |x: i128| z(x * x);
    let (lambda, psi_scale, delta0) = match parity {
        SpinParity::Total => (p2(g + 1), p2(g - 1), -p2(g - 2)),
        SpinParity::Odd => (m.clone(), &m / z(4), -pow2(g as i64 - 3)),
        SpinParity::Even => (p.clone(), &p / z(4), -pow2(g as i64 - 3)),
    };
    let parts = Parts { lambda, psi: d.iter().map(|&x| &psi_scale * sq(x as i128)).collect(), delta0 };
    let zero_sum = move |i: u32| -> Q {
        match parity {
            SpinParity::Total => p2(g - i + 1) * (p2(i) - Q::one()),
            SpinParity::Odd => (p2(i) - Q::one()) * (p2(g - i) + Q::one()),
            SpinParity::Even => (p2(i) - Q::one()) * (p2(g - i) - Q::one()),
        }
    };
    let full = (1u64 << d.len()) - 1;
    let nonzero = d.iter().enumerate().filter(|(_, &x)| x != 0).fold(0u64, |acc, (k, _)| acc | 1 << k);
    let regimes = [
        Regime::new("d_S=0", move |i, s| {
            let chosen = s & nonzero == 0 || (full & !s & nonzero != 0 && 2 * i <= g);
            (weight_of(d, s) == 0 && chosen).then(|| -zero_sum(i))
        }),
        Regime::new("d_S!=0", {
            let psi_scale = psi_scale.clone();
            move |i, s| {
                let x = weight_of(d, s);
                (x != 0 && i < g).then(|| -&psi_scale * sq(x))
            }
        }),
    ];
    assemble("coupled", g, &pow2(g as i64 - 2), parts, &regimes)
}

/// Permutation sending the entries of `shape` onto equal entries of `d`, in
/// the form taken by [`DivisorClass::relabel`].
fn matching(shape: &[i64], d: &[i64]) -> Option<Vec<u32>> {
    if shape.len() != d.len() {
        return None;
    }
    let mut used = vec![false; d.len()];
    let mut perm = Vec::with_capacity(d.len());
    for &x in shape {
        let k = (0..d.len()).find(|&k| !used[k] && d[k] == x)?;
        used[k] = true;
        perm.push(k as u32 + 1);
    }
    Some(perm)
}

fn relabelled(built: Built, perm: &[u32]) -> Result<Built> {
    Ok(Built { class: built.class.relabel(perm)?, audit: built.audit })
}

pub(crate) fn coupled_built(g: u32, d: &[i64], parity: SpinParity) -> Result<Built> {
    require_genus(g, 2)?;
    let odd_entry = d.iter().any(|&x| x % 2 != 0);
    if parity != SpinParity::Total && odd_entry {
        return Err(Error::ParityUnavailable(format!("{d:?} has an odd entry")));
    }
    if d == [1, 1] {
        return holomorphic_pair(g);
    }
    if d.iter().sum::<i64>() != 0 {
        return Err(Error::UnsupportedWeights(format!("coupled needs Σd = 0 or d = (1,1), got {d:?}")));
    }
    if d.iter().all(|&x| x == 0) {
        return Err(Error::BadWeights("coupled needs a nonzero weight".into()));
    }
    let mut negative: Vec<i64> = d.iter().copied().filter(|&x| x < 0).collect();
    negative.sort_unstable();
    if negative == [-2] {
        if let Some(perm) = matching(&[-2, 2], d) {
            return relabelled(double_pole_double_zero(g, parity)?, &perm);
        }
        if let Some(perm) = matching(&[-2, 1, 1], d) {
            return relabelled(double_pole_simple_zeros(g)?, &perm);
        }
        return Err(Error::UnsupportedPole(format!("{d:?}: only (−2,2) and (−2,1,1) are covered")));
    }
    general(g, d, parity)
}

/// The coupled partition divisor for Σd = 0, or for the holomorphic pair
/// d = (1,1), restricted to a spin component when requested.
pub fn coupled_partition(g: u32, d: &[i64], parity: SpinParity) -> Result<DivisorClass> {
    coupled_built(g, d, parity).map(|b| b.class)
}

pub(crate) fn d_infinity_built(g: u32, parity: SpinParity) -> Result<Built> {
    require_genus(g, 2)?;
    let scale = match parity {
        SpinParity::Total => Q::one(),
        SpinParity::Odd => (p2(g) - Q::one()) / p2(g + 1),
        SpinParity::Even => (p2(g) + Q::one()) / p2(g + 1),
    };
    let parts = Parts { lambda: Q::zero(), psi: vec![Q::one(), Q::one()], delta0: Q::zero() };
    let regimes = [
        Regime::new("{1,2}", move |i, s| (s == 0b11 && i < g).then(Q::zero)),
        Regime::new("{2}", move |i, s| (s == 0b10 && i >= 1 && i < g).then(|| -Q::one())),
    ];
    assemble("dinf", g, &(pow2(2 * g as i64 - 3) * scale), parts, &regimes)
}

/// The limit of D_{−h,h,2^{g−1}}/h² as h grows.
pub fn d_infinity(g: u32, parity: SpinParity) -> Result<DivisorClass> {
    d_infinity_built(g, parity).map(|b| b.class)
}
