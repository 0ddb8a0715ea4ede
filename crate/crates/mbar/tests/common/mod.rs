//! Random parameter generators shared by the integration tests.

#![allow(dead_code)]

use mbar::catalog::{ClassParams, SpinParity};
use mbar::pic::{DivisorClass, Generator, ModuliBase, Q};
use num::{BigInt, ToPrimitive};
use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;

/// A uniformly random composition of `total` into `parts` positive parts.
pub fn composition<R: Rng>(rng: &mut R, total: i64, parts: usize) -> Vec<i64> {
    assert!(parts >= 1 && total >= parts as i64);
    let mut cuts: Vec<i64> = (1..total).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<i64> = cuts.into_iter().take(parts - 1).collect();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts.into_iter().chain(std::iter::once(total)) {
        out.push(c - prev);
        prev = c;
    }
    out
}

fn parity<R: Rng>(rng: &mut R) -> SpinParity {
    *[SpinParity::Odd, SpinParity::Even, SpinParity::Total].choose(rng).unwrap()
}

fn params(g: u32) -> ClassParams {
    ClassParams { g, ..Default::default() }
}

/// Zero-sum weights with no zero entry, n ≤ n_max, accepted by the coupled
/// constructor.
pub fn zero_sum<R: Rng>(rng: &mut R, n_max: usize) -> Vec<i64> {
    loop {
        let n = rng.gen_range(2..=n_max);
        let neg = rng.gen_range(1..n);
        let total = rng.gen_range(neg.max(n - neg) as i64..=12);
        let mut d: Vec<i64> = composition(rng, total, n - neg);
        d.extend(composition(rng, total, neg).into_iter().map(|x| -x));
        d.shuffle(rng);
        let mut negs: Vec<i64> = d.iter().copied().filter(|&x| x < 0).collect();
        negs.sort_unstable();
        let mut posi: Vec<i64> = d.iter().copied().filter(|&x| x > 0).collect();
        posi.sort_unstable();
        if negs == [-2] && !(posi == [2] || posi == [1, 1]) {
            continue;
        }
        return d;
    }
}

/// A random catalog constructor with valid parameters on a base with
/// g ≤ g_max and n ≤ n_max.
pub fn class_params<R: Rng>(rng: &mut R, g_max: u32, n_max: usize) -> (&'static str, ClassParams) {
    let which = rng.gen_range(0..13);
    match which {
        0 => ("weierstrass", params(rng.gen_range(2..=g_max))),
        1 => ("residual", params(rng.gen_range(3..=g_max))),
        2 => ("diaz", params(rng.gen_range(3..=g_max))),
        3 => {
            let g = rng.gen_range(3..=g_max);
            ("d1-holo", ClassParams { k: Some(rng.gen_range(0..g)), ..params(g) })
        }
        4 => ("d1-mero", ClassParams { h: Some(rng.gen_range(2..=6)), ..params(rng.gen_range(2..=g_max)) }),
        5 => ("bn", params(rng.gen_range(3..=g_max))),
        6 => ("theta-char", ClassParams { parity: Some(parity(rng)), ..params(rng.gen_range(2..=g_max)) }),
        7 => {
            let g = rng.gen_range(1..=g_max);
            let n = rng.gen_range(1..=n_max.min(g as usize));
            ("logan", ClassParams { d: Some(composition(rng, g as i64, n)), ..params(g) })
        }
        8 => loop {
            let g = rng.gen_range(1..=g_max);
            let poles = rng.gen_range(1..n_max);
            let m = rng.gen_range(1..=n_max - poles);
            let neg: Vec<i64> = (0..poles).map(|_| -rng.gen_range(1..=4)).collect();
            let total = g as i64 - 1 - neg.iter().sum::<i64>();
            if total < m as i64 {
                continue;
            }
            let mut d = composition(rng, total, m);
            d.extend(neg);
            d.shuffle(rng);
            break ("theta-pullback", ClassParams { d: Some(d), ..params(g) });
        },
        9 => ("antiram", params(rng.gen_range(3..=g_max.min(n_max as u32 + 1)))),
        10 => {
            if rng.gen_bool(0.5) {
                let g = rng.gen_range(3..=g_max);
                let n = rng.gen_range(1..=n_max.min(g as usize - 1));
                ("pinch", ClassParams { d: Some(composition(rng, g as i64 - 1, n)), ..params(g) })
            } else {
                let g = rng.gen_range(2..=g_max);
                let h = rng.gen_range(2..=5);
                let n = rng.gen_range(2..=n_max.min((g as i64 - 1 + h) as usize));
                let mut d = composition(rng, g as i64 - 2 + h, n - 1);
                d.insert(rng.gen_range(0..n), -h);
                ("pinch", ClassParams { d: Some(d), ..params(g) })
            }
        }
        11 => {
            let g = rng.gen_range(2..=g_max);
            let d = if rng.gen_bool(0.15) { vec![1, 1] } else { zero_sum(rng, n_max) };
            let p = if d.iter().all(|x| x % 2 == 0) { parity(rng) } else { SpinParity::Total };
            ("coupled", ClassParams { d: Some(d), parity: Some(p), ..params(g) })
        }
        _ => ("dinf", ClassParams { parity: Some(parity(rng)), ..params(rng.gen_range(2..=g_max)) }),
    }
}

/// A random valid base with g ≤ g_max and n ≤ n_max.
pub fn base<R: Rng>(rng: &mut R, g_max: u32, n_max: u32) -> ModuliBase {
    let g = rng.gen_range(1..=g_max);
    let n = rng.gen_range(if g == 1 { 1 } else { 0 }..=n_max);
    ModuliBase::new(g, n).unwrap()
}

pub fn rational<R: Rng>(rng: &mut R) -> Q {
    let num: i64 = rng.gen_range(-10_000..=10_000);
    let den: i64 = rng.gen_range(1..=500);
    let q = Q::new(BigInt::from(num), BigInt::from(den));
    if rng.gen_bool(0.1) {
        // Occasionally push past 64 bits.
        q * Q::from_integer(BigInt::from(u64::MAX)) * Q::from_integer(BigInt::from(7))
    } else {
        q
    }
}

/// A random sparse class on a random base.
pub fn class<R: Rng>(rng: &mut R, g_max: u32, n_max: u32) -> DivisorClass {
    let b = base(rng, g_max, n_max);
    class_on(rng, b)
}

/// A random sparse class on the given base.
pub fn class_on<R: Rng>(rng: &mut R, b: ModuliBase) -> DivisorClass {
    let mut a = DivisorClass::zero(b);
    let mut gens = vec![Generator::Lambda, Generator::Delta0];
    gens.extend((1..=b.n).map(Generator::Psi));
    gens.extend(b.boundary_indices().into_iter().map(Generator::Boundary));
    for gen in gens {
        if rng.gen_bool(0.4) {
            a.add_term(gen, &rational(rng)).unwrap();
        }
    }
    a
}

/// All complex roots by Durand–Kerner iteration.
pub fn numeric_roots(coeffs: &[BigInt]) -> Vec<Complex64> {
    let c: Vec<f64> = coeffs.iter().map(|x| x.to_f64().unwrap()).collect();
    let deg = c.len() - 1;
    let lead = c[deg];
    let monic: Vec<f64> = c.iter().map(|x| x / lead).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|i| seed.powu(i as u32)).collect();
    for _ in 0..5000 {
        for i in 0..deg {
            let denom: Complex64 =
                (0..deg).filter(|&k| k != i).map(|k| roots[i] - roots[k]).product();
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
        }
    }
    roots
}

/// Distinct nonzero numeric roots, merging roots closer than `tol`.
pub fn count_numeric(coeffs: &[BigInt], tol: f64) -> usize {
    let mut clusters: Vec<Complex64> = Vec::new();
    for z in numeric_roots(coeffs) {
        if z.norm() < tol {
            continue;
        }
        if clusters.iter().all(|c| (c - z).norm() > tol) {
            clusters.push(z);
        }
    }
    clusters.len()
}

/// A root of multiplicity m only resolves numerically to about ε^{1/m}.
/// Roots of [`polynomial_with_roots`] are integers, so clusters of this
/// radius separate them exactly.
pub const INTEGER_ROOT_TOL: f64 = 0.1;

/// A random integer polynomial of degree 1..=6 built from distinct integer
/// roots in [−5, 5] with multiplicities up to 3, returned with its roots.
pub fn polynomial_with_roots<R: Rng>(rng: &mut R) -> (Vec<BigInt>, Vec<(i64, u32)>) {
    let candidates: Vec<i64> = (-5..=5).collect();
    let distinct = rng.gen_range(1..=4);
    let picked: Vec<i64> = candidates.choose_multiple(rng, distinct).copied().collect();
    let mut roots: Vec<(i64, u32)> = Vec::new();
    let mut degree = 0;
    for r in picked {
        let m = rng.gen_range(1..=3).min(6 - degree);
        if m == 0 {
            break;
        }
        roots.push((r, m));
        degree += m;
    }
    let scale = *[-3i64, -2, -1, 1, 2, 3].choose(rng).unwrap();
    let mut p: Vec<BigInt> = vec![BigInt::from(scale)];
    for &(r, m) in &roots {
        for _ in 0..m {
            let mut next = vec![BigInt::from(0); p.len() + 1];
            for (e, c) in p.iter().enumerate() {
                next[e + 1] += c;
                next[e] -= c * BigInt::from(r);
            }
            p = next;
        }
    }
    (p, roots)
}
