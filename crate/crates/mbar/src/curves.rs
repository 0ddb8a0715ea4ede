//! One-parameter families in M̄_{g,n}, recorded by their intersection numbers
//! with the generators, and the pairing against divisor classes.

use std::collections::BTreeMap;

use num::Zero;

use crate::error::{Error, Result};
use crate::pic::{canonical_mask, mask_of, q, DivisorClass, Generator, ModuliBase, Q};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TestCurve {
    base: ModuliBase,
    pairing: BTreeMap<Generator, Q>,
}

impl TestCurve {
    pub fn new(base: ModuliBase) -> Self {
        TestCurve { base, pairing: BTreeMap::new() }
    }

    pub fn base(&self) -> ModuliBase {
        self.base
    }

    pub fn pairing(&self) -> &BTreeMap<Generator, Q> {
        &self.pairing
    }

    /// Adds to the intersection number with a generator.
    pub fn add(&mut self, gen: Generator, c: Q) -> Result<()> {
        if !gen.is_valid_for(&self.base) {
            return Err(Error::ParamOutOfRange(format!("{gen} is not a generator of {}", self.base)));
        }
        let e = self.pairing.entry(gen).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.pairing.remove(&gen);
        }
        Ok(())
    }

    fn add_boundary(&mut self, i: u32, mask: u64, c: Q) -> Result<()> {
        let key = canonical_mask(&self.base, i as i64, mask)
            .ok_or_else(|| Error::ParamOutOfRange(format!("δ_{{{i}:{mask:b}}} on {}", self.base)))?;
        self.add(Generator::Boundary(key), c)
    }
}

/// Σ_G pairing(G)·coefficient(G).
pub fn pair(t: &TestCurve, a: &DivisorClass) -> Result<Q> {
    if t.base != a.base() {
        return Err(Error::BaseMismatch(t.base.g, t.base.n, a.base().g, a.base().n));
    }
    Ok(t.pairing.iter().map(|(gen, c)| c * a.coeff(gen)).sum())
}

/// The standard curves on M̄_{g,1} (`A`, `B_i`, `C_i`, `D`, `E`) and the
/// family `B_{i,n}` on M̄_{g,g}. `params` holds i, and n for `B_{i,n}`.
///
/// `B_{i,n}`: a fixed genus-i curve carrying p_1..p_n is attached at a point
/// y moving on a genus g-i curve that carries p_{n+1}..p_g. Each collision of
/// y with some p_k bubbles off a rational bridge, which contributes to
/// δ_{i:S∪{k}} and to ψ_k; the self-intersection of δ_{i:S} loses one for
/// each of those collisions.
pub fn builtin_test_curve(name: &str, base: ModuliBase, params: &[u32]) -> Result<TestCurve> {
    let g = base.g;
    let mut t = TestCurve::new(base);
    let need_one_point = || {
        if base.n == 1 {
            Ok(())
        } else {
            Err(Error::ParamOutOfRange(format!("curve {name} lives on M_{{g,1}}, not {base}")))
        }
    };
    let param = |k: usize| {
        params
            .get(k)
            .copied()
            .ok_or_else(|| Error::ParamOutOfRange(format!("curve {name} needs {} parameter(s)", k + 1)))
    };
    let gi = |x: u32| q(x as i64);
    match name {
        "A" => {
            need_one_point()?;
            t.add(Generator::Psi(1), gi(2 * g - 2))?;
        }
        "B_i" | "B" => {
            need_one_point()?;
            let i = param(0)?;
            if i == 0 || i + 1 >= g {
                return Err(Error::ParamOutOfRange(format!("B_i needs 0 < i < g-1, got i={i}")));
            }
            t.add_boundary(i, 1, q(2 - 2 * (g as i64 - i as i64)))?;
        }
        "C_i" | "C" => {
            need_one_point()?;
            let i = param(0)?;
            if i == 0 || i >= g {
                return Err(Error::ParamOutOfRange(format!("C_i needs 0 < i < g, got i={i}")));
            }
            t.add(Generator::Psi(1), gi(2 * i - 1))?;
            t.add_boundary(i, 1, q(-1))?;
            t.add_boundary(g - i, 1, q(1))?;
        }
        "D" => {
            need_one_point()?;
            t.add(Generator::Psi(1), q(1))?;
            t.add(Generator::Delta0, q(2 - 2 * g as i64))?;
            t.add_boundary(g - 1, 1, q(1))?;
        }
        "E" => {
            need_one_point()?;
            t.add(Generator::Lambda, q(1))?;
            t.add(Generator::Delta0, q(12))?;
            t.add_boundary(g - 1, 1, q(-1))?;
        }
        "B_{i,n}" | "Bin" => {
            let (i, n) = (param(0)?, param(1)?);
            if base.n != g {
                return Err(Error::ParamOutOfRange(format!("B_{{i,n}} lives on M_{{g,g}}, not {base}")));
            }
            if i == 0 || i >= g || n > g || n + 1 > g {
                return Err(Error::ParamOutOfRange(format!("B_{{i,n}} needs 0 < i < g, n < g; got ({i},{n})")));
            }
            let on_x = mask_of(&(1..=n).collect::<Vec<_>>());
            let gi_ = g as i64;
            t.add_boundary(i, on_x, q(2 - 2 * (gi_ - i as i64) - (gi_ - n as i64)))?;
            for k in n + 1..=g {
                t.add_boundary(i, on_x | 1 << (k - 1), q(1))?;
                t.add(Generator::Psi(k), q(1))?;
            }
        }
        _ => return Err(Error::UnknownCurve(name.to_string())),
    }
    Ok(t)
}
