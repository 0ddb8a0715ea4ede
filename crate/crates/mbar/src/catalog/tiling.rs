//! Assignment of boundary coefficients from piecewise formulas.
//!
//! A class's boundary coefficients are given by a list of regimes, each a
//! partial function of a raw representative (i, S). Every canonical
//! generator is offered to every regime on both of its representatives and
//! must be claimed by exactly one regime. A regime may claim both
//! representatives only with equal values.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::pic::{DivisorClass, Q};

/// A named partial formula for c_{i:S}, evaluated on a raw representative.
pub(crate) struct Regime<'a> {
    pub name: &'static str,
    pub eval: Box<dyn Fn(u32, u64) -> Option<Q> + 'a>,
}

impl<'a> Regime<'a> {
    pub fn new(name: &'static str, eval: impl Fn(u32, u64) -> Option<Q> + 'a) -> Self {
        Regime { name, eval: Box::new(eval) }
    }
}

/// What a constructor's boundary assignment did, generator by generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Audit {
    pub ctor: &'static str,
    /// Canonical boundary generators of the base.
    pub generators: usize,
    /// Generators claimed by a regime (equal to `generators` on success).
    pub assigned: usize,
    pub by_regime: BTreeMap<&'static str, usize>,
}

impl Audit {
    pub fn is_complete(&self) -> bool {
        self.generators == self.assigned && self.by_regime.values().sum::<usize>() == self.assigned
    }
}

pub(crate) fn fill(ctor: &'static str, class: &mut DivisorClass, regimes: &[Regime<'_>]) -> Result<Audit> {
    let base = class.base();
    let keys = base.boundary_indices();
    let mut audit = Audit { ctor, generators: keys.len(), assigned: 0, by_regime: BTreeMap::new() };
    for key in keys {
        let reps = [(key.genus(), key.mask()), key.mirror(&base)];
        let mut hits: Vec<(&'static str, Q)> = Vec::new();
        for r in regimes {
            let vals: Vec<Q> = reps.iter().filter_map(|&(i, s)| (r.eval)(i, s)).collect();
            match vals.as_slice() {
                [] => {}
                [v] => hits.push((r.name, v.clone())),
                [a, b] if a == b => hits.push((r.name, a.clone())),
                _ => {
                    return Err(Error::Tiling { ctor, i: key.genus(), set: key.set(), matches: 2 });
                }
            }
        }
        if hits.len() != 1 {
            return Err(Error::Tiling { ctor, i: key.genus(), set: key.set(), matches: hits.len() });
        }
        let (name, c) = hits.pop().expect("one hit");
        class.add_boundary_raw(key.genus() as i64, key.mask(), &c);
        audit.assigned += 1;
        *audit.by_regime.entry(name).or_default() += 1;
    }
    Ok(audit)
}
