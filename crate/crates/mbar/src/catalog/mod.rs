//! Constructors for the named divisor classes.
//!
//! Every constructor validates its parameters, fills λ, ψ and δ_0 directly and
//! assigns boundary coefficients through [`tiling`], which checks that the
//! piecewise formulas cover each canonical generator exactly once.

mod coupled;
mod one_point;
mod partitions;
pub mod tiling;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pic::{DivisorClass, ModuliBase, Q};

pub use coupled::{coupled_partition, d_infinity};
pub use one_point::{
    bn_coefficient_check, brill_noether, d1_holo, d1_mero, diaz, residual, theta_characteristic_locus, weierstrass,
};
pub use partitions::{anti_ramification, logan_class, pinch_partition, theta_pullback_class};
pub use tiling::Audit;

/// A class together with the record of how its boundary was assigned.
#[derive(Clone, Debug)]
pub struct Built {
    pub class: DivisorClass,
    pub audit: Audit,
}

/// Which spin component of a divisor with all-even signature.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SpinParity {
    Odd,
    Even,
    Total,
}

impl fmt::Display for SpinParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpinParity::Odd => "odd",
            SpinParity::Even => "even",
            SpinParity::Total => "total",
        })
    }
}

impl FromStr for SpinParity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "odd" => Ok(SpinParity::Odd),
            "even" => Ok(SpinParity::Even),
            "total" => Ok(SpinParity::Total),
            _ => Err(Error::Parse(format!("parity must be odd, even or total, got {s:?}"))),
        }
    }
}

/// A partition of 2g-2 into nonzero parts: the orders of zeros and poles of
/// an abelian differential on a genus-g curve.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Signature {
    g: u32,
    entries: Vec<i64>,
}

impl Signature {
    pub fn new(g: u32, entries: Vec<i64>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::BadWeights("signature entries must be nonzero".into()));
        }
        let total: i64 = entries.iter().sum();
        if total != 2 * g as i64 - 2 {
            return Err(Error::BadWeights(format!("signature sums to {total}, expected {}", 2 * g as i64 - 2)));
        }
        Ok(Signature { g, entries })
    }

    /// The signature of the coupled divisor D_{d,2^{g-1}}, or D_{1,1,2^{g-2}}.
    pub fn coupled(g: u32, d: &[i64]) -> Result<Self> {
        if d == [1, 1] {
            let mut e = d.to_vec();
            e.extend(std::iter::repeat_n(2, g.saturating_sub(2) as usize));
            return Signature::new(g, e);
        }
        let mut e: Vec<i64> = d.iter().copied().filter(|&x| x != 0).collect();
        e.extend(std::iter::repeat_n(2, g.saturating_sub(1) as usize));
        Signature::new(g, e)
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_holomorphic(&self) -> bool {
        self.entries.iter().all(|&k| k > 0)
    }

    /// Whether the stratum splits into odd and even spin components.
    pub fn admits_spin(&self) -> bool {
        self.entries.iter().all(|&k| k % 2 == 0)
    }
}

pub(crate) fn require_genus(g: u32, min: u32) -> Result<()> {
    if g < min {
        Err(Error::GenusTooSmall { g, min })
    } else {
        Ok(())
    }
}

pub(crate) fn base(g: u32, n: u32) -> Result<ModuliBase> {
    ModuliBase::new(g, n)
}

/// Exact integer embedded as a rational.
pub(crate) fn z(n: i128) -> Q {
    Q::from_integer(n.into())
}

/// n/d in lowest terms.
pub(crate) fn zq(n: i128, d: i128) -> Q {
    Q::new(n.into(), d.into())
}

pub(crate) fn pop(s: u64) -> i128 {
    s.count_ones() as i128
}

/// Sum of the weights indexed by the points of a mask.
pub(crate) fn weight_of(d: &[i64], s: u64) -> i128 {
    d.iter().enumerate().filter(|(k, _)| s >> k & 1 == 1).map(|(_, &x)| x as i128).sum()
}

/// Parameters accepted by [`build`] for the named classes.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ClassParams {
    pub g: u32,
    pub k: Option<u32>,
    pub h: Option<u32>,
    pub d: Option<Vec<i64>>,
    pub parity: Option<SpinParity>,
}

/// Names accepted by [`build`].
pub const CLASS_NAMES: &[&str] = &[
    "weierstrass",
    "residual",
    "diaz",
    "d1-holo",
    "d1-mero",
    "logan",
    "theta-pullback",
    "theta-char",
    "antiram",
    "coupled",
    "pinch",
    "bn",
    "dinf",
];

/// Builds a named class with its tiling audit.
pub fn build_audited(name: &str, p: &ClassParams) -> Result<Built> {
    let need_k = || p.k.ok_or_else(|| Error::ParamOutOfRange(format!("{name} needs k")));
    let need_h = || p.h.ok_or_else(|| Error::ParamOutOfRange(format!("{name} needs h")));
    let need_d = || p.d.clone().ok_or_else(|| Error::ParamOutOfRange(format!("{name} needs d")));
    let parity = p.parity.unwrap_or(SpinParity::Total);
    match name {
        "weierstrass" => one_point::weierstrass_built(p.g),
        "residual" => one_point::residual_built(p.g),
        "diaz" => one_point::diaz_built(p.g),
        "d1-holo" => one_point::d1_holo_built(p.g, need_k()?),
        "d1-mero" => one_point::d1_mero_built(p.g, need_h()?),
        "bn" => one_point::brill_noether_built(p.g),
        "theta-char" => one_point::theta_built(p.g, parity),
        "logan" => partitions::logan_built(p.g, &need_d()?),
        "theta-pullback" => partitions::theta_pullback_built(p.g, &need_d()?),
        "antiram" => partitions::anti_ramification_built(p.g),
        "pinch" => partitions::pinch_built(p.g, &need_d()?),
        "coupled" => coupled::coupled_built(p.g, &need_d()?, parity),
        "dinf" => coupled::d_infinity_built(p.g, parity),
        _ => Err(Error::UnknownClass(name.to_string())),
    }
}

/// Builds a named class, e.g. `build("weierstrass", &ClassParams { g: 3, ..Default::default() })`.
pub fn build(name: &str, p: &ClassParams) -> Result<DivisorClass> {
    build_audited(name, p).map(|b| b.class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::to_unicode;
    use crate::pic::q;

    #[test]
    fn genus_three_classes() {
        assert_eq!(to_unicode(&weierstrass(3).unwrap()), "6ψ − λ − 3δ_1 − δ_2");
        assert_eq!(to_unicode(&residual(3).unwrap()), "6ψ + 111λ − 12δ_0 − 27δ_1 − 33δ_2");
        assert_eq!(to_unicode(&theta_characteristic_locus(3, SpinParity::Odd).unwrap()), "14ψ + 7λ − δ_0 − 9δ_1 − 5δ_2");
        assert_eq!(to_unicode(&theta_characteristic_locus(3, SpinParity::Even).unwrap()), "9λ − δ_0 − 3δ_1 − 3δ_2");
    }

    #[test]
    fn specializations() {
        for g in 3..=8 {
            let w = weierstrass(g).unwrap();
            assert_eq!(d1_holo(g, 0).unwrap(), w.scale(&q(g as i64 - 2)));
            assert_eq!(d1_holo(g, g - 1).unwrap(), residual(g).unwrap());
            assert_eq!(logan_class(g, &[g as i64]).unwrap(), w);
            let ones = vec![1; g as usize - 1];
            assert_eq!(pinch_partition(g, &ones).unwrap(), anti_ramification(g).unwrap());
        }
        assert_eq!(coupled_partition(3, &[1, 1], SpinParity::Total).unwrap(), anti_ramification(3).unwrap());
        assert_eq!(d1_holo(3, 1).unwrap(), theta_characteristic_locus(3, SpinParity::Total).unwrap());
        let c2 = coupled_partition(2, &[1, 1], SpinParity::Total).unwrap();
        assert!(c2.equals(&logan_class(2, &[1, 1]).unwrap()).unwrap());
    }

    #[test]
    fn spin_components_add_up() {
        for g in 2..=6 {
            let t = |p| theta_characteristic_locus(g, p).unwrap();
            assert_eq!(t(SpinParity::Odd).add(&t(SpinParity::Even)).unwrap(), t(SpinParity::Total));
            for d in [vec![-2, 2], vec![-4, 4], vec![2, -4, 2], vec![-2, -2, 4], vec![0, -4, 4]] {
                let c = |p| coupled_partition(g, &d, p).unwrap();
                assert_eq!(c(SpinParity::Odd).add(&c(SpinParity::Even)).unwrap(), c(SpinParity::Total), "{g} {d:?}");
            }
            let di = |p| d_infinity(g, p).unwrap();
            assert_eq!(di(SpinParity::Odd).add(&di(SpinParity::Even)).unwrap(), di(SpinParity::Total));
        }
    }

    #[test]
    fn dispatch_errors() {
        assert!(matches!(coupled_partition(3, &[1, 2], SpinParity::Total), Err(Error::UnsupportedWeights(_))));
        assert!(matches!(coupled_partition(3, &[-2, 3, -2], SpinParity::Total), Err(Error::UnsupportedWeights(_))));
        assert!(matches!(coupled_partition(3, &[-2, 1, 1, 0], SpinParity::Total), Err(Error::UnsupportedPole(_))));
        assert!(matches!(coupled_partition(3, &[-2, 1, 1], SpinParity::Odd), Err(Error::ParityUnavailable(_))));
        assert!(matches!(pinch_partition(4, &[-2, -1, 5]), Err(Error::UnsupportedWeights(_))));
        assert!(matches!(weierstrass(1), Err(Error::GenusTooSmall { g: 1, min: 2 })));
        assert!(matches!(build("nope", &ClassParams::default()), Err(Error::UnknownClass(_))));
        assert!(bn_coefficient_check(&diaz(3).unwrap()).is_err());
    }

    #[test]
    fn bn_check() {
        for g in 3..=7 {
            assert!(bn_coefficient_check(&weierstrass(g).unwrap()).unwrap());
            assert!(bn_coefficient_check(&brill_noether(g).unwrap()).unwrap());
            assert!(!bn_coefficient_check(&residual(g).unwrap()).unwrap());
        }
    }

    #[test]
    fn signatures() {
        let s = Signature::coupled(3, &[-2, 2]).unwrap();
        assert!(s.admits_spin() && !s.is_holomorphic());
        assert!(Signature::coupled(4, &[1, 1]).unwrap().is_holomorphic());
        assert!(Signature::new(2, vec![1, 0, 1]).is_err());
    }
}
