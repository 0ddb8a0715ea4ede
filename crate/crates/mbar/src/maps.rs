//! Pullbacks along the gluing and forgetful maps between moduli spaces.
//!
//! Every map sends a domain boundary divisor into a codomain one (or into
//! δ_0, or nowhere), so the boundary part of a pullback is evaluated by
//! pushing each domain key forward and reading off the coefficient there.
//! The ψ, λ and δ_0 parts, and the excess terms along the gluing node, are
//! added per map family.

use std::fmt;

use num::Zero;

use crate::error::{Error, Result};
use crate::pic::{canonical_mask, points_of, BoundaryIndex, DivisorClass, Generator, ModuliBase, Q};

/// The four map families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MapKind {
    /// Attach a fixed general genus-h curve carrying j new points at point `at`.
    /// The point `at` moves onto the tail; the new points are n+1..n+j.
    GlueTail { h: u32, j: u32, at: u32 },
    /// Attach a fixed general genus-h curve with no marked points at `at`,
    /// which stops being marked. Remaining points keep their relative order.
    GlueClosedTail { h: u32, at: u32 },
    /// Glue points 1 and 2 to each other; points 3..n become 1..n-2.
    IdentifyPoints,
    /// Forget point j; later points shift down by one.
    ForgetPoint { j: u32 },
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GluingMap {
    kind: MapKind,
    domain: ModuliBase,
    codomain: ModuliBase,
}

enum Image {
    Key(BoundaryIndex),
    Delta0,
}

/// Position of old point k after point `gone` is deleted.
fn drop_index(k: u32, gone: u32) -> u32 {
    if k > gone {
        k - 1
    } else {
        k
    }
}

fn drop_point(mask: u64, gone: u32) -> u64 {
    points_of(mask)
        .into_iter()
        .filter(|&k| k != gone)
        .fold(0, |m, k| m | 1 << (drop_index(k, gone) - 1))
}

impl GluingMap {
    pub fn new(kind: MapKind, domain: ModuliBase) -> Result<Self> {
        let (g, n) = (domain.g, domain.n);
        let bad = |msg: String| Err(Error::InvalidMap(msg));
        let codomain = match kind {
            MapKind::GlueTail { h, j, at } => {
                if h == 0 && j == 0 {
                    return bad("a rational tail needs at least one new point".into());
                }
                if at == 0 || at > n {
                    return bad(format!("attach point {at} not among 1..{n}"));
                }
                ModuliBase::new(g + h, n + j)?
            }
            MapKind::GlueClosedTail { h, at } => {
                if h == 0 {
                    return bad("a closed tail needs positive genus".into());
                }
                if at == 0 || at > n {
                    return bad(format!("attach point {at} not among 1..{n}"));
                }
                ModuliBase::new(g + h, n - 1)?
            }
            MapKind::IdentifyPoints => {
                if n < 2 {
                    return bad("identifying points needs n >= 2".into());
                }
                ModuliBase::new(g + 1, n - 2)?
            }
            MapKind::ForgetPoint { j } => {
                if j == 0 || j > n {
                    return bad(format!("forgotten point {j} not among 1..{n}"));
                }
                ModuliBase::new(g, n - 1).map_err(|e| Error::InvalidMap(e.to_string()))?
            }
        };
        Ok(GluingMap { kind, domain, codomain })
    }

    /// The map of the given kind whose codomain is `codomain`.
    pub fn into_codomain(kind: MapKind, codomain: ModuliBase) -> Result<Self> {
        let (g, n) = (codomain.g, codomain.n);
        let under = || Error::InvalidMap(format!("{kind:?} cannot land in {codomain}"));
        let domain = match kind {
            MapKind::GlueTail { h, j, .. } => {
                ModuliBase::new(g.checked_sub(h).ok_or_else(under)?, n.checked_sub(j).ok_or_else(under)?)
            }
            MapKind::GlueClosedTail { h, .. } => ModuliBase::new(g.checked_sub(h).ok_or_else(under)?, n + 1),
            MapKind::IdentifyPoints => ModuliBase::new(g.checked_sub(1).ok_or_else(under)?, n + 2),
            MapKind::ForgetPoint { .. } => ModuliBase::new(g, n + 1),
        }
        .map_err(|e| Error::InvalidMap(e.to_string()))?;
        Self::new(kind, domain)
    }

    pub fn glue_tail(domain: ModuliBase, h: u32, j: u32, at: u32) -> Result<Self> {
        Self::new(MapKind::GlueTail { h, j, at }, domain)
    }

    pub fn glue_closed_tail(domain: ModuliBase, h: u32, at: u32) -> Result<Self> {
        Self::new(MapKind::GlueClosedTail { h, at }, domain)
    }

    pub fn identify_points(domain: ModuliBase) -> Result<Self> {
        Self::new(MapKind::IdentifyPoints, domain)
    }

    pub fn forget_point(domain: ModuliBase, j: u32) -> Result<Self> {
        Self::new(MapKind::ForgetPoint { j }, domain)
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn domain(&self) -> ModuliBase {
        self.domain
    }

    pub fn codomain(&self) -> ModuliBase {
        self.codomain
    }

    /// Where the general point of a domain boundary divisor lands.
    fn image(&self, key: &BoundaryIndex) -> Option<Image> {
        let (b, s) = (key.genus(), key.mask());
        let cod = &self.codomain;
        match self.kind {
            MapKind::GlueTail { h, j, at } => {
                let (b, s) = self.rep_containing(b, s, at);
                let tail = s & !(1 << (at - 1)) | self.tail_mask(at, j);
                canonical_mask(cod, (b + h) as i64, tail).map(Image::Key)
            }
            MapKind::GlueClosedTail { h, at } => {
                let (b, s) = self.rep_containing(b, s, at);
                canonical_mask(cod, (b + h) as i64, drop_point(s, at)).map(Image::Key)
            }
            MapKind::IdentifyPoints => {
                let (b, s) = self.rep_containing(b, s, 1);
                if s & 2 == 0 {
                    Some(Image::Delta0)
                } else {
                    canonical_mask(cod, b as i64 + 1, s >> 2).map(Image::Key)
                }
            }
            MapKind::ForgetPoint { j } => canonical_mask(cod, b as i64, drop_point(s, j)).map(Image::Key),
        }
    }

    /// The representative (b, S) of a domain key with point p in S.
    fn rep_containing(&self, b: u32, s: u64, p: u32) -> (u32, u64) {
        if s >> (p - 1) & 1 == 1 {
            (b, s)
        } else {
            (self.domain.g - b, self.domain.full_mask() & !s)
        }
    }

    /// The marked points carried by a glued rational or higher-genus tail.
    fn tail_mask(&self, at: u32, j: u32) -> u64 {
        let n = self.domain.n;
        (n + 1..=n + j).fold(1u64 << (at - 1), |m, k| m | 1 << (k - 1))
    }
}

impl fmt::Display for GluingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            MapKind::GlueTail { h, j, at } => format!("glue-tail:h={h},j={j},at={at}"),
            MapKind::GlueClosedTail { h, at } => format!("glue-closed-tail:h={h},at={at}"),
            MapKind::IdentifyPoints => "identify".to_string(),
            MapKind::ForgetPoint { j } => format!("forget:j={j}"),
        };
        write!(f, "{name}: {} -> {}", self.domain, self.codomain)
    }
}

/// Pulls a class on the codomain back to the domain.
pub fn pullback(m: &GluingMap, a: &DivisorClass) -> Result<DivisorClass> {
    let cod = m.codomain;
    if a.base() != cod {
        return Err(Error::BaseMismatch(cod.g, cod.n, a.base().g, a.base().n));
    }
    let dom = m.domain;
    let mut out = DivisorClass::zero(dom);
    out.add_lambda(a.lambda());
    out.add_delta0(a.delta0());

    for key in dom.boundary_indices() {
        let c = match m.image(&key) {
            Some(Image::Key(k)) => a.coeff(&Generator::Boundary(k)),
            Some(Image::Delta0) => a.delta0().clone(),
            None => Q::zero(),
        };
        out.add_term(Generator::Boundary(key), &c)?;
    }

    match m.kind {
        MapKind::GlueTail { h, j, at } => {
            for k in (1..=dom.n).filter(|&k| k != at) {
                out.add_psi(k, a.psi(k));
            }
            let node = canonical_mask(&cod, h as i64, m.tail_mask(at, j)).expect("tail divisor is valid");
            out.add_psi(at, &-a.coeff(&Generator::Boundary(node)));
        }
        MapKind::GlueClosedTail { h, at } => {
            for k in (1..=dom.n).filter(|&k| k != at) {
                out.add_psi(k, a.psi(drop_index(k, at)));
            }
            let node = canonical_mask(&cod, h as i64, 0).expect("tail divisor is valid");
            out.add_psi(at, &-a.coeff(&Generator::Boundary(node)));
        }
        MapKind::IdentifyPoints => {
            for k in 3..=dom.n {
                out.add_psi(k, a.psi(k - 2));
            }
        }
        MapKind::ForgetPoint { j } => {
            for k in (1..=dom.n).filter(|&k| k != j) {
                let c = a.psi(drop_index(k, j));
                out.add_psi(k, c);
                out.add_boundary(0, &[k.min(j), k.max(j)], &-c)?;
            }
        }
    }
    Ok(out)
}

/// Pulls back along a chain of maps listed from the innermost (the one whose
/// domain is the final base) outward, so `chain[0]` is applied last.
pub fn pullback_chain(chain: &[GluingMap], a: &DivisorClass) -> Result<DivisorClass> {
    chain.iter().rev().try_fold(a.clone(), |acc, m| pullback(m, &acc))
}

/// Parses `glue-tail:h=1,j=0,at=1`, `glue-closed-tail:h=1,at=1`,
/// `identify` and `forget:j=2`. Omitted `at` and `j` default to 1 and 0
/// (or 1 for `forget`).
pub fn parse_map_kind(spec: &str) -> Result<MapKind> {
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let mut h = None;
    let mut j = None;
    let mut at = None;
    for part in args.split(',').filter(|p| !p.is_empty()) {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value in map spec, got {part:?}")))?;
        let val: u32 = val.trim().parse().map_err(|_| Error::Parse(format!("bad number in {part:?}")))?;
        match key.trim() {
            "h" => h = Some(val),
            "j" => j = Some(val),
            "at" => at = Some(val),
            other => return Err(Error::Parse(format!("unknown map parameter {other:?}"))),
        }
    }
    let need_h = || h.ok_or_else(|| Error::Parse(format!("map {name} needs h=")));
    Ok(match name.trim() {
        "glue-tail" => MapKind::GlueTail { h: need_h()?, j: j.unwrap_or(0), at: at.unwrap_or(1) },
        "glue-closed-tail" => MapKind::GlueClosedTail { h: need_h()?, at: at.unwrap_or(1) },
        "identify" => MapKind::IdentifyPoints,
        "forget" => MapKind::ForgetPoint { j: j.unwrap_or(1) },
        other => return Err(Error::Parse(format!("unknown map {other:?}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pic::q;

    fn b(g: u32, n: u32) -> ModuliBase {
        ModuliBase::new(g, n).unwrap()
    }

    #[test]
    fn glue_tail_node_gives_minus_psi() {
        let m = GluingMap::glue_tail(b(3, 2), 1, 2, 1).unwrap();
        assert_eq!(m.codomain(), b(4, 4));
        let mut a = DivisorClass::zero(m.codomain());
        a.add_boundary(1, &[1, 3, 4], &q(1)).unwrap();
        let p = pullback(&m, &a).unwrap();
        let mut want = DivisorClass::zero(m.domain());
        want.add_psi(1, &q(-1));
        assert_eq!(p, want);
    }

    #[test]
    fn identify_keeps_lambda() {
        let m = GluingMap::identify_points(b(3, 2)).unwrap();
        let a = DivisorClass::generator(m.codomain(), Generator::Lambda).unwrap();
        assert_eq!(pullback(&m, &a).unwrap(), DivisorClass::generator(m.domain(), Generator::Lambda).unwrap());
    }

    #[test]
    fn forget_psi_and_even_exception() {
        let m = GluingMap::forget_point(b(3, 2), 2).unwrap();
        let a = DivisorClass::generator(m.codomain(), Generator::Psi(1)).unwrap();
        let mut want = DivisorClass::zero(m.domain());
        want.add_psi(1, &q(1));
        want.add_boundary(0, &[1, 2], &q(-1)).unwrap();
        assert_eq!(pullback(&m, &a).unwrap(), want);

        let m = GluingMap::forget_point(b(4, 1), 1).unwrap();
        let mut a = DivisorClass::zero(m.codomain());
        a.add_boundary(2, &[], &q(1)).unwrap();
        let mut want = DivisorClass::zero(m.domain());
        want.add_boundary(2, &[1], &q(1)).unwrap();
        assert_eq!(pullback(&m, &a).unwrap(), want);
    }

    #[test]
    fn rejects_bad_maps() {
        assert!(GluingMap::glue_tail(b(3, 1), 0, 0, 1).is_err());
        assert!(GluingMap::glue_closed_tail(b(3, 1), 0, 1).is_err());
        assert!(GluingMap::identify_points(b(3, 1)).is_err());
        let m = GluingMap::forget_point(b(3, 2), 1).unwrap();
        assert!(matches!(pullback(&m, &DivisorClass::zero(b(3, 2))), Err(Error::BaseMismatch(..))));
    }

    #[test]
    fn map_spec_parsing() {
        assert_eq!(parse_map_kind("glue-tail:h=1,j=0,at=2").unwrap(), MapKind::GlueTail { h: 1, j: 0, at: 2 });
        assert_eq!(parse_map_kind("identify").unwrap(), MapKind::IdentifyPoints);
        assert!(parse_map_kind("glue-tail:j=1").is_err());
        let m = GluingMap::into_codomain(MapKind::GlueTail { h: 1, j: 0, at: 1 }, b(4, 1)).unwrap();
        assert_eq!(m.domain(), b(3, 1));
    }
}
