//! Divisor classes on M̄_{g,n}: the rational span of λ, ψ_1..ψ_n, δ_0 and the
//! boundary divisors δ_{i:S}, stored sparsely over canonical boundary keys.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient.
pub type Q = BigRational;

/// Largest number of marked points a base may carry (point sets are bitmasks).
pub const MAX_POINTS: u32 = 63;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// 2^e as a rational; negative exponents give 1/2^|e|.
pub fn pow2(e: i64) -> Q {
    let p = Q::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// The pair (g, n) naming M̄_{g,n}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ModuliBase {
    pub g: u32,
    pub n: u32,
}

impl ModuliBase {
    /// Genus 1 is admitted when at least one point is marked; the catalog
    /// constructors impose their own, stronger genus bounds.
    pub fn new(g: u32, n: u32) -> Result<Self> {
        if g == 0 {
            return Err(Error::InvalidBase { g, n, reason: "genus must be positive" });
        }
        if g == 1 && n == 0 {
            return Err(Error::InvalidBase { g, n, reason: "M_1 needs a marked point" });
        }
        if n > MAX_POINTS {
            return Err(Error::InvalidBase { g, n, reason: "too many marked points" });
        }
        Ok(ModuliBase { g, n })
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 0 {
            0
        } else {
            u64::MAX >> (64 - self.n)
        }
    }

    /// All canonical boundary keys, in storage order.
    pub fn boundary_indices(&self) -> Vec<BoundaryIndex> {
        let mut out = Vec::new();
        if self.n == 0 {
            for i in 1..=self.g / 2 {
                out.push(BoundaryIndex { i, s: 0 });
            }
        } else {
            for s in 0..=self.full_mask() {
                if s & 1 == 0 {
                    continue;
                }
                for i in 0..=self.g {
                    if raw_valid(self, i as i64, s) {
                        out.push(BoundaryIndex { i, s });
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Number of generators λ, ψ_j, δ_0 and δ_{i:S}.
    pub fn generator_count(&self) -> usize {
        2 + self.n as usize + self.boundary_indices().len()
    }
}

impl fmt::Display for ModuliBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_{{{},{}}}", self.g, self.n)
    }
}

/// Bitmask with bit k-1 standing for marked point k.
pub fn mask_of(points: &[u32]) -> u64 {
    points.iter().fold(0u64, |m, &p| m | (1u64 << (p - 1)))
}

pub fn points_of(mask: u64) -> Vec<u32> {
    (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// Whether the raw pair (i, S) names a boundary divisor. The condition is
/// mirror symmetric, so (g-i, S^C) passes exactly when (i, S) does.
pub fn raw_valid(base: &ModuliBase, i: i64, s: u64) -> bool {
    if i < 0 || i > base.g as i64 || s & !base.full_mask() != 0 {
        return false;
    }
    let size = s.count_ones();
    if i == 0 && size < 2 {
        return false;
    }
    if i == base.g as i64 && size + 2 > base.n {
        return false;
    }
    true
}

/// Canonical key of δ_{i:S} = δ_{g-i:S^C}: the representative with 1 ∈ S when
/// points are marked, otherwise the one with i ≤ g/2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BoundaryIndex {
    i: u32,
    s: u64,
}

impl BoundaryIndex {
    pub fn genus(&self) -> u32 {
        self.i
    }

    pub fn mask(&self) -> u64 {
        self.s
    }

    pub fn set(&self) -> Vec<u32> {
        points_of(self.s)
    }

    /// The other representative (g-i, S^C).
    pub fn mirror(&self, base: &ModuliBase) -> (u32, u64) {
        (base.g - self.i, base.full_mask() & !self.s)
    }
}

impl Ord for BoundaryIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.i.cmp(&other.i).then_with(|| cmp_sets(self.s, other.s))
    }
}

impl PartialOrd for BoundaryIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the sorted element lists of two point sets.
fn cmp_sets(mut a: u64, mut b: u64) -> Ordering {
    loop {
        match (a == 0, b == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
        if x != y {
            return x.cmp(&y);
        }
        a &= a - 1;
        b &= b - 1;
    }
}

/// Canonical key for a raw pair, or None when the pair is not a boundary divisor.
pub fn canonical_mask(base: &ModuliBase, i: i64, s: u64) -> Option<BoundaryIndex> {
    if !raw_valid(base, i, s) {
        return None;
    }
    let i = i as u32;
    let (mi, ms) = (base.g - i, base.full_mask() & !s);
    let pick_raw = if base.n >= 1 { s & 1 == 1 } else { i <= mi };
    Some(if pick_raw { BoundaryIndex { i, s } } else { BoundaryIndex { i: mi, s: ms } })
}

/// Strict canonicalization for user-supplied keys.
pub fn canonical_index(base: &ModuliBase, i: i64, set: &[u32]) -> Result<BoundaryIndex> {
    let bad = || Error::InvalidBoundary { g: base.g, n: base.n, i, set: set.to_vec() };
    if set.iter().any(|&p| p == 0 || p > base.n) {
        return Err(bad());
    }
    let s = mask_of(set);
    if s.count_ones() as usize != set.len() {
        return Err(bad());
    }
    canonical_mask(base, i, s).ok_or_else(bad)
}

/// One generator of the Picard group.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Generator {
    Lambda,
    Psi(u32),
    Delta0,
    Boundary(BoundaryIndex),
}

impl Generator {
    pub fn is_valid_for(&self, base: &ModuliBase) -> bool {
        match self {
            Generator::Lambda | Generator::Delta0 => true,
            Generator::Psi(j) => *j >= 1 && *j <= base.n,
            Generator::Boundary(b) => {
                canonical_mask(base, b.i as i64, b.s).map(|c| c == *b).unwrap_or(false)
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Lambda => write!(f, "lambda"),
            Generator::Psi(j) => write!(f, "psi_{j}"),
            Generator::Delta0 => write!(f, "delta_0"),
            Generator::Boundary(b) => {
                let pts: Vec<String> = b.set().iter().map(|p| p.to_string()).collect();
                write!(f, "delta_{{{}:{{{}}}}}", b.i, pts.join(","))
            }
        }
    }
}

/// A rational divisor class on a fixed M̄_{g,n}.
///
/// `==` compares stored coefficients; [`DivisorClass::equals`] is the
/// mathematical equality, which in genus 2 first eliminates λ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisorClass {
    base: ModuliBase,
    lambda: Q,
    psi: Vec<Q>,
    delta0: Q,
    boundary: BTreeMap<BoundaryIndex, Q>,
}

impl DivisorClass {
    pub fn zero(base: ModuliBase) -> Self {
        DivisorClass {
            base,
            lambda: Q::zero(),
            psi: vec![Q::zero(); base.n as usize],
            delta0: Q::zero(),
            boundary: BTreeMap::new(),
        }
    }

    pub fn generator(base: ModuliBase, gen: Generator) -> Result<Self> {
        let mut c = Self::zero(base);
        c.add_term(gen, &Q::one())?;
        Ok(c)
    }

    pub fn base(&self) -> ModuliBase {
        self.base
    }

    pub fn lambda(&self) -> &Q {
        &self.lambda
    }

    pub fn psi(&self, j: u32) -> &Q {
        &self.psi[(j - 1) as usize]
    }

    pub fn psis(&self) -> &[Q] {
        &self.psi
    }

    pub fn delta0(&self) -> &Q {
        &self.delta0
    }

    pub fn boundary(&self) -> &BTreeMap<BoundaryIndex, Q> {
        &self.boundary
    }

    pub fn coeff(&self, gen: &Generator) -> Q {
        match gen {
            Generator::Lambda => self.lambda.clone(),
            Generator::Psi(j) => self.psi.get((*j as usize).wrapping_sub(1)).cloned().unwrap_or_default(),
            Generator::Delta0 => self.delta0.clone(),
            Generator::Boundary(b) => self.boundary.get(b).cloned().unwrap_or_default(),
        }
    }

    /// Adds `c` times a generator, which must be valid for the base.
    pub fn add_term(&mut self, gen: Generator, c: &Q) -> Result<()> {
        if !gen.is_valid_for(&self.base) {
            return Err(match gen {
                Generator::Boundary(b) => Error::InvalidBoundary {
                    g: self.base.g,
                    n: self.base.n,
                    i: b.i as i64,
                    set: b.set(),
                },
                _ => Error::ParamOutOfRange(format!("{gen} on {}", self.base)),
            });
        }
        match gen {
            Generator::Lambda => self.lambda += c,
            Generator::Psi(j) => self.psi[(j - 1) as usize] += c,
            Generator::Delta0 => self.delta0 += c,
            Generator::Boundary(b) => self.bump(b, c),
        }
        Ok(())
    }

    pub fn add_lambda(&mut self, c: &Q) {
        self.lambda += c;
    }

    pub fn add_psi(&mut self, j: u32, c: &Q) {
        self.psi[(j - 1) as usize] += c;
    }

    pub fn add_delta0(&mut self, c: &Q) {
        self.delta0 += c;
    }

    /// Adds `c·δ_{i:S}` for a raw pair; invalid pairs count as zero and are
    /// dropped. Returns whether the term landed.
    pub fn add_boundary_raw(&mut self, i: i64, s: u64, c: &Q) -> bool {
        match canonical_mask(&self.base, i, s) {
            Some(b) => {
                self.bump(b, c);
                true
            }
            None => false,
        }
    }

    /// Strict variant of [`add_boundary_raw`](Self::add_boundary_raw) for user input.
    pub fn add_boundary(&mut self, i: i64, set: &[u32], c: &Q) -> Result<()> {
        let b = canonical_index(&self.base, i, set)?;
        self.bump(b, c);
        Ok(())
    }

    fn bump(&mut self, b: BoundaryIndex, c: &Q) {
        if c.is_zero() {
            return;
        }
        let e = self.boundary.entry(b).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.boundary.remove(&b);
        }
    }

    fn check_base(&self, other: &Self) -> Result<()> {
        if self.base != other.base {
            return Err(Error::BaseMismatch(self.base.g, self.base.n, other.base.g, other.base.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other, &Q::one());
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other, &-Q::one());
        Ok(out)
    }

    /// self + q·other
    pub fn add_scaled(&self, q: &Q, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other, q);
        Ok(out)
    }

    fn add_assign_unchecked(&mut self, other: &Self, q: &Q) {
        self.lambda += &other.lambda * q;
        for (a, b) in self.psi.iter_mut().zip(&other.psi) {
            *a += b * q;
        }
        self.delta0 += &other.delta0 * q;
        for (b, c) in &other.boundary {
            self.bump(*b, &(c * q));
        }
    }

    pub fn scale(&self, q: &Q) -> Self {
        let mut out = Self::zero(self.base);
        out.add_assign_unchecked(self, q);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.is_zero()
            && self.delta0.is_zero()
            && self.psi.iter().all(Zero::is_zero)
            && self.boundary.is_empty()
    }

    /// Nonzero terms in generator order.
    pub fn terms(&self) -> Vec<(Generator, Q)> {
        let mut out = Vec::new();
        if !self.lambda.is_zero() {
            out.push((Generator::Lambda, self.lambda.clone()));
        }
        for (j, c) in self.psi.iter().enumerate() {
            if !c.is_zero() {
                out.push((Generator::Psi(j as u32 + 1), c.clone()));
            }
        }
        if !self.delta0.is_zero() {
            out.push((Generator::Delta0, self.delta0.clone()));
        }
        for (b, c) in &self.boundary {
            out.push((Generator::Boundary(*b), c.clone()));
        }
        out
    }

    /// Eliminates λ with λ = δ_0/10 + (1/5)Σ_{1∈S} δ_{1:S} (δ_1 when n = 0).
    pub fn normalize_genus2(&self) -> Result<Self> {
        if self.base.g != 2 {
            return Err(Error::NotGenus2(self.base.g));
        }
        let mut out = self.clone();
        let l = std::mem::take(&mut out.lambda);
        if l.is_zero() {
            return Ok(out);
        }
        out.delta0 += &l / q(10);
        let fifth = &l / q(5);
        if self.base.n == 0 {
            out.add_boundary_raw(1, 0, &fifth);
        } else {
            for s in 0..=self.base.full_mask() {
                if s & 1 == 1 {
                    out.add_boundary_raw(1, s, &fifth);
                }
            }
        }
        Ok(out)
    }

    fn comparable(&self) -> Self {
        if self.base.g == 2 {
            self.normalize_genus2().expect("genus checked")
        } else {
            self.clone()
        }
    }

    /// Exact equality in Pic(M̄_{g,n}) ⊗ Q.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_base(other)?;
        Ok(self.comparable() == other.comparable())
    }

    /// First generator (in storage order) where the two classes differ, with
    /// both coefficients. Genus 2 classes are normalized first.
    pub fn first_difference(&self, other: &Self) -> Result<Option<(Generator, Q, Q)>> {
        self.check_base(other)?;
        let (a, b) = (self.comparable(), other.comparable());
        let diff = a.sub(&b)?;
        Ok(diff.terms().into_iter().next().map(|(gen, _)| (gen, a.coeff(&gen), b.coeff(&gen))))
    }

    /// Renames marked points: old point k becomes point `perm[k-1]`.
    pub fn relabel(&self, perm: &[u32]) -> Result<Self> {
        let n = self.base.n as usize;
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::ArityMismatch { expected: n, got: perm.len() });
        }
        for &p in perm {
            if p == 0 || p as usize > n || seen[p as usize - 1] {
                return Err(Error::ParamOutOfRange(format!("{perm:?} is not a permutation")));
            }
            seen[p as usize - 1] = true;
        }
        let mut out = Self::zero(self.base);
        out.lambda = self.lambda.clone();
        out.delta0 = self.delta0.clone();
        for (k, c) in self.psi.iter().enumerate() {
            out.psi[perm[k] as usize - 1] = c.clone();
        }
        for (b, c) in &self.boundary {
            let s = points_of(b.s).iter().fold(0u64, |m, &p| m | 1 << (perm[p as usize - 1] - 1));
            out.add_boundary_raw(b.i as i64, s, c);
        }
        Ok(out)
    }

    /// Whether any coefficient has a nontrivial denominator.
    pub fn is_integral(&self) -> bool {
        self.terms().iter().all(|(_, c)| c.is_integer())
    }

    pub fn max_abs_coefficient(&self) -> Q {
        self.terms().into_iter().map(|(_, c)| c.abs()).max().unwrap_or_default()
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (gen, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "{gen}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(g: u32, n: u32) -> ModuliBase {
        ModuliBase::new(g, n).unwrap()
    }

    #[test]
    fn canonical_examples() {
        let k = canonical_index(&b(4, 2), 3, &[2]).unwrap();
        assert_eq!((k.genus(), k.set()), (1, vec![1]));
        let k = canonical_index(&b(3, 1), 2, &[]).unwrap();
        assert_eq!((k.genus(), k.set()), (1, vec![1]));
        let k = canonical_index(&b(5, 0), 4, &[]).unwrap();
        assert_eq!((k.genus(), k.set()), (1, vec![]));
    }

    #[test]
    fn invalid_boundary_rejected() {
        assert!(canonical_index(&b(3, 1), 0, &[1]).is_err());
        assert!(canonical_index(&b(3, 1), 3, &[]).is_err());
        assert!(canonical_index(&b(3, 2), 1, &[3]).is_err());
    }

    #[test]
    fn set_order_is_lexicographic() {
        let base = b(2, 3);
        let keys: Vec<Vec<u32>> =
            base.boundary_indices().iter().filter(|k| k.genus() == 1).map(|k| k.set()).collect();
        assert_eq!(keys, vec![vec![1], vec![1, 2], vec![1, 2, 3], vec![1, 3]]);
    }

    #[test]
    fn genus2_relation() {
        let l = DivisorClass::generator(b(2, 0), Generator::Lambda).unwrap();
        let nl = l.normalize_genus2().unwrap();
        assert_eq!(nl.delta0(), &frac(1, 10));
        assert_eq!(nl.boundary().values().cloned().collect::<Vec<_>>(), vec![frac(1, 5)]);
        let l2 = DivisorClass::generator(b(2, 2), Generator::Lambda).unwrap();
        let n2 = l2.normalize_genus2().unwrap();
        assert_eq!(n2.boundary().len(), 2);
        assert!(n2.equals(&l2).unwrap());
        assert!(matches!(
            DivisorClass::zero(b(3, 0)).normalize_genus2(),
            Err(Error::NotGenus2(3))
        ));
    }

    #[test]
    fn relabel_round_trip() {
        let base = b(3, 3);
        let mut c = DivisorClass::zero(base);
        c.add_psi(1, &q(2));
        c.add_boundary(1, &[1, 3], &q(5)).unwrap();
        let r = c.relabel(&[2, 3, 1]).unwrap();
        assert_eq!(r.psi(2), &q(2));
        assert_eq!(r.relabel(&[3, 1, 2]).unwrap(), c);
    }
}
