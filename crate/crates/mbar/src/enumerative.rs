//! Counting formulas: de Jonquières, Plücker, the degree of the weighted
//! Abel map into the Picard variety, and the residue polynomial of a
//! two-pole differential on P¹.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::pic::Q;

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// C(a, b) with the convention that it vanishes for b < 0 or b > a.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for t in 0..b {
        acc = acc * BigInt::from(a - t) / BigInt::from(t + 1);
    }
    acc
}

/// Elementary symmetric polynomials e_0..e_ρ of the entries.
fn elementary_symmetric(ks: &[u32]) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); ks.len() + 1];
    e[0] = BigInt::one();
    for (t, &k) in ks.iter().enumerate() {
        for s in (1..=t + 1).rev() {
            let prev = e[s - 1].clone();
            e[s] += prev * BigInt::from(k);
        }
    }
    e
}

/// Number of sections of a general g^r_d with ordered zeros of multiplicity
/// k_1..k_ρ, ρ = d - r. Requires ρ ≤ g - 1; dJ[1; ∅] = 1.
///
/// The inner sum over |I| = j of Π_{i∉I} k_i is the elementary symmetric
/// polynomial e_{ρ-j}(k).
pub fn de_jonquieres(g: u32, ks: &[u32]) -> Result<Q> {
    let rho = ks.len();
    if g == 0 || (g as usize) < rho + 1 {
        return Err(Error::ProfileTooLong { g, rho });
    }
    if ks.contains(&0) {
        return Err(Error::ParamOutOfRange("zero multiplicities must be positive".into()));
    }
    let e = elementary_symmetric(ks);
    let g_i = g as i64;
    let rho_i = rho as i64;
    let mut sum = Q::zero();
    for j in 0..rho {
        let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        sum += Q::new(sign * &e[rho - j], BigInt::from(g_i - rho_i + j as i64));
    }
    let last = if rho.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    sum += Q::new(last, BigInt::from(g_i));
    let lead = Q::new(factorial(g as u64), factorial((g_i - rho_i - 1) as u64)) * Q::from_integer(e[rho].clone());
    Ok(lead * sum)
}

/// [`de_jonquieres`] with zeros of equal multiplicity left unlabelled: the
/// ordered count divided by m! for every multiplicity occurring m times.
pub fn de_jonquieres_unlabelled(g: u32, ks: &[u32]) -> Result<Q> {
    let ordered = de_jonquieres(g, ks)?;
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for &k in ks {
        *counts.entry(k).or_default() += 1;
    }
    let sym: BigInt = counts.values().map(|&m| factorial(m)).product();
    Ok(ordered / Q::from_integer(sym))
}

/// Simple ramification points of a general g^r_d: (r+1)d + (r+1)r(g-1).
pub fn plucker(r: i64, d: i64, g: i64) -> BigInt {
    BigInt::from(r + 1) * BigInt::from(d) + BigInt::from(r + 1) * BigInt::from(r) * BigInt::from(g - 1)
}

/// Degree of (p_1..p_g) ↦ Σ k_i p_i into Pic^d: g!·Π k_i².
pub fn picard_degree(ks: &[i64], g: u32) -> Result<BigInt> {
    if ks.len() != g as usize {
        return Err(Error::ArityMismatch { expected: g as usize, got: ks.len() });
    }
    if ks.contains(&0) {
        return Err(Error::ParamOutOfRange("weights must be nonzero".into()));
    }
    Ok(ks.iter().fold(factorial(g as u64), |acc, &k| acc * BigInt::from(k) * BigInt::from(k)))
}

/// Dense polynomial with integer coefficients, index = degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Σ_{i=0}^{j-1} C(j+k-m-2, i)·C(m, j-i-1)·t^i: the residue at 0 of
/// (z-1)^{j+k-m-2}(z-t)^m z^{-j} dz with the unit and t-power stripped.
/// The two zero orders must be positive and both pole orders at least 2.
pub fn residue_polynomial(j: i64, k: i64, m: i64) -> Result<IntPolynomial> {
    if j < 2 || k < 2 || m < 1 || m > j + k - 3 {
        return Err(Error::OutOfRange { j, k, m });
    }
    let a = j + k - m - 2;
    Ok(IntPolynomial::new((0..j).map(|i| binomial(a, i) * binomial(m, j - i - 1)).collect()))
}

type RatPoly = Vec<BigRational>;

fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn rem(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut r = a.clone();
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / lead;
        for (t, c) in b.iter().enumerate() {
            r[shift + t] -= &f * c;
        }
        r = trim(r);
    }
    r
}

fn gcd(a: RatPoly, b: RatPoly) -> RatPoly {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Number of distinct nonzero complex roots, computed exactly as the degree
/// of the squarefree part after removing the factor t^v.
pub fn count_distinct_nonzero_roots(p: &IntPolynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let v = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    let stripped: RatPoly = p.coeffs[v..].iter().map(|c| BigRational::from_integer(c.clone())).collect();
    if stripped.len() <= 1 {
        return Ok(0);
    }
    let deriv: RatPoly = stripped
        .iter()
        .enumerate()
        .skip(1)
        .map(|(e, c)| c * BigRational::from_integer(BigInt::from(e)))
        .collect();
    let common = gcd(stripped.clone(), deriv);
    Ok(stripped.len() - common.len())
}

/// Integer value of an integral rational, if it is one.
pub fn as_integer(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pic::q;

    #[test]
    fn dj_small_values() {
        assert_eq!(de_jonquieres(1, &[]).unwrap(), q(1));
        assert_eq!(de_jonquieres(3, &[2, 1]).unwrap(), q(10));
        assert_eq!(de_jonquieres_unlabelled(4, &[1, 2, 2]).unwrap(), q(68));
        assert_eq!(de_jonquieres(4, &[1, 2, 2]).unwrap(), q(136));
        assert!(matches!(de_jonquieres(2, &[2, 1, 1]), Err(Error::ProfileTooLong { g: 2, rho: 3 })));
    }

    #[test]
    fn plucker_and_picard() {
        assert_eq!(plucker(1, 4, 2), BigInt::from(10));
        assert_eq!(plucker(0, 7, 5), BigInt::from(7));
        assert_eq!(picard_degree(&[2, 1], 2).unwrap(), BigInt::from(8));
        assert_eq!(picard_degree(&[5, 1], 2).unwrap(), BigInt::from(50));
        assert_eq!(picard_degree(&[-3], 1).unwrap(), BigInt::from(9));
        assert!(picard_degree(&[1, 2], 3).is_err());
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue_polynomial(4, 5, 5).unwrap(), IntPolynomial::from_i64(&[10, 20, 5]));
        assert_eq!(residue_polynomial(2, 2, 1).unwrap(), IntPolynomial::from_i64(&[1, 1]));
        assert!(residue_polynomial(1, 5, 1).is_err());
        assert!(residue_polynomial(4, 5, 7).is_err());
    }

    #[test]
    fn root_counts() {
        assert_eq!(count_distinct_nonzero_roots(&IntPolynomial::from_i64(&[0, 0, 0, 1])).unwrap(), 0);
        assert_eq!(count_distinct_nonzero_roots(&IntPolynomial::from_i64(&[1, 2, 1])).unwrap(), 1);
        assert_eq!(count_distinct_nonzero_roots(&IntPolynomial::from_i64(&[0, -1, 0, 1])).unwrap(), 2);
        assert_eq!(count_distinct_nonzero_roots(&IntPolynomial::from_i64(&[5])).unwrap(), 0);
        assert!(matches!(count_distinct_nonzero_roots(&IntPolynomial::from_i64(&[])), Err(Error::ZeroPolynomial)));
    }
}
