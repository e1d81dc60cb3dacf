//! Polynomials over GF(2), one bit per coefficient.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use super::AlgebraError;

/// A polynomial over GF(2).
///
/// Bit `k` of the limb vector is the coefficient of `x^k`. Trailing zero limbs
/// are never stored, so equality is structural and the zero polynomial is the
/// empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    limbs: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Gf2Poly { limbs: vec![1] }
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Gf2Poly::monomial(1)
    }

    pub fn monomial(k: usize) -> Self {
        let mut p = Gf2Poly::zero();
        p.flip(k);
        p
    }

    /// Build from the exponents of the nonzero terms. Repeated exponents cancel.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = Gf2Poly::zero();
        for e in exps {
            p.flip(e);
        }
        p
    }

    /// Build from a bit mask (bit `k` = coefficient of `x^k`).
    pub fn from_u64(mask: u64) -> Self {
        let mut p = Gf2Poly { limbs: vec![mask] };
        p.normalize();
        p
    }

    /// Low 64 coefficients as a mask; `None` if the degree exceeds 63.
    pub fn to_u64(&self) -> Option<u64> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0]),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, k: usize) -> bool {
        self.limbs
            .get(k / 64)
            .is_some_and(|&w| (w >> (k % 64)) & 1 == 1)
    }

    fn flip(&mut self, k: usize) {
        let w = k / 64;
        if self.limbs.len() <= w {
            self.limbs.resize(w + 1, 0);
        }
        self.limbs[w] ^= 1 << (k % 64);
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    /// Exponents of the nonzero terms, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &w) in self.limbs.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(i * 64 + b);
                w &= w - 1;
            }
        }
        out
    }

    /// Number of nonzero terms.
    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Comma-separated exponent list, e.g. `"0,2,5"` for `1+x^2+x^5`.
    pub fn to_exponent_list(&self) -> String {
        self.exponents()
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parse a comma-separated exponent list.
    pub fn parse_exponent_list(s: &str) -> Result<Self, AlgebraError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Gf2Poly::zero());
        }
        let mut exps = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let e: usize = part
                .parse()
                .map_err(|_| AlgebraError::BadPolynomial(s.to_string()))?;
            if exps.contains(&e) {
                return Err(AlgebraError::BadPolynomial(s.to_string()));
            }
            exps.push(e);
        }
        Ok(Gf2Poly::from_exponents(exps))
    }

    fn shl_xor_into(acc: &mut Vec<u64>, src: &[u64], shift: usize) {
        let (ws, bs) = (shift / 64, shift % 64);
        let need = src.len() + ws + 1;
        if acc.len() < need {
            acc.resize(need, 0);
        }
        for (i, &w) in src.iter().enumerate() {
            acc[i + ws] ^= w << bs;
            if bs != 0 {
                acc[i + ws + 1] ^= w >> (64 - bs);
            }
        }
    }

    pub fn square(&self) -> Gf2Poly {
        self * self
    }

    pub fn pow(&self, mut n: u64) -> Gf2Poly {
        let mut base = self.clone();
        let mut acc = Gf2Poly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Quotient and remainder. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Gf2Poly) -> (Gf2Poly, Gf2Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = Gf2Poly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quot.flip(shift);
            Self::shl_xor_into(&mut rem.limbs, &divisor.limbs, shift);
            rem.normalize();
        }
        (quot, rem)
    }

    pub fn rem(&self, divisor: &Gf2Poly) -> Gf2Poly {
        self.div_rem(divisor).1
    }

    pub fn gcd(&self, other: &Gf2Poly) -> Gf2Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn mul_mod(&self, other: &Gf2Poly, modulus: &Gf2Poly) -> Gf2Poly {
        (self * other).rem(modulus)
    }

    pub fn pow_mod(&self, mut n: u64, modulus: &Gf2Poly) -> Gf2Poly {
        let mut base = self.rem(modulus);
        let mut acc = Gf2Poly::one().rem(modulus);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_mod(&base, modulus);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_mod(&base, modulus);
            }
        }
        acc
    }

    /// `x^deg · p(1/x)`: the polynomial with its coefficient order reversed.
    pub fn reciprocal(&self) -> Gf2Poly {
        match self.degree() {
            None => Gf2Poly::zero(),
            Some(d) => Gf2Poly::from_exponents(self.exponents().into_iter().map(|e| d - e)),
        }
    }

    /// Apply the polynomial as a linear recurrence: for every `t` with
    /// `t + deg < len`, XOR together `s[t + e]` over the exponents `e`.
    /// A sequence is annihilated by the polynomial iff every entry is zero.
    pub fn syndrome(&self, s: &[bool]) -> Vec<bool> {
        let exps = self.exponents();
        let Some(&deg) = exps.last() else {
            return Vec::new();
        };
        if s.len() <= deg {
            return Vec::new();
        }
        (0..s.len() - deg)
            .map(|t| exps.iter().fold(false, |acc, &e| acc ^ s[t + e]))
            .collect()
    }

    pub fn annihilates(&self, s: &[bool]) -> bool {
        self.syndrome(s).iter().all(|&b| !b)
    }
}

impl Ord for Gf2Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl PartialOrd for Gf2Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: &Gf2Poly) -> Gf2Poly {
        let (long, short) = if self.limbs.len() >= rhs.limbs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut limbs = long.limbs.clone();
        for (w, s) in limbs.iter_mut().zip(&short.limbs) {
            *w ^= s;
        }
        let mut p = Gf2Poly { limbs };
        p.normalize();
        p
    }
}

impl Add for Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: Gf2Poly) -> Gf2Poly {
        &self + &rhs
    }
}

impl Mul for &Gf2Poly {
    type Output = Gf2Poly;

    fn mul(self, rhs: &Gf2Poly) -> Gf2Poly {
        if self.is_zero() || rhs.is_zero() {
            return Gf2Poly::zero();
        }
        let mut acc = vec![0u64; self.limbs.len() + rhs.limbs.len() + 1];
        for e in self.exponents() {
            Gf2Poly::shl_xor_into(&mut acc, &rhs.limbs, e);
        }
        let mut p = Gf2Poly { limbs: acc };
        p.normalize();
        p
    }
}

impl Mul for Gf2Poly {
    type Output = Gf2Poly;

    fn mul(self, rhs: Gf2Poly) -> Gf2Poly {
        &self * &rhs
    }
}

impl FromStr for Gf2Poly {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Gf2Poly::parse_exponent_list(s)
    }
}

impl fmt::Display for Gf2Poly {
    /// Ascending-degree form, e.g. `1+x^2+x^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(exps: &[usize]) -> Gf2Poly {
        Gf2Poly::from_exponents(exps.iter().copied())
    }

    #[test]
    fn square_of_x_plus_one() {
        assert_eq!(p(&[0, 1]).square(), p(&[0, 2]));
    }

    #[test]
    fn powers_of_x2_plus_1() {
        let p2 = p(&[0, 2]);
        assert_eq!(p2.pow(2), p(&[0, 4]));
        assert_eq!(p2.pow(3), p(&[0, 2, 4, 6]));
        assert_eq!(p2.pow(4), p(&[0, 8]));
    }

    #[test]
    fn degree_and_zero() {
        assert_eq!(Gf2Poly::zero().degree(), None);
        assert_eq!(Gf2Poly::one().degree(), Some(0));
        assert_eq!(Gf2Poly::monomial(130).degree(), Some(130));
        assert_eq!(p(&[3, 3]), Gf2Poly::zero());
    }

    #[test]
    fn division_round_trips() {
        let a = p(&[0, 3, 64, 70, 129]);
        let b = p(&[0, 1, 5, 66]);
        let (q, r) = a.div_rem(&b);
        assert!(r.degree() < b.degree());
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn exponent_list_round_trip() {
        let q: Gf2Poly = "0,2,5".parse().unwrap();
        assert_eq!(q.to_exponent_list(), "0,2,5");
        assert_eq!(q.to_string(), "1+x^2+x^5");
        assert!("0,2,2".parse::<Gf2Poly>().is_err());
        assert!("0,a".parse::<Gf2Poly>().is_err());
    }

    #[test]
    fn syndrome_detects_recurrence() {
        // 1 0 0 1 1 1 0 repeated satisfies 1+x^2+x^3
        let s: Vec<bool> = [1, 0, 0, 1, 1, 1, 0, 1, 0, 0, 1]
            .iter()
            .map(|&b| b == 1)
            .collect();
        assert!(p(&[0, 2, 3]).annihilates(&s));
        assert!(!p(&[0, 1, 3]).annihilates(&s));
    }

    #[test]
    fn reciprocal_reverses() {
        assert_eq!(p(&[0, 1, 3]).reciprocal(), p(&[0, 2, 3]));
    }
}
