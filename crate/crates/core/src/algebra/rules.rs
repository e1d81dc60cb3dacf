//! Rule vectors of hybrid 90/150 cellular automata.

use std::fmt;
use std::str::FromStr;

use super::{AlgebraError, Gf2Poly};
use crate::bits::bits_to_string;

/// Per-cell rules `R_1..R_L`: `false` is rule 90, `true` is rule 150.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RuleVector {
    rules: Vec<bool>,
}

impl RuleVector {
    /// Panics on an empty vector.
    pub fn new(rules: Vec<bool>) -> Self {
        assert!(!rules.is_empty(), "rule vector must have at least one cell");
        RuleVector { rules }
    }

    /// Binary form, leftmost character is cell 1.
    pub fn from_binary(s: &str) -> Result<Self, AlgebraError> {
        let rules = crate::bits::parse_bits(s)
            .map_err(|_| AlgebraError::BadRuleVector(s.to_string()))?;
        if rules.is_empty() {
            return Err(AlgebraError::BadRuleVector(s.to_string()));
        }
        Ok(RuleVector { rules })
    }

    /// Hex form of a `len`-cell vector: bits packed MSB-first, last nibble
    /// zero-padded. Padding bits must be zero.
    pub fn from_hex(s: &str, len: usize) -> Result<Self, AlgebraError> {
        let bad = || AlgebraError::BadRuleVector(s.to_string());
        if len == 0 || s.len() != len.div_ceil(4) {
            return Err(bad());
        }
        let mut rules = Vec::with_capacity(s.len() * 4);
        for c in s.chars() {
            let v = c.to_digit(16).ok_or_else(bad)?;
            rules.extend((0..4).rev().map(|k| v >> k & 1 == 1));
        }
        if rules[len..].iter().any(|&b| b) {
            return Err(bad());
        }
        rules.truncate(len);
        Ok(RuleVector { rules })
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn rules(&self) -> &[bool] {
        &self.rules
    }

    /// Rule of cell `i`, 1-based.
    pub fn rule(&self, i: usize) -> bool {
        self.rules[i - 1]
    }

    /// The mirror image (cell `L` becomes cell 1).
    pub fn reversed(&self) -> RuleVector {
        RuleVector { rules: self.rules.iter().rev().copied().collect() }
    }

    pub fn to_binary(&self) -> String {
        bits_to_string(&self.rules)
    }

    pub fn to_hex(&self) -> String {
        self.rules
            .chunks(4)
            .map(|chunk| {
                let v = chunk.iter().enumerate().fold(0u32, |acc, (k, &b)| acc | (b as u32) << (3 - k));
                char::from_digit(v, 16).unwrap().to_ascii_uppercase()
            })
            .collect()
    }

    /// `P_0 .. P_L` of the recurrence `P_i = (x + R_i) P_{i-1} + P_{i-2}`,
    /// with `P_{-1} = 0` and `P_0 = 1`.
    pub fn partial_char_polys(&self) -> Vec<Gf2Poly> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut prev = Gf2Poly::zero();
        let mut cur = Gf2Poly::one();
        out.push(cur.clone());
        for &r in &self.rules {
            let factor = if r { Gf2Poly::from_exponents([0, 1]) } else { Gf2Poly::x() };
            let next = &(&factor * &cur) + &prev;
            prev = std::mem::replace(&mut cur, next);
            out.push(cur.clone());
        }
        out
    }
}

/// Characteristic polynomial `P_L(x)` of the null-boundary CA with these rules.
pub fn char_poly_of_rules(rv: &RuleVector) -> Gf2Poly {
    rv.partial_char_polys().pop().expect("recurrence yields L+1 entries")
}

impl FromStr for RuleVector {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleVector::from_binary(s)
    }
}

impl fmt::Display for RuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binary())
    }
}

impl fmt::Debug for RuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RuleVector({})", self.to_binary())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(s: &str) -> RuleVector {
        s.parse().unwrap()
    }

    fn p(exps: &[usize]) -> Gf2Poly {
        Gf2Poly::from_exponents(exps.iter().copied())
    }

    #[test]
    fn char_polys() {
        assert_eq!(char_poly_of_rules(&rv("1")), p(&[0, 1]));
        assert_eq!(char_poly_of_rules(&rv("00")), p(&[0, 2]));
        assert_eq!(char_poly_of_rules(&rv("01111")), p(&[0, 2, 5]));
        assert_eq!(char_poly_of_rules(&rv("11110")), p(&[0, 2, 5]));
        assert_eq!(char_poly_of_rules(&rv("10000")), p(&[0, 1, 2, 4, 5]));
    }

    #[test]
    fn partials_for_subtriangles() {
        let parts = rv("00").partial_char_polys();
        assert_eq!(parts, vec![p(&[0]), p(&[1]), p(&[0, 2])]);
    }

    #[test]
    fn hex_round_trip() {
        let v = rv("1000110000000011000000001100000000110001");
        assert_eq!(v.to_hex(), "8C0300C031");
        assert_eq!(RuleVector::from_hex("8C0300C031", 40).unwrap(), v);
        assert_eq!(rv("101").to_hex(), "A");
        assert_eq!(RuleVector::from_hex("A", 3).unwrap(), rv("101"));
        assert!(RuleVector::from_hex("B", 3).is_err());
        assert!(RuleVector::from_hex("AA", 3).is_err());
    }

    #[test]
    fn rejects_empty() {
        assert!(RuleVector::from_binary("").is_err());
        assert!(RuleVector::from_binary("012").is_err());
    }

    #[test]
    fn mirror() {
        assert_eq!(rv("01111").reversed(), rv("11110"));
    }
}
