//! Linear 90/150 cellular automaton models of shrinking generators and CCSGs.

use thiserror::Error;

use crate::algebra::{char_poly_of_rules, AlgebraError, FieldTable, Gf2Poly, RuleVector};

/// Largest polynomial degree accepted by [`synthesize_ca_pair`].
pub const MAX_SYNTHESIS_DEGREE: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinearizerError {
    #[error("coset of exponent {exponent} has {size} elements, fewer than L2 = {l2}")]
    DegenerateCoset { exponent: u64, size: usize, l2: usize },
    #[error("no 90/150 rule vector has characteristic polynomial {0}")]
    SynthesisFailed(Gf2Poly),
    #[error("degree {0} is beyond the synthesis limit")]
    DegreeTooLarge(usize),
    #[error("L1 must be at least 1")]
    BadL1,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `E = 2^L1 - 1` for the shrinking generator (`w = 0`), otherwise the CCSG
/// distance `D = (1 + 2^w) 2^(L1-1) - 1`.
pub fn coset_exponent(l1: usize, w: usize) -> u64 {
    assert!((1..=62).contains(&l1) && w < 62, "exponent overflows u64");
    if w == 0 {
        (1u64 << l1) - 1
    } else {
        ((1u64 + (1u64 << w)) << (l1 - 1)) - 1
    }
}

/// Walk the recurrence backwards from `(P_k, P_{k-1})` and recover
/// `R_k, …, R_1`, or `None` if some remainder has the wrong degree.
fn unwind(p: u64, q: u64, n: usize) -> Option<Vec<bool>> {
    let (mut a, mut b) = (p, q);
    let mut rules = vec![false; n];
    for k in (1..=n).rev() {
        let mut c = a ^ (b << 1);
        let r = c >> (k - 1) & 1 == 1;
        if r {
            c ^= b;
        }
        let ok = if k == 1 { c == 0 } else { c >> (k - 2) == 1 };
        if !ok {
            return None;
        }
        rules[k - 1] = r;
        a = b;
        b = c;
    }
    Some(rules)
}

/// Two mirror-image rule vectors whose characteristic polynomial is `p`.
///
/// Candidates for `P_{n-1}` are tried in descending order; the first that
/// unwinds to `P_0 = 1`, `P_{-1} = 0` gives the first vector.
pub fn synthesize_ca_pair(p: &Gf2Poly) -> Result<(RuleVector, RuleVector), LinearizerError> {
    let n = p.degree().filter(|&n| n >= 1).ok_or_else(|| LinearizerError::SynthesisFailed(p.clone()))?;
    if n > MAX_SYNTHESIS_DEGREE {
        return Err(LinearizerError::DegreeTooLarge(n));
    }
    let target = p.to_u64().expect("degree checked");
    let top = 1u64 << (n - 1);
    let found = (0..top).rev().find_map(|low| unwind(target, top | low, n));
    let rules = found.ok_or_else(|| LinearizerError::SynthesisFailed(p.clone()))?;
    let first = RuleVector::new(rules);
    debug_assert_eq!(&char_poly_of_rules(&first), p);
    let second = first.reversed();
    Ok((first, second))
}

/// Complement the rightmost rule, then append the mirror image.
pub fn concatenate_once(rv: &RuleVector) -> RuleVector {
    let mut s = rv.rules().to_vec();
    *s.last_mut().expect("rule vectors are nonempty") ^= true;
    let mirror: Vec<bool> = s.iter().rev().copied().collect();
    s.extend(mirror);
    RuleVector::new(s)
}

/// Result of linearizing a generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linearization {
    /// The coset exponent before reduction modulo `2^L2 - 1`.
    pub exponent: u64,
    /// Minimal polynomial of `λ^exponent`.
    pub p: Gf2Poly,
    /// Each chain starts at a synthesized basic automaton and ends at the
    /// full-length model, one entry per concatenation.
    pub chains: [Vec<RuleVector>; 2],
}

impl Linearization {
    pub fn first(&self) -> &RuleVector {
        self.chains[0].last().unwrap()
    }

    pub fn second(&self) -> &RuleVector {
        self.chains[1].last().unwrap()
    }

    pub fn pair(&self) -> [&RuleVector; 2] {
        [self.first(), self.second()]
    }

    /// Characteristic polynomial of either model, `P(x)^(2^(L1-1))`.
    pub fn model_char_poly(&self) -> Gf2Poly {
        let steps = self.chains[0].len() - 1;
        self.p.pow(1u64 << steps)
    }
}

/// Coset exponent, its minimal polynomial, the synthesized basic pair and
/// `L1 - 1` concatenations of each.
pub fn linearize_generator(l1: usize, c2: &Gf2Poly, w: usize) -> Result<Linearization, LinearizerError> {
    if l1 == 0 {
        return Err(LinearizerError::BadL1);
    }
    let ft = FieldTable::new(c2)?;
    let exponent = coset_exponent(l1, w);
    let size = ft.cyclotomic_coset(exponent).len();
    let l2 = ft.degree();
    if size < l2 || ft.reduce(exponent) == 0 {
        return Err(LinearizerError::DegenerateCoset { exponent, size, l2 });
    }
    let p = ft.min_poly_of_power(exponent);
    let (a, b) = synthesize_ca_pair(&p)?;
    let chain = |start: RuleVector| {
        let mut out = vec![start];
        for _ in 1..l1 {
            let next = concatenate_once(out.last().unwrap());
            out.push(next);
        }
        out
    };
    Ok(Linearization { exponent, p, chains: [chain(a), chain(b)] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::primitive_polynomials;

    fn p(exps: &[usize]) -> Gf2Poly {
        Gf2Poly::from_exponents(exps.iter().copied())
    }

    fn rv(s: &str) -> RuleVector {
        s.parse().unwrap()
    }

    #[test]
    fn exponents() {
        assert_eq!(coset_exponent(3, 0), 7);
        assert_eq!(coset_exponent(3, 3), 35);
        assert_eq!(coset_exponent(3, 3) % 31, 4);
        assert_eq!(coset_exponent(2, 0), 3);
        assert_eq!(coset_exponent(3, 1), 11);
    }

    #[test]
    fn synthesis_examples() {
        assert_eq!(synthesize_ca_pair(&p(&[0, 2, 5])).unwrap(), (rv("01111"), rv("11110")));
        assert_eq!(synthesize_ca_pair(&p(&[0, 1, 2, 4, 5])).unwrap(), (rv("10000"), rv("00001")));
        assert_eq!(synthesize_ca_pair(&p(&[0, 1])).unwrap(), (rv("1"), rv("1")));
        assert!(synthesize_ca_pair(&Gf2Poly::one()).is_err());
    }

    #[test]
    fn synthesis_covers_small_primitives() {
        for m in 1..=10 {
            for q in primitive_polynomials(m) {
                let (a, b) = synthesize_ca_pair(&q).unwrap();
                assert_eq!(char_poly_of_rules(&a), q);
                assert_eq!(char_poly_of_rules(&b), q);
                assert_eq!(a.reversed(), b);
            }
        }
    }

    #[test]
    fn concatenation_chains() {
        assert_eq!(concatenate_once(&rv("01111")), rv("0111001110"));
        assert_eq!(concatenate_once(&rv("00001")), rv("0000000000"));
        assert_eq!(concatenate_once(&rv("0000000000")), rv("00000000011000000000"));
    }

    #[test]
    fn shrinking_model() {
        let lin = linearize_generator(3, &p(&[0, 1, 2, 4, 5]), 0).unwrap();
        assert_eq!(lin.p, p(&[0, 2, 5]));
        assert_eq!(lin.first().to_binary(), "01110011111111001110");
        assert_eq!(lin.chains[1][1].to_binary(), "1111111111");
        assert_eq!(lin.second().to_binary(), "11111111100111111111");
        assert_eq!(lin.model_char_poly(), p(&[0, 2, 5]).pow(4));
    }

    #[test]
    fn ccsg_model() {
        let lin = linearize_generator(3, &p(&[0, 1, 2, 4, 5]), 3).unwrap();
        assert_eq!(lin.p, p(&[0, 1, 2, 4, 5]));
        assert_eq!(lin.first().to_binary(), "10001100000000110001");
        assert_eq!(lin.second().to_binary(), "00000000011000000000");
    }

    #[test]
    fn attack_instance_models() {
        let lin = linearize_generator(4, &p(&[0, 1, 3, 4, 5]), 0).unwrap();
        assert_eq!(lin.first().to_hex(), "8C0300C031");
        assert_eq!(lin.second().to_hex(), "0060180600");
        assert_eq!(char_poly_of_rules(lin.second()), lin.p.pow(8));
    }

    #[test]
    fn degenerate_coset() {
        // D = 3·2 - 1 = 9 has order 7 modulo 63, so λ^9 lies in GF(8)
        let c2 = primitive_polynomials(6).remove(0);
        assert!(matches!(
            linearize_generator(2, &c2, 2),
            Err(LinearizerError::DegenerateCoset { exponent: 9, size: 3, l2: 6 })
        ));
    }
}
