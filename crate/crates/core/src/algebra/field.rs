//! GF(2^m) arithmetic in exponent form, backed by log/antilog and Zech tables.

use std::fmt;

use super::{AlgebraError, Gf2Poly};

/// Largest extension degree for which tables are built.
pub const MAX_FIELD_DEGREE: usize = 24;

/// A field element written as a power of the primitive element, or zero.
///
/// `Pow(0)` is the element 1; the additive identity is the separate `Zero`
/// marker and never an exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exp {
    Zero,
    Pow(u32),
}

impl Exp {
    pub fn pow(self) -> Option<u32> {
        match self {
            Exp::Zero => None,
            Exp::Pow(k) => Some(k),
        }
    }
}

impl fmt::Display for Exp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exp::Zero => f.write_str("ZERO"),
            Exp::Pow(k) => write!(f, "{k}"),
        }
    }
}

/// Log, antilog and Zech logarithm tables for GF(2^m) = GF(2)[x]/(p(x)), with
/// `α = x mod p` as the primitive element.
///
/// Elements are packed as `m`-bit masks in the polynomial basis
/// `1, α, …, α^(m-1)`. Immutable after construction.
#[derive(Clone)]
pub struct FieldTable {
    modulus: Gf2Poly,
    m: usize,
    order: u32,
    antilog: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<Exp>,
}

impl FieldTable {
    /// Build the tables by walking the powers of `α`.
    pub fn new(modulus: &Gf2Poly) -> Result<Self, AlgebraError> {
        let m = modulus.degree().unwrap_or(0);
        if m > MAX_FIELD_DEGREE {
            return Err(AlgebraError::FieldTooLarge { degree: m, max: MAX_FIELD_DEGREE });
        }
        if !modulus.is_primitive() {
            return Err(AlgebraError::NonPrimitiveModulus(modulus.clone()));
        }
        let order = (1u32 << m) - 1;
        let reduce = modulus.to_u64().expect("degree checked above") as u32 & order;
        let top = 1u32 << (m - 1);

        let mut antilog = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; 1 << m];
        let mut e = 1u32;
        for k in 0..order {
            antilog.push(e);
            log[e as usize] = k;
            // multiply by α
            e = if e & top != 0 { ((e << 1) & order) ^ reduce } else { e << 1 };
        }
        debug_assert_eq!(e, 1, "primitive modulus must cycle back to 1");

        let zech = (0..order)
            .map(|k| {
                let s = antilog[k as usize] ^ 1;
                if s == 0 { Exp::Zero } else { Exp::Pow(log[s as usize]) }
            })
            .collect();

        Ok(FieldTable { modulus: modulus.clone(), m, order, antilog, log, zech })
    }

    pub fn modulus(&self) -> &Gf2Poly {
        &self.modulus
    }

    /// Extension degree `m`.
    pub fn degree(&self) -> usize {
        self.m
    }

    /// Size of the multiplicative group, `2^m - 1`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Reduce an arbitrary exponent modulo the group order.
    pub fn reduce(&self, k: u64) -> u32 {
        (k % self.order as u64) as u32
    }

    /// `α^k` as a bit mask.
    pub fn antilog(&self, k: u64) -> u32 {
        self.antilog[self.reduce(k) as usize]
    }

    pub fn log(&self, elem: u32) -> Exp {
        if elem == 0 {
            Exp::Zero
        } else {
            Exp::Pow(self.log[elem as usize])
        }
    }

    /// Zech logarithm: the `z` with `1 + α^k = α^z`, or `Zero` when `k ≡ 0`.
    pub fn zech(&self, k: u64) -> Exp {
        self.zech[self.reduce(k) as usize]
    }

    /// Discrete log of `Σ α^e` over the given exponents.
    pub fn sum_of_powers(&self, exponents: &[u64]) -> Exp {
        let acc = exponents.iter().fold(0u32, |acc, &e| acc ^ self.antilog(e));
        self.log(acc)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let k = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.antilog(k)
    }

    /// The cyclotomic coset `{e, 2e, 4e, …} mod 2^m - 1`, in generation order.
    pub fn cyclotomic_coset(&self, e: u64) -> Vec<u32> {
        let start = self.reduce(e);
        let mut coset = vec![start];
        let mut c = self.reduce(2 * start as u64);
        while c != start {
            coset.push(c);
            c = self.reduce(2 * c as u64);
        }
        coset
    }

    /// Minimal polynomial over GF(2) of `α^e`, computed as
    /// `Π (x + α^(e·2^k))` over the cyclotomic coset of `e`.
    pub fn min_poly_of_power(&self, e: u64) -> Gf2Poly {
        // coefficients in GF(2^m), ascending degree
        let mut coeffs: Vec<u32> = vec![1];
        for c in self.cyclotomic_coset(e) {
            let root = self.antilog(c as u64);
            let mut next = vec![0u32; coeffs.len() + 1];
            for (i, &a) in coeffs.iter().enumerate() {
                next[i + 1] ^= a;
                next[i] ^= self.mul(a, root);
            }
            coeffs = next;
        }
        assert!(
            coeffs.iter().all(|&c| c <= 1),
            "minimal polynomial coefficients must lie in GF(2)"
        );
        Gf2Poly::from_exponents(
            coeffs.iter().enumerate().filter(|(_, &c)| c == 1).map(|(i, _)| i),
        )
    }
}

impl fmt::Debug for FieldTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldTable")
            .field("modulus", &self.modulus)
            .field("m", &self.m)
            .finish_non_exhaustive()
    }
}

/// Minimal polynomial of `λ^e`, `λ` a root of the primitive polynomial `c2`.
pub fn min_poly_of_power(c2: &Gf2Poly, e: u64) -> Result<Gf2Poly, AlgebraError> {
    Ok(FieldTable::new(c2)?.min_poly_of_power(e))
}
