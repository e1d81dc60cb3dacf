use super::Gf2Poly;

/// Largest degree for which [`Gf2Poly::is_primitive`] factors `2^m - 1`.
pub const MAX_PRIMITIVITY_DEGREE: usize = 32;

/// Distinct prime factors by trial division.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `x^(2^k) mod p` by repeated squaring.
fn x_pow_two_pow(k: usize, p: &Gf2Poly) -> Gf2Poly {
    let mut t = Gf2Poly::x().rem(p);
    for _ in 0..k {
        t = t.mul_mod(&t, p);
    }
    t
}

impl Gf2Poly {
    /// Rabin's test: `x^(2^m) ≡ x (mod p)` and `gcd(x^(2^(m/q)) - x, p) = 1`
    /// for every prime `q | m`.
    pub fn is_irreducible(&self) -> bool {
        let Some(m) = self.degree() else {
            return false;
        };
        if m == 0 {
            return false;
        }
        if m == 1 {
            return true;
        }
        let x = Gf2Poly::x();
        if x_pow_two_pow(m, self) != x {
            return false;
        }
        prime_factors(m as u64).into_iter().all(|q| {
            let t = &x_pow_two_pow(m / q as usize, self) + &x;
            self.gcd(&t).is_one()
        })
    }

    /// True iff the polynomial is irreducible and `x` has multiplicative order
    /// `2^m - 1` modulo it. Degrees above [`MAX_PRIMITIVITY_DEGREE`] are not
    /// supported and report `false`.
    pub fn is_primitive(&self) -> bool {
        let Some(m) = self.degree() else {
            return false;
        };
        if m == 0 || m > MAX_PRIMITIVITY_DEGREE || !self.coeff(0) {
            return false;
        }
        if !self.is_irreducible() {
            return false;
        }
        let order = (1u64 << m) - 1;
        let x = Gf2Poly::x();
        prime_factors(order)
            .into_iter()
            .all(|q| !x.pow_mod(order / q, self).is_one())
    }
}

/// All primitive polynomials of degree `m`, in ascending mask order.
pub fn primitive_polynomials(m: usize) -> Vec<Gf2Poly> {
    assert!((1..=24).contains(&m), "enumeration limited to degree 1..=24");
    let lo = 1u64 << m;
    (lo..lo << 1)
        .filter(|v| v & 1 == 1)
        .map(Gf2Poly::from_u64)
        .filter(|p| p.is_primitive())
        .collect()
}
