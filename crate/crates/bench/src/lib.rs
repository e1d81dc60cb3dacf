//! Shared fixtures for the benchmarks.

use ccsg_core::generators::generate;
use ccsg_core::{BitSeq, Gf2Poly, PublicParams};

/// Public parameters of the L1 = 4, L2 = 5 attack instance.
pub fn worked_instance() -> PublicParams {
    PublicParams::new(
        4,
        5,
        Gf2Poly::from_exponents([0, 3, 4]),
        Gf2Poly::from_exponents([0, 1, 3, 4, 5]),
        vec![],
    )
    .expect("valid parameters")
}

pub const WORKED_INTERCEPT: &str = "101000011001110011010011";

/// A larger shrinking generator with `3 · 2^(L1-1)` intercepted bits.
pub fn larger_instance(l1: usize, l2: usize) -> (PublicParams, BitSeq) {
    let c1 = ccsg_core::algebra::primitive_polynomials(l1).remove(0);
    let c2 = ccsg_core::algebra::primitive_polynomials(l2).remove(0);
    let public = PublicParams::new(l1, l2, c1, c2, vec![]).expect("coprime lengths");
    let is1 = (0..l1).map(|i| i % 3 == 0).collect();
    let is2 = (0..l2).map(|i| i % 2 == 0).collect();
    let spec = public.with_seeds(is1, is2).expect("nonzero seeds");
    let z = generate(&spec, 3 * public.columns());
    (public, z)
}
