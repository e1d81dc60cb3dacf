//! Step-exact simulators for LFSRs and null-boundary 90/150 automata.

mod ca;
mod lfsr;

use thiserror::Error;

pub use ca::{ca_generate, solve_cell_seed, CaState};
pub use lfsr::{lfsr_generate, LfsrState, MAX_LFSR_DEGREE};

use crate::bits::BitSeq;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("initial state is all zero")]
    ZeroSeed,
    #[error("seed has {got} bits but the register has {expected} cells")]
    SeedLength { expected: usize, got: usize },
    #[error("register degree {0} is outside 1..={max}", max = MAX_LFSR_DEGREE)]
    BadDegree(usize),
}

/// Bits at indices `r, r + d, r + 2d, …` of `s`, re-based at origin 0.
pub fn decimate(s: &BitSeq, d: usize, r: usize) -> BitSeq {
    assert!(d >= 1 && r < d, "decimation needs d >= 1 and 0 <= r < d");
    s.bits().iter().skip(r).step_by(d).copied().collect()
}
