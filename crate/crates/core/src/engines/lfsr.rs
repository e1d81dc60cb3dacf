use super::EngineError;
use crate::algebra::Gf2Poly;
use crate::bits::BitSeq;

pub const MAX_LFSR_DEGREE: usize = 63;

/// Fibonacci LFSR with cells `A_0..A_{L-1}`.
///
/// With characteristic polynomial `c_0 + c_1 x + … + x^L` the output obeys
/// `Σ c_k a_{n+k} = 0`: each step emits `A_0`, shifts toward `A_0`, and loads
/// `Σ_{k<L} c_k A_k` into `A_{L-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LfsrState {
    charpoly: Gf2Poly,
    len: usize,
    taps: u64,
    state: u64,
}

impl LfsrState {
    /// `seed[k]` is `A_k`.
    pub fn new(charpoly: &Gf2Poly, seed: &[bool]) -> Result<Self, EngineError> {
        let len = charpoly.degree().unwrap_or(0);
        if len == 0 || len > MAX_LFSR_DEGREE {
            return Err(EngineError::BadDegree(len));
        }
        if seed.len() != len {
            return Err(EngineError::SeedLength { expected: len, got: seed.len() });
        }
        if seed.iter().all(|&b| !b) {
            return Err(EngineError::ZeroSeed);
        }
        let taps = charpoly.to_u64().expect("degree checked") & ((1u64 << len) - 1);
        let state = seed.iter().enumerate().fold(0u64, |acc, (k, &b)| acc | (b as u64) << k);
        Ok(LfsrState { charpoly: charpoly.clone(), len, taps, state })
    }

    pub fn charpoly(&self) -> &Gf2Poly {
        &self.charpoly
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Content of cell `A_k`.
    pub fn cell(&self, k: usize) -> bool {
        self.state >> k & 1 == 1
    }

    pub fn cells(&self) -> Vec<bool> {
        (0..self.len).map(|k| self.cell(k)).collect()
    }

    /// Current output bit, `A_0`.
    pub fn output(&self) -> bool {
        self.state & 1 == 1
    }

    /// Advance one step and return the bit that was output.
    pub fn step(&mut self) -> bool {
        let out = self.output();
        let fb = (self.state & self.taps).count_ones() & 1;
        self.state = (self.state >> 1) | (fb as u64) << (self.len - 1);
        out
    }

    /// Advance `n` steps without collecting output.
    pub fn advance(&mut self, n: usize) {
        for _ in 0..n {
            self.step();
        }
    }
}

impl Iterator for LfsrState {
    type Item = bool;

    fn next(&mut self) -> Option<bool> {
        Some(self.step())
    }
}

/// First `n` output bits, leaving `st` untouched.
pub fn lfsr_generate(st: &LfsrState, n: usize) -> BitSeq {
    st.clone().take(n).collect()
}
