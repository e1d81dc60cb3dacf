//! The shrinking generator and the clock-controlled shrinking generator (CCSG).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Gf2Poly};
use crate::bits::{bits_to_string, parse_bits, BitSeq, ParseBitsError};
use crate::engines::{EngineError, LfsrState};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("register lengths must satisfy 1 <= L1 < L2, got L1={l1}, L2={l2}")]
    BadLengths { l1: usize, l2: usize },
    #[error("register lengths must be coprime, got L1={l1}, L2={l2}")]
    NotCoprime { l1: usize, l2: usize },
    #[error("{which} has degree {got}, expected {expected}")]
    DegreeMismatch { which: &'static str, expected: usize, got: usize },
    #[error("{which} = {poly} is not primitive")]
    NotPrimitive { which: &'static str, poly: Gf2Poly },
    #[error("tap {tap} is outside 0..{l1}")]
    TapOutOfRange { tap: usize, l1: usize },
    #[error("tap {0} is listed twice")]
    DuplicateTap(usize),
    #[error("{0} taps exceed the register length")]
    TooManyTaps(usize),
    #[error("taps are not allowed for the plain shrinking generator")]
    TapsPresent,
    #[error("{which}: {source}")]
    Seed { which: &'static str, source: EngineError },
    #[error("missing initial state {0}")]
    MissingSeed(&'static str),
    #[error("{field}: {source}")]
    Poly { field: &'static str, source: AlgebraError },
    #[error("{field}: {source}")]
    Bits { field: &'static str, source: ParseBitsError },
    #[error("malformed spec document: {0}")]
    Json(String),
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Everything about a generator except the initial states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublicParams {
    l1: usize,
    l2: usize,
    c1: Gf2Poly,
    c2: Gf2Poly,
    taps: Vec<usize>,
}

impl PublicParams {
    /// Validate and build. Empty `taps` describes the plain shrinking generator.
    pub fn new(
        l1: usize,
        l2: usize,
        c1: Gf2Poly,
        c2: Gf2Poly,
        taps: Vec<usize>,
    ) -> Result<Self, GeneratorError> {
        if l1 == 0 || l1 >= l2 {
            return Err(GeneratorError::BadLengths { l1, l2 });
        }
        if gcd(l1, l2) != 1 {
            return Err(GeneratorError::NotCoprime { l1, l2 });
        }
        for (which, poly, len) in [("c1", &c1, l1), ("c2", &c2, l2)] {
            let got = poly.degree().unwrap_or(0);
            if got != len {
                return Err(GeneratorError::DegreeMismatch { which, expected: len, got });
            }
            if !poly.is_primitive() {
                return Err(GeneratorError::NotPrimitive { which, poly: poly.clone() });
            }
        }
        let mut seen = vec![false; l1];
        for &tap in &taps {
            if tap >= l1 {
                return Err(GeneratorError::TapOutOfRange { tap, l1 });
            }
            if std::mem::replace(&mut seen[tap], true) {
                return Err(GeneratorError::DuplicateTap(tap));
            }
        }
        if taps.len() > l1 {
            return Err(GeneratorError::TooManyTaps(taps.len()));
        }
        if !taps.is_empty() && taps.len() == l1 {
            log::warn!("w = L1 = {l1} taps: outside 0 < w <= L1-1, accepted");
        }
        Ok(PublicParams { l1, l2, c1, c2, taps })
    }

    pub fn l1(&self) -> usize {
        self.l1
    }

    pub fn l2(&self) -> usize {
        self.l2
    }

    pub fn c1(&self) -> &Gf2Poly {
        &self.c1
    }

    pub fn c2(&self) -> &Gf2Poly {
        &self.c2
    }

    pub fn taps(&self) -> &[usize] {
        &self.taps
    }

    /// Number of taps `w`; zero for the shrinking generator.
    pub fn w(&self) -> usize {
        self.taps.len()
    }

    pub fn is_ccsg(&self) -> bool {
        !self.taps.is_empty()
    }

    /// Number of interleaved columns, `2^(L1-1)`.
    pub fn columns(&self) -> usize {
        1 << (self.l1 - 1)
    }

    /// `2^L2 - 1`.
    pub fn pn_period(&self) -> usize {
        (1 << self.l2) - 1
    }

    /// Keystream period `(2^L2 - 1) · 2^(L1-1)`.
    pub fn period(&self) -> usize {
        self.pn_period() * self.columns()
    }

    /// `X_t` for an SR_1 configuration `cells` (`cells[k]` is `A_k`).
    pub fn decimation(&self, cells: &[bool]) -> usize {
        1 + self.taps.iter().enumerate().map(|(k, &i)| (cells[i] as usize) << k).sum::<usize>()
    }

    pub fn with_seeds(&self, is1: Vec<bool>, is2: Vec<bool>) -> Result<GeneratorSpec, GeneratorError> {
        LfsrState::new(&self.c1, &is1).map_err(|source| GeneratorError::Seed { which: "is1", source })?;
        LfsrState::new(&self.c2, &is2).map_err(|source| GeneratorError::Seed { which: "is2", source })?;
        Ok(GeneratorSpec { public: self.clone(), is1, is2 })
    }
}

/// Public parameters together with both initial states. Seeds are checked
/// for length and nonzero content at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    public: PublicParams,
    is1: Vec<bool>,
    is2: Vec<bool>,
}

impl GeneratorSpec {
    pub fn public(&self) -> &PublicParams {
        &self.public
    }

    pub fn is1(&self) -> &[bool] {
        &self.is1
    }

    pub fn is2(&self) -> &[bool] {
        &self.is2
    }

    pub fn sr1(&self) -> LfsrState {
        LfsrState::new(&self.public.c1, &self.is1).expect("validated at construction")
    }

    pub fn sr2(&self) -> LfsrState {
        LfsrState::new(&self.public.c2, &self.is2).expect("validated at construction")
    }
}

/// JSON form of a generator description. Polynomials are exponent lists
/// (`"0,2,3"`), seeds are bit strings with `A_0` leftmost.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub l1: usize,
    pub l2: usize,
    pub c1: String,
    pub c2: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is1: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is2: Option<String>,
    #[serde(default)]
    pub taps: Vec<usize>,
}

impl SpecDocument {
    pub fn from_json(s: &str) -> Result<Self, GeneratorError> {
        serde_json::from_str(s).map_err(|e| GeneratorError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn public(&self) -> Result<PublicParams, GeneratorError> {
        let poly = |field, s: &str| {
            Gf2Poly::parse_exponent_list(s).map_err(|source| GeneratorError::Poly { field, source })
        };
        PublicParams::new(self.l1, self.l2, poly("c1", &self.c1)?, poly("c2", &self.c2)?, self.taps.clone())
    }

    pub fn spec(&self) -> Result<GeneratorSpec, GeneratorError> {
        let public = self.public()?;
        let seed = |field, s: &Option<String>| {
            let s = s.as_deref().ok_or(GeneratorError::MissingSeed(field))?;
            parse_bits(s).map_err(|source| GeneratorError::Bits { field, source })
        };
        public.with_seeds(seed("is1", &self.is1)?, seed("is2", &self.is2)?)
    }
}

impl From<&PublicParams> for SpecDocument {
    fn from(p: &PublicParams) -> Self {
        SpecDocument {
            l1: p.l1,
            l2: p.l2,
            c1: p.c1.to_exponent_list(),
            c2: p.c2.to_exponent_list(),
            is1: None,
            is2: None,
            taps: p.taps.clone(),
        }
    }
}

impl From<&GeneratorSpec> for SpecDocument {
    fn from(s: &GeneratorSpec) -> Self {
        SpecDocument {
            is1: Some(bits_to_string(&s.is1)),
            is2: Some(bits_to_string(&s.is2)),
            ..SpecDocument::from(&s.public)
        }
    }
}

/// Step-by-step record of a CCSG run: `a_t`, `X_t`, `b'_t` and the output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CcsgTrace {
    pub a: Vec<bool>,
    pub x: Vec<usize>,
    pub b_prime: Vec<bool>,
    pub z: Vec<bool>,
}

/// Drive the CCSG for `steps` clocks of SR_1. With no taps `X_t = 1` and
/// this is the shrinking generator.
pub fn ccsg_trace(spec: &GeneratorSpec, steps: usize) -> CcsgTrace {
    let mut sr1 = spec.sr1();
    let mut sr2 = spec.sr2();
    let mut tr = CcsgTrace::default();
    for _ in 0..steps {
        push_step(spec.public(), &mut sr1, &mut sr2, &mut tr);
    }
    tr
}

fn push_step(p: &PublicParams, sr1: &mut LfsrState, sr2: &mut LfsrState, tr: &mut CcsgTrace) {
    let x = p.decimation(&sr1.cells());
    let b = sr2.output();
    sr2.advance(x);
    let a = sr1.step();
    tr.a.push(a);
    tr.x.push(x);
    tr.b_prime.push(b);
    if a {
        tr.z.push(b);
    }
}

fn run_until(spec: &GeneratorSpec, n: usize) -> BitSeq {
    let mut sr1 = spec.sr1();
    let mut sr2 = spec.sr2();
    let mut tr = CcsgTrace::default();
    while tr.z.len() < n {
        push_step(spec.public(), &mut sr1, &mut sr2, &mut tr);
    }
    BitSeq::new(tr.z)
}

/// First `n` bits of the shrunken sequence: `b_i` is kept iff `a_i = 1`.
pub fn shrink_generate(spec: &GeneratorSpec, n: usize) -> Result<BitSeq, GeneratorError> {
    if spec.public().is_ccsg() {
        return Err(GeneratorError::TapsPresent);
    }
    Ok(run_until(spec, n))
}

/// First `n` CCSG output bits: SR_2 is clocked `X_t` times per SR_1 step and
/// rule P is applied to the decimated sequence `b'`.
pub fn ccsg_generate(spec: &GeneratorSpec, n: usize) -> BitSeq {
    run_until(spec, n)
}

/// Keystream of the generator described by `spec`, whichever kind it is.
pub fn generate(spec: &GeneratorSpec, n: usize) -> BitSeq {
    run_until(spec, n)
}

/// Closed-form statistics of the shrunken sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ShrunkenStats {
    pub period: u64,
    /// Strict lower bound on the linear complexity, `⌊L2 · 2^(L1-2)⌋`.
    pub lc_lower: u64,
    pub lc_upper: u64,
    pub ones: u64,
}

pub fn shrunken_stats(l1: usize, l2: usize) -> ShrunkenStats {
    assert!(l1 >= 1 && l2 >= 1 && l1 + l2 < 64, "lengths out of range");
    let d = 1u64 << (l1 - 1);
    ShrunkenStats {
        period: ((1u64 << l2) - 1) * d,
        lc_lower: ((l2 as u64) << l1) >> 2,
        lc_upper: l2 as u64 * d,
        ones: (1u64 << (l2 - 1)) * d,
    }
}
