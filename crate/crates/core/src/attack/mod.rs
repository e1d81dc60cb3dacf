//! Two-phase recovery of both initial states from an intercepted keystream.
//!
//! Phase 1 extends the intercept with bits reconstructed through the linear
//! automaton models. Phase 2 searches the initial state of SR_1 and reads
//! the initial state of SR_2 off the first keystream column.

mod known;
mod phase1;
mod phase2;

use thiserror::Error;

use crate::algebra::{AlgebraError, FieldTable};
use crate::bits::BitSeq;
use crate::generators::{GeneratorError, PublicParams};
use crate::linearizer::{linearize_generator, Linearization, LinearizerError};

pub use known::{Conflict, KnownBits, Provenance};
pub use phase1::{phase1_reconstruct, subtriangle_expressions, Phase1Record, Phase1Report};
pub use phase2::{
    is2_bit_positions, phase2_search, regenerate, render_trace, Candidate, Hypothesis, Outcome,
    SearchReport, SearchStats, MAX_LEAF_COMPLETIONS,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AttackError {
    #[error("intercept has {got} bits, at least {need} are required")]
    InterceptTooShort { got: usize, need: usize },
    #[error("reconstructed bits disagree at position {position}")]
    ConflictingReconstruction { position: usize },
    #[error("{value} has no inverse modulo {modulus}")]
    NonInvertible { value: u64, modulus: u64 },
    #[error("no keystream bits are known")]
    NothingKnown,
    #[error("every hypothesis on IS_1 leads to a contradiction")]
    Exhausted,
    #[error("{} candidate state pairs remain", .0.len())]
    Ambiguous(Vec<Candidate>),
    #[error("regenerated keystream differs from the intercept at position {position}")]
    RegenerationMismatch { position: usize },
    #[error(transparent)]
    Linearizer(#[from] LinearizerError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// How the search ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Unique { candidate: Candidate, keystream: BitSeq },
    Ambiguous(Vec<Candidate>),
    Exhausted,
}

/// Everything an attack run produced, whatever the verdict.
#[derive(Clone, Debug)]
pub struct AttackRun {
    pub linearization: Linearization,
    pub phase1: Phase1Report,
    pub search: SearchReport,
    pub verdict: Verdict,
}

impl AttackRun {
    pub fn nodes_expanded(&self) -> usize {
        self.search.stats.nodes_expanded
    }
}

/// Successful recovery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recovery {
    pub is1: Vec<bool>,
    pub is2: Vec<bool>,
    /// One full period starting at position 0.
    pub keystream: BitSeq,
    pub reconstructed_positions: Vec<usize>,
    pub stats: SearchStats,
}

/// Linearize, run both phases and classify the survivors. Structural
/// problems (bad parameters, inconsistent intercept) are errors; a failed
/// or ambiguous search is reported in the verdict.
pub fn run_attack(intercepted: &BitSeq, public: &PublicParams) -> Result<AttackRun, AttackError> {
    let d = public.columns();
    if intercepted.len() < d {
        return Err(AttackError::InterceptTooShort { got: intercepted.len(), need: d });
    }
    let linearization = linearize_generator(public.l1(), public.c2(), public.w())?;
    let ft = FieldTable::new(&linearization.p)?;
    let phase1 = phase1_reconstruct(intercepted, linearization.pair(), &ft, public.l1())?;
    log::debug!(
        "phase 1: {} intercepted, {} reconstructed",
        intercepted.len(),
        phase1.reconstructed_positions().len()
    );
    let search = phase2_search(&phase1.known, public, &ft)?;
    log::debug!("phase 2: {:?}", search.stats);
    let verdict = match search.candidates.as_slice() {
        [] => Verdict::Exhausted,
        [only] => {
            let keystream = regenerate(public, only)?;
            if let Some((pos, _)) = intercepted
                .positioned()
                .find(|&(p, b)| keystream.bits()[p % keystream.len()] != b)
            {
                return Err(AttackError::RegenerationMismatch { position: pos });
            }
            Verdict::Unique { candidate: only.clone(), keystream }
        }
        many => Verdict::Ambiguous(many.to_vec()),
    };
    Ok(AttackRun { linearization, phase1, search, verdict })
}

/// Recover `IS_1`, `IS_2` and the whole keystream period, or fail with
/// [`AttackError::Exhausted`] / [`AttackError::Ambiguous`].
pub fn full_attack(intercepted: &BitSeq, public: &PublicParams) -> Result<Recovery, AttackError> {
    let run = run_attack(intercepted, public)?;
    match run.verdict {
        Verdict::Unique { candidate, keystream } => Ok(Recovery {
            is1: candidate.is1,
            is2: candidate.is2,
            keystream,
            reconstructed_positions: run.phase1.reconstructed_positions(),
            stats: run.search.stats,
        }),
        Verdict::Ambiguous(c) => Err(AttackError::Ambiguous(c)),
        Verdict::Exhausted => Err(AttackError::Exhausted),
    }
}
