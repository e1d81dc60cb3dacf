//! Shrinking and clock-controlled shrinking generators, their linear 90/150
//! cellular automaton models, and a deterministic initial-state recovery.

pub mod algebra;
pub mod attack;
pub mod bits;
pub mod engines;
pub mod generators;
pub mod linalg;
pub mod linearizer;

pub use algebra::{AlgebraError, Exp, FieldTable, Gf2Poly, RuleVector};
pub use attack::{full_attack, run_attack, AttackError, KnownBits, Recovery, Verdict};
pub use bits::BitSeq;
pub use generators::{GeneratorSpec, PublicParams, SpecDocument};
