use crate::algebra::{FieldTable, RuleVector};
use crate::bits::BitSeq;

use super::known::{KnownBits, Provenance};
use super::AttackError;

/// Offsets `c` with `x_i^t = Σ z_{t+c}` in the `n`-th chained sub-triangle:
/// the exponents of `P_{i-1}(x)^n`.
pub fn subtriangle_expressions(rules: &RuleVector, i: usize, n: u64) -> Vec<usize> {
    assert!(i >= 2 && i <= rules.len() + 1, "cell {i} outside 2..={}", rules.len() + 1);
    assert!(n >= 1);
    rules.partial_char_polys()[i - 1].pow(n).exponents()
}

/// One family of collapsed sums: cell `cell` of automaton `automaton` in
/// sub-triangle `depth`, reading offsets `offsets`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phase1Record {
    pub automaton: usize,
    pub cell: usize,
    pub depth: u64,
    pub offsets: Vec<usize>,
    /// Row shift inside the column, the log of `Σ α^(c/d)`, or `None` when
    /// the sum vanishes and the family only yields parity checks.
    pub row_shift: Option<u32>,
    /// Positions that were not known before this family.
    pub new_positions: Vec<usize>,
}

/// Result of Phase 1: intercepted plus reconstructed bits, and the families
/// that produced them.
#[derive(Clone, Debug)]
pub struct Phase1Report {
    pub known: KnownBits,
    pub records: Vec<Phase1Record>,
}

impl Phase1Report {
    pub fn reconstructed_positions(&self) -> Vec<usize> {
        self.known.positions_with(Provenance::Reconstructed)
    }
}

/// Reconstruct keystream bits from the intercept via chained sub-triangles.
///
/// For every automaton, cell `i` and depth `n` whose offsets all share one
/// residue modulo `d = 2^(L1-1)`, each in-window sum `Σ z_{t+c}` lies in a
/// single column and equals the bit of that column at row `log Σ α^row`.
/// Only intercepted bits are used as sources.
pub fn phase1_reconstruct(
    intercepted: &BitSeq,
    pair: [&RuleVector; 2],
    ft: &FieldTable,
    l1: usize,
) -> Result<Phase1Report, AttackError> {
    let d = 1usize << (l1 - 1);
    let n_rows = ft.order() as usize;
    let mut known = KnownBits::new(n_rows, d);
    for (pos, bit) in intercepted.positioned() {
        known
            .insert(pos, bit, Provenance::Intercepted)
            .map_err(|c| AttackError::ConflictingReconstruction { position: c.position })?;
    }
    let origin = intercepted.origin();
    let r = intercepted.len();
    let mut records = Vec::new();
    if r < 2 {
        return Ok(Phase1Report { known, records });
    }
    let period = known.period();

    for (automaton, rules) in pair.iter().enumerate() {
        let partials = rules.partial_char_polys();
        for cell in 2..=rules.len() + 1 {
            let base = &partials[cell - 1];
            let deg = cell - 1;
            let mut power = base.clone();
            let mut depth = 1u64;
            while depth as usize * deg < r {
                let offsets = power.exponents();
                if offsets.len() >= 2 && offsets.iter().all(|&c| c % d == offsets[0] % d) {
                    let rec = collapse_family(
                        intercepted, origin, &offsets, ft, d, period, &mut known,
                        Phase1Record { automaton, cell, depth, offsets: offsets.clone(), row_shift: None, new_positions: vec![] },
                    )?;
                    if let Some(rec) = rec {
                        records.push(rec);
                    }
                }
                power = &power * base;
                depth += 1;
            }
        }
    }
    Ok(Phase1Report { known, records })
}

#[allow(clippy::too_many_arguments)]
fn collapse_family(
    intercepted: &BitSeq,
    origin: usize,
    offsets: &[usize],
    ft: &FieldTable,
    d: usize,
    period: usize,
    known: &mut KnownBits,
    mut rec: Phase1Record,
) -> Result<Option<Phase1Record>, AttackError> {
    let max = *offsets.last().unwrap();
    let r = intercepted.len();
    if r <= max {
        return Ok(None);
    }
    // offsets share a residue, so the rows differ by (c - c_0) / d
    let steps: Vec<u64> = offsets.iter().map(|&c| ((c - offsets[0]) / d) as u64).collect();
    rec.row_shift = ft.sum_of_powers(&steps).pow();
    let n_rows = ft.order() as usize;
    for t in 0..r - max {
        let first = (origin + t + offsets[0]) % period;
        let value = offsets.iter().fold(false, |acc, &c| acc ^ intercepted.bits()[t + c]);
        match rec.row_shift {
            None if value => {
                return Err(AttackError::ConflictingReconstruction { position: first });
            }
            None => {}
            Some(shift) => {
                let row = (first / d + shift as usize) % n_rows;
                let target = row * d + first % d;
                let added = known
                    .insert(target, value, Provenance::Reconstructed)
                    .map_err(|c| AttackError::ConflictingReconstruction { position: c.position })?;
                if added {
                    rec.new_positions.push(target);
                }
            }
        }
    }
    Ok(Some(rec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(s: &str) -> RuleVector {
        s.parse().unwrap()
    }

    #[test]
    fn expressions() {
        assert_eq!(subtriangle_expressions(&rv("00"), 3, 1), vec![0, 2]);
        assert_eq!(subtriangle_expressions(&rv("00"), 3, 2), vec![0, 4]);
        assert_eq!(subtriangle_expressions(&rv("00"), 3, 3), vec![0, 2, 4, 6]);
        assert_eq!(subtriangle_expressions(&rv("00"), 3, 4), vec![0, 8]);
        assert_eq!(subtriangle_expressions(&rv("01"), 2, 1), vec![1]);
        assert_eq!(subtriangle_expressions(&rv("10"), 3, 8), vec![0, 8, 16]);
        assert_eq!(subtriangle_expressions(&rv("11"), 3, 8), vec![16]);
    }
}
