use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

/// Where a known keystream bit came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Intercepted,
    Reconstructed,
    Deduced,
}

/// Two sources disagree about the bit at `position`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conflict {
    pub position: usize,
}

/// Keystream bits known with certainty, indexed by position modulo the
/// period `T = N · d`, where `d` is the number of interleaved columns.
///
/// Position `p` sits in column `p mod d` at row `p div d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownBits {
    period: usize,
    columns: usize,
    bits: BTreeMap<usize, (bool, Provenance)>,
}

impl KnownBits {
    pub fn new(rows: usize, columns: usize) -> Self {
        assert!(rows >= 1 && columns >= 1);
        KnownBits { period: rows * columns, columns, bits: BTreeMap::new() }
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rows(&self) -> usize {
        self.period / self.columns
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Record a bit. Returns `Ok(true)` if the position was new, `Ok(false)`
    /// if it was already known with the same value.
    pub fn insert(&mut self, position: usize, bit: bool, prov: Provenance) -> Result<bool, Conflict> {
        let position = position % self.period;
        match self.bits.get(&position) {
            Some(&(old, _)) if old != bit => Err(Conflict { position }),
            Some(_) => Ok(false),
            None => {
                self.bits.insert(position, (bit, prov));
                Ok(true)
            }
        }
    }

    pub fn get(&self, position: usize) -> Option<bool> {
        self.bits.get(&(position % self.period)).map(|&(b, _)| b)
    }

    pub fn provenance(&self, position: usize) -> Option<Provenance> {
        self.bits.get(&(position % self.period)).map(|&(_, p)| p)
    }

    /// `(position, bit, provenance)` in ascending position order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, bool, Provenance)> + '_ {
        self.bits.iter().map(|(&p, &(b, pr))| (p, b, pr))
    }

    pub fn positions_with(&self, prov: Provenance) -> Vec<usize> {
        self.iter().filter(|&(_, _, p)| p == prov).map(|(pos, _, _)| pos).collect()
    }

    /// Known `(row, bit)` pairs of column `m`, ascending by row.
    pub fn column(&self, m: usize) -> Vec<(usize, bool)> {
        let mut out: Vec<(usize, bool)> = self
            .bits
            .iter()
            .filter(|(&p, _)| p % self.columns == m)
            .map(|(&p, &(b, _))| (p / self.columns, b))
            .collect();
        out.sort_unstable();
        out
    }

    /// Rows × columns grid with `-` for unknown bits, one line per row that
    /// holds at least one known bit (all rows when `all_rows`).
    pub fn render(&self, all_rows: bool) -> String {
        let mut out = String::from("row ");
        for m in 0..self.columns {
            let _ = write!(out, " C{}", m + 1);
        }
        out.push('\n');
        for row in 0..self.rows() {
            let cells: Vec<Option<bool>> = (0..self.columns).map(|m| self.get(row * self.columns + m)).collect();
            if !all_rows && cells.iter().all(Option::is_none) {
                continue;
            }
            let _ = write!(out, "{row:>3} ");
            for (m, c) in cells.iter().enumerate() {
                let width = format!(" C{}", m + 1).len();
                let ch = match c {
                    Some(true) => '1',
                    Some(false) => '0',
                    None => '-',
                };
                let _ = write!(out, "{ch:>width$}");
            }
            out.push('\n');
        }
        out
    }
}
