//! Bit sequences with absolute positions.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseBitsError {
    #[error("invalid bit character {0:?} (expected '0' or '1')")]
    BadChar(char),
}

/// An ordered run of bits whose first element sits at absolute position `origin`.
///
/// Keystreams, PN-sequences and the vertical traces of cellular automaton
/// cells are all carried as `BitSeq`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BitSeq {
    bits: Vec<bool>,
    origin: usize,
}

impl BitSeq {
    pub fn new(bits: Vec<bool>) -> Self {
        BitSeq { bits, origin: 0 }
    }

    pub fn with_origin(bits: Vec<bool>, origin: usize) -> Self {
        BitSeq { bits, origin }
    }

    /// Parse a string of `0`/`1` characters. Whitespace is ignored.
    pub fn parse(s: &str) -> Result<Self, ParseBitsError> {
        s.parse()
    }

    pub fn origin(&self) -> usize {
        self.origin
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.bits
    }

    /// Bit at absolute position `pos`, if it lies inside this sequence.
    pub fn at(&self, pos: usize) -> Option<bool> {
        pos.checked_sub(self.origin).and_then(|i| self.bits.get(i).copied())
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().copied()
    }

    /// `(absolute position, bit)` pairs.
    pub fn positioned(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.bits.iter().enumerate().map(move |(i, &b)| (self.origin + i, b))
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// First `n` bits (or all of them if shorter), same origin.
    pub fn prefix(&self, n: usize) -> BitSeq {
        BitSeq::with_origin(self.bits[..n.min(self.len())].to_vec(), self.origin)
    }

    /// Bitwise XOR of two sequences of equal length. The origin of `self` is kept.
    pub fn xor(&self, other: &BitSeq) -> BitSeq {
        assert_eq!(self.len(), other.len(), "xor of sequences with different lengths");
        BitSeq::with_origin(
            self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
            self.origin,
        )
    }
}

impl From<Vec<bool>> for BitSeq {
    fn from(bits: Vec<bool>) -> Self {
        BitSeq::new(bits)
    }
}

impl FromIterator<bool> for BitSeq {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        BitSeq::new(iter.into_iter().collect())
    }
}

impl FromStr for BitSeq {
    type Err = ParseBitsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_bits(s).map(BitSeq::new)
    }
}

impl fmt::Display for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub(crate) fn parse_bits(s: &str) -> Result<Vec<bool>, ParseBitsError> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(ParseBitsError::BadChar(other)),
        })
        .collect()
}

pub(crate) fn bits_to_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Shorthand for building bit vectors in tests and examples: `bits![1, 0, 1]`.
#[macro_export]
macro_rules! bits {
    ($($b:expr),* $(,)?) => {
        vec![$($b != 0),*]
    };
}
