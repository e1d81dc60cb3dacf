use serde::Serialize;

use crate::algebra::FieldTable;
use crate::bits::{bits_to_string, BitSeq};
use crate::engines::LfsrState;
use crate::generators::{generate, PublicParams};
use crate::linalg::{Gf2System, Insert, Row};

use super::known::KnownBits;
use super::AttackError;

/// Upper bound on completions tried at a rank-deficient leaf.
pub const MAX_LEAF_COMPLETIONS: usize = 256;

/// A recovered pair of initial states.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Candidate {
    #[serde(serialize_with = "ser_bits")]
    pub is1: Vec<bool>,
    #[serde(serialize_with = "ser_bits")]
    pub is2: Vec<bool>,
}

fn ser_bits<S: serde::Serializer>(bits: &[bool], s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&bits_to_string(bits))
}

/// Verdict on one hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The aligned columns agree with everything known so far.
    Accepted,
    /// Column `column` (0-based) disagrees with the deduced bits at `rows`.
    Rejected { column: usize, rows: Vec<usize> },
    /// A complete `IS_1` whose surviving `IS_2` completions all fail to
    /// regenerate the known bits.
    RegenerationMismatch,
    /// A complete `IS_1` yielding this many verified candidates.
    Survived(usize),
}

impl Outcome {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Outcome::Accepted | Outcome::Survived(_))
    }
}

/// One node of the hypothesis tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    /// Known leading bits of `IS_1`; `a_0 = 1` always.
    pub prefix: Vec<bool>,
    /// `(column, start row in C_1)` for every column aligned at this node.
    pub alignments: Vec<(usize, usize)>,
    pub outcome: Outcome,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Hypotheses tested.
    pub nodes_checked: usize,
    /// Hypotheses that survived their contradiction check.
    pub nodes_expanded: usize,
    /// Complete `IS_1` values reached.
    pub leaves: usize,
    /// Set when some leaf had more completions than were tried.
    pub truncated: bool,
}

#[derive(Clone, Debug, Default)]
pub struct SearchReport {
    pub candidates: Vec<Candidate>,
    pub trace: Vec<Hypothesis>,
    pub stats: SearchStats,
}

/// Rows `j_i` of column `C_1` holding `b_i` for `i = 1..L2-1`, from
/// `j_i · (2^L1 - 1) ≡ i (mod 2^L2 - 1)`.
pub fn is2_bit_positions(l1: usize, l2: usize) -> Result<Vec<usize>, AttackError> {
    let n = (1u64 << l2) - 1;
    let inv = mod_inverse((1u64 << l1) - 1, n)?;
    Ok((1..l2 as u64).map(|i| (i * inv % n) as usize).collect())
}

/// `x^-1 mod n`.
pub(crate) fn mod_inverse(x: u64, n: u64) -> Result<u64, AttackError> {
    let (mut r0, mut r1) = (n as i128, (x % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return Err(AttackError::NonInvertible { value: x, modulus: n });
    }
    Ok(t0.rem_euclid(n as i128) as u64)
}

/// Read-only context shared by every branch.
struct Search<'a> {
    public: &'a PublicParams,
    known: &'a KnownBits,
    ft: &'a FieldTable,
    columns: Vec<Vec<(usize, bool)>>,
    n: usize,
    d: usize,
    /// Distance between consecutive rows of a column, inverted mod N.
    dist_inv: u64,
    max_tap: Option<usize>,
}

/// A column that contradicts the branch, with the alignments made on the
/// way, the failing one included.
struct Clash {
    alignments: Vec<(usize, usize)>,
    column: usize,
    rows: Vec<usize>,
}

/// Per-branch state: what is known about `C_1`, as equations over its seed.
#[derive(Clone)]
struct Branch {
    sys: Gf2System,
    aligned: usize,
}

impl Search<'_> {
    fn row_eq(&self, row: usize) -> Row {
        Row::from_mask(self.ft.antilog(row as u64) as u64, self.ft.degree())
    }

    /// Number of `b'` bits consumed before step `p`, if the prefix fixes it.
    fn consumed(&self, a: &[bool], p: usize) -> Option<u64> {
        match self.max_tap {
            None => Some(p as u64),
            Some(mt) => {
                if p > 0 && p - 1 + mt >= a.len() {
                    return None;
                }
                Some((0..p).map(|s| self.public.decimation(&a[s..]) as u64).sum())
            }
        }
    }

    /// Start row in `C_1` of column `m` whose first bit comes from step `p`.
    fn shift(&self, consumed: u64) -> usize {
        ((consumed % self.n as u64) * self.dist_inv % self.n as u64) as usize
    }

    /// Overlay column `m`, shifted by `shift`, onto the branch.
    fn align(&self, br: &mut Branch, m: usize, shift: usize) -> Result<(), Vec<usize>> {
        let col = &self.columns[m];
        let eqs: Vec<(usize, Row, bool)> = col
            .iter()
            .map(|&(row, bit)| (row, self.row_eq((row + shift) % self.n), bit))
            .collect();
        let clashes: Vec<usize> = eqs
            .iter()
            .filter(|(_, eq, bit)| br.sys.evaluate(eq).is_some_and(|v| v != *bit))
            .map(|&(row, _, _)| row)
            .collect();
        if !clashes.is_empty() {
            return Err(clashes);
        }
        for (row, eq, bit) in eqs {
            if br.sys.insert(&eq, bit) == Insert::Inconsistent {
                return Err(vec![row]);
            }
        }
        Ok(())
    }

    /// Align every pending column whose start is fixed by `a`.
    fn align_pending(&self, br: &mut Branch, a: &[bool], ones: &[usize]) -> Result<Vec<(usize, usize)>, Clash> {
        let mut done = Vec::new();
        while br.aligned < ones.len().min(self.d) {
            let m = br.aligned;
            let Some(consumed) = self.consumed(a, ones[m]) else { break };
            let shift = self.shift(consumed);
            done.push((m, shift));
            if let Err(rows) = self.align(br, m, shift) {
                return Err(Clash { alignments: done, column: m, rows });
            }
            br.aligned += 1;
        }
        Ok(done)
    }

    fn leaf(&self, br: &Branch, is1: &[bool], report: &mut SearchReport) -> Outcome {
        report.stats.leaves += 1;
        let l2 = self.public.l2();
        let total = 1usize.checked_shl(br.sys.free_vars().len() as u32).unwrap_or(usize::MAX);
        if total > MAX_LEAF_COMPLETIONS {
            report.stats.truncated = true;
        }
        let mut found = 0;
        for seed in br.sys.solutions(MAX_LEAF_COMPLETIONS) {
            let s = Row::from_bits(&seed);
            // b_i sits at row i · dist^-1 of C_1
            let is2: Vec<bool> = (0..l2).map(|i| self.row_eq(self.shift(i as u64)).dot(&s)).collect();
            let Ok(spec) = self.public.with_seeds(is1.to_vec(), is2.clone()) else { continue };
            let stream = generate(&spec, self.known.period());
            if self.known.iter().all(|(p, b, _)| stream.bits()[p] == b) {
                report.candidates.push(Candidate { is1: is1.to_vec(), is2 });
                found += 1;
            }
        }
        if found == 0 { Outcome::RegenerationMismatch } else { Outcome::Survived(found) }
    }

    fn dfs(&self, prefix: &mut Vec<bool>, br: &Branch, report: &mut SearchReport) {
        let l1 = self.public.l1();
        for bit in [true, false] {
            prefix.push(bit);
            let complete = prefix.len() == l1;
            // a node is a prefix that fixes a new column start, or a full IS_1
            let (a, ones) = if complete {
                let sr1 = LfsrState::new(self.public.c1(), prefix).expect("a_0 = 1 keeps the seed nonzero");
                let period = (1usize << l1) - 1;
                let a: Vec<bool> = sr1.take(period + l1).collect();
                let ones: Vec<usize> = (0..period).filter(|&i| a[i]).collect();
                (a, ones)
            } else {
                let ones: Vec<usize> = (0..prefix.len()).filter(|&i| prefix[i]).collect();
                (prefix.clone(), ones)
            };
            let mut child = br.clone();
            let pending_before = child.aligned;
            let aligned = self.align_pending(&mut child, &a, &ones);
            let is_node = complete || child.aligned > pending_before || aligned.is_err();
            if !is_node {
                self.dfs(prefix, &child, report);
                prefix.pop();
                continue;
            }
            report.stats.nodes_checked += 1;
            let (alignments, outcome) = match aligned {
                Err(Clash { alignments, column, rows }) => (alignments, Outcome::Rejected { column, rows }),
                Ok(al) if complete => (al, self.leaf(&child, prefix, report)),
                Ok(al) => (al, Outcome::Accepted),
            };
            let accepted = outcome.is_accepted();
            report.trace.push(Hypothesis { prefix: prefix.clone(), alignments, outcome });
            if accepted {
                report.stats.nodes_expanded += 1;
                if !complete {
                    self.dfs(prefix, &child, report);
                }
            }
            prefix.pop();
        }
    }
}

/// Depth-first search over `IS_1` with `a_0 = 1`.
///
/// Each column of the keystream matrix is `C_1` started at a row fixed by
/// the leading bits of `IS_1`. What is known about `C_1` is kept as linear
/// equations over its seed; a hypothesis is rejected as soon as a newly
/// aligned column contradicts them. Surviving complete `IS_1` values are
/// completed to `IS_2` and checked by regenerating the keystream.
pub fn phase2_search(
    known: &KnownBits,
    public: &PublicParams,
    ft: &FieldTable,
) -> Result<SearchReport, AttackError> {
    let d = public.columns();
    let n = public.pn_period();
    assert_eq!(known.columns(), d, "known bits laid out for another L1");
    assert_eq!(ft.order() as usize, n, "field does not match L2");
    if known.is_empty() {
        return Err(AttackError::NothingKnown);
    }
    let dist = crate::linearizer::coset_exponent(public.l1(), public.w());
    let search = Search {
        public,
        known,
        ft,
        columns: (0..d).map(|m| known.column(m)).collect(),
        n,
        d,
        dist_inv: mod_inverse(dist, n as u64)?,
        max_tap: public.taps().iter().copied().max(),
    };
    let mut report = SearchReport::default();
    let mut root = Branch { sys: Gf2System::new(ft.degree()), aligned: 0 };
    if search.align(&mut root, 0, 0).is_err() {
        return Ok(report);
    }
    root.aligned = 1;
    let mut prefix = vec![true];
    if public.l1() == 1 {
        // IS_1 = (1) is the only candidate
        report.stats.nodes_checked += 1;
        let outcome = search.leaf(&root, &prefix, &mut report);
        if outcome.is_accepted() {
            report.stats.nodes_expanded += 1;
        }
        report.trace.push(Hypothesis { prefix, alignments: vec![], outcome });
    } else {
        search.dfs(&mut prefix, &root, &mut report);
    }
    report.candidates.sort();
    report.candidates.dedup();
    Ok(report)
}

/// Render the hypothesis trace, one line per node.
pub fn render_trace(report: &SearchReport) -> String {
    let mut out = String::new();
    for h in &report.trace {
        let prefix = bits_to_string(&h.prefix);
        let al: Vec<String> = h.alignments.iter().map(|(m, s)| format!("C{}@{}", m + 1, s)).collect();
        let verdict = match &h.outcome {
            Outcome::Accepted => "accepted".to_string(),
            Outcome::Rejected { column, rows } => format!(
                "rejected: C{} contradicts at row{} {}",
                column + 1,
                if rows.len() == 1 { "" } else { "s" },
                rows.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")
            ),
            Outcome::RegenerationMismatch => "rejected: regeneration mismatch".to_string(),
            Outcome::Survived(k) => format!("survivor ({k} candidate{})", if *k == 1 { "" } else { "s" }),
        };
        out.push_str(&format!("{:<width$} [{}] {}\n", prefix, al.join(" "), verdict, width = h.prefix.len().max(8)));
    }
    out
}

/// Keystream bits regenerated from a candidate, one full period.
pub fn regenerate(public: &PublicParams, cand: &Candidate) -> Result<BitSeq, AttackError> {
    let spec = public.with_seeds(cand.is1.clone(), cand.is2.clone())?;
    Ok(generate(&spec, public.period()))
}
