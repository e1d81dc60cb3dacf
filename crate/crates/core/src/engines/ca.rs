use crate::algebra::RuleVector;
use crate::bits::BitSeq;
use crate::linalg::{Gf2System, Insert, Row};

/// A null-boundary hybrid 90/150 automaton and its current configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaState {
    rules: RuleVector,
    cells: Vec<bool>,
}

impl CaState {
    /// `cells[0]` is `x_1`. Panics if the lengths differ.
    pub fn new(rules: RuleVector, cells: Vec<bool>) -> Self {
        assert_eq!(rules.len(), cells.len(), "one cell per rule");
        CaState { rules, cells }
    }

    pub fn rules(&self) -> &RuleVector {
        &self.rules
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    /// `x_i^{t+1} = x_{i-1}^t + R_i x_i^t + x_{i+1}^t`, with `x_0 = x_{L+1} = 0`.
    pub fn step(&mut self) {
        self.cells = next_config(self.rules.rules(), &self.cells, |a, b| a ^ b, false);
    }
}

fn next_config<T: Clone>(rules: &[bool], cur: &[T], add: impl Fn(&T, &T) -> T, zero: T) -> Vec<T> {
    let n = cur.len();
    (0..n)
        .map(|i| {
            let mut v = if rules[i] { cur[i].clone() } else { zero.clone() };
            if i > 0 {
                v = add(&v, &cur[i - 1]);
            }
            if i + 1 < n {
                v = add(&v, &cur[i + 1]);
            }
            v
        })
        .collect()
}

/// Vertical traces of every cell over `n` configurations, the first being
/// the current one. Entry `i - 1` holds cell `x_i`.
pub fn ca_generate(st: &CaState, n: usize) -> Vec<BitSeq> {
    let mut st = st.clone();
    let mut traces = vec![Vec::with_capacity(n); st.cells.len()];
    for t in 0..n {
        if t > 0 {
            st.step();
        }
        for (trace, &b) in traces.iter_mut().zip(&st.cells) {
            trace.push(b);
        }
    }
    traces.into_iter().map(BitSeq::new).collect()
}

/// A configuration whose trace at cell `cell` (1-based) starts with
/// `target`, or `None` if no configuration produces it. Among several
/// solutions the lexicographically smallest `(x_1, …, x_L)` is returned.
pub fn solve_cell_seed(rules: &RuleVector, cell: usize, target: &BitSeq) -> Option<CaState> {
    let l = rules.len();
    assert!((1..=l).contains(&cell), "cell index {cell} outside 1..={l}");
    let mut sys = Gf2System::new(l);
    // symbolic configuration: each cell as a combination of the seed bits
    let mut cur: Vec<Row> = (0..l)
        .map(|i| {
            let mut r = Row::zeros(l);
            r.set(i);
            r
        })
        .collect();
    let add = |a: &Row, b: &Row| {
        let mut c = a.clone();
        c.xor_assign(b);
        c
    };
    for (t, bit) in target.iter().enumerate() {
        if t > 0 {
            cur = next_config(rules.rules(), &cur, add, Row::zeros(l));
        }
        if sys.insert(&cur[cell - 1], bit) == Insert::Inconsistent {
            return None;
        }
    }
    Some(CaState::new(rules.clone(), sys.lex_min_solution()))
}
