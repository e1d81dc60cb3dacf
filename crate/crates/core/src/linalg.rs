//! Incremental Gaussian elimination over GF(2).

/// Outcome of adding one equation to a [`Gf2System`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Insert {
    /// The equation raised the rank.
    Independent,
    /// The equation already followed from the system.
    Redundant,
    /// The equation contradicts the system; the system is left unchanged.
    Inconsistent,
}

/// A packed coefficient row over `nvars` unknowns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Row {
    words: Vec<u64>,
}

impl Row {
    pub fn zeros(nvars: usize) -> Self {
        Row { words: vec![0; nvars.div_ceil(64).max(1)] }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut r = Row::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                r.set(i);
            }
        }
        r
    }

    /// Row holding the low `nvars` bits of `mask`, bit `i` for unknown `i`.
    pub fn from_mask(mask: u64, nvars: usize) -> Self {
        let mut r = Row::zeros(nvars);
        r.words[0] = mask;
        r
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &Row) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn lowest(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| 64 * k + w.trailing_zeros() as usize)
    }

    /// Inner product over GF(2) with an assignment.
    pub fn dot(&self, x: &Row) -> bool {
        self.words.iter().zip(&x.words).fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones()) & 1 == 1
    }
}

/// A consistent system of linear equations over GF(2), kept in reduced row
/// echelon form so that membership queries need one pass.
#[derive(Clone, Debug)]
pub struct Gf2System {
    nvars: usize,
    // (row, rhs); the pivot of each row is its lowest set bit and no other
    // row has that bit set
    rows: Vec<(Row, bool)>,
}

impl Gf2System {
    pub fn new(nvars: usize) -> Self {
        Gf2System { nvars, rows: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.nvars
    }

    /// Reduce `row` against the pivots. Returns the residual row and the
    /// accumulated right-hand side.
    fn reduce(&self, row: &Row) -> (Row, bool) {
        let mut r = row.clone();
        let mut rhs = false;
        for (pr, pb) in &self.rows {
            let p = pr.lowest().expect("stored rows are nonzero");
            if r.get(p) {
                r.xor_assign(pr);
                rhs ^= pb;
            }
        }
        (r, rhs)
    }

    /// Value of `row · x` if the system determines it.
    pub fn evaluate(&self, row: &Row) -> Option<bool> {
        let (r, rhs) = self.reduce(row);
        r.is_zero().then_some(rhs)
    }

    pub fn insert(&mut self, row: &Row, rhs: bool) -> Insert {
        let (r, acc) = self.reduce(row);
        let b = rhs ^ acc;
        let Some(p) = r.lowest() else {
            return if b { Insert::Inconsistent } else { Insert::Redundant };
        };
        for (pr, pb) in &mut self.rows {
            if pr.get(p) {
                pr.xor_assign(&r);
                *pb ^= b;
            }
        }
        self.rows.push((r, b));
        Insert::Independent
    }

    fn pivot_set(&self) -> Vec<Option<usize>> {
        let mut by_var = vec![None; self.nvars];
        for (k, (r, _)) in self.rows.iter().enumerate() {
            by_var[r.lowest().unwrap()] = Some(k);
        }
        by_var
    }

    /// Unknowns not fixed by a pivot.
    pub fn free_vars(&self) -> Vec<usize> {
        self.pivot_set()
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_none())
            .map(|(v, _)| v)
            .collect()
    }

    /// The solution with the given free-variable values (in [`Self::free_vars`] order).
    pub fn solution_with(&self, free_values: &[bool]) -> Vec<bool> {
        let free = self.free_vars();
        assert_eq!(free.len(), free_values.len());
        let mut x = Row::zeros(self.nvars);
        for (&v, &b) in free.iter().zip(free_values) {
            if b {
                x.set(v);
            }
        }
        let mut out = vec![false; self.nvars];
        for &v in &free {
            out[v] = x.get(v);
        }
        for (r, b) in &self.rows {
            let p = r.lowest().unwrap();
            // r has only the pivot among pivot variables, so r·x over free
            // variables plus x_p equals b
            out[p] = b ^ r.dot(&x);
        }
        out
    }

    /// The lexicographically smallest solution, unknown 0 most significant.
    pub fn lex_min_solution(&self) -> Vec<bool> {
        let mut sys = self.clone();
        (0..self.nvars)
            .map(|v| {
                let mut unit = Row::zeros(self.nvars);
                unit.set(v);
                match sys.insert(&unit, false) {
                    Insert::Inconsistent => {
                        sys.insert(&unit, true);
                        true
                    }
                    _ => false,
                }
            })
            .collect()
    }

    /// Up to `cap` solutions, ordered by the free-variable assignment read as
    /// a binary counter.
    pub fn solutions(&self, cap: usize) -> Vec<Vec<bool>> {
        let nfree = self.free_vars().len();
        let total = if nfree >= 63 { u64::MAX } else { 1u64 << nfree };
        (0..total)
            .take(cap)
            .map(|k| {
                let vals: Vec<bool> = (0..nfree).map(|i| k >> i & 1 == 1).collect();
                self.solution_with(&vals)
            })
            .collect()
    }
}
