//! Basis bookkeeping for `atom ⊗ b ⊗ a1 ⊗ a2` and the sparse operators that
//! act on it.

/// Atomic levels of the cascade, top to bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    A = 0,
    B = 1,
    C = 2,
}

impl Level {
    pub const ALL: [Level; 3] = [Level::A, Level::B, Level::C];
}

/// Which bosonic mode an index or operator refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    B,
    A1,
    A2,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::B, Mode::A1, Mode::A2];

    pub fn name(self) -> &'static str {
        match self {
            Mode::B => "b",
            Mode::A1 => "a1",
            Mode::A2 => "a2",
        }
    }
}

/// Product basis `|level, n_b, n_a1, n_a2>` with the last factor fastest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockSpace {
    pub dim_b: usize,
    pub dim_a1: usize,
    pub dim_a2: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisState {
    pub level: Level,
    pub n_b: usize,
    pub n_a1: usize,
    pub n_a2: usize,
}

impl BasisState {
    pub fn occupation(&self, mode: Mode) -> usize {
        match mode {
            Mode::B => self.n_b,
            Mode::A1 => self.n_a1,
            Mode::A2 => self.n_a2,
        }
    }
}

impl FockSpace {
    pub fn dim(&self) -> usize {
        3 * self.dim_b * self.dim_a1 * self.dim_a2
    }

    pub fn mode_dim(&self, mode: Mode) -> usize {
        match mode {
            Mode::B => self.dim_b,
            Mode::A1 => self.dim_a1,
            Mode::A2 => self.dim_a2,
        }
    }

    pub fn index(&self, s: BasisState) -> usize {
        ((s.level as usize * self.dim_b + s.n_b) * self.dim_a1 + s.n_a1) * self.dim_a2 + s.n_a2
    }

    pub fn state(&self, index: usize) -> BasisState {
        let n_a2 = index % self.dim_a2;
        let rest = index / self.dim_a2;
        let n_a1 = rest % self.dim_a1;
        let rest = rest / self.dim_a1;
        let n_b = rest % self.dim_b;
        let level = Level::ALL[rest / self.dim_b];
        BasisState {
            level,
            n_b,
            n_a1,
            n_a2,
        }
    }

    pub fn states(&self) -> impl Iterator<Item = BasisState> + '_ {
        (0..self.dim()).map(|i| self.state(i))
    }

    /// Annihilation operator of `mode`, truncated.
    pub fn annihilate(&self, mode: Mode) -> PartialPerm {
        self.build(|s| {
            let n = s.occupation(mode);
            if n + 1 >= self.mode_dim(mode) {
                return None;
            }
            let mut src = s;
            match mode {
                Mode::B => src.n_b += 1,
                Mode::A1 => src.n_a1 += 1,
                Mode::A2 => src.n_a2 += 1,
            }
            Some((src, ((n + 1) as f64).sqrt()))
        })
    }

    /// Atomic lowering operator `|to><from|`.
    pub fn atomic(&self, to: Level, from: Level) -> PartialPerm {
        self.build(|s| (s.level == to).then_some((BasisState { level: from, ..s }, 1.0)))
    }

    /// Builds an operator from a rule giving, for each output basis state,
    /// the input state it is fed from and the amplitude.
    fn build(&self, rule: impl Fn(BasisState) -> Option<(BasisState, f64)>) -> PartialPerm {
        let entries = (0..self.dim())
            .map(|row| rule(self.state(row)).map(|(src, v)| (self.index(src), v)))
            .collect();
        PartialPerm { entries }
    }
}

/// A real operator with at most one nonzero per row and per column, i.e. a
/// weighted partial permutation. Row `i` holds `Some((j, v))` for `O[i, j] = v`.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialPerm {
    entries: Vec<Option<(usize, f64)>>,
}

impl PartialPerm {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().flatten().count()
    }

    pub fn row(&self, i: usize) -> Option<(usize, f64)> {
        self.entries[i]
    }

    /// `(row, col, value)` for every nonzero, in row order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.map(|(j, v)| (i, j, v)))
    }

    pub fn transpose(&self) -> PartialPerm {
        let mut entries = vec![None; self.dim()];
        for (i, j, v) in self.triplets() {
            entries[j] = Some((i, v));
        }
        PartialPerm { entries }
    }

    /// Matrix product `self * rhs`.
    pub fn compose(&self, rhs: &PartialPerm) -> PartialPerm {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let (k, v) = (*e)?;
                let (j, w) = rhs.entries[k]?;
                Some((j, v * w))
            })
            .collect();
        PartialPerm { entries }
    }

    /// The offset `k` if every nonzero sits at `(i, i + k)`.
    pub fn constant_shift(&self) -> Option<isize> {
        let mut shifts = self.triplets().map(|(i, j, _)| j as isize - i as isize);
        let first = shifts.next()?;
        shifts.all(|k| k == first).then_some(first)
    }

    /// `O^T O`, which is diagonal for a partial permutation.
    pub fn gram_diagonal(&self) -> Vec<f64> {
        let mut diag = vec![0.0; self.dim()];
        for (_, j, v) in self.triplets() {
            diag[j] += v * v;
        }
        diag
    }

    /// `Tr(rho O)` for a dense row-major `rho`.
    pub fn expectation(&self, rho: &[f64]) -> f64 {
        let d = self.dim();
        self.triplets().map(|(i, j, v)| v * rho[j * d + i]).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space() -> FockSpace {
        FockSpace {
            dim_b: 4,
            dim_a1: 3,
            dim_a2: 2,
        }
    }

    #[test]
    fn index_round_trip() {
        let s = space();
        assert_eq!(s.dim(), 72);
        for i in 0..s.dim() {
            assert_eq!(s.index(s.state(i)), i);
        }
        let top = BasisState {
            level: Level::A,
            n_b: 0,
            n_a1: 0,
            n_a2: 0,
        };
        assert_eq!(s.index(top), 0);
    }

    #[test]
    fn ladder_matrix_elements() {
        let s = space();
        let b = s.annihilate(Mode::B);
        let from = BasisState {
            level: Level::B,
            n_b: 3,
            n_a1: 1,
            n_a2: 1,
        };
        let to = BasisState { n_b: 2, ..from };
        assert_eq!(b.row(s.index(to)), Some((s.index(from), 3f64.sqrt())));
        // the top retained level has nothing above it
        assert_eq!(b.row(s.index(from)), None);
        assert_eq!(b.nnz(), 3 * 3 * 3 * 2);
    }

    #[test]
    fn number_operator_is_gram_diagonal() {
        let s = space();
        for mode in Mode::ALL {
            let n = s.annihilate(mode).gram_diagonal();
            for (i, st) in s.states().enumerate() {
                assert!((n[i] - st.occupation(mode) as f64).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn atomic_lowering_and_products() {
        let s = space();
        let sigma_a = s.atomic(Level::B, Level::A);
        let sigma_b = s.atomic(Level::C, Level::B);
        let sigma_c = s.atomic(Level::C, Level::A);
        // sigma_b sigma_a = |c><a|
        assert_eq!(sigma_b.compose(&sigma_a), sigma_c);
        // sigma_a^T sigma_a is the top-level projector
        let proj = sigma_a.gram_diagonal();
        for (i, st) in s.states().enumerate() {
            assert_eq!(proj[i], if st.level == Level::A { 1.0 } else { 0.0 });
        }
        assert_eq!(sigma_c.transpose().transpose(), sigma_c);
        assert_eq!(sigma_c.constant_shift(), Some(-2 * 24));
        assert_eq!(s.annihilate(Mode::A1).constant_shift(), Some(2));
        assert_eq!(
            sigma_c.compose(&s.annihilate(Mode::B)).constant_shift(),
            Some(-48 + 6)
        );
    }
}
