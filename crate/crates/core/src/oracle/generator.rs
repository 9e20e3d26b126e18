//! The Lindblad generator of the full atom-plus-three-modes model, applied
//! matrix-free.
//!
//! With real `g` and `eta` the Hamiltonian is `H = i K` for a real
//! antisymmetric `K`, and every jump operator is real. A real symmetric
//! density matrix therefore stays real symmetric, and
//! `-i[H, rho] = K rho - rho K = M + M^T` with `M = K rho`. The evolution
//! uses that real path; the general complex path exists for checking it.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::space::{FockSpace, Level, Mode, PartialPerm};
use crate::model::SystemParams;

/// One dissipation channel `rate * D[L]`.
#[derive(Debug, Clone)]
pub struct Jump {
    pub name: &'static str,
    pub rate: f64,
    pub op: PartialPerm,
    /// Every operator here maps basis state `i + shift` to `i`.
    shift: isize,
    /// `sqrt(rate) * L[i, i + shift]`, zero on empty rows.
    weights: Vec<f64>,
    rows: Vec<usize>,
}

/// Compressed rows of the real drift `K = -i H`.
#[derive(Debug, Clone)]
struct Csr {
    starts: Vec<usize>,
    entries: Vec<(usize, f64)>,
}

impl Csr {
    fn from_triplets(dim: usize, mut triplets: Vec<(usize, usize, f64)>) -> Self {
        triplets.sort_by_key(|&(i, j, _)| (i, j));
        let mut entries: Vec<(usize, f64)> = Vec::with_capacity(triplets.len());
        let mut starts = vec![0; dim + 1];
        let mut last: Option<(usize, usize)> = None;
        for (i, j, v) in triplets {
            if last == Some((i, j)) {
                entries.last_mut().expect("previous entry").1 += v;
                continue;
            }
            entries.push((j, v));
            starts[i + 1] = entries.len();
            last = Some((i, j));
        }
        for i in 1..=dim {
            starts[i] = starts[i].max(starts[i - 1]);
        }
        Self { starts, entries }
    }

    fn row(&self, i: usize) -> &[(usize, f64)] {
        &self.entries[self.starts[i]..self.starts[i + 1]]
    }

    fn nnz(&self) -> usize {
        self.entries.len()
    }
}

/// Matrix-free action `rho -> L(rho)` of the full master equation.
#[derive(Debug, Clone)]
pub struct LiouvillianAction {
    space: FockSpace,
    drift: Csr,
    hamiltonian: Vec<(usize, usize, Complex64)>,
    jumps: Vec<Jump>,
    /// `sum_k rate_k L_k^T L_k`, diagonal.
    decay: Vec<f64>,
}

/// `X - X^T` scaled by `coeff`, as triplets.
fn antisymmetric_part(
    x: &PartialPerm,
    coeff: f64,
) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
    x.triplets()
        .flat_map(move |(i, j, v)| [(i, j, coeff * v), (j, i, -coeff * v)])
}

impl LiouvillianAction {
    pub fn new(params: &SystemParams, space: FockSpace) -> Self {
        let dim = space.dim();
        let b = space.annihilate(Mode::B);
        let a1 = space.annihilate(Mode::A1);
        let a2 = space.annihilate(Mode::A2);
        let sigma_a = space.atomic(Level::B, Level::A);
        let sigma_b = space.atomic(Level::C, Level::B);
        let sigma_c = space.atomic(Level::C, Level::A);

        // H = i eta (b^+ - b) + i g (sc^+ b - b^+ sc + sa^+ a1 - a1^+ sa + sb^+ a2 - a2^+ sb)
        let b_dag = b.transpose();
        let couplings = [
            sigma_c.transpose().compose(&b),
            sigma_a.transpose().compose(&a1),
            sigma_b.transpose().compose(&a2),
        ];
        let (eta, g) = (params.eta(), params.g());

        let mut drift: Vec<(usize, usize, f64)> = antisymmetric_part(&b_dag, eta).collect();
        for x in &couplings {
            drift.extend(antisymmetric_part(x, g));
        }
        let drift = Csr::from_triplets(dim, drift);

        let i_unit = Complex64::new(0.0, 1.0);
        let mut hamiltonian = Vec::new();
        for (i, j, v) in b_dag.triplets() {
            hamiltonian.push((i, j, i_unit * eta * v));
            hamiltonian.push((j, i, -i_unit * eta * v));
        }
        for x in &couplings {
            for (i, j, v) in x.triplets() {
                hamiltonian.push((i, j, i_unit * g * v));
                hamiltonian.push((j, i, -i_unit * g * v));
            }
        }

        let channels = [
            ("sigma_a", params.gamma(), sigma_a),
            ("sigma_b", params.gamma(), sigma_b),
            ("sigma_c", params.gamma(), sigma_c),
            ("b", params.kappa(), b),
            ("a1", params.kappa(), a1),
            ("a2", params.kappa(), a2),
        ];
        let mut decay = vec![0.0; dim];
        let mut jumps = Vec::new();
        for (name, rate, op) in channels {
            if rate == 0.0 {
                continue;
            }
            for (k, n) in op.gram_diagonal().into_iter().enumerate() {
                decay[k] += rate * n;
            }
            let root = rate.sqrt();
            let shift = op
                .constant_shift()
                .expect("jump operators shift by a fixed offset");
            let mut weights = vec![0.0; dim];
            let mut rows = Vec::new();
            for (i, _, v) in op.triplets() {
                weights[i] = root * v;
                rows.push(i);
            }
            jumps.push(Jump {
                name,
                rate,
                op,
                shift,
                weights,
                rows,
            });
        }

        Self {
            space,
            drift,
            hamiltonian,
            jumps,
            decay,
        }
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn jumps(&self) -> &[Jump] {
        &self.jumps
    }

    pub fn drift_nnz(&self) -> usize {
        self.drift.nnz()
    }

    /// `out = L(rho)` for a real symmetric row-major `rho`. The result is
    /// exactly symmetric.
    pub fn apply_real(&self, rho: &[f64], out: &mut [f64]) {
        let d = self.dim();
        debug_assert_eq!(rho.len(), d * d);
        debug_assert_eq!(out.len(), d * d);

        for i in 0..d {
            let out_row = &mut out[i * d..(i + 1) * d];
            out_row.fill(0.0);
            for &(k, v) in self.drift.row(i) {
                let rho_row = &rho[k * d..(k + 1) * d];
                for (o, r) in out_row.iter_mut().zip(rho_row) {
                    *o += v * r;
                }
            }
        }
        add_transpose(out, d);

        for i in 0..d {
            let ni = self.decay[i];
            let out_row = &mut out[i * d..(i + 1) * d];
            let rho_row = &rho[i * d..(i + 1) * d];
            for ((o, r), nj) in out_row.iter_mut().zip(rho_row).zip(&self.decay) {
                *o -= 0.5 * (ni + nj) * r;
            }
        }

        for jump in &self.jumps {
            // columns j whose source j + shift is in range
            let (lo, hi) = if jump.shift >= 0 {
                (0, d - jump.shift as usize)
            } else {
                (jump.shift.unsigned_abs(), d)
            };
            let w = &jump.weights[lo..hi];
            for &i in &jump.rows {
                let wi = jump.weights[i];
                let si = i.wrapping_add_signed(jump.shift);
                let src_lo = lo.wrapping_add_signed(jump.shift);
                let rho_row = &rho[si * d + src_lo..si * d + src_lo + (hi - lo)];
                let out_row = &mut out[i * d + lo..i * d + hi];
                for ((o, wj), r) in out_row.iter_mut().zip(w).zip(rho_row) {
                    *o += wi * wj * r;
                }
            }
        }
    }

    /// General complex action, `-i[H, rho] + sum_k rate_k D[L_k](rho)`.
    pub fn apply(&self, rho: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        let d = self.dim();
        assert_eq!(rho.shape(), (d, d), "density matrix shape");
        let mut out = DMatrix::<Complex64>::zeros(d, d);
        let minus_i = Complex64::new(0.0, -1.0);
        for &(i, j, h) in &self.hamiltonian {
            for m in 0..d {
                // H rho
                out[(i, m)] += minus_i * h * rho[(j, m)];
                // rho H
                out[(m, j)] -= minus_i * rho[(m, i)] * h;
            }
        }
        for jump in &self.jumps {
            for (i, j, v) in jump.op.triplets() {
                for (k, m, w) in jump.op.triplets() {
                    out[(i, k)] += rho[(j, m)] * (jump.rate * v * w);
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                out[(i, j)] -= rho[(i, j)] * (0.5 * (self.decay[i] + self.decay[j]));
            }
        }
        out
    }
}

/// `m <- m + m^T`, blocked for cache locality. Writes each symmetric pair
/// from a single sum so the result is exactly symmetric.
fn add_transpose(m: &mut [f64], d: usize) {
    const BLOCK: usize = 32;
    for bi in (0..d).step_by(BLOCK) {
        let i_end = (bi + BLOCK).min(d);
        for bj in (bi..d).step_by(BLOCK) {
            let j_end = (bj + BLOCK).min(d);
            for i in bi..i_end {
                let j_start = if bi == bj { i } else { bj };
                for j in j_start..j_end {
                    let s = m[i * d + j] + m[j * d + i];
                    m[i * d + j] = s;
                    m[j * d + i] = s;
                }
            }
        }
    }
}
