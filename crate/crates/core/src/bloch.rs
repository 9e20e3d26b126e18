//! Time-domain dynamics of the atom after the cavity modes are eliminated.
//!
//! The five complex equations couple `<sigma_a>` to `<sigma_b^+>`, so the
//! state is closed by adjoining conjugates: three complex coherences and two
//! real populations, i.e. eight real unknowns. The bottom population is
//! implied by normalization, `eta_c = 1 - eta_a - eta_b`.

use std::fmt::Write as _;

use nalgebra::{SMatrix, SVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::model::{AtomicSteadyState, SystemParams};

type Vec8 = SVector<f64, 8>;
type Mat8 = SMatrix<f64, 8, 8>;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BlochState {
    pub sigma_a: Complex64,
    pub sigma_b: Complex64,
    pub sigma_c: Complex64,
    pub eta_a: f64,
    pub eta_b: f64,
    pub time: f64,
}

/// Time derivatives of the five independent expectation values.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BlochDerivative {
    pub sigma_a: Complex64,
    pub sigma_b: Complex64,
    pub sigma_c: Complex64,
    pub eta_a: f64,
    pub eta_b: f64,
}

impl BlochDerivative {
    pub fn max_norm(&self) -> f64 {
        to_vec(
            &self.sigma_a,
            &self.sigma_b,
            &self.sigma_c,
            self.eta_a,
            self.eta_b,
        )
        .amax()
    }
}

impl BlochState {
    /// Atom in the bottom level: every coherence and upper population zero.
    pub fn ground(time: f64) -> Self {
        Self {
            time,
            ..Self::default()
        }
    }

    pub fn eta_c(&self) -> f64 {
        1.0 - self.eta_a - self.eta_b
    }

    pub fn from_steady(s: &AtomicSteadyState) -> Self {
        Self {
            sigma_a: Complex64::new(s.sigma_a, 0.0),
            sigma_b: Complex64::new(s.sigma_b, 0.0),
            sigma_c: Complex64::new(s.sigma_c, 0.0),
            eta_a: s.eta_a,
            eta_b: s.eta_b,
            time: 0.0,
        }
    }

    /// Largest imaginary magnitude among the coherences.
    pub fn max_imag(&self) -> f64 {
        self.sigma_a
            .im
            .abs()
            .max(self.sigma_b.im.abs())
            .max(self.sigma_c.im.abs())
    }

    fn as_vec(&self) -> Vec8 {
        to_vec(
            &self.sigma_a,
            &self.sigma_b,
            &self.sigma_c,
            self.eta_a,
            self.eta_b,
        )
    }

    fn from_vec(v: &Vec8, time: f64) -> Self {
        Self {
            sigma_a: Complex64::new(v[0], v[1]),
            sigma_b: Complex64::new(v[2], v[3]),
            sigma_c: Complex64::new(v[4], v[5]),
            eta_a: v[6],
            eta_b: v[7],
            time,
        }
    }
}

fn to_vec(a: &Complex64, b: &Complex64, c: &Complex64, ea: f64, eb: f64) -> Vec8 {
    Vec8::from([a.re, a.im, b.re, b.im, c.re, c.im, ea, eb])
}

/// Right-hand side of the adiabatically eliminated atomic equations.
pub fn bloch_rhs(state: &BlochState, params: &SystemParams) -> BlochDerivative {
    let big_g = params.total_decay();
    let eps = params.epsilon();
    let eta_c = state.eta_c();
    BlochDerivative {
        sigma_a: -1.5 * big_g * state.sigma_a + eps * state.sigma_b.conj(),
        sigma_b: -0.5 * big_g * state.sigma_b - eps * state.sigma_a.conj(),
        sigma_c: -big_g * state.sigma_c + eps * (eta_c - state.eta_a),
        eta_a: -2.0 * big_g * state.eta_a + eps * (state.sigma_c.conj() + state.sigma_c).re,
        eta_b: -big_g * state.eta_b + big_g * state.eta_a,
    }
}

/// The same equations as an affine map `dx/dt = J x + c` on the real
/// 8-vector `(Re sa, Im sa, Re sb, Im sb, Re sc, Im sc, eta_a, eta_b)`.
fn affine_system(params: &SystemParams) -> (Mat8, Vec8) {
    let g = params.total_decay();
    let e = params.epsilon();
    #[rustfmt::skip]
    let j = Mat8::from_row_slice(&[
        -1.5 * g, 0.0,       e,        0.0,      0.0,  0.0,  0.0,       0.0,
        0.0,      -1.5 * g,  0.0,      -e,       0.0,  0.0,  0.0,       0.0,
        -e,       0.0,       -0.5 * g, 0.0,      0.0,  0.0,  0.0,       0.0,
        0.0,      e,         0.0,      -0.5 * g, 0.0,  0.0,  0.0,       0.0,
        0.0,      0.0,       0.0,      0.0,      -g,   0.0,  -2.0 * e,  -e,
        0.0,      0.0,       0.0,      0.0,      0.0,  -g,   0.0,       0.0,
        0.0,      0.0,       0.0,      0.0,      2.0 * e, 0.0, -2.0 * g, 0.0,
        0.0,      0.0,       0.0,      0.0,      0.0,  0.0,  g,         -g,
    ]);
    let mut c = Vec8::zeros();
    c[4] = e;
    (j, c)
}

/// Steady state from the linear system `J x = -c`, independent of the
/// closed-form solution.
pub fn steady_state_by_linear_solve(params: &SystemParams) -> Result<AtomicSteadyState> {
    params.require_analytic()?;
    let (j, c) = affine_system(params);
    let x = j
        .lu()
        .solve(&(-c))
        .ok_or_else(|| Error::Singular("steady-state Bloch system".into()))?;
    let state = BlochState::from_vec(&x, 0.0);
    Ok(AtomicSteadyState {
        sigma_a: state.sigma_a.re,
        sigma_b: state.sigma_b.re,
        sigma_c: state.sigma_c.re,
        eta_a: state.eta_a,
        eta_b: state.eta_b,
        eta_c: state.eta_c(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<BlochState>,
    pub step: f64,
    pub converged: bool,
    pub residual: f64,
}

impl Trajectory {
    pub fn last(&self) -> &BlochState {
        self.samples
            .last()
            .expect("trajectory holds at least one sample")
    }

    pub const CSV_HEADER: &'static str =
        "time,sigma_a_re,sigma_a_im,sigma_b_re,sigma_b_im,sigma_c_re,sigma_c_im,eta_a,eta_b";

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.samples.len() + 1));
        out.push_str(Self::CSV_HEADER);
        out.push('\n');
        for s in &self.samples {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                s.time,
                s.sigma_a.re,
                s.sigma_a.im,
                s.sigma_b.re,
                s.sigma_b.im,
                s.sigma_c.re,
                s.sigma_c.im,
                s.eta_a,
                s.eta_b
            );
        }
        out
    }
}

/// Fixed-step RK4 integrator for the Bloch equations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Integrator {
    /// Max-norm of the right-hand side at which the run counts as converged.
    pub tolerance: f64,
    /// Keep every n-th step in the trajectory (the first and last are always kept).
    pub record_every: usize,
}

impl Default for Integrator {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            record_every: 1,
        }
    }
}

impl Integrator {
    /// Step size `0.05 / max(gamma_c + gamma, epsilon)`.
    pub fn step_for(params: &SystemParams) -> f64 {
        0.05 / params.total_decay().max(params.epsilon())
    }

    /// Time horizon `1000 / (gamma_c + gamma)`.
    pub fn horizon_for(params: &SystemParams) -> f64 {
        1e3 / params.total_decay()
    }

    pub fn run(&self, params: &SystemParams, initial: BlochState) -> Result<Trajectory> {
        params.require_analytic()?;
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(invalid("tolerance", "must be > 0"));
        }
        let record_every = self.record_every.max(1);
        let (j, c) = affine_system(params);
        let f = |x: &Vec8| j * x + c;

        let h = Self::step_for(params);
        let t0 = initial.time;
        let horizon = t0 + Self::horizon_for(params);
        let mut x = initial.as_vec();
        let mut samples = vec![initial];
        let mut n: u64 = 0;
        loop {
            let k1 = f(&x);
            let residual = k1.amax();
            let t = t0 + n as f64 * h;
            if residual <= self.tolerance {
                if !n.is_multiple_of(record_every as u64) {
                    samples.push(BlochState::from_vec(&x, t));
                }
                return Ok(Trajectory {
                    samples,
                    step: h,
                    converged: true,
                    residual,
                });
            }
            if t >= horizon {
                return Err(Error::NonConvergence { horizon, residual });
            }
            let k2 = f(&(x + k1 * (h / 2.0)));
            let k3 = f(&(x + k2 * (h / 2.0)));
            let k4 = f(&(x + k3 * h));
            x += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
            n += 1;
            if n.is_multiple_of(record_every as u64) {
                samples.push(BlochState::from_vec(&x, t0 + n as f64 * h));
            }
        }
    }
}

/// Integrates from `initial` until the right-hand side falls below `tolerance`.
pub fn integrate_to_steady(
    params: &SystemParams,
    initial: BlochState,
    tolerance: f64,
) -> Result<Trajectory> {
    Integrator {
        tolerance,
        ..Integrator::default()
    }
    .run(params, initial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{atomic_steady_state, params_from_plot_set};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn plot_point() -> SystemParams {
        params_from_plot_set(0.5, 0.8, 0.3, 0.6).unwrap()
    }

    #[test]
    fn rhs_vanishes_at_closed_form() {
        let p = plot_point();
        let s = BlochState::from_steady(&atomic_steady_state(&p).unwrap());
        assert!(bloch_rhs(&s, &p).max_norm() <= 1e-12);
    }

    #[test]
    fn rhs_from_ground_state() {
        let p = plot_point();
        let d = bloch_rhs(&BlochState::ground(0.0), &p);
        assert_abs_diff_eq!(d.sigma_c.re, 0.6, epsilon = 1e-15);
        assert_eq!(d.eta_a, 0.0);
        assert_eq!(d.eta_b, 0.0);
    }

    #[test]
    fn rhs_couples_sigma_a_to_conjugate_sigma_b() {
        let p = plot_point();
        let s = BlochState {
            sigma_b: Complex64::new(1.0, 0.0),
            ..BlochState::default()
        };
        let d = bloch_rhs(&s, &p);
        assert_abs_diff_eq!(d.sigma_a.re, 0.6, epsilon = 1e-15);
        assert_abs_diff_eq!(d.sigma_b.re, -0.4, epsilon = 1e-15);

        let s = BlochState {
            sigma_b: Complex64::new(0.0, 1.0),
            ..BlochState::default()
        };
        assert_abs_diff_eq!(bloch_rhs(&s, &p).sigma_a.im, -0.6, epsilon = 1e-15);
    }

    proptest! {
        #[test]
        fn affine_matrix_matches_rhs(v in proptest::array::uniform8(-1.0..1.0f64),
                                     gc in 0.01..3.0f64, gm in 0.0..2.0f64, eps in 0.0..4.0f64) {
            let p = params_from_plot_set(gc, 1.0, gm, eps).unwrap();
            let x = Vec8::from(v);
            let s = BlochState::from_vec(&x, 0.0);
            let (j, c) = affine_system(&p);
            let d = bloch_rhs(&s, &p);
            let dv = to_vec(&d.sigma_a, &d.sigma_b, &d.sigma_c, d.eta_a, d.eta_b);
            prop_assert!((j * x + c - dv).amax() <= 1e-13);
        }
    }

    #[test]
    fn linear_solve_matches_closed_form() {
        let p = plot_point();
        let lin = steady_state_by_linear_solve(&p).unwrap();
        let cf = atomic_steady_state(&p).unwrap();
        for (a, b) in [
            (lin.sigma_a, cf.sigma_a),
            (lin.sigma_b, cf.sigma_b),
            (lin.sigma_c, cf.sigma_c),
            (lin.eta_a, cf.eta_a),
            (lin.eta_b, cf.eta_b),
            (lin.eta_c, cf.eta_c),
        ] {
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }

        let undriven = steady_state_by_linear_solve(&p.with_epsilon(0.0).unwrap()).unwrap();
        assert_abs_diff_eq!(undriven.eta_c, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(undriven.eta_a, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(undriven.sigma_c, 0.0, epsilon = 1e-15);

        let p = params_from_plot_set(0.5, 0.8, 0.0, 0.37).unwrap();
        let s = steady_state_by_linear_solve(&p).unwrap();
        // 0.1369 / (0.25 + 0.4107)
        assert_abs_diff_eq!(s.eta_a, 0.207204480096867, epsilon = 1e-12);
    }

    #[test]
    fn integration_reaches_closed_form() {
        let p = plot_point();
        let traj = integrate_to_steady(&p, BlochState::ground(0.0), 1e-10).unwrap();
        assert!(traj.converged);
        assert!(traj.residual <= 1e-10);
        let last = traj.last();
        assert_abs_diff_eq!(last.eta_a, 0.209302325581395, epsilon = 1e-8);
        let cf = atomic_steady_state(&p).unwrap();
        assert_abs_diff_eq!(last.sigma_c.re, cf.sigma_c, epsilon = 1e-9);
        assert_abs_diff_eq!(last.eta_b, cf.eta_b, epsilon = 1e-9);
        assert!(traj.step <= 0.05 / 0.8 + 1e-15);
        assert!(traj.samples.windows(2).all(|w| w[1].time > w[0].time));
        for s in &traj.samples {
            assert!(s.max_imag() <= 1e-10);
            for pop in [s.eta_a, s.eta_b, s.eta_c()] {
                assert!(
                    (-1e-9..=1.0 + 1e-9).contains(&pop),
                    "population {pop} at t={}",
                    s.time
                );
            }
        }
    }

    #[test]
    fn undriven_decays_to_ground() {
        let p = plot_point().with_epsilon(0.0).unwrap();
        let start = BlochState {
            eta_a: 0.4,
            eta_b: 0.3,
            ..BlochState::default()
        };
        let traj = integrate_to_steady(&p, start, 1e-10).unwrap();
        let last = traj.last();
        assert!(last.eta_a.abs() < 1e-9 && last.eta_b.abs() < 1e-9);
        assert_eq!(last.sigma_c, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn fixed_point_converges_immediately() {
        let p = plot_point();
        let s = BlochState::from_steady(&atomic_steady_state(&p).unwrap());
        let traj = integrate_to_steady(&p, s, 1e-10).unwrap();
        assert_eq!(traj.samples.len(), 1);
        assert!(traj.converged);
    }

    #[test]
    fn rejects_non_positive_tolerance() {
        let p = plot_point();
        assert!(integrate_to_steady(&p, BlochState::ground(0.0), 0.0).is_err());
    }

    #[test]
    fn unreachable_tolerance_reports_non_convergence() {
        let p = plot_point();
        match integrate_to_steady(&p, BlochState::ground(0.0), 1e-300) {
            Err(Error::NonConvergence { residual, horizon }) => {
                assert!(residual > 0.0);
                assert_abs_diff_eq!(horizon, 1250.0, epsilon = 1e-9);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn sparse_recording_keeps_final_sample() {
        let p = plot_point();
        let traj = Integrator {
            tolerance: 1e-10,
            record_every: 7,
        }
        .run(&p, BlochState::ground(0.0))
        .unwrap();
        let full = integrate_to_steady(&p, BlochState::ground(0.0), 1e-10).unwrap();
        assert_eq!(traj.last(), full.last());
        assert!(traj.samples.len() < full.samples.len());
    }

    #[test]
    fn csv_export_shape() {
        let p = plot_point();
        let traj = integrate_to_steady(&p, BlochState::ground(0.0), 1e-6).unwrap();
        let csv = traj.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), Trajectory::CSV_HEADER);
        assert_eq!(lines.clone().count(), traj.samples.len());
        assert!(lines.all(|l| l.split(',').count() == 9));
        assert!(csv.starts_with("time,sigma_a_re"));
    }
}
