//! Method-of-lines time integration for the three evolution problems on the
//! shared 3-point Laplacian: the semilinear equation `u_t = Δu - 2fu - u²`,
//! its linearization `h_t = Δh - 2fh` at zero, and the source-driven form
//! `w_t = Δw - w² + φ`.
//!
//! Two schemes are provided. Explicit RK4 is CFL-limited (`dt ≤ 0.4 h²`) and
//! serves as the validation scheme; IMEX Crank–Nicolson treats the stiff
//! diffusion implicitly and the reaction explicitly, which is what long runs
//! on fine meshes use. Cross-checking both guards the blow-up claims against
//! scheme artifacts.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::grid::{Field, Grid};
use crate::kernel;
use crate::operator::laplacian;
use crate::Result;

/// Which right side is being integrated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    /// `u_t = Δu - 2fu - u²` (zero is an equilibrium).
    Nonlinear,
    /// `h_t = Δh - 2fh`, the linearization at zero.
    Linearized,
    /// `w_t = Δw - w² + φ`, the form whose equilibrium `f` conjugates to zero.
    Sourced,
}

/// An initial-value problem on a grid.
#[derive(Debug, Clone)]
pub struct Problem {
    grid: Grid,
    kind: ProblemKind,
    potential: Option<Field>,
    source: Option<Field>,
    initial: Field,
}

impl Problem {
    pub fn nonlinear(potential: Field, initial: Field) -> Result<Problem> {
        if potential.grid() != initial.grid() {
            return Err(Error::GridMismatch);
        }
        Ok(Problem {
            grid: initial.grid(),
            kind: ProblemKind::Nonlinear,
            potential: Some(potential),
            source: None,
            initial,
        })
    }

    pub fn linearized(potential: Field, initial: Field) -> Result<Problem> {
        if potential.grid() != initial.grid() {
            return Err(Error::GridMismatch);
        }
        Ok(Problem {
            grid: initial.grid(),
            kind: ProblemKind::Linearized,
            potential: Some(potential),
            source: None,
            initial,
        })
    }

    pub fn sourced(source: Field, initial: Field) -> Result<Problem> {
        if source.grid() != initial.grid() {
            return Err(Error::GridMismatch);
        }
        Ok(Problem {
            grid: initial.grid(),
            kind: ProblemKind::Sourced,
            potential: None,
            source: Some(source),
            initial,
        })
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn initial(&self) -> &Field {
        &self.initial
    }

    pub fn potential(&self) -> Option<&Field> {
        self.potential.as_ref()
    }

    pub fn source(&self) -> Option<&Field> {
        self.source.as_ref()
    }

    /// Same equation, new starting state; used to chain integration legs.
    pub fn with_initial(&self, initial: Field) -> Result<Problem> {
        if initial.grid() != self.grid {
            return Err(Error::GridMismatch);
        }
        let mut p = self.clone();
        p.initial = initial;
        Ok(p)
    }

    fn reaction_scale(&self, u_max: f64) -> f64 {
        let f_max = self
            .potential
            .as_ref()
            .map(|f| f.max_abs())
            .unwrap_or(0.0);
        match self.kind {
            ProblemKind::Nonlinear => 2.0 * f_max + 2.0 * u_max,
            ProblemKind::Linearized => 2.0 * f_max,
            ProblemKind::Sourced => 2.0 * u_max,
        }
    }
}

/// Time stepping scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    ExplicitRk4,
    ImexCrankNicolson,
}

/// RK4 stability guard: `dt ≤ 0.4 h²`.
pub fn rk4_dt_max(grid: Grid) -> f64 {
    0.4 * grid.spacing() * grid.spacing()
}

/// IMEX accuracy guard: `dt ≤ 0.5`.
pub const IMEX_DT_MAX: f64 = 0.5;

/// Integration parameters.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub scheme: Scheme,
    pub dt: f64,
    pub t_end: f64,
    /// Blow-up is declared once `‖u‖_∞` reaches this value.
    pub blowup_threshold: f64,
    /// Norm records are taken every this many steps.
    pub record_every: usize,
    /// Full snapshots are kept every this many steps (0 = initial state only).
    pub snapshot_every: usize,
    /// Step shrink factor used to localize the blow-up time and to keep the
    /// explicit reaction stable.
    pub dt_shrink: f64,
    /// Smallest step used while localizing the blow-up time.
    pub dt_min: f64,
    /// Additionally record `‖u‖_p` for this `p`.
    pub extra_norm_p: Option<f64>,
}

impl SolverConfig {
    pub fn new(scheme: Scheme, dt: f64, t_end: f64) -> SolverConfig {
        SolverConfig {
            scheme,
            dt,
            t_end,
            blowup_threshold: 1e6,
            record_every: 1,
            snapshot_every: 0,
            dt_shrink: 0.5,
            dt_min: 1e-12,
            extra_norm_p: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0) {
            return Err(Error::InvalidArgument("dt must be positive"));
        }
        if !(self.t_end > 0.0) {
            return Err(Error::InvalidArgument("t_end must be positive"));
        }
        if !(self.blowup_threshold > 1.0) {
            return Err(Error::InvalidArgument("blowup_threshold must exceed 1"));
        }
        if !(self.dt_shrink > 0.0 && self.dt_shrink < 1.0) {
            return Err(Error::InvalidArgument("dt_shrink must lie in (0, 1)"));
        }
        if self.record_every == 0 {
            return Err(Error::InvalidArgument("record_every must be positive"));
        }
        Ok(())
    }
}

/// Norms of the state at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormRecord {
    pub t: f64,
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
    /// Largest signed value; stays ≤ 0 when sign preservation holds.
    pub max_value: f64,
    /// Field magnitude at the outermost interior points.
    pub boundary_max: f64,
    /// `‖u‖_p` for the configured extra `p`, if any.
    pub lp: Option<f64>,
}

impl NormRecord {
    fn measure(t: f64, u: &Field, extra_p: Option<f64>) -> NormRecord {
        NormRecord {
            t,
            l1: u.lp_norm(1.0).expect("p = 1 is valid"),
            l2: u.lp_norm(2.0).expect("p = 2 is valid"),
            linf: u.max_abs(),
            max_value: u.max_value(),
            boundary_max: u.boundary_max(),
            lp: extra_p.map(|p| u.lp_norm(p).expect("validated p")),
        }
    }

    fn diverged(t: f64) -> NormRecord {
        NormRecord {
            t,
            l1: f64::INFINITY,
            l2: f64::INFINITY,
            linf: f64::INFINITY,
            max_value: f64::NEG_INFINITY,
            boundary_max: f64::INFINITY,
            lp: None,
        }
    }
}

/// How a run ended.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RunStatus {
    Completed,
    BlewUp { t_blowup: f64 },
}

/// Output of one integration: subsampled snapshots, norm records, and the
/// final state for chaining.
#[derive(Debug, Clone)]
pub struct Trajectory {
    /// Snapshot times, strictly increasing.
    pub times: Vec<f64>,
    pub snapshots: Vec<Field>,
    pub records: Vec<NormRecord>,
    pub status: RunStatus,
    pub end_time: f64,
    pub end_state: Field,
}

impl Trajectory {
    pub fn blew_up(&self) -> Option<f64> {
        match self.status {
            RunStatus::BlewUp { t_blowup } => Some(t_blowup),
            RunStatus::Completed => None,
        }
    }
}

/// Discrete right side of the evolution, per problem kind.
pub fn rhs(problem: &Problem, u: &Field) -> Result<Field> {
    if u.grid() != problem.grid {
        return Err(Error::GridMismatch);
    }
    let values = rhs_values(problem, u.values());
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonfiniteState);
    }
    Field::from_values(problem.grid, values)
}

fn rhs_values(problem: &Problem, u: &[f64]) -> Vec<f64> {
    let mut out = laplacian(problem.grid, u);
    apply_reaction(problem, u, &mut out, 1.0);
    out
}

/// `out[i] += weight * reaction(u)[i]` for the problem's reaction terms.
fn apply_reaction(problem: &Problem, u: &[f64], out: &mut [f64], weight: f64) {
    match problem.kind {
        ProblemKind::Nonlinear => {
            let f = problem.potential.as_ref().expect("checked at construction");
            for ((o, ui), fi) in out.iter_mut().zip(u).zip(f.values()) {
                *o += weight * (-2.0 * fi * ui - ui * ui);
            }
        }
        ProblemKind::Linearized => {
            let f = problem.potential.as_ref().expect("checked at construction");
            for ((o, ui), fi) in out.iter_mut().zip(u).zip(f.values()) {
                *o += weight * (-2.0 * fi * ui);
            }
        }
        ProblemKind::Sourced => {
            let phi = problem.source.as_ref().expect("checked at construction");
            for ((o, ui), pi) in out.iter_mut().zip(u).zip(phi.values()) {
                *o += weight * (pi - ui * ui);
            }
        }
    }
}

/// Advance one step. RK4 enforces `dt ≤ 0.4 h²`; IMEX Crank–Nicolson solves
/// one symmetric tridiagonal system per step and enforces `dt ≤ 0.5`.
pub fn step(problem: &Problem, u: &Field, dt: f64, scheme: Scheme) -> Result<Field> {
    if u.grid() != problem.grid {
        return Err(Error::GridMismatch);
    }
    if !(dt > 0.0) {
        return Err(Error::InvalidArgument("dt must be positive"));
    }
    let values = match scheme {
        Scheme::ExplicitRk4 => {
            let dt_max = rk4_dt_max(problem.grid);
            if dt > dt_max * (1.0 + 1e-12) {
                return Err(Error::CflViolation { dt, dt_max });
            }
            rk4_step(problem, u.values(), dt)
        }
        Scheme::ImexCrankNicolson => {
            if dt > IMEX_DT_MAX {
                return Err(Error::CflViolation {
                    dt,
                    dt_max: IMEX_DT_MAX,
                });
            }
            imex_step(problem, u.values(), dt)
        }
    };
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonfiniteState);
    }
    Field::from_values(problem.grid, values)
}

fn rk4_step(problem: &Problem, u: &[f64], dt: f64) -> Vec<f64> {
    let n = u.len();
    let k1 = rhs_values(problem, u);
    let mut stage: Vec<f64> = (0..n).map(|i| u[i] + 0.5 * dt * k1[i]).collect();
    let k2 = rhs_values(problem, &stage);
    for i in 0..n {
        stage[i] = u[i] + 0.5 * dt * k2[i];
    }
    let k3 = rhs_values(problem, &stage);
    for i in 0..n {
        stage[i] = u[i] + dt * k3[i];
    }
    let k4 = rhs_values(problem, &stage);
    (0..n)
        .map(|i| u[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
        .collect()
}

/// Crank–Nicolson on the diffusion, forward Euler on the reaction:
/// `(I - dt/2 Δ) u⁺ = u + dt/2 Δu + dt R(u)`.
fn imex_step(problem: &Problem, u: &[f64], dt: f64) -> Vec<f64> {
    let lap = laplacian(problem.grid, u);
    let mut rhs: Vec<f64> = u
        .iter()
        .zip(&lap)
        .map(|(ui, li)| ui + 0.5 * dt * li)
        .collect();
    apply_reaction(problem, u, &mut rhs, dt);

    let h = problem.grid.spacing();
    let off = -0.5 * dt / (h * h);
    let diag = 1.0 + dt / (h * h);
    solve_constant_tridiagonal(off, diag, rhs)
}

/// Thomas algorithm for the strictly diagonally dominant constant-coefficient
/// system arising from Crank–Nicolson.
fn solve_constant_tridiagonal(off: f64, diag: f64, mut x: Vec<f64>) -> Vec<f64> {
    let n = x.len();
    let mut c = vec![0.0; n];
    let mut beta = diag;
    c[0] = off / beta;
    x[0] /= beta;
    for i in 1..n {
        beta = diag - off * c[i - 1];
        c[i] = off / beta;
        x[i] = (x[i] - off * x[i - 1]) / beta;
    }
    for i in (0..n - 1).rev() {
        x[i] -= c[i] * x[i + 1];
    }
    x
}

/// Integrate until `t_end` or until `‖u‖_∞` reaches the blow-up threshold.
///
/// When a step would cross the threshold the step is retried with `dt`
/// multiplied by `dt_shrink` until the crossing is localized within `dt_min`.
/// The step size also shrinks whenever the explicitly treated reaction would
/// make the step unstable (`dt · |∂R/∂u| > 1/2`) and regrows toward the
/// configured `dt` afterwards.
pub fn integrate(problem: &Problem, config: &SolverConfig) -> Result<Trajectory> {
    config.validate()?;

    let mut u = problem.initial.clone();
    let mut t = 0.0_f64;
    let mut dt = config.dt;
    let mut step_idx: usize = 0;

    let mut times = vec![0.0];
    let mut snapshots = vec![u.clone()];
    let mut records = vec![NormRecord::measure(0.0, &u, config.extra_norm_p)];
    let mut status = RunStatus::Completed;
    let mut last_recorded = 0.0_f64;

    let t_tol = 1e-12 * config.t_end;
    while t < config.t_end - t_tol {
        // Keep the explicit reaction inside its stability budget.
        let scale = problem.reaction_scale(u.max_abs());
        while dt > config.dt_min && dt * scale > 0.5 {
            dt *= config.dt_shrink;
        }
        let dt_step = dt.min(config.t_end - t);

        let next = match step(problem, &u, dt_step, config.scheme) {
            Ok(next) => next,
            Err(Error::NonfiniteState) => {
                let t_cross = t + dt_step;
                records.push(NormRecord::diverged(t_cross));
                status = RunStatus::BlewUp { t_blowup: t_cross };
                t = t_cross;
                break;
            }
            Err(e) => return Err(e),
        };

        if next.max_abs() >= config.blowup_threshold {
            if dt_step > config.dt_min {
                // Localize the crossing.
                dt = (dt_step * config.dt_shrink).max(config.dt_min);
                continue;
            }
            t += dt_step;
            u = next;
            records.push(NormRecord::measure(t, &u, config.extra_norm_p));
            times.push(t);
            snapshots.push(u.clone());
            status = RunStatus::BlewUp { t_blowup: t };
            last_recorded = t;
            break;
        }

        t += dt_step;
        u = next;
        step_idx += 1;
        if step_idx % config.record_every == 0 {
            records.push(NormRecord::measure(t, &u, config.extra_norm_p));
            last_recorded = t;
        }
        if config.snapshot_every > 0 && step_idx % config.snapshot_every == 0 {
            times.push(t);
            snapshots.push(u.clone());
        }
        // Regrow toward the configured step after adaptive shrinking.
        if dt < config.dt {
            dt = (dt / config.dt_shrink).min(config.dt);
        }
    }

    if status == RunStatus::Completed && last_recorded < t - t_tol {
        records.push(NormRecord::measure(t, &u, config.extra_norm_p));
    }
    if *times.last().expect("nonempty") < t - t_tol && u.values().iter().all(|v| v.is_finite())
    {
        times.push(t);
        snapshots.push(u.clone());
    }

    Ok(Trajectory {
        times,
        snapshots,
        records,
        status,
        end_time: t,
        end_state: u,
    })
}

/// Exact solution of `u_t = u_xx` from the Gaussian initial profile
/// `exp(-(x - center)²/(2 width²))`; the reference for convergence studies.
pub fn heat_reference(t: f64, x: f64, width: f64, center: f64) -> Result<f64> {
    kernel::gaussian_heat_evolution(t, x, width, center)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math;
    use crate::operator::compute_phi;

    fn bump_potential(grid: Grid) -> Field {
        Field::sample(grid, crate::blowup::smooth_bump).unwrap()
    }

    #[test]
    fn zero_state_is_a_fixed_point_of_both_schemes() {
        let g = Grid::new(8.0, 127).unwrap();
        let problem = Problem::nonlinear(bump_potential(g), Field::zeros(g)).unwrap();
        let zero = Field::zeros(g);
        for scheme in [Scheme::ExplicitRk4, Scheme::ImexCrankNicolson] {
            let dt = match scheme {
                Scheme::ExplicitRk4 => 0.5 * rk4_dt_max(g),
                Scheme::ImexCrankNicolson => 0.01,
            };
            let next = step(&problem, &zero, dt, scheme).unwrap();
            assert!(next.values().iter().all(|v| *v == 0.0));
        }
    }

    #[test]
    fn nonlinear_rhs_vanishes_at_zero_equilibrium() {
        let g = Grid::new(8.0, 127).unwrap();
        let problem = Problem::nonlinear(bump_potential(g), Field::zeros(g)).unwrap();
        let r = rhs(&problem, &Field::zeros(g)).unwrap();
        assert!(r.values().iter().all(|v| *v == 0.0));
    }

    #[test]
    fn sourced_rhs_vanishes_exactly_at_the_conjugated_equilibrium() {
        let g = Grid::new(10.0, 511).unwrap();
        let f = bump_potential(g);
        let phi = compute_phi(g, &f).unwrap();
        let problem = Problem::sourced(phi, f.clone()).unwrap();
        let r = rhs(&problem, &f).unwrap();
        for v in r.values() {
            assert!(v.abs() <= 1e-12, "residual {v}");
        }
    }

    #[test]
    fn linearized_and_nonlinear_agree_to_quadratic_order() {
        let g = Grid::new(8.0, 127).unwrap();
        let f = bump_potential(g);
        let tiny = Field::sample(g, |x| 1e-8 * math::exp(-x * x)).unwrap();
        let lin = rhs(&Problem::linearized(f.clone(), tiny.clone()).unwrap(), &tiny).unwrap();
        let non = rhs(&Problem::nonlinear(f, tiny.clone()).unwrap(), &tiny).unwrap();
        for (a, b) in lin.values().iter().zip(non.values()) {
            assert!((a - b).abs() <= 1e-16);
        }
    }

    #[test]
    fn rk4_cfl_guard_fires() {
        let g = Grid::new(8.0, 127).unwrap();
        let problem = Problem::nonlinear(bump_potential(g), Field::zeros(g)).unwrap();
        let h = g.spacing();
        let r = step(&problem, &Field::zeros(g), h * h, Scheme::ExplicitRk4);
        assert!(matches!(r, Err(Error::CflViolation { .. })));
    }

    #[test]
    fn rk4_local_error_is_fifth_order_against_semidiscrete_modes() {
        // For f = 0 the semidiscrete system u' = Δ_h u diagonalizes in the
        // discrete sine basis, giving an exact one-step reference.
        let l = 5.0;
        let n = 63_usize;
        let g = Grid::new(l, n).unwrap();
        let f0 = Field::zeros(g);
        let u0 = Field::sample(g, |x| math::exp(-x * x)).unwrap();
        let problem = Problem::linearized(f0, u0.clone()).unwrap();

        let h = g.spacing();
        let pi = core::f64::consts::PI;
        let exact_step = |u: &[f64], dt: f64| -> Vec<f64> {
            let nn = u.len();
            // Forward discrete sine transform coefficients.
            let mut coeff = vec![0.0_f64; nn];
            for (k, c) in coeff.iter_mut().enumerate() {
                let mut s = 0.0;
                for (i, ui) in u.iter().enumerate() {
                    s += ui * math::sin((i + 1) as f64 * (k + 1) as f64 * pi / (nn as f64 + 1.0));
                }
                *c = s * 2.0 / (nn as f64 + 1.0);
            }
            (0..nn)
                .map(|i| {
                    let mut s = 0.0;
                    for (k, c) in coeff.iter().enumerate() {
                        let lam = -4.0 / (h * h)
                            * math::sin((k + 1) as f64 * pi / (2.0 * (nn as f64 + 1.0))).powi(2);
                        s += c
                            * math::exp(lam * dt)
                            * math::sin((i + 1) as f64 * (k + 1) as f64 * pi / (nn as f64 + 1.0));
                    }
                    s
                })
                .collect()
        };

        let err_at = |dt: f64| -> f64 {
            let stepped = step(&problem, &u0, dt, Scheme::ExplicitRk4).unwrap();
            let exact = exact_step(u0.values(), dt);
            stepped
                .values()
                .iter()
                .zip(&exact)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0_f64, f64::max)
        };

        let dt = 0.8 * rk4_dt_max(g);
        let e1 = err_at(dt);
        let e2 = err_at(dt / 2.0);
        let order = (e1 / e2).log2();
        assert!(
            order > 4.5 && order < 5.5,
            "observed local order {order} (errors {e1:.3e}, {e2:.3e})"
        );
    }

    #[test]
    fn equilibrium_initial_data_stays_fixed_for_both_schemes() {
        let g = Grid::new(10.0, 511).unwrap();
        let f = bump_potential(g);
        let phi = compute_phi(g, &f).unwrap();
        let problem = Problem::sourced(phi, f.clone()).unwrap();
        for (scheme, dt) in [
            (Scheme::ExplicitRk4, 0.9 * rk4_dt_max(g)),
            (Scheme::ImexCrankNicolson, 0.01),
        ] {
            let mut config = SolverConfig::new(scheme, dt, 1.0);
            config.record_every = 100;
            let traj = integrate(&problem, &config).unwrap();
            assert_eq!(traj.status, RunStatus::Completed);
            let drift = traj
                .end_state
                .values()
                .iter()
                .zip(f.values())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0_f64, f64::max);
            assert!(drift <= 1e-10, "equilibrium drift {drift}");
        }
    }

    #[test]
    fn linearized_l2_norm_decays_monotonically() {
        let g = Grid::new(10.0, 255).unwrap();
        let f = bump_potential(g);
        let init = Field::sample(g, |x| 0.1 * math::exp(-x * x)).unwrap();
        let problem = Problem::linearized(f, init).unwrap();
        let mut config = SolverConfig::new(Scheme::ImexCrankNicolson, 0.005, 2.0);
        config.record_every = 20;
        let traj = integrate(&problem, &config).unwrap();
        assert_eq!(traj.status, RunStatus::Completed);
        for pair in traj.records.windows(2) {
            assert!(
                pair[1].l2 < pair[0].l2,
                "l2 rose from {} to {} at t = {}",
                pair[0].l2,
                pair[1].l2,
                pair[1].t
            );
        }
    }

    #[test]
    fn deep_wide_negative_datum_blows_up_with_finite_time() {
        // Mass well above the diffusion/damping threshold: the quadratic
        // term wins and the run must end in finite-time blow-up.
        let g = Grid::new(16.0, 2047).unwrap();
        let f = bump_potential(g);
        let init = Field::sample(g, |x| -5.0 * crate::blowup::smooth_bump(x / 1.5)).unwrap();
        let problem = Problem::nonlinear(f, init).unwrap();
        let mut config = SolverConfig::new(Scheme::ImexCrankNicolson, 1e-3, 10.0);
        config.record_every = 10;
        let traj = integrate(&problem, &config).unwrap();
        let t_b = traj.blew_up().expect("supercritical datum must blow up");
        assert!(t_b > 0.0 && t_b < 10.0);
        let last = traj.records.last().unwrap();
        assert!(last.linf >= config.blowup_threshold);
        // Sign preservation along the way.
        for r in &traj.records {
            assert!(r.max_value <= 1e-12, "sign violation {}", r.max_value);
        }
    }

    #[test]
    fn heat_reference_is_exact_heat_flow() {
        // One IMEX-CN run on a fine mesh lands close to the closed form.
        let g = Grid::new(15.0, 1499).unwrap();
        let f0 = Field::zeros(g);
        let u0 = Field::sample(g, |x| math::exp(-x * x / 2.0)).unwrap();
        let problem = Problem::linearized(f0, u0).unwrap();
        let mut config = SolverConfig::new(Scheme::ImexCrankNicolson, 1e-3, 0.5);
        config.record_every = 100;
        let traj = integrate(&problem, &config).unwrap();
        let err = traj
            .end_state
            .values()
            .iter()
            .zip(g.points())
            .map(|(u, x)| (u - heat_reference(0.5, x, 1.0, 0.0).unwrap()).abs())
            .fold(0.0_f64, f64::max);
        assert!(err < 5e-5, "L∞ error vs heat reference: {err}");
    }
}
