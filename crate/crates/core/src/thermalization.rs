//! Closed-form Markovian thermalization against a [`PtReservoir`].
//!
//! The covariance relaxes as `σ̇ = -γσ + γ(2N+1)I` and the first moments as
//! `ḋ = -(γ/2)d`, giving
//!
//! ```text
//! d(t) = d(0) e^{-γt/2}
//! σ(t) = σ(0) e^{-γt} + (1 - e^{-γt}) (2N+1) I
//! ```

use nalgebra::Matrix2;

use crate::error::{Error, Result};
use crate::gaussian::GaussianState;
use crate::reservoir::PtReservoir;

/// Inverse temperature used in `Σ = ΔS - βΔU`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EntropyReference {
    /// `β_eff = μβ`, the temperature the ancillas actually thermalize to.
    #[default]
    Effective,
    /// The bare `β` of the reservoir spec.
    Bare,
}

impl EntropyReference {
    pub fn beta(self, spec: &PtReservoir) -> f64 {
        match self {
            EntropyReference::Effective => spec.effective_beta(),
            EntropyReference::Bare => spec.beta(),
        }
    }
}

pub fn evolve(initial: &GaussianState, spec: &PtReservoir, t: f64) -> Result<GaussianState> {
    check_time("t", t)?;
    let decay = (-spec.gamma() * t).exp();
    // 1 - e^{-γt} without cancellation at small γt
    let gain = -(-spec.gamma() * t).exp_m1();
    let asymptotic = Matrix2::identity() * spec.reservoir_occupation().symplectic();
    let mean = initial.mean() * (-0.5 * spec.gamma() * t).exp();
    let cov = initial.cov() * decay + asymptotic * gain;
    Ok(GaussianState::from_parts(mean, cov))
}

/// Heat `(ħω/4)(Tr σ(t) - Tr σ(0))` absorbed by the system up to time `t`.
/// Positive values flow from the reservoir into the system.
pub fn heat_exchanged(initial: &GaussianState, spec: &PtReservoir, t: f64) -> Result<f64> {
    let later = evolve(initial, spec, t)?;
    Ok(trace_heat(initial, &later, spec.omega()))
}

pub fn entropy_production(
    initial: &GaussianState,
    spec: &PtReservoir,
    t1: f64,
    t2: f64,
) -> Result<f64> {
    entropy_production_with(initial, spec, t1, t2, EntropyReference::Effective)
}

/// `Σ = ΔS - β ΔU` over `[t1, t2]`, with `U = ħω Tr[σ]/4`.
pub fn entropy_production_with(
    initial: &GaussianState,
    spec: &PtReservoir,
    t1: f64,
    t2: f64,
    reference: EntropyReference,
) -> Result<f64> {
    check_time("t1", t1)?;
    if !(t2 >= t1) {
        return Err(Error::domain("t2", t2, "must be >= t1"));
    }
    let a = evolve(initial, spec, t1)?;
    let b = evolve(initial, spec, t2)?;
    interval_entropy_production(&a, &b, spec, reference)
}

fn interval_entropy_production(
    a: &GaussianState,
    b: &GaussianState,
    spec: &PtReservoir,
    reference: EntropyReference,
) -> Result<f64> {
    let ds = b.von_neumann_entropy()? - a.von_neumann_entropy()?;
    let du = trace_heat(a, b, spec.omega());
    Ok(ds - reference.beta(spec) * du)
}

fn trace_heat(from: &GaussianState, to: &GaussianState, omega: f64) -> f64 {
    omega * (to.cov().trace() - from.cov().trace()) / 4.0
}

fn check_time(name: &'static str, t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(name, t, "time must be finite and >= 0"))
    }
}

/// Sampled thermalization run. All series share the time grid; heat and
/// entropy production are cumulative from `times[0]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermalizationTrajectory {
    pub times: Vec<f64>,
    pub states: Vec<GaussianState>,
    pub heat: Vec<f64>,
    pub coherence: Vec<f64>,
    pub entropy: Vec<f64>,
    pub entropy_production: Vec<f64>,
}

impl ThermalizationTrajectory {
    /// Derives the observables for a precomputed sequence of states.
    pub fn from_states(
        times: Vec<f64>,
        states: Vec<GaussianState>,
        spec: &PtReservoir,
        reference: EntropyReference,
    ) -> Result<Self> {
        if times.len() != states.len() || times.is_empty() {
            return Err(Error::Grid("times and states must be non-empty and equally long"));
        }
        if times.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Grid("time grid must be strictly increasing"));
        }
        let first = states[0];
        let s0 = first.von_neumann_entropy()?;
        let beta = reference.beta(spec);

        let n = states.len();
        let mut heat = Vec::with_capacity(n);
        let mut coherence = Vec::with_capacity(n);
        let mut entropy = Vec::with_capacity(n);
        let mut entropy_production = Vec::with_capacity(n);
        for state in &states {
            let q = trace_heat(&first, state, spec.omega());
            let s = state.von_neumann_entropy()?;
            heat.push(q);
            coherence.push(state.coherence()?);
            entropy.push(s);
            entropy_production.push(s - s0 - beta * q);
        }
        Ok(ThermalizationTrajectory {
            times,
            states,
            heat,
            coherence,
            entropy,
            entropy_production,
        })
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

/// Uniform grid on `[0, t_max]` with `n_points` samples, both ends included.
pub fn uniform_grid(t_max: f64, n_points: usize) -> Result<Vec<f64>> {
    if !(t_max > 0.0 && t_max.is_finite()) {
        return Err(Error::domain("t_max", t_max, "must be finite and > 0"));
    }
    if n_points < 2 {
        return Err(Error::Grid("need at least 2 grid points"));
    }
    let last = (n_points - 1) as f64;
    let mut grid: Vec<f64> = (0..n_points).map(|k| t_max * k as f64 / last).collect();
    grid[n_points - 1] = t_max;
    Ok(grid)
}

pub fn run_trajectory(
    initial: &GaussianState,
    spec: &PtReservoir,
    t_max: f64,
    n_points: usize,
) -> Result<ThermalizationTrajectory> {
    run_trajectory_with(initial, spec, t_max, n_points, EntropyReference::Effective)
}

pub fn run_trajectory_with(
    initial: &GaussianState,
    spec: &PtReservoir,
    t_max: f64,
    n_points: usize,
    reference: EntropyReference,
) -> Result<ThermalizationTrajectory> {
    let times = uniform_grid(t_max, n_points)?;
    let states = times
        .iter()
        .map(|&t| evolve(initial, spec, t))
        .collect::<Result<Vec<_>>>()?;
    ThermalizationTrajectory::from_states(times, states, spec, reference)
}
