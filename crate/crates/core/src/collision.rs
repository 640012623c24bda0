//! Repeated-interaction (collisional) model of the PT reservoir.
//!
//! Each step the system meets a fresh ancilla prepared in
//! [`PtReservoir::ancilla_state`] and the two modes are mixed by a
//! beam-splitter of angle `θ`. With zero system-ancilla correlations the
//! reduced system update is
//!
//! ```text
//! σ' = cos²θ σ_sys + sin²θ σ_anc,    d' = cosθ d_sys
//! ```
//!
//! Choosing `cos²θ = e^{-γδt}` makes every step coincide with the
//! closed-form thermalization over `δt`.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::gaussian::GaussianState;
use crate::reservoir::PtReservoir;
use crate::thermalization::{self, EntropyReference, ThermalizationTrajectory};

/// Maps the decay rate and collision time to a mixing angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AngleRule {
    /// `θ = arcsin(sqrt(1 - e^{-γδt}))`, exact for any `δt`.
    #[default]
    Exact,
    /// `θ = sqrt(γδt)`, correct only to first order in `δt`.
    Naive,
}

impl AngleRule {
    pub fn angle(self, gamma: f64, dt: f64) -> f64 {
        match self {
            AngleRule::Exact => (-(-gamma * dt).exp_m1()).sqrt().asin(),
            AngleRule::Naive => (gamma * dt).sqrt(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollisionConfig {
    pub dt: f64,
    pub n_steps: usize,
    pub angle_rule: AngleRule,
}

impl CollisionConfig {
    pub fn new(dt: f64, n_steps: usize, angle_rule: AngleRule) -> Result<Self> {
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(Error::domain("dt", dt, "collision time must be finite and > 0"));
        }
        if n_steps == 0 {
            return Err(Error::Grid("need at least one collision"));
        }
        Ok(CollisionConfig { dt, n_steps, angle_rule })
    }

    /// Mixing angle for `spec`, checked to lie in `(0, π/2]`.
    pub fn theta(&self, spec: &PtReservoir) -> Result<f64> {
        let theta = self.angle_rule.angle(spec.gamma(), self.dt);
        if theta > 0.0 && theta <= FRAC_PI_2 {
            Ok(theta)
        } else {
            Err(Error::domain("theta", theta, "mixing angle must lie in (0, pi/2]"))
        }
    }

    pub fn times(&self) -> Vec<f64> {
        (0..=self.n_steps).map(|k| k as f64 * self.dt).collect()
    }
}

/// One collision with an uncorrelated, zero-mean ancilla.
pub fn collide_once(
    system: &GaussianState,
    ancilla: &GaussianState,
    theta: f64,
) -> Result<GaussianState> {
    if !(0.0..=FRAC_PI_2).contains(&theta) {
        return Err(Error::domain("theta", theta, "mixing angle must lie in [0, pi/2]"));
    }
    let (s, c) = theta.sin_cos();
    let cov = system.cov() * (c * c) + ancilla.cov() * (s * s);
    let mean = system.mean() * c + ancilla.mean() * s;
    Ok(GaussianState::from_parts(mean, cov))
}

/// System states after `0, 1, ..., n_steps` collisions.
pub fn simulate_states(
    initial: &GaussianState,
    spec: &PtReservoir,
    config: &CollisionConfig,
) -> Result<Vec<GaussianState>> {
    let theta = config.theta(spec)?;
    let mut states = Vec::with_capacity(config.n_steps + 1);
    let mut current = *initial;
    states.push(current);
    for _ in 0..config.n_steps {
        // used ancillas are discarded; each collision gets a fresh one
        let ancilla = spec.ancilla_state();
        current = collide_once(&current, &ancilla, theta)?;
        states.push(current);
    }
    Ok(states)
}

pub fn simulate(
    initial: &GaussianState,
    spec: &PtReservoir,
    config: &CollisionConfig,
) -> Result<ThermalizationTrajectory> {
    let states = simulate_states(initial, spec, config)?;
    ThermalizationTrajectory::from_states(config.times(), states, spec, EntropyReference::Effective)
}

/// Largest covariance-entry and first-moment deviations of a collisional
/// run from the closed-form evolution at the same times.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Deviation {
    pub sigma: f64,
    pub mean: f64,
}

pub fn deviation_at(state: &GaussianState, exact: &GaussianState) -> Deviation {
    Deviation {
        sigma: (state.cov() - exact.cov()).amax(),
        mean: (state.mean() - exact.mean()).amax(),
    }
}

/// Per-step deviation of [`simulate_states`] from [`thermalization::evolve`].
pub fn deviations(
    initial: &GaussianState,
    spec: &PtReservoir,
    config: &CollisionConfig,
) -> Result<Vec<Deviation>> {
    let states = simulate_states(initial, spec, config)?;
    config
        .times()
        .iter()
        .zip(&states)
        .map(|(&t, s)| Ok(deviation_at(s, &thermalization::evolve(initial, spec, t)?)))
        .collect()
}

/// Least-squares slope of `ln(error)` against `ln(step)`.
pub fn empirical_order(steps: &[f64], errors: &[f64]) -> Result<f64> {
    if steps.len() != errors.len() || steps.len() < 2 {
        return Err(Error::Grid("need at least two (step, error) pairs"));
    }
    if steps.iter().chain(errors).any(|&v| !(v > 0.0)) {
        return Err(Error::Grid("steps and errors must be positive"));
    }
    let xs: Vec<f64> = steps.iter().map(|h| h.ln()).collect();
    let ys: Vec<f64> = errors.iter().map(|e| e.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    Ok(sxy / sxx)
}

/// Convergence order of `rule` at fixed total time `t_total`, from runs
/// with `dt`, `dt/2` and `dt/4`. Each run's error is its maximum covariance
/// deviation over the whole trajectory.
pub fn convergence_order(
    initial: &GaussianState,
    spec: &PtReservoir,
    rule: AngleRule,
    t_total: f64,
    dt: f64,
) -> Result<f64> {
    let steps = [dt, dt / 2.0, dt / 4.0];
    let mut errors = Vec::with_capacity(3);
    for &h in &steps {
        let n_steps = (t_total / h).round() as usize;
        let config = CollisionConfig::new(h, n_steps, rule)?;
        let worst = deviations(initial, spec, &config)?
            .iter()
            .map(|d| d.sigma)
            .fold(0.0, f64::max);
        errors.push(worst);
    }
    empirical_order(&steps, &errors)
}
