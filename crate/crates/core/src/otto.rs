//! Quasistatic quantum Otto cycle whose hot bath is a PT reservoir.
//!
//! The oscillator starts thermalized with the cold bath at frequency `ω_i`.
//! Strokes: (1) quasistatic `ω_i → ω_f`, (2) full thermalization with the hot
//! bath at `β_hot^eff = sqrt(1 + 4ε²) β_hot`, (3) quasistatic `ω_f → ω_i`,
//! (4) full thermalization with the cold bath. Quasistatic strokes keep the
//! occupation, so every covariance on the cycle is `coth(βω/2) I` for one of
//! the two baths.
//!
//! The constant `ħωε` of the Hermitized Hamiltonian never enters: it is
//! state independent and drops out of every work and heat difference.

use crate::error::{Error, Result};
use crate::gaussian::ThermalOccupation;
use crate::reservoir;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OttoCycleSpec {
    omega_i: f64,
    omega_f: f64,
    beta_cold: f64,
    beta_hot: f64,
    epsilon: f64,
}

impl OttoCycleSpec {
    pub fn new(omega_i: f64, omega_f: f64, beta_cold: f64, beta_hot: f64, epsilon: f64) -> Result<Self> {
        for (name, v) in [("omega_i", omega_i), ("omega_f", omega_f), ("beta_cold", beta_cold), ("beta_hot", beta_hot)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::domain(name, v, "must be finite and > 0"));
            }
        }
        if !(omega_f > omega_i) {
            return Err(Error::domain("omega_f", omega_f, "must exceed omega_i"));
        }
        if !(beta_cold > beta_hot) {
            return Err(Error::domain("beta_cold", beta_cold, "cold bath must be colder than the hot bath"));
        }
        if !(epsilon >= 0.0 && epsilon.is_finite()) {
            return Err(Error::domain("epsilon", epsilon, "PT parameter must be finite and >= 0"));
        }
        Ok(OttoCycleSpec { omega_i, omega_f, beta_cold, beta_hot, epsilon })
    }

    pub fn omega_i(&self) -> f64 {
        self.omega_i
    }

    pub fn omega_f(&self) -> f64 {
        self.omega_f
    }

    pub fn beta_cold(&self) -> f64 {
        self.beta_cold
    }

    pub fn beta_hot(&self) -> f64 {
        self.beta_hot
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn with_epsilon(&self, epsilon: f64) -> Result<Self> {
        OttoCycleSpec::new(self.omega_i, self.omega_f, self.beta_cold, self.beta_hot, epsilon)
    }

    pub fn effective_beta_hot(&self) -> f64 {
        reservoir::mu(self.epsilon) * self.beta_hot
    }

    /// `η = 1 - ω_i/ω_f`.
    pub fn otto_efficiency(&self) -> f64 {
        1.0 - self.omega_i / self.omega_f
    }

    /// `COP = ω_i / (ω_f - ω_i)`.
    pub fn otto_cop(&self) -> f64 {
        self.omega_i / (self.omega_f - self.omega_i)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Engine,
    Refrigerator,
    /// Neither sign pattern, including the all-zero boundary.
    Other,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Engine => "Engine",
            Regime::Refrigerator => "Refrigerator",
            Regime::Other => "Other",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Energies per cycle in units of `ħ × frequency`. Work is done on the
/// oscillator when positive; heat is absorbed by it when positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OttoCycleResult {
    pub epsilon: f64,
    pub w1: f64,
    pub w3: f64,
    pub w_net: f64,
    pub q2: f64,
    pub q4: f64,
    pub regime: Regime,
    pub figure_of_merit: Option<f64>,
}

/// `coth(x/2) = 1 + 2/(e^x - 1)`, i.e. the thermal symplectic eigenvalue.
fn half_coth(x: f64) -> f64 {
    ThermalOccupation::bose_einstein(x)
        .expect("positive argument")
        .symplectic()
}

pub fn stroke_energies(spec: &OttoCycleSpec) -> OttoCycleResult {
    let (wi, wf) = (spec.omega_i, spec.omega_f);
    let cold = half_coth(wi * spec.beta_cold);
    let hot = half_coth(wf * spec.effective_beta_hot());
    let gap = hot - cold;

    // Tr σ = 2 coth(βω/2); σ_τ1 = σ_0 (cold), σ_τ3 = σ_τ2 (hot)
    let (tr0, tr1) = (2.0 * cold, 2.0 * cold);
    let (tr2, tr3) = (2.0 * hot, 2.0 * hot);
    let w1 = (wf * tr1 - wi * tr0) / 4.0;
    let w3 = (wi * tr3 - wf * tr2) / 4.0;

    // net quantities share the single difference `gap` so their ratios are
    // exact even close to the regime boundary
    let q2 = 0.5 * wf * gap;
    let q4 = -0.5 * wi * gap;
    let w_net = -0.5 * (wf - wi) * gap;

    let mut result = OttoCycleResult {
        epsilon: spec.epsilon,
        w1,
        w3,
        w_net,
        q2,
        q4,
        regime: Regime::Other,
        figure_of_merit: None,
    };
    result.regime = classify_regime(&result);
    result.figure_of_merit = performance(&result, spec).ok();
    result
}

pub fn classify_regime(result: &OttoCycleResult) -> Regime {
    let (w, q2, q4) = (result.w_net, result.q2, result.q4);
    if w < 0.0 && q2 > 0.0 && q4 < 0.0 {
        Regime::Engine
    } else if w > 0.0 && q2 < 0.0 && q4 > 0.0 {
        Regime::Refrigerator
    } else {
        Regime::Other
    }
}

/// Efficiency `-W_net/Q2` for an engine, `Q4/W_net` for a refrigerator.
pub fn performance(result: &OttoCycleResult, _spec: &OttoCycleSpec) -> Result<f64> {
    match classify_regime(result) {
        Regime::Engine => Ok(-result.w_net / result.q2),
        Regime::Refrigerator => Ok(result.q4 / result.w_net),
        Regime::Other => Err(Error::NoPerformance),
    }
}

/// PT parameter at which `β_hot^eff ω_f = β_cold ω_i` and the cycle switches
/// from engine to refrigerator:
/// `ε_c = sqrt((ω_i β_cold)² - (ω_f β_hot)²) / (2 ω_f β_hot)`.
///
/// `None` when `ω_i β_cold < ω_f β_hot`: there is no engine window and the
/// cycle refrigerates for every `ε >= 0`.
pub fn critical_epsilon(spec: &OttoCycleSpec) -> Option<f64> {
    let cold = spec.omega_i * spec.beta_cold;
    let hot = spec.omega_f * spec.beta_hot;
    if cold < hot {
        return None;
    }
    Some(((cold - hot) * (cold + hot)).sqrt() / (2.0 * hot))
}

pub fn sweep_epsilon(base: &OttoCycleSpec, eps_grid: &[f64]) -> Result<Vec<OttoCycleResult>> {
    if eps_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Grid("epsilon grid must be strictly increasing"));
    }
    eps_grid
        .iter()
        .map(|&eps| Ok(stroke_energies(&base.with_epsilon(eps)?)))
        .collect()
}
