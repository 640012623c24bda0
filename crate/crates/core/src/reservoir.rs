//! Thermal reservoir whose ancillas are Gibbs states of the Hermitized
//! PT-symmetric oscillator.
//!
//! The non-Hermitian `p²/2m + mω²q²/2 + 2iωε pq` maps to
//! `μ²p²/2m + mω²q²/2 + ħωε` with `μ² = 1 + 4ε²`. Its level spacing is
//! `ħωμ`, so the ancilla occupation is `(e^{βωμ} - 1)^{-1}` and the bath
//! behaves as a standard one at `β_eff = μβ`.

use crate::error::{Error, Result};
use crate::gaussian::{GaussianState, ThermalOccupation};

/// Above this `βωμ` the occupation is below `e^{-700}` and is flagged as
/// the zero-temperature limit.
pub const OCCUPATION_UNDERFLOW: f64 = 700.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PtReservoir {
    beta: f64,
    omega: f64,
    epsilon: f64,
    gamma: f64,
}

impl PtReservoir {
    pub fn new(beta: f64, omega: f64, epsilon: f64, gamma: f64) -> Result<Self> {
        positive("beta", beta)?;
        positive("omega", omega)?;
        positive("gamma", gamma)?;
        if !(epsilon >= 0.0 && epsilon.is_finite()) {
            return Err(Error::domain("epsilon", epsilon, "PT parameter must be finite and >= 0"));
        }
        Ok(PtReservoir { beta, omega, epsilon, gamma })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Same bath with a different PT parameter.
    pub fn with_epsilon(&self, epsilon: f64) -> Result<Self> {
        PtReservoir::new(self.beta, self.omega, epsilon, self.gamma)
    }

    /// `μ = sqrt(1 + 4ε²)`.
    pub fn mu(&self) -> f64 {
        mu(self.epsilon)
    }

    pub fn effective_beta(&self) -> f64 {
        self.mu() * self.beta
    }

    /// `N = (e^{βωμ} - 1)^{-1}`.
    pub fn reservoir_occupation(&self) -> ThermalOccupation {
        ThermalOccupation::bose_einstein(self.effective_beta() * self.omega)
            .expect("validated spec gives positive beta*omega")
    }

    /// True when `N` is below `e^{-700}` and carries no significant digits
    /// relative to the vacuum covariance.
    pub fn occupation_underflows(&self) -> bool {
        self.effective_beta() * self.omega > OCCUPATION_UNDERFLOW
    }

    /// Thermal ancilla state; also the asymptotic state of the thermalization.
    pub fn ancilla_state(&self) -> GaussianState {
        GaussianState::thermal(self.reservoir_occupation())
    }

    /// Constant `ħωε` dropped from all energy differences.
    pub fn hermitized_energy_shift(&self) -> f64 {
        self.omega * self.epsilon
    }
}

pub fn mu(epsilon: f64) -> f64 {
    (1.0 + 4.0 * epsilon * epsilon).sqrt()
}

fn positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(name, value, "must be finite and > 0"))
    }
}
