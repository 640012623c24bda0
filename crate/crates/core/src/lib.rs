//! Single-mode Gaussian thermodynamics with a thermal reservoir built from
//! PT-symmetric ancillas.
//!
//! The reservoir ancillas are thermal states of the Hermitized oscillator
//! `H = μ²p²/2m + mω²q²/2 + ħωε` with `μ = sqrt(1 + 4ε²)`, so the bath acts
//! like an ordinary bosonic bath at the effective inverse temperature `μβ`.
//! On top of that the crate provides
//!
//! * [`gaussian`]: one-mode Gaussian states, entropy, energy and coherence,
//! * [`reservoir`]: the PT-reservoir parameters and ancilla state,
//! * [`thermalization`]: closed-form Markovian thermalization with heat,
//!   coherence and entropy-production bookkeeping,
//! * [`collision`]: a repeated-interaction simulator that reproduces the
//!   closed form as a discrete process,
//! * [`otto`]: the quasistatic Otto cycle with a PT-symmetric hot bath.
//!
//! Units: `ħ = k_B = 1` throughout.

pub mod collision;
pub mod error;
pub mod gaussian;
pub mod otto;
pub mod reservoir;
pub mod thermalization;

pub use collision::{AngleRule, CollisionConfig};
pub use error::{Error, Result};
pub use gaussian::{GaussianState, ThermalOccupation};
pub use otto::{OttoCycleResult, OttoCycleSpec, Regime};
pub use reservoir::PtReservoir;
pub use thermalization::{EntropyReference, ThermalizationTrajectory};
