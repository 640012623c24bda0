//! One-mode Gaussian states in the `(q, p)` quadrature picture.
//!
//! Covariances follow the convention `σ_ij = <R_i R_j + R_j R_i> - 2<R_i><R_j>`,
//! so the vacuum has `σ = I` and a thermal state with mean occupation `n̄`
//! has `σ = (2n̄ + 1) I`.

use nalgebra::{Matrix2, Vector2};

use crate::error::{Error, Result};

/// Absolute tolerance on `σ - σᵀ`.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// States with `det σ` in `[1 - PURITY_TOL, 1)` are treated as pure.
pub const PURITY_TOL: f64 = 1e-9;

/// Mean photon number of a thermal mode.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ThermalOccupation(f64);

impl ThermalOccupation {
    pub fn new(nbar: f64) -> Result<Self> {
        if !nbar.is_finite() || nbar < 0.0 {
            return Err(Error::domain("nbar", nbar, "mean photon number must be finite and >= 0"));
        }
        Ok(ThermalOccupation(nbar))
    }

    /// Bose-Einstein occupation `1 / (e^x - 1)` for `x = βħω > 0`.
    ///
    /// Large `x` underflows smoothly to zero rather than overflowing.
    pub fn bose_einstein(x: f64) -> Result<Self> {
        if !(x > 0.0) {
            return Err(Error::domain("beta*omega", x, "must be > 0"));
        }
        Ok(ThermalOccupation(x.exp_m1().recip()))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Symplectic eigenvalue `2n̄ + 1` of the matching thermal state.
    pub fn symplectic(self) -> f64 {
        2.0 * self.0 + 1.0
    }

    /// `(n̄ + 1) ln(n̄ + 1) - n̄ ln n̄`, in nats.
    pub fn entropy(self) -> f64 {
        let n = self.0;
        let tail = if n > 0.0 { n * n.ln() } else { 0.0 };
        (n + 1.0) * n.ln_1p() - tail
    }
}

/// Entropy of a one-mode Gaussian state with symplectic eigenvalue `nu`.
///
/// `S = ((ν+1)/2) ln((ν+1)/2) - ((ν-1)/2) ln((ν-1)/2)`, with the second term
/// taken as zero at `ν = 1`.
pub fn entropy_from_symplectic(nu: f64) -> Result<f64> {
    if !nu.is_finite() || nu < 1.0 - PURITY_TOL {
        return Err(Error::InvalidState { det: nu * nu });
    }
    let nbar = (0.5 * (nu - 1.0)).max(0.0);
    Ok(ThermalOccupation(nbar).entropy())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianState {
    mean: Vector2<f64>,
    cov: Matrix2<f64>,
}

impl GaussianState {
    /// Builds a state from first moments and covariance, checking symmetry
    /// and the one-mode uncertainty relation `det σ >= 1`.
    pub fn new(mean: Vector2<f64>, cov: Matrix2<f64>) -> Result<Self> {
        if mean.iter().chain(cov.iter()).any(|x| !x.is_finite()) {
            return Err(Error::domain("state", f64::NAN, "entries must be finite"));
        }
        let asym = (cov[(0, 1)] - cov[(1, 0)]).abs();
        if asym > SYMMETRY_TOL {
            return Err(Error::domain("sigma", asym, "covariance matrix is not symmetric"));
        }
        let det = cov.determinant();
        if det < 1.0 - PURITY_TOL || cov.trace() <= 0.0 {
            return Err(Error::InvalidState { det });
        }
        Ok(GaussianState { mean, cov })
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_parts(mean: Vector2<f64>, cov: Matrix2<f64>) -> Self {
        GaussianState { mean, cov }
    }

    pub fn vacuum() -> Self {
        GaussianState::thermal(ThermalOccupation(0.0))
    }

    pub fn thermal(nbar: ThermalOccupation) -> Self {
        GaussianState {
            mean: Vector2::zeros(),
            cov: Matrix2::identity() * nbar.symplectic(),
        }
    }

    pub fn mean(&self) -> &Vector2<f64> {
        &self.mean
    }

    pub fn cov(&self) -> &Matrix2<f64> {
        &self.cov
    }

    /// Phase-space displacement by `(q0, p0)`; the covariance is untouched.
    pub fn displace(&self, q0: f64, p0: f64) -> Self {
        GaussianState {
            mean: self.mean + Vector2::new(q0, p0),
            cov: self.cov,
        }
    }

    /// Single-mode squeezing `S = diag(e^{-r}, e^{r})`.
    pub fn squeeze(&self, r: f64) -> Result<Self> {
        if !r.is_finite() {
            return Err(Error::domain("r", r, "squeezing must be finite"));
        }
        let s = Matrix2::new((-r).exp(), 0.0, 0.0, r.exp());
        Ok(GaussianState {
            mean: s * self.mean,
            cov: s * self.cov * s.transpose(),
        })
    }

    /// `ν = sqrt(det σ)`, clamped to 1 inside the purity tolerance.
    pub fn symplectic_eigenvalue(&self) -> Result<f64> {
        let det = self.cov.determinant();
        if !(det >= 1.0 - PURITY_TOL) {
            return Err(Error::InvalidState { det });
        }
        Ok(det.max(1.0).sqrt())
    }

    pub fn von_neumann_entropy(&self) -> Result<f64> {
        entropy_from_symplectic(self.symplectic_eigenvalue()?)
    }

    /// Occupation `k̄ = (σ11 + σ22 + d1² + d2² - 2) / 4` of the closest
    /// thermal state, used as the reference for [`Self::coherence`].
    pub fn reference_occupation(&self) -> ThermalOccupation {
        let k = (self.cov.trace() + self.mean.norm_squared() - 2.0) / 4.0;
        ThermalOccupation(k.max(0.0))
    }

    /// Relative-entropy coherence `S(thermal(k̄)) - S(ρ)` in nats.
    pub fn coherence(&self) -> Result<f64> {
        Ok(self.reference_occupation().entropy() - self.von_neumann_entropy()?)
    }

    /// `ħω Tr[σ] / 4`: the second-moment part of `<H>` only.
    pub fn covariance_energy(&self, omega: f64) -> Result<f64> {
        check_omega(omega)?;
        Ok(omega * self.cov.trace() / 4.0)
    }

    /// Full `<H> = ħω (Tr[σ]/4 + |d|²/2)` including the coherent part.
    pub fn mean_energy(&self, omega: f64) -> Result<f64> {
        check_omega(omega)?;
        Ok(omega * (self.cov.trace() / 4.0 + self.mean.norm_squared() / 2.0))
    }
}

fn check_omega(omega: f64) -> Result<()> {
    if omega > 0.0 && omega.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("omega", omega, "frequency must be > 0"))
    }
}
