//! Checks the `f64` implementation against the big-integer oracle and
//! against brute-force sweeps.

mod support;

use ptbath_core::collision::{self, AngleRule, CollisionConfig};
use ptbath_core::gaussian::{entropy_from_symplectic, GaussianState, ThermalOccupation};
use ptbath_core::otto::{self, OttoCycleSpec, Regime};
use ptbath_core::thermalization;
use ptbath_core::PtReservoir;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::hp::{self, Hp};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn fig3_state() -> GaussianState {
    GaussianState::thermal(ThermalOccupation::new(2.0).unwrap()).displace(1.0, 1.0)
}

#[test]
fn occupation_matches_oracle() {
    let beta_omega = Hp::ratio(1, 5);
    for (eps_num, eps_den) in [(0, 1), (1, 10), (1, 2), (1, 1), (3, 2), (2, 1)] {
        let eps = eps_num as f64 / eps_den as f64;
        let exact = hp::bose_occupation(&beta_omega, &Hp::ratio(eps_num, eps_den)).to_f64();
        let got = PtReservoir::new(0.2, 1.0, eps, 0.1)
            .unwrap()
            .reservoir_occupation()
            .value();
        assert!(rel(got, exact) < 1e-13, "eps = {eps}: {got} vs {exact}");
    }
}

#[test]
fn entropy_matches_oracle() {
    for (num, den) in [(0, 1), (1, 2), (2, 1), (5, 2), (10, 1), (75, 4), (100, 1)] {
        let n = num as f64 / den as f64;
        let exact = hp::thermal_entropy(&Hp::ratio(num, den)).to_f64();
        let state = GaussianState::thermal(ThermalOccupation::new(n).unwrap());
        let got = state.von_neumann_entropy().unwrap();
        if exact == 0.0 {
            assert_eq!(got, 0.0);
        } else {
            assert!(rel(got, exact) < 1e-13, "n = {n}: {got} vs {exact}");
        }
    }
}

#[test]
fn coherence_examples_match_oracle() {
    let s2 = hp::thermal_entropy(&Hp::int(2));
    let s25 = hp::thermal_entropy(&Hp::ratio(5, 2));
    let s05 = hp::thermal_entropy(&Hp::ratio(1, 2));

    let c = fig3_state().coherence().unwrap();
    assert!(rel(c, s25.sub(&s2).to_f64()) < 1e-12);

    let c = GaussianState::vacuum().displace(1.0, 1.0).coherence().unwrap();
    assert!(rel(c, s05.to_f64()) < 1e-13);
}

#[test]
fn asymptotic_heat_matches_oracle() {
    for (eps, eps_hp) in [(0.0, Hp::int(0)), (1.0, Hp::int(1))] {
        let bath = PtReservoir::new(0.2, 1.0, eps, 0.1).unwrap();
        let exact = hp::bose_occupation(&Hp::ratio(1, 5), &eps_hp)
            .sub(&Hp::int(2))
            .to_f64();
        let q = thermalization::heat_exchanged(&fig3_state(), &bath, 1e4).unwrap();
        assert!(rel(q, exact) < 1e-12, "eps = {eps}: {q} vs {exact}");
    }
}

#[test]
fn critical_epsilon_matches_oracle() {
    // sqrt(16 - 4) / 4
    let exact = Hp::int(12).sqrt().div(&Hp::int(4)).to_f64();
    let spec = OttoCycleSpec::new(1.0, 2.0, 4.0, 1.0, 0.0).unwrap();
    assert!(rel(otto::critical_epsilon(&spec).unwrap(), exact) < 1e-15);
}

#[test]
fn random_states_obey_gaussian_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let n = rng.gen_range(0.0..=20.0);
        let r = rng.gen_range(-1.5..=1.5);
        let radius = rng.gen_range(0.0..=5.0);
        let phase = rng.gen_range(0.0..std::f64::consts::TAU);
        let thermal = GaussianState::thermal(ThermalOccupation::new(n).unwrap());
        let s = thermal.squeeze(r).unwrap().displace(radius * phase.cos(), radius * phase.sin());

        assert!(s.cov().determinant() >= 1.0 - 1e-12);
        assert!(s.coherence().unwrap() >= -1e-12);
        assert!(s.von_neumann_entropy().unwrap() >= 0.0);
        let nu0 = thermal.symplectic_eigenvalue().unwrap();
        assert!((s.symplectic_eigenvalue().unwrap() - nu0).abs() <= 1e-10 * nu0);
    }
}

#[test]
fn entropy_grid_is_monotone() {
    let values: Vec<f64> = (0..=99_000)
        .map(|k| entropy_from_symplectic(1.0 + k as f64 * 1e-3).unwrap())
        .collect();
    assert!(values.windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn collisional_runs_track_closed_form_for_all_epsilons() {
    // γt ∈ [0, 10] with γδt = 0.01
    for eps in [0.0, 0.5, 1.0] {
        let bath = PtReservoir::new(0.2, 1.0, eps, 0.1).unwrap();
        let config = CollisionConfig::new(0.1, 1000, AngleRule::Exact).unwrap();
        let worst = collision::deviations(&fig3_state(), &bath, &config)
            .unwrap()
            .iter()
            .map(|d| d.sigma.max(d.mean))
            .fold(0.0, f64::max);
        assert!(worst <= 1e-9, "eps = {eps}: {worst}");
    }
}

#[test]
fn naive_rule_error_halves_with_dt() {
    let bath = PtReservoir::new(0.2, 1.0, 0.0, 0.1).unwrap();
    let errors: Vec<f64> = [1.0, 0.5, 0.25]
        .iter()
        .map(|&dt| {
            let config = CollisionConfig::new(dt, (100.0 / dt) as usize, AngleRule::Naive).unwrap();
            collision::deviations(&fig3_state(), &bath, &config)
                .unwrap()
                .iter()
                .map(|d| d.sigma)
                .fold(0.0, f64::max)
        })
        .collect();
    for w in errors.windows(2) {
        let ratio = w[0] / w[1];
        assert!((1.8..=2.2).contains(&ratio), "error ratio {ratio}");
    }
}

#[test]
fn first_law_over_random_cycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let wi = rng.gen_range(0.05..10.0);
        let wf = wi * rng.gen_range(1.001..10.0);
        let bh = rng.gen_range(0.01..10.0);
        let bc = bh * rng.gen_range(1.001..20.0);
        let eps = rng.gen_range(0.0..5.0);
        let r = otto::stroke_energies(&OttoCycleSpec::new(wi, wf, bc, bh, eps).unwrap());
        let scale = r.w_net.abs().max(r.q2.abs()).max(r.q4.abs());
        assert!((r.w_net + r.q2 + r.q4).abs() <= 1e-12 * scale);
        assert!(r.regime != Regime::Other || scale == 0.0);
    }
}
