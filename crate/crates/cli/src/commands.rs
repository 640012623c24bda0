use std::fs;
use std::path::{Path, PathBuf};

use ptbath_core::collision::{self, AngleRule, CollisionConfig};
use ptbath_core::otto::{self, OttoCycleResult, OttoCycleSpec};
use ptbath_core::thermalization::{self, ThermalizationTrajectory};
use ptbath_core::{GaussianState, PtReservoir, ThermalOccupation};

use crate::error::CliError;
use crate::format::sig;
use crate::settings::{CommandKind, Settings};
use crate::svg::{self, Panel, Series};

pub const THERMALIZE_HEADER: [&str; 8] = [
    "t",
    "gamma_t",
    "epsilon",
    "heat",
    "coherence",
    "entropy",
    "entropy_production",
    "energy",
];
pub const COLLIDE_HEADER: [&str; 4] = ["t", "epsilon", "max_sigma_err", "d_err"];
pub const OTTO_HEADER: [&str; 7] = [
    "epsilon",
    "w_net",
    "q2",
    "q4",
    "regime",
    "figure_of_merit",
    "epsilon_c",
];

/// Prefix of the trailing comment line in `collide.csv`.
pub const ORDER_PREFIX: &str = "# naive_rule_convergence_order,";

/// Runs `kind` and returns the files written, in order.
pub fn execute(kind: CommandKind, s: &Settings) -> Result<Vec<PathBuf>, CliError> {
    let outputs = match kind {
        CommandKind::Thermalize => thermalize(s, s.svg)?,
        CommandKind::Collide => collide(s)?,
        CommandKind::Otto => otto_sweep(s, s.svg)?,
        CommandKind::Figures => {
            let mut all = thermalize(s, true)?;
            all.extend(otto_sweep(s, true)?);
            all
        }
    };
    write_all(&s.out, outputs)
}

type Output = (&'static str, String);

fn write_all(dir: &Path, outputs: Vec<Output>) -> Result<Vec<PathBuf>, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut written = Vec::with_capacity(outputs.len());
    for (name, contents) in outputs {
        let path = dir.join(name);
        fs::write(&path, contents).map_err(|e| CliError::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Invalid(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| CliError::Invalid(format!("csv: {e}")))
}

pub fn initial_state(s: &Settings) -> Result<GaussianState, CliError> {
    Ok(GaussianState::thermal(ThermalOccupation::new(s.nbar)?).displace(s.q0, s.p0))
}

pub fn reservoir(s: &Settings, epsilon: f64) -> Result<PtReservoir, CliError> {
    Ok(PtReservoir::new(s.beta, s.omega, epsilon, s.gamma)?)
}

pub fn trajectories(s: &Settings) -> Result<Vec<(f64, ThermalizationTrajectory)>, CliError> {
    let initial = initial_state(s)?;
    s.epsilons
        .iter()
        .map(|&eps| {
            let bath = reservoir(s, eps)?;
            Ok((eps, thermalization::run_trajectory(&initial, &bath, s.t_max, s.points)?))
        })
        .collect()
}

fn thermalize(s: &Settings, with_svg: bool) -> Result<Vec<Output>, CliError> {
    let runs = trajectories(s)?;
    let p = s.precision;
    let mut w = csv_writer();
    w.write_record(THERMALIZE_HEADER)?;
    for (eps, traj) in &runs {
        for k in 0..traj.len() {
            let t = traj.times[k];
            let energy = traj.states[k].mean_energy(s.omega)?;
            w.write_record([
                sig(t, p),
                sig(s.gamma * t, p),
                sig(*eps, p),
                sig(traj.heat[k], p),
                sig(traj.coherence[k], p),
                sig(traj.entropy[k], p),
                sig(traj.entropy_production[k], p),
                sig(energy, p),
            ])?;
        }
    }
    let mut out = vec![("thermalize.csv", finish(w)?)];
    if with_svg {
        out.push(("fig3.svg", fig3(s, &runs)));
    }
    Ok(out)
}

fn eps_label(eps: f64) -> String {
    format!("ε = {}", sig(eps, 6))
}

fn fig3(s: &Settings, runs: &[(f64, ThermalizationTrajectory)]) -> String {
    let panel = |title: &str, y_label: &str, pick: fn(&ThermalizationTrajectory) -> &Vec<f64>| Panel {
        title: title.to_string(),
        x_label: "γt".to_string(),
        y_label: y_label.to_string(),
        series: runs
            .iter()
            .map(|(eps, traj)| Series {
                label: eps_label(*eps),
                key: sig(*eps, 12),
                points: traj
                    .times
                    .iter()
                    .zip(pick(traj))
                    .map(|(t, v)| (s.gamma * t, *v))
                    .collect(),
            })
            .collect(),
        markers: vec![],
    };
    svg::render(&[
        panel("a) Heat exchanged", "⟨Q⟩ (ħω)", |t| &t.heat),
        panel("b) Coherence", "C (nats)", |t| &t.coherence),
        panel("c) Entropy production", "⟨Σ⟩ (nats)", |t| &t.entropy_production),
    ])
}

fn collide(s: &Settings) -> Result<Vec<Output>, CliError> {
    let initial = initial_state(s)?;
    let n_steps = s.steps.unwrap_or_else(|| (s.t_max / s.dt).round() as usize);
    let config = CollisionConfig::new(s.dt, n_steps, AngleRule::Exact)?;
    let p = s.precision;

    let mut w = csv_writer();
    w.write_record(COLLIDE_HEADER)?;
    for &eps in &s.epsilons {
        let bath = reservoir(s, eps)?;
        let devs = collision::deviations(&initial, &bath, &config)?;
        for (t, d) in config.times().iter().zip(&devs) {
            w.write_record([sig(*t, p), sig(eps, p), sig(d.sigma, p), sig(d.mean, p)])?;
        }
    }
    let order = collision::convergence_order(
        &initial,
        &reservoir(s, s.epsilons[0])?,
        AngleRule::Naive,
        n_steps as f64 * s.dt,
        s.dt,
    )?;
    let mut text = finish(w)?;
    text.push_str(ORDER_PREFIX);
    text.push_str(&sig(order, p));
    text.push('\n');
    Ok(vec![("collide.csv", text)])
}

pub fn otto_results(s: &Settings) -> Result<(OttoCycleSpec, Vec<OttoCycleResult>), CliError> {
    let base = OttoCycleSpec::new(s.omega_i, s.omega_f, s.beta_cold, s.beta_hot, s.eps_min.max(0.0))?;
    let results = otto::sweep_epsilon(&base, &s.eps_grid())?;
    Ok((base, results))
}

fn otto_sweep(s: &Settings, with_svg: bool) -> Result<Vec<Output>, CliError> {
    let (base, results) = otto_results(s)?;
    let eps_c = otto::critical_epsilon(&base);
    let p = s.precision;

    let mut w = csv_writer();
    w.write_record(OTTO_HEADER)?;
    for r in &results {
        w.write_record([
            sig(r.epsilon, p),
            sig(r.w_net, p),
            sig(r.q2, p),
            sig(r.q4, p),
            r.regime.to_string(),
            r.figure_of_merit.map(|v| sig(v, p)).unwrap_or_default(),
            eps_c.map(|v| sig(v, p)).unwrap_or_default(),
        ])?;
    }
    let mut out = vec![("otto.csv", finish(w)?)];
    if with_svg {
        out.push(("fig5.svg", fig5(s, &results, eps_c)));
    }
    Ok(out)
}

fn fig5(s: &Settings, results: &[OttoCycleResult], eps_c: Option<f64>) -> String {
    let curve = |label: &str, key: &str, pick: fn(&OttoCycleResult) -> f64| Series {
        label: label.to_string(),
        key: key.to_string(),
        points: results.iter().map(|r| (r.epsilon, pick(r))).collect(),
    };
    let markers = eps_c
        .filter(|&e| e >= s.eps_min && e <= s.eps_max)
        .map(|e| vec![(e, format!("ε_c = {}", sig(e, 5)))])
        .unwrap_or_default();
    svg::render(&[Panel {
        title: format!(
            "Otto cycle, ω_f/ω_i = {}, β_cold/β_hot = {}",
            sig(s.omega_f / s.omega_i, 4),
            sig(s.beta_cold / s.beta_hot, 4)
        ),
        x_label: "ε".to_string(),
        y_label: "energy (ħω_i)".to_string(),
        series: vec![
            curve("⟨W_net⟩", "w_net", |r| r.w_net),
            curve("⟨Q₂⟩ (hot)", "q2", |r| r.q2),
            curve("⟨Q₄⟩ (cold)", "q4", |r| r.q4),
        ],
        markers,
    }])
}
