//! Command-line flags, the optional `key = value` config file, and the
//! resolved run settings. Precedence: flag > config file > built-in default.

use std::path::{Path, PathBuf};

use clap::{ArgAction, Args, Parser, Subcommand};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "ptbath", version, about = "PT-symmetric thermal reservoir simulations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum CommandKind {
    Thermalize,
    Collide,
    Otto,
    Figures,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Thermalization of a displaced thermal state against the PT reservoir
    Thermalize(Flags),
    /// Collisional simulation compared against the closed-form dynamics
    Collide(Flags),
    /// Otto-cycle sweep over the PT parameter of the hot bath
    Otto(Flags),
    /// Thermalization and Otto outputs together with both figures
    Figures(Flags),
}

impl Command {
    pub fn split(self) -> (CommandKind, Flags) {
        match self {
            Command::Thermalize(f) => (CommandKind::Thermalize, f),
            Command::Collide(f) => (CommandKind::Collide, f),
            Command::Otto(f) => (CommandKind::Otto, f),
            Command::Figures(f) => (CommandKind::Figures, f),
        }
    }
}

#[derive(Debug, Default, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct Flags {
    /// Reservoir inverse temperature
    #[arg(long)]
    pub beta: Option<f64>,
    /// Oscillator frequency
    #[arg(long)]
    pub omega: Option<f64>,
    /// Decay rate
    #[arg(long)]
    pub gamma: Option<f64>,
    /// PT parameter; repeat for several curves
    #[arg(long, action = ArgAction::Append)]
    pub epsilon: Vec<f64>,
    /// Initial thermal occupation
    #[arg(long)]
    pub nbar: Option<f64>,
    #[arg(long)]
    pub q0: Option<f64>,
    #[arg(long)]
    pub p0: Option<f64>,
    #[arg(long = "t-max")]
    pub t_max: Option<f64>,
    /// Number of time samples, both ends included
    #[arg(long)]
    pub points: Option<usize>,
    /// Collision duration
    #[arg(long)]
    pub dt: Option<f64>,
    /// Number of collisions; overrides --t-max for `collide`
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long = "omega-i")]
    pub omega_i: Option<f64>,
    #[arg(long = "omega-f")]
    pub omega_f: Option<f64>,
    #[arg(long = "beta-cold")]
    pub beta_cold: Option<f64>,
    #[arg(long = "beta-hot")]
    pub beta_hot: Option<f64>,
    #[arg(long = "eps-min")]
    pub eps_min: Option<f64>,
    #[arg(long = "eps-max")]
    pub eps_max: Option<f64>,
    /// Number of intervals in the epsilon sweep
    #[arg(long = "eps-steps")]
    pub eps_steps: Option<usize>,
    /// Output directory
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Significant digits for CSV floats
    #[arg(long)]
    pub precision: Option<usize>,
    #[arg(long, overrides_with = "no_svg")]
    pub svg: bool,
    #[arg(long = "no-svg", overrides_with = "svg")]
    pub no_svg: bool,
    /// Flat `key = value` file with defaults for any of the flags above
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub beta: f64,
    pub omega: f64,
    pub gamma: f64,
    pub epsilons: Vec<f64>,
    pub nbar: f64,
    pub q0: f64,
    pub p0: f64,
    pub t_max: f64,
    pub points: usize,
    pub dt: f64,
    pub steps: Option<usize>,
    pub omega_i: f64,
    pub omega_f: f64,
    pub beta_cold: f64,
    pub beta_hot: f64,
    pub eps_min: f64,
    pub eps_max: f64,
    pub eps_steps: usize,
    pub out: PathBuf,
    pub precision: usize,
    pub svg: bool,
}

impl Settings {
    pub fn defaults(kind: CommandKind) -> Self {
        Settings {
            beta: 0.2,
            omega: 1.0,
            gamma: 0.1,
            epsilons: vec![0.0, 0.5, 1.0],
            nbar: 2.0,
            q0: 1.0,
            p0: 1.0,
            // γt = 20 for thermalization, γt = 10 for the collisional check
            t_max: if kind == CommandKind::Collide { 100.0 } else { 200.0 },
            points: 201,
            dt: 1.0,
            steps: None,
            omega_i: 1.0,
            omega_f: 2.0,
            beta_cold: 4.0,
            beta_hot: 1.0,
            eps_min: 0.0,
            eps_max: 2.0,
            eps_steps: 80,
            out: PathBuf::from("."),
            precision: 12,
            svg: true,
        }
    }

    pub fn resolve(kind: CommandKind, flags: &Flags) -> Result<Self, CliError> {
        let mut s = Settings::defaults(kind);
        if let Some(path) = &flags.config {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
            s.apply_config(&text, path)?;
        }
        s.apply_flags(flags);
        s.validate()?;
        Ok(s)
    }

    fn apply_flags(&mut self, f: &Flags) {
        fn set<T: Clone>(slot: &mut T, v: &Option<T>) {
            if let Some(v) = v {
                *slot = v.clone();
            }
        }
        set(&mut self.beta, &f.beta);
        set(&mut self.omega, &f.omega);
        set(&mut self.gamma, &f.gamma);
        if !f.epsilon.is_empty() {
            self.epsilons = f.epsilon.clone();
        }
        set(&mut self.nbar, &f.nbar);
        set(&mut self.q0, &f.q0);
        set(&mut self.p0, &f.p0);
        set(&mut self.t_max, &f.t_max);
        set(&mut self.points, &f.points);
        set(&mut self.dt, &f.dt);
        if f.steps.is_some() {
            self.steps = f.steps;
        }
        set(&mut self.omega_i, &f.omega_i);
        set(&mut self.omega_f, &f.omega_f);
        set(&mut self.beta_cold, &f.beta_cold);
        set(&mut self.beta_hot, &f.beta_hot);
        set(&mut self.eps_min, &f.eps_min);
        set(&mut self.eps_max, &f.eps_max);
        set(&mut self.eps_steps, &f.eps_steps);
        set(&mut self.out, &f.out);
        set(&mut self.precision, &f.precision);
        if f.svg {
            self.svg = true;
        }
        if f.no_svg {
            self.svg = false;
        }
    }

    /// Applies `key = value` lines. Blank lines and `#` comments are skipped;
    /// keys may use `-` or `_`; `epsilon` takes a comma-separated list.
    pub fn apply_config(&mut self, text: &str, path: &Path) -> Result<(), CliError> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| {
                CliError::Invalid(format!("{}:{}: {msg}", path.display(), lineno + 1))
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad("expected `key = value`"))?;
            let key = key.trim().replace('_', "-");
            let value = value.trim();
            let num = || value.parse::<f64>().map_err(|_| bad("expected a number"));
            let count = || value.parse::<usize>().map_err(|_| bad("expected a non-negative integer"));
            match key.as_str() {
                "beta" => self.beta = num()?,
                "omega" => self.omega = num()?,
                "gamma" => self.gamma = num()?,
                "epsilon" => {
                    self.epsilons = value
                        .split(',')
                        .map(|v| v.trim().parse::<f64>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| bad("expected a comma-separated list of numbers"))?
                }
                "nbar" => self.nbar = num()?,
                "q0" => self.q0 = num()?,
                "p0" => self.p0 = num()?,
                "t-max" => self.t_max = num()?,
                "points" => self.points = count()?,
                "dt" => self.dt = num()?,
                "steps" => self.steps = Some(count()?),
                "omega-i" => self.omega_i = num()?,
                "omega-f" => self.omega_f = num()?,
                "beta-cold" => self.beta_cold = num()?,
                "beta-hot" => self.beta_hot = num()?,
                "eps-min" => self.eps_min = num()?,
                "eps-max" => self.eps_max = num()?,
                "eps-steps" => self.eps_steps = count()?,
                "out" => self.out = PathBuf::from(value),
                "precision" => self.precision = count()?,
                "svg" => {
                    self.svg = match value {
                        "true" | "yes" | "1" => true,
                        "false" | "no" | "0" => false,
                        _ => return Err(bad("expected true or false")),
                    }
                }
                _ => return Err(bad(&format!("unknown key `{key}`"))),
            }
        }
        Ok(())
    }

    /// Grid-level checks; physical parameters are checked by the core
    /// constructors before any computation.
    fn validate(&self) -> Result<(), CliError> {
        if !(1..=17).contains(&self.precision) {
            return Err(CliError::Invalid(format!(
                "precision must be between 1 and 17, got {}",
                self.precision
            )));
        }
        if self.epsilons.is_empty() {
            return Err(CliError::Invalid("at least one epsilon is required".into()));
        }
        if !(self.eps_max > self.eps_min) && self.eps_steps > 0 {
            return Err(CliError::Invalid("eps-max must exceed eps-min".into()));
        }
        Ok(())
    }

    /// `eps_steps` equal intervals on `[eps_min, eps_max]`.
    pub fn eps_grid(&self) -> Vec<f64> {
        if self.eps_steps == 0 {
            return vec![self.eps_min];
        }
        let n = self.eps_steps;
        let span = self.eps_max - self.eps_min;
        let mut grid: Vec<f64> = (0..=n).map(|k| self.eps_min + span * k as f64 / n as f64).collect();
        grid[n] = self.eps_max;
        grid
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> (CommandKind, Flags) {
        let mut full = vec!["ptbath"];
        full.extend_from_slice(args);
        Cli::try_parse_from(full).unwrap().command.split()
    }

    #[test]
    fn defaults_without_flags() {
        let (kind, flags) = parse(&["otto"]);
        assert_eq!(kind, CommandKind::Otto);
        let s = Settings::resolve(kind, &flags).unwrap();
        assert_eq!(s, Settings::defaults(CommandKind::Otto));
        assert_eq!(s.eps_grid().len(), 81);
        assert_eq!(s.eps_grid()[0], 0.0);
        assert_eq!(*s.eps_grid().last().unwrap(), 2.0);
    }

    #[test]
    fn repeated_epsilon_and_negative_values() {
        let (kind, flags) = parse(&["thermalize", "--epsilon", "0.2", "--epsilon", "0.7", "--q0", "-1.5", "--no-svg"]);
        let s = Settings::resolve(kind, &flags).unwrap();
        assert_eq!(s.epsilons, vec![0.2, 0.7]);
        assert_eq!(s.q0, -1.5);
        assert!(!s.svg);
    }

    #[test]
    fn config_file_below_flags() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.cfg");
        std::fs::write(
            &path,
            "# comment\nbeta = 0.5\nt_max = 10  # trailing\nepsilon = 0, 0.25\nprecision=8\n",
        )
        .unwrap();
        let (kind, flags) = parse(&["thermalize", "--config", path.to_str().unwrap(), "--beta", "0.3"]);
        let s = Settings::resolve(kind, &flags).unwrap();
        assert_eq!(s.beta, 0.3);
        assert_eq!(s.t_max, 10.0);
        assert_eq!(s.epsilons, vec![0.0, 0.25]);
        assert_eq!(s.precision, 8);
    }

    #[test]
    fn config_errors() {
        let mut s = Settings::defaults(CommandKind::Otto);
        let p = Path::new("x.cfg");
        assert!(matches!(s.apply_config("nonsense", p), Err(CliError::Invalid(_))));
        assert!(matches!(s.apply_config("beta = abc", p), Err(CliError::Invalid(_))));
        assert!(matches!(s.apply_config("colour = red", p), Err(CliError::Invalid(_))));
        let (kind, flags) = parse(&["otto", "--config", "/nonexistent/ptbath.cfg"]);
        assert!(matches!(Settings::resolve(kind, &flags), Err(CliError::Io { .. })));
    }

    #[test]
    fn precision_is_bounded() {
        let (kind, flags) = parse(&["otto", "--precision", "0"]);
        assert!(matches!(Settings::resolve(kind, &flags), Err(CliError::Invalid(_))));
    }
}
