use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use markovmaps::dynmaps::{DEFAULT_BLOCK_SAMPLES, DEFAULT_CP_TOL, DEFAULT_SEED};
use markovmaps::matcore::DEFAULT_SINGULAR_TOL;
use markovmaps::models::{ModelFamily, PFunction, SigmaZXModel, SpinStarModel};

use crate::{CliError, CommandKind, GridSpec, RunConfig};

#[derive(Debug, Parser)]
#[command(
    name = "markovmaps",
    version,
    about = "Build, diagnose and classify quantum dynamical maps"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print trace, Hermiticity and positivity diagnostics for a map file.
    Check {
        /// JSON map file.
        file: PathBuf,
        #[arg(long = "cp-tol", default_value_t = DEFAULT_CP_TOL)]
        cp_tol: f64,
        /// Seed for the block-positivity sampler.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of product vectors for the block-positivity sampler.
        #[arg(long, default_value_t = DEFAULT_BLOCK_SAMPLES)]
        samples: usize,
    },
    /// Write A(t1,0), or B(t2,t1) when --t2 is given, as a map file.
    Model {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        t1: f64,
        #[arg(long)]
        t2: Option<f64>,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CP test of the intermediate map over every grid pair, as CSV.
    Scan {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// System-ancilla concurrence along a Werner-family trajectory, as CSV.
    Concurrence {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Markov / non-Markov verdict for the maps at t1 and t2.
    Classify {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        t1: f64,
        #[arg(long)]
        t2: f64,
        #[command(flatten)]
        tol: TolArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    WernerExp,
    WernerStretched,
    WernerCospower,
    Spinstar,
    Sigmazx,
}

#[derive(Clone, Debug, Default, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum)]
    pub model: Option<ModelKind>,
    /// Decay rate of the exponential and stretched profiles [default: 1].
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Stretching exponent [default: 0.5].
    #[arg(long)]
    pub beta: Option<f64>,
    /// Frequency of the cos-power profile [default: 1].
    #[arg(long)]
    pub a: Option<f64>,
    /// Cos-power order or number of bath spins [default: 1].
    #[arg(long = "N")]
    pub n: Option<u32>,
    /// Spin-star coupling [default: 1].
    #[arg(long)]
    pub g: Option<f64>,
    /// Frequency of the sigma_z x sigma_x model [default: 1].
    #[arg(long)]
    pub omega: Option<f64>,
}

impl ModelArgs {
    pub fn family(&self) -> Result<ModelFamily, CliError> {
        let kind = self
            .model
            .ok_or_else(|| CliError::InvalidConfig("--model is required".into()))?;
        let allowed: &[&str] = match kind {
            ModelKind::WernerExp => &["alpha"],
            ModelKind::WernerStretched => &["alpha", "beta"],
            ModelKind::WernerCospower => &["a", "N"],
            ModelKind::Spinstar => &["g", "N"],
            ModelKind::Sigmazx => &["omega"],
        };
        let given = [
            ("alpha", self.alpha.is_some()),
            ("beta", self.beta.is_some()),
            ("a", self.a.is_some()),
            ("N", self.n.is_some()),
            ("g", self.g.is_some()),
            ("omega", self.omega.is_some()),
        ];
        if let Some((name, _)) = given
            .iter()
            .find(|(name, set)| *set && !allowed.contains(name))
        {
            let model = kind
                .to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default();
            return Err(CliError::InvalidConfig(format!(
                "--{name} does not apply to --model {model}"
            )));
        }

        let alpha = self.alpha.unwrap_or(1.0);
        let n = self.n.unwrap_or(1);
        Ok(match kind {
            ModelKind::WernerExp => ModelFamily::Werner(PFunction::exponential(alpha)?),
            ModelKind::WernerStretched => {
                ModelFamily::Werner(PFunction::stretched(alpha, self.beta.unwrap_or(0.5))?)
            }
            ModelKind::WernerCospower => {
                ModelFamily::Werner(PFunction::cos_power(self.a.unwrap_or(1.0), n)?)
            }
            ModelKind::Spinstar => {
                ModelFamily::SpinStar(SpinStarModel::new(self.g.unwrap_or(1.0), n)?)
            }
            ModelKind::Sigmazx => {
                ModelFamily::SigmaZX(SigmaZXModel::new(self.omega.unwrap_or(1.0))?)
            }
        })
    }
}

#[derive(Clone, Debug, Default, Args)]
pub struct GridArgs {
    #[arg(long = "t-start")]
    pub t_start: Option<f64>,
    #[arg(long = "t-end")]
    pub t_end: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
}

impl GridArgs {
    pub fn resolve(&self, default: GridSpec) -> GridSpec {
        GridSpec {
            t_start: self.t_start.unwrap_or(default.t_start),
            t_end: self.t_end.unwrap_or(default.t_end),
            steps: self.steps.unwrap_or(default.steps),
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct TolArgs {
    #[arg(long = "cp-tol", default_value_t = DEFAULT_CP_TOL)]
    pub cp_tol: f64,
    #[arg(long = "singular-tol", default_value_t = DEFAULT_SINGULAR_TOL)]
    pub singular_tol: f64,
}

impl Default for TolArgs {
    fn default() -> Self {
        Self {
            cp_tol: DEFAULT_CP_TOL,
            singular_tol: DEFAULT_SINGULAR_TOL,
        }
    }
}

pub(crate) const SCAN_GRID: GridSpec = GridSpec {
    t_start: 0.2,
    t_end: 3.0,
    steps: 15,
};

pub(crate) const CONCURRENCE_GRID: GridSpec = GridSpec {
    t_start: 0.0,
    t_end: 5.0,
    steps: 101,
};

/// Grid used by commands that evaluate single times.
const POINT_GRID: GridSpec = GridSpec {
    t_start: 0.0,
    t_end: 1.0,
    steps: 2,
};

pub(crate) fn build_config(
    command: CommandKind,
    model: &ModelArgs,
    grid: GridSpec,
    tol: &TolArgs,
    seed: u64,
    out: Option<PathBuf>,
) -> Result<RunConfig, CliError> {
    let cfg = RunConfig {
        command,
        model: model.family()?,
        grid,
        cp_tol: tol.cp_tol,
        singular_tol: tol.singular_tol,
        out,
        seed,
    };
    cfg.validate()?;
    Ok(cfg)
}

pub(crate) fn point_config(
    command: CommandKind,
    model: &ModelArgs,
    tol: &TolArgs,
    out: Option<PathBuf>,
) -> Result<RunConfig, CliError> {
    build_config(command, model, POINT_GRID, tol, DEFAULT_SEED, out)
}
