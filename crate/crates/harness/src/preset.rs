//! The two built-in experiment configurations and the algorithm selector.

use anyhow::{ensure, Result};
use serde::{Deserialize, Serialize};

use stdma_core::radio::FadingParams;
use stdma_core::{RadioConfig, RadioParams};

/// Which scheduler a trial runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    /// Threshold-aware scheduler: colors edges under the aggregate SINR test.
    Cfls,
    /// Pairwise-conflict scheduler: colors edges using graph conflicts only.
    GraphBaseline,
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Algorithm::Cfls => "cfls",
            Algorithm::GraphBaseline => "graph-baseline",
        })
    }
}

/// One Monte Carlo sweep: deployment geometry, radio settings, node counts,
/// and trial count. `fading` switches on per-trial channel gain sampling;
/// schedulers never see the gains, only the evaluation does.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentPreset {
    pub name: String,
    /// Deployment disc radius, m.
    pub radius_m: f64,
    pub power_mw: f64,
    pub noise_dbm: f64,
    pub gamma_c_db: f64,
    pub gamma_i_db: f64,
    pub alpha: f64,
    /// Node counts to sweep, ascending.
    pub node_counts: Vec<usize>,
    /// Trials per node count.
    pub trials: usize,
    pub fading: Option<FadingParams>,
}

/// Default trials per (preset, node count). Full runs with 1000 trials are a
/// CLI flag away; this keeps a whole sweep in the tens of seconds.
pub const DEFAULT_TRIALS: usize = 200;

impl ExperimentPreset {
    /// 500 m disc, 10 mW, -90 dBm noise, 20/10 dB thresholds, alpha 4;
    /// ranges work out to 100 m and 177.8 m. Sweeps 30..=110 nodes.
    pub fn exp1() -> Self {
        Self {
            name: "exp1".into(),
            radius_m: 500.0,
            power_mw: 10.0,
            noise_dbm: -90.0,
            gamma_c_db: 20.0,
            gamma_i_db: 10.0,
            alpha: 4.0,
            node_counts: (30..=110).step_by(5).collect(),
            trials: DEFAULT_TRIALS,
            fading: None,
        }
    }

    /// 700 m disc, 15 mW, -85 dBm noise, 15/7 dB thresholds, alpha 4;
    /// ranges work out to 110.7 m and 175.4 m. Sweeps 70..=150 nodes.
    pub fn exp2() -> Self {
        Self {
            name: "exp2".into(),
            radius_m: 700.0,
            power_mw: 15.0,
            noise_dbm: -85.0,
            gamma_c_db: 15.0,
            gamma_i_db: 7.0,
            alpha: 4.0,
            node_counts: (70..=150).step_by(5).collect(),
            trials: DEFAULT_TRIALS,
            fading: None,
        }
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_node_counts(mut self, node_counts: Vec<usize>) -> Self {
        self.node_counts = node_counts;
        self
    }

    pub fn with_fading(mut self, fading: FadingParams) -> Self {
        self.fading = Some(fading);
        self
    }

    pub fn radio_config(&self) -> RadioConfig {
        RadioConfig {
            power_mw: self.power_mw,
            noise_dbm: self.noise_dbm,
            gamma_c_db: self.gamma_c_db,
            gamma_i_db: self.gamma_i_db,
            alpha: self.alpha,
        }
    }

    pub fn params(&self) -> Result<RadioParams> {
        Ok(self.radio_config().to_params()?)
    }

    /// Validates the sweep configuration before a run.
    pub fn check(&self) -> Result<()> {
        ensure!(!self.name.is_empty(), "preset name must not be empty");
        ensure!(self.radius_m > 0.0, "deployment radius must be positive");
        ensure!(!self.node_counts.is_empty(), "node_counts must not be empty");
        ensure!(
            self.node_counts.windows(2).all(|w| w[0] < w[1]),
            "node_counts must be strictly ascending"
        );
        ensure!(
            *self.node_counts.first().unwrap() >= 2,
            "node counts must be at least 2"
        );
        ensure!(self.trials > 0, "trials must be positive");
        self.params()?;
        Ok(())
    }
}
