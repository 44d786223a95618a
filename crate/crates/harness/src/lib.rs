//! Monte Carlo experiment harness for the link schedulers: disc-uniform
//! network generation, the two built-in sweep presets, per-trial seed
//! derivation, record/CSV emission, and the reference-value regression
//! checks backing the `verify-paper` CLI subcommand.

#![forbid(unsafe_code)]

pub mod netgen;
pub mod preset;
pub mod reference;
pub mod seeds;
pub mod trial;

pub use netgen::generate_network;
pub use preset::{Algorithm, ExperimentPreset};
pub use trial::{run_experiment, run_trial, write_csv, TrialRecord};
