//! Monte Carlo sweep execution and CSV emission.
//!
//! Every record is independently replayable: the stored seed regenerates
//! the network, the labeling, and the channel gains without consulting any
//! other record. Both algorithms in a trial share the network, the labeling
//! seed, and (under fading) the sampled gains, so their comparison is
//! paired on identical randomness. Schedules are always built from the
//! unfaded path-loss model; fading enters only when the schedule is
//! evaluated.

use anyhow::{Context, Result};
use serde::Serialize;

use stdma_core::baseline::graph_based_link_schedule;
use stdma_core::cfls::conflict_free_link_schedule;
use stdma_core::graph::{build_two_tier_graph, decompose_into_oriented_forests};
use stdma_core::radio::sample_gains;
use stdma_core::verify::spatial_reuse;
use stdma_core::{Schedule, SimRng};

use crate::preset::{Algorithm, ExperimentPreset};
use crate::seeds::{derive_seed, trial_seed};

/// One (trial, algorithm, channel) measurement. Field order doubles as the
/// CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub preset: String,
    pub n_nodes: usize,
    pub trial: usize,
    pub seed: u64,
    pub algorithm: Algorithm,
    pub fading: bool,
    pub num_comm_edges: usize,
    pub forest_count: usize,
    pub num_slots: usize,
    pub spatial_reuse: f64,
}

/// Runs one trial cell: network generation, both graph tiers, each
/// requested algorithm, and the unfaded (plus optionally faded) evaluation.
/// `seed` is the trial seed; the labeling and gain streams are derived from
/// it, so a record replays from its row alone.
pub fn run_trial(
    preset: &ExperimentPreset,
    n: usize,
    trial: usize,
    seed: u64,
    algorithms: &[Algorithm],
) -> Result<Vec<TrialRecord>> {
    let rp = preset.params()?;
    let net = generate(preset, n, seed)?;
    let g = build_two_tier_graph(&net, &rp);
    let num_comm_edges = g.comm_edges().len();
    let forest_count = decompose_into_oriented_forests(&g).len() / 2;

    let gains = match &preset.fading {
        Some(fp) => {
            let mut rng = SimRng::new(derive_seed(seed, "fade"));
            Some(sample_gains(&mut rng, n, fp))
        }
        None => None,
    };

    let label_seed = derive_seed(seed, "label");
    let mut records = Vec::with_capacity(algorithms.len() * 2);
    for &algorithm in algorithms {
        let schedule: Schedule = match algorithm {
            Algorithm::Cfls => {
                conflict_free_link_schedule(&net, &g, &rp, &mut SimRng::new(label_seed))
            }
            Algorithm::GraphBaseline => {
                graph_based_link_schedule(&g, &mut SimRng::new(label_seed))
            }
        };
        let record = |fading: bool, sigma: f64| TrialRecord {
            preset: preset.name.clone(),
            n_nodes: n,
            trial,
            seed,
            algorithm,
            fading,
            num_comm_edges,
            forest_count,
            num_slots: schedule.num_slots(),
            spatial_reuse: sigma,
        };
        let unfaded = if schedule.is_empty() {
            0.0
        } else {
            spatial_reuse(&net, &rp, &schedule, None)
                .with_context(|| format!("evaluating {algorithm} without fading"))?
        };
        records.push(record(false, unfaded));
        if let Some(gm) = &gains {
            let faded = if schedule.is_empty() {
                0.0
            } else {
                spatial_reuse(&net, &rp, &schedule, Some(gm))
                    .with_context(|| format!("evaluating {algorithm} under fading"))?
            };
            records.push(record(true, faded));
        }
    }
    Ok(records)
}

fn generate(preset: &ExperimentPreset, n: usize, seed: u64) -> Result<stdma_core::Network> {
    let mut rng = SimRng::new(seed);
    Ok(crate::netgen::generate_network(n, preset.radius_m, &mut rng)?)
}

/// Runs the full sweep: every node count, every trial, every algorithm.
/// Record order is deterministic: node counts ascending, trials ascending,
/// algorithms in the order given, unfaded before faded. Any trial failure
/// aborts the run with its coordinates.
pub fn run_experiment(
    preset: &ExperimentPreset,
    algorithms: &[Algorithm],
    master_seed: u64,
) -> Result<Vec<TrialRecord>> {
    preset.check()?;
    let mut records =
        Vec::with_capacity(preset.node_counts.len() * preset.trials * algorithms.len());
    for &n in &preset.node_counts {
        for trial in 0..preset.trials {
            let seed = trial_seed(master_seed, &preset.name, n, trial);
            let batch = run_trial(preset, n, trial, seed, algorithms).with_context(|| {
                format!("preset {} with {n} nodes, trial {trial} (seed {seed})", preset.name)
            })?;
            records.extend(batch);
        }
    }
    Ok(records)
}

/// Serializes records to CSV with a header row; the column order is the
/// `TrialRecord` field order.
pub fn write_csv(records: &[TrialRecord]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for record in records {
        writer.serialize(record)?;
    }
    let bytes = writer.into_inner().context("flushing CSV buffer")?;
    Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
}
