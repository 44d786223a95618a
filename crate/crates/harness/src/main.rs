//! Command-line front end: network generation, scheduling, evaluation,
//! Monte Carlo sweeps, the exhaustive-search oracle, and the built-in
//! reference checks.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use stdma_core::baseline::graph_based_link_schedule;
use stdma_core::cfls::conflict_free_link_schedule;
use stdma_core::graph::build_two_tier_graph;
use stdma_core::model::NetworkFile;
use stdma_core::oracle::{optimal_schedule_bruteforce, DEFAULT_ORACLE_EDGE_LIMIT};
use stdma_core::radio::{sample_gains, FadingParams};
use stdma_core::verify::evaluate_schedule;
use stdma_core::{Network, RadioConfig, RadioParams, Schedule, SimRng};

use stdma_harness::preset::{Algorithm, ExperimentPreset};
use stdma_harness::reference::{format_table, reference_checks};
use stdma_harness::{generate_network, run_experiment, write_csv};

#[derive(Parser)]
#[command(
    name = "stdma",
    about = "SINR-aware link scheduling for wireless ad hoc networks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PresetName {
    Exp1,
    Exp2,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random network, uniform on a disc, and write it as JSON.
    Gen {
        /// Number of nodes.
        #[arg(long)]
        nodes: usize,
        /// Deployment disc radius in meters.
        #[arg(long)]
        radius: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Schedule every communication link of a network into time slots.
    Schedule {
        /// Network JSON file (as written by `gen`).
        #[arg(long)]
        net: PathBuf,
        /// Radio parameter JSON file.
        #[arg(long)]
        params: PathBuf,
        /// Scheduling algorithm.
        #[arg(long)]
        algo: Algorithm,
        /// Seed for the random vertex labeling.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a schedule against a network and report per-link outcomes,
    /// violations, and spatial reuse.
    Evaluate {
        #[arg(long)]
        net: PathBuf,
        #[arg(long)]
        params: PathBuf,
        /// Schedule JSON file (as written by `schedule` or `oracle`).
        #[arg(long)]
        schedule: PathBuf,
        /// Evaluate under sampled multipath/shadowing gains.
        #[arg(long)]
        fading: bool,
        /// Mean square multipath amplitude (exponential mean).
        #[arg(long, default_value_t = 1.0)]
        sigma_v: f64,
        /// Shadowing spread (standard deviation of the normal exponent).
        #[arg(long, default_value_t = 1.0)]
        sigma_w: f64,
        /// Seed for the gain samples; only used with --fading.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a full Monte Carlo sweep and write one CSV row per measurement.
    Experiment {
        #[arg(long)]
        preset: PresetName,
        /// Also evaluate every schedule under sampled channel gains.
        #[arg(long)]
        fading: bool,
        /// Trials per node count (default 200).
        #[arg(long)]
        trials: Option<usize>,
        /// Master seed; every trial seed is derived from it.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exhaustively search for a minimum-slot conflict-free schedule.
    /// Refuses networks with more communication edges than the search cap.
    Oracle {
        #[arg(long)]
        net: PathBuf,
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Recompute the built-in reference values (worked-layout SINRs and
    /// preset ranges) and compare them against their expected numbers.
    VerifyPaper,
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Gen { nodes, radius, seed, out } => gen(nodes, radius, seed, &out),
        Command::Schedule { net, params, algo, seed, out } => {
            schedule(&net, &params, algo, seed, &out)
        }
        Command::Evaluate { net, params, schedule, fading, sigma_v, sigma_w, seed, out } => {
            evaluate(&net, &params, &schedule, fading, sigma_v, sigma_w, seed, &out)
        }
        Command::Experiment { preset, fading, trials, seed, out } => {
            experiment(preset, fading, trials, seed, &out)
        }
        Command::Oracle { net, params, out } => oracle(&net, &params, &out),
        Command::VerifyPaper => verify_reference_values(),
    }
}

fn gen(nodes: usize, radius: f64, seed: u64, out: &Path) -> Result<()> {
    let net = generate_network(nodes, radius, &mut SimRng::new(seed))
        .context("generating network")?;
    write_json(out, &net.to_file())?;
    eprintln!("wrote {} nodes to {}", nodes, out.display());
    Ok(())
}

fn schedule(net: &Path, params: &Path, algo: Algorithm, seed: u64, out: &Path) -> Result<()> {
    let network = load_network(net)?;
    let rp = load_params(params)?;
    let g = build_two_tier_graph(&network, &rp);
    let mut rng = SimRng::new(seed);
    let schedule = match algo {
        Algorithm::Cfls => conflict_free_link_schedule(&network, &g, &rp, &mut rng),
        Algorithm::GraphBaseline => graph_based_link_schedule(&g, &mut rng),
    };
    write_json(out, &schedule)?;
    eprintln!(
        "{} links in {} slots written to {}",
        schedule.num_links(),
        schedule.num_slots(),
        out.display()
    );
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn evaluate(
    net: &Path,
    params: &Path,
    schedule: &Path,
    fading: bool,
    sigma_v: f64,
    sigma_w: f64,
    seed: u64,
    out: &Path,
) -> Result<()> {
    let network = load_network(net)?;
    let rp = load_params(params)?;
    let sched: Schedule = read_json(schedule).context("reading schedule file")?;
    let gains = if fading {
        let fp = FadingParams::new(sigma_v, sigma_w).context("fading parameters")?;
        Some(sample_gains(&mut SimRng::new(seed), network.num_nodes(), &fp))
    } else {
        None
    };
    let report = evaluate_schedule(&network, &rp, &sched, gains.as_ref());
    write_json(out, &report)?;
    eprintln!(
        "spatial reuse {:.4} over {} slots, {} violation(s); report written to {}",
        report.spatial_reuse,
        report.num_slots,
        report.violations.len(),
        out.display()
    );
    Ok(())
}

fn experiment(
    name: PresetName,
    fading: bool,
    trials: Option<usize>,
    seed: u64,
    out: &Path,
) -> Result<()> {
    let mut preset = match name {
        PresetName::Exp1 => ExperimentPreset::exp1(),
        PresetName::Exp2 => ExperimentPreset::exp2(),
    };
    if let Some(t) = trials {
        preset = preset.with_trials(t);
    }
    if fading {
        preset = preset.with_fading(FadingParams::new(1.0, 1.0).expect("unit fading is valid"));
    }
    let algorithms = [Algorithm::Cfls, Algorithm::GraphBaseline];
    let records = run_experiment(&preset, &algorithms, seed)?;
    fs::write(out, write_csv(&records)?)
        .with_context(|| format!("writing {}", out.display()))?;
    eprintln!("{} records written to {}", records.len(), out.display());
    Ok(())
}

fn oracle(net: &Path, params: &Path, out: &Path) -> Result<()> {
    let network = load_network(net)?;
    let rp = load_params(params)?;
    let g = build_two_tier_graph(&network, &rp);
    let best = optimal_schedule_bruteforce(&network, &g, &rp, DEFAULT_ORACLE_EDGE_LIMIT)
        .context("exhaustive search")?;
    write_json(out, &best)?;
    eprintln!(
        "optimal schedule: {} links in {} slots written to {}",
        best.num_links(),
        best.num_slots(),
        out.display()
    );
    Ok(())
}

fn verify_reference_values() -> Result<()> {
    let lines = reference_checks();
    print!("{}", format_table(&lines));
    let failures = lines.iter().filter(|l| !l.passed()).count();
    if failures > 0 {
        bail!("{failures} of {} reference checks failed", lines.len());
    }
    println!("all {} reference checks passed", lines.len());
    Ok(())
}

fn load_network(path: &Path) -> Result<Network> {
    let file: NetworkFile = read_json(path).context("reading network file")?;
    Ok(file.to_network().context("validating network file")?)
}

fn load_params(path: &Path) -> Result<RadioParams> {
    let config: RadioConfig = read_json(path).context("reading radio parameter file")?;
    Ok(config.to_params().context("validating radio parameters")?)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
