//! Built-in regression values: two hand-checkable layouts with known
//! per-receiver SINRs, plus the derived ranges of both experiment presets.
//! `reference_checks` recomputes everything from the model and reports the
//! comparison; the CLI turns any mismatch into a nonzero exit.

use stdma_core::model::linear_to_db;
use stdma_core::radio::{comm_range, interference_range, sinr};
use stdma_core::{build_network, Network, RadioParams};

use crate::preset::ExperimentPreset;

/// One expected-vs-actual comparison.
#[derive(Debug, Clone)]
pub struct CheckLine {
    pub label: String,
    pub expected: f64,
    pub actual: f64,
    pub tolerance: f64,
    pub unit: &'static str,
}

impl CheckLine {
    pub fn passed(&self) -> bool {
        (self.actual - self.expected).abs() <= self.tolerance
    }
}

/// Three parallel 90 m links along a line, all transmitting together; the
/// middle receiver takes interference from both sides.
fn chain_layout() -> Network {
    build_network(&[
        (-360.0, 0.0),
        (-450.0, 0.0),
        (90.0, 0.0),
        (0.0, 0.0),
        (360.0, 0.0),
        (450.0, 0.0),
    ])
    .expect("layout is well-formed")
}

/// Two 50 m links pointing at each other across a 120 m gap; by symmetry
/// both receivers see the same SINR.
fn pair_layout() -> Network {
    build_network(&[(0.0, 0.0), (50.0, 0.0), (220.0, 0.0), (170.0, 0.0)])
        .expect("layout is well-formed")
}

fn sinr_db(net: &Network, rp: &RadioParams, tx: usize, rx: usize, interferers: &[usize]) -> f64 {
    linear_to_db(sinr(net, rp, tx, rx, interferers).expect("valid query"))
}

/// Recomputes every built-in reference quantity. SINR lines carry a
/// 0.01 dB tolerance, range lines 0.05 m, matching the precision the
/// expected values are stated at.
pub fn reference_checks() -> Vec<CheckLine> {
    let rp = ExperimentPreset::exp1().params().expect("valid preset");
    let chain = chain_layout();
    let pair = pair_layout();
    let mut lines = Vec::new();
    let mut sinr_line = |label: &str, expected: f64, actual: f64| {
        lines.push(CheckLine {
            label: label.to_string(),
            expected,
            actual,
            tolerance: 0.01,
            unit: "dB",
        });
    };
    sinr_line("chain layout, receiver 2 SINR", 21.26, sinr_db(&chain, &rp, 1, 2, &[3, 5]));
    sinr_line("chain layout, receiver 4 SINR", 18.42, sinr_db(&chain, &rp, 3, 4, &[1, 5]));
    sinr_line("chain layout, receiver 6 SINR", 19.74, sinr_db(&chain, &rp, 5, 6, &[1, 3]));
    sinr_line("pair layout, receiver 2 SINR", 20.91, sinr_db(&pair, &rp, 1, 2, &[3]));
    sinr_line("pair layout, receiver 4 SINR", 20.91, sinr_db(&pair, &rp, 3, 4, &[1]));

    for preset in [ExperimentPreset::exp1(), ExperimentPreset::exp2()] {
        let rp = preset.params().expect("valid preset");
        let expect = if preset.name == "exp1" { (100.0, 177.8) } else { (110.7, 175.4) };
        for (what, expected, actual) in [
            ("communication range", expect.0, comm_range(&rp)),
            ("interference range", expect.1, interference_range(&rp)),
        ] {
            lines.push(CheckLine {
                label: format!("{} {}", preset.name, what),
                expected,
                actual,
                tolerance: 0.05,
                unit: "m",
            });
        }
    }
    lines
}

/// Plain-text expected/actual table, one check per row.
pub fn format_table(lines: &[CheckLine]) -> String {
    let width = lines.iter().map(|l| l.label.len()).max().unwrap_or(0);
    let mut out = String::new();
    for l in lines {
        let status = if l.passed() { "ok " } else { "FAIL" };
        out.push_str(&format!(
            "{status}  {label:width$}  expected {expected:>8.2} {unit}  actual {actual:>10.4} {unit}\n",
            label = l.label,
            expected = l.expected,
            unit = l.unit,
            actual = l.actual,
        ));
    }
    out
}
