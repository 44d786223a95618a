//! Core model types: radio parameters, node layouts, links, schedules, and the
//! deterministic RNG used everywhere randomness is needed.
//!
//! Everything internal is SI and linear: transmit and noise power in watts,
//! distances in meters, SINR thresholds as linear ratios. Decibel and dBm
//! values appear only at the boundaries (config files, reports), converted on
//! the way in and out by the functions at the top of this module.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

// --------------------------------------------------------------------------
// Unit conversions
// --------------------------------------------------------------------------

/// Converts a decibel value to a linear ratio: `10^(x/10)`.
pub fn db_to_linear(x_db: f64) -> Result<f64> {
    if !x_db.is_finite() {
        return Err(Error::NonFinite { name: "dB value", value: x_db });
    }
    Ok(10f64.powf(x_db / 10.0))
}

/// Converts a linear ratio to decibels: `10 * log10(x)`. Only meaningful for
/// strictly positive `x`; zero maps to `-inf`.
pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

/// Converts a dBm power level to watts.
pub fn dbm_to_watts(x_dbm: f64) -> Result<f64> {
    if !x_dbm.is_finite() {
        return Err(Error::NonFinite { name: "dBm value", value: x_dbm });
    }
    Ok(10f64.powf(x_dbm / 10.0) / 1000.0)
}

/// Converts a power in watts to dBm.
pub fn watts_to_dbm(w: f64) -> f64 {
    10.0 * (w * 1000.0).log10()
}

// --------------------------------------------------------------------------
// Radio parameters
// --------------------------------------------------------------------------

/// Validated radio-layer parameters, stored in SI units.
///
/// Invariants: all fields finite; power, noise and alpha strictly positive;
/// `gamma_c_linear > 1`; `0 < gamma_i_linear < gamma_c_linear` (the
/// interference threshold is the weaker one, so the interference range
/// strictly exceeds the communication range).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadioParams {
    power_watts: f64,
    noise_watts: f64,
    gamma_c_linear: f64,
    gamma_i_linear: f64,
    alpha: f64,
}

impl RadioParams {
    pub fn new(
        power_watts: f64,
        noise_watts: f64,
        gamma_c_linear: f64,
        gamma_i_linear: f64,
        alpha: f64,
    ) -> Result<Self> {
        for (name, value) in [
            ("power_watts", power_watts),
            ("noise_watts", noise_watts),
            ("gamma_c_linear", gamma_c_linear),
            ("gamma_i_linear", gamma_i_linear),
            ("alpha", alpha),
        ] {
            if !value.is_finite() {
                return Err(Error::NonFinite { name, value });
            }
            if value <= 0.0 {
                return Err(Error::NotPositive { name, value });
            }
        }
        if gamma_c_linear <= 1.0 {
            return Err(Error::CommThresholdTooLow(gamma_c_linear));
        }
        if gamma_i_linear >= gamma_c_linear {
            return Err(Error::ThresholdOrder {
                gamma_i: gamma_i_linear,
                gamma_c: gamma_c_linear,
            });
        }
        Ok(Self { power_watts, noise_watts, gamma_c_linear, gamma_i_linear, alpha })
    }

    /// Builds parameters from the boundary units used in config files:
    /// transmit power in mW, noise in dBm, thresholds in dB.
    pub fn from_db_config(
        power_mw: f64,
        noise_dbm: f64,
        gamma_c_db: f64,
        gamma_i_db: f64,
        alpha: f64,
    ) -> Result<Self> {
        if !power_mw.is_finite() {
            return Err(Error::NonFinite { name: "power_mw", value: power_mw });
        }
        Self::new(
            power_mw / 1000.0,
            dbm_to_watts(noise_dbm)?,
            db_to_linear(gamma_c_db)?,
            db_to_linear(gamma_i_db)?,
            alpha,
        )
    }

    pub fn power_watts(&self) -> f64 {
        self.power_watts
    }

    pub fn noise_watts(&self) -> f64 {
        self.noise_watts
    }

    pub fn gamma_c_linear(&self) -> f64 {
        self.gamma_c_linear
    }

    pub fn gamma_i_linear(&self) -> f64 {
        self.gamma_i_linear
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

/// On-disk radio parameter file. All values in conventional radio units;
/// converted to SI by [`RadioConfig::to_params`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadioConfig {
    pub power_mw: f64,
    pub noise_dbm: f64,
    pub gamma_c_db: f64,
    pub gamma_i_db: f64,
    pub alpha: f64,
}

impl RadioConfig {
    pub fn to_params(&self) -> Result<RadioParams> {
        RadioParams::from_db_config(
            self.power_mw,
            self.noise_dbm,
            self.gamma_c_db,
            self.gamma_i_db,
            self.alpha,
        )
    }
}

// --------------------------------------------------------------------------
// Network
// --------------------------------------------------------------------------

/// An immutable node layout with a precomputed distance matrix.
///
/// Nodes are identified by ids `1..=n`. Coordinates are planar, in meters.
/// Construction rejects layouts with fewer than two nodes or with two nodes
/// at exactly the same point, so every pairwise distance is strictly
/// positive.
#[derive(Debug, Clone, PartialEq)]
pub struct Network {
    points: Vec<(f64, f64)>,
    dist: Vec<f64>,
}

/// Validates a node layout and precomputes all pairwise distances.
pub fn build_network(points: &[(f64, f64)]) -> Result<Network> {
    let n = points.len();
    if n < 2 {
        return Err(Error::TooFewNodes { min: 2, got: n });
    }
    for &(x, y) in points {
        if !x.is_finite() {
            return Err(Error::NonFinite { name: "x coordinate", value: x });
        }
        if !y.is_finite() {
            return Err(Error::NonFinite { name: "y coordinate", value: y });
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if points[i] == points[j] {
                return Err(Error::DuplicateCoordinates { a: i + 1, b: j + 1 });
            }
        }
    }
    let mut dist = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let dx = points[i].0 - points[j].0;
            let dy = points[i].1 - points[j].1;
            dist[i * n + j] = (dx * dx + dy * dy).sqrt();
        }
    }
    Ok(Network { points: points.to_vec(), dist })
}

impl Network {
    pub fn num_nodes(&self) -> usize {
        self.points.len()
    }

    /// Euclidean distance between nodes `j` and `k` (ids are 1-based).
    pub fn distance(&self, j: usize, k: usize) -> f64 {
        let n = self.num_nodes();
        assert!(j >= 1 && j <= n && k >= 1 && k <= n, "node id out of range");
        self.dist[(j - 1) * n + (k - 1)]
    }

    pub fn position(&self, id: usize) -> (f64, f64) {
        self.points[id - 1]
    }

    pub fn contains(&self, id: usize) -> bool {
        id >= 1 && id <= self.num_nodes()
    }

    pub fn to_file(&self) -> NetworkFile {
        NetworkFile {
            nodes: self
                .points
                .iter()
                .enumerate()
                .map(|(i, &(x, y))| NodeRecord { id: i + 1, x, y })
                .collect(),
        }
    }
}

/// One node in the on-disk network format.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub id: usize,
    pub x: f64,
    pub y: f64,
}

/// On-disk network format: `{"nodes": [{"id", "x", "y"}, ...]}`. Ids must be
/// exactly `1..=n`; order in the file is irrelevant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkFile {
    pub nodes: Vec<NodeRecord>,
}

impl NetworkFile {
    pub fn to_network(&self) -> Result<Network> {
        let n = self.nodes.len();
        let mut points = vec![None; n];
        for rec in &self.nodes {
            if rec.id < 1 || rec.id > n || points[rec.id - 1].is_some() {
                return Err(Error::BadNodeId(rec.id));
            }
            points[rec.id - 1] = Some((rec.x, rec.y));
        }
        let points: Vec<(f64, f64)> = points.into_iter().map(|p| p.unwrap()).collect();
        build_network(&points)
    }
}

// --------------------------------------------------------------------------
// Links and schedules
// --------------------------------------------------------------------------

/// A directed transmission from node `tx` to node `rx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Link {
    pub tx: usize,
    pub rx: usize,
}

impl Link {
    pub fn new(tx: usize, rx: usize) -> Self {
        Self { tx, rx }
    }

    /// The reverse direction of the same node pair.
    pub fn reversed(&self) -> Self {
        Self { tx: self.rx, rx: self.tx }
    }
}

impl std::fmt::Display for Link {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}->{})", self.tx, self.rx)
    }
}

#[derive(Deserialize)]
struct RawSchedule {
    slots: Vec<Vec<Link>>,
}

/// An ordered list of time slots, each holding the links that transmit
/// simultaneously in that slot. Empty slots are dropped at construction, so
/// every retained slot carries at least one link.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "RawSchedule")]
pub struct Schedule {
    slots: Vec<Vec<Link>>,
}

impl Schedule {
    pub fn new(slots: Vec<Vec<Link>>) -> Self {
        Self { slots: slots.into_iter().filter(|s| !s.is_empty()).collect() }
    }

    pub fn empty() -> Self {
        Self { slots: Vec::new() }
    }

    pub fn num_slots(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[Vec<Link>] {
        &self.slots
    }

    pub fn num_links(&self) -> usize {
        self.slots.iter().map(|s| s.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }
}

impl From<RawSchedule> for Schedule {
    fn from(raw: RawSchedule) -> Self {
        Schedule::new(raw.slots)
    }
}

// --------------------------------------------------------------------------
// Deterministic RNG
// --------------------------------------------------------------------------

/// The project-wide pseudorandom generator: ChaCha with 8 rounds, seeded from
/// a 64-bit value. The algorithm is fixed so that a given seed produces the
/// same stream on every platform and in every run; changing it would break
/// recorded experiment results and is a breaking change.
#[derive(Debug, Clone)]
pub struct SimRng(ChaCha8Rng);

impl SimRng {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }
}

impl RngCore for SimRng {
    fn next_u32(&mut self) -> u32 {
        self.0.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.0.fill_bytes(dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> std::result::Result<(), rand::Error> {
        self.0.try_fill_bytes(dest)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn db_conversions_match_known_values() {
        assert_relative_eq!(db_to_linear(20.0).unwrap(), 100.0, max_relative = 1e-12);
        assert_relative_eq!(db_to_linear(10.0).unwrap(), 10.0, max_relative = 1e-12);
        assert_relative_eq!(db_to_linear(0.0).unwrap(), 1.0, max_relative = 1e-12);
        assert_relative_eq!(dbm_to_watts(-90.0).unwrap(), 1e-12, max_relative = 1e-12);
        assert_relative_eq!(dbm_to_watts(-85.0).unwrap(), 3.1622776601683795e-12, max_relative = 1e-12);
        assert_relative_eq!(dbm_to_watts(0.0).unwrap(), 1e-3, max_relative = 1e-12);
        assert_relative_eq!(watts_to_dbm(1e-3), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn db_conversions_reject_non_finite() {
        assert!(db_to_linear(f64::NAN).is_err());
        assert!(db_to_linear(f64::INFINITY).is_err());
        assert!(dbm_to_watts(f64::NEG_INFINITY).is_err());
    }

    #[test]
    fn radio_params_validate_threshold_order() {
        // gamma_i >= gamma_c is rejected, equal thresholds included.
        assert!(RadioParams::new(0.01, 1e-12, 100.0, 100.0, 4.0).is_err());
        assert!(RadioParams::new(0.01, 1e-12, 100.0, 200.0, 4.0).is_err());
        assert!(RadioParams::new(0.01, 1e-12, 0.9, 0.5, 4.0).is_err());
        assert!(RadioParams::new(0.01, 1e-12, 100.0, 10.0, 4.0).is_ok());
    }

    #[test]
    fn radio_params_from_db_config_converts_to_si() {
        let rp = RadioParams::from_db_config(10.0, -90.0, 20.0, 10.0, 4.0).unwrap();
        assert_relative_eq!(rp.power_watts(), 0.01, max_relative = 1e-12);
        assert_relative_eq!(rp.noise_watts(), 1e-12, max_relative = 1e-12);
        assert_relative_eq!(rp.gamma_c_linear(), 100.0, max_relative = 1e-12);
        assert_relative_eq!(rp.gamma_i_linear(), 10.0, max_relative = 1e-12);
    }

    #[test]
    fn network_rejects_degenerate_layouts() {
        assert!(build_network(&[(0.0, 0.0)]).is_err());
        assert!(build_network(&[(0.0, 0.0), (0.0, 0.0)]).is_err());
        assert!(build_network(&[(0.0, 0.0), (f64::NAN, 1.0)]).is_err());
    }

    #[test]
    fn network_distances_are_symmetric_euclidean() {
        let net = build_network(&[(0.0, 0.0), (3.0, 4.0), (-3.0, -4.0)]).unwrap();
        assert_relative_eq!(net.distance(1, 2), 5.0, max_relative = 1e-12);
        assert_relative_eq!(net.distance(2, 1), 5.0, max_relative = 1e-12);
        assert_relative_eq!(net.distance(2, 3), 10.0, max_relative = 1e-12);
        assert_eq!(net.distance(1, 1), 0.0);
    }

    #[test]
    fn network_file_round_trips_and_checks_ids() {
        let net = build_network(&[(0.0, 0.0), (50.0, 0.0)]).unwrap();
        let file = net.to_file();
        assert_eq!(file.to_network().unwrap(), net);

        let bad = NetworkFile {
            nodes: vec![
                NodeRecord { id: 1, x: 0.0, y: 0.0 },
                NodeRecord { id: 3, x: 1.0, y: 0.0 },
            ],
        };
        assert_eq!(bad.to_network().unwrap_err(), Error::BadNodeId(3));
    }

    #[test]
    fn schedule_drops_empty_slots() {
        let s = Schedule::new(vec![vec![], vec![Link::new(1, 2)], vec![]]);
        assert_eq!(s.num_slots(), 1);
        assert_eq!(s.num_links(), 1);
    }

    #[test]
    fn schedule_json_shape_is_stable() {
        let s = Schedule::new(vec![vec![Link::new(1, 2), Link::new(3, 4)], vec![Link::new(2, 1)]]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"slots":[[{"tx":1,"rx":2},{"tx":3,"rx":4}],[{"tx":2,"rx":1}]]}"#
        );
        let back: Schedule = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);

        // Deserialization also normalizes away empty slots.
        let padded: Schedule =
            serde_json::from_str(r#"{"slots":[[],[{"tx":1,"rx":2}]]}"#).unwrap();
        assert_eq!(padded.num_slots(), 1);
    }

    #[test]
    fn sim_rng_is_reproducible() {
        let mut a = SimRng::new(42);
        let mut b = SimRng::new(42);
        for _ in 0..1000 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = SimRng::new(43);
        assert_ne!(SimRng::new(42).next_u64(), c.next_u64());
    }
}
