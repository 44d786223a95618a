//! Physical-layer arithmetic: path loss, SNR, SINR, the two derived ranges,
//! and multipath/shadowing gains for fading evaluation.
//!
//! Received power follows the deterministic path-loss law `P / d^alpha`. A
//! transmission in a slot succeeds when the ratio of its received signal
//! power to noise plus the summed power of all other transmitters in the
//! slot meets the communication threshold:
//!
//! ```text
//! SINR(tx -> rx) = (P / d(tx,rx)^alpha) / (N0 + sum_k P / d(k,rx)^alpha)
//! ```
//!
//! Under fading, every ordered pair `(k, l)` additionally carries a random
//! gain `v * 10^w` with `v` exponential (multipath) and `w` normal
//! (shadowing). The shadowing exponent enters literally as `10^w`, not as a
//! decibel value.

use rand_distr::{Distribution, Exp, Normal};

use crate::error::{Error, Result};
use crate::model::{Network, RadioParams, SimRng};

/// Deterministic received power `power / d^alpha` in watts.
pub fn received_power(power_watts: f64, distance: f64, alpha: f64) -> Result<f64> {
    if !(distance > 0.0) {
        return Err(Error::NonPositiveDistance(distance));
    }
    Ok(power_watts / distance.powf(alpha))
}

fn check_link(net: &Network, tx: usize, rx: usize) -> Result<()> {
    for id in [tx, rx] {
        if !net.contains(id) {
            return Err(Error::UnknownNode(id));
        }
    }
    if tx == rx {
        return Err(Error::SelfLink(tx));
    }
    Ok(())
}

/// Signal-to-noise ratio of a lone transmission, as a linear ratio.
pub fn snr(net: &Network, rp: &RadioParams, tx: usize, rx: usize) -> Result<f64> {
    check_link(net, tx, rx)?;
    let signal = received_power(rp.power_watts(), net.distance(tx, rx), rp.alpha())?;
    Ok(signal / rp.noise_watts())
}

/// Signal-to-interference-plus-noise ratio at `rx` for the transmission
/// `tx -> rx`, with every node in `interferers` transmitting simultaneously.
///
/// `interferers` must not contain `tx` or `rx`. With an empty interferer set
/// this is exactly [`snr`].
pub fn sinr(
    net: &Network,
    rp: &RadioParams,
    tx: usize,
    rx: usize,
    interferers: &[usize],
) -> Result<f64> {
    check_link(net, tx, rx)?;
    debug_assert!(!interferers.contains(&tx) && !interferers.contains(&rx));
    let signal = received_power(rp.power_watts(), net.distance(tx, rx), rp.alpha())?;
    let mut denom = rp.noise_watts();
    for &k in interferers {
        if !net.contains(k) {
            return Err(Error::UnknownNode(k));
        }
        denom += received_power(rp.power_watts(), net.distance(k, rx), rp.alpha())?;
    }
    Ok(signal / denom)
}

/// Maximum distance at which a lone transmission still meets `gamma_c`:
/// `(P / (N0 * gamma_c))^(1/alpha)`.
pub fn comm_range(rp: &RadioParams) -> f64 {
    (rp.power_watts() / (rp.noise_watts() * rp.gamma_c_linear())).powf(1.0 / rp.alpha())
}

/// Maximum distance at which a transmitter is still heard above the weaker
/// interference threshold `gamma_i`. Always exceeds [`comm_range`] because
/// `gamma_i < gamma_c`.
pub fn interference_range(rp: &RadioParams) -> f64 {
    (rp.power_watts() / (rp.noise_watts() * rp.gamma_i_linear())).powf(1.0 / rp.alpha())
}

// --------------------------------------------------------------------------
// Fading
// --------------------------------------------------------------------------

/// Parameters of the per-pair random channel gains.
///
/// `sigma_v_sq` is the mean of the exponential multipath gain `v`;
/// `sigma_w` is the standard deviation of the normal shadowing exponent `w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FadingParams {
    sigma_v_sq: f64,
    sigma_w: f64,
}

impl FadingParams {
    pub fn new(sigma_v_sq: f64, sigma_w: f64) -> Result<Self> {
        for (name, value) in [("sigma_v_sq", sigma_v_sq), ("sigma_w", sigma_w)] {
            if !value.is_finite() {
                return Err(Error::NonFinite { name, value });
            }
            if value <= 0.0 {
                return Err(Error::NotPositive { name, value });
            }
        }
        Ok(Self { sigma_v_sq, sigma_w })
    }

    pub fn sigma_v_sq(&self) -> f64 {
        self.sigma_v_sq
    }

    pub fn sigma_w(&self) -> f64 {
        self.sigma_w
    }
}

/// One sampled channel state: independent gains for every ordered node pair.
/// Diagonal entries are never read.
#[derive(Debug, Clone, PartialEq)]
pub struct GainMatrix {
    n: usize,
    v: Vec<f64>,
    w: Vec<f64>,
}

impl GainMatrix {
    /// Multipath gain for the ordered pair `(k, l)`.
    pub fn v(&self, k: usize, l: usize) -> f64 {
        self.v[(k - 1) * self.n + (l - 1)]
    }

    /// Shadowing exponent for the ordered pair `(k, l)`.
    pub fn w(&self, k: usize, l: usize) -> f64 {
        self.w[(k - 1) * self.n + (l - 1)]
    }

    /// Combined multiplicative power gain `v * 10^w`.
    pub fn gain(&self, k: usize, l: usize) -> f64 {
        self.v(k, l) * 10f64.powf(self.w(k, l))
    }

    pub fn num_nodes(&self) -> usize {
        self.n
    }

    /// All-ones gains (`v = 1`, `w = 0`): fading evaluation collapses to the
    /// deterministic model. Useful in tests.
    pub fn unit(n: usize) -> Self {
        Self { n, v: vec![1.0; n * n], w: vec![0.0; n * n] }
    }

    /// Builds a matrix from explicit entries; `f` maps an ordered pair to
    /// `(v, w)`. Useful in tests.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> (f64, f64)) -> Self {
        let mut m = Self::unit(n);
        for k in 1..=n {
            for l in 1..=n {
                if k != l {
                    let (v, w) = f(k, l);
                    m.v[(k - 1) * n + (l - 1)] = v;
                    m.w[(k - 1) * n + (l - 1)] = w;
                }
            }
        }
        m
    }
}

/// Samples a full gain matrix: for each ordered pair `(k, l)`, `k != l`, in
/// row-major order, draws `v ~ Exp(mean sigma_v_sq)` then `w ~ Normal(0,
/// sigma_w)`. The draw order is part of the determinism contract.
pub fn sample_gains(rng: &mut SimRng, n: usize, fp: &FadingParams) -> GainMatrix {
    let exp = Exp::new(1.0 / fp.sigma_v_sq).expect("validated rate");
    let norm = Normal::new(0.0, fp.sigma_w).expect("validated std dev");
    let mut v = vec![1.0; n * n];
    let mut w = vec![0.0; n * n];
    for k in 0..n {
        for l in 0..n {
            if k != l {
                v[k * n + l] = exp.sample(rng);
                w[k * n + l] = norm.sample(rng);
            }
        }
    }
    GainMatrix { n, v, w }
}

/// SINR with every path power scaled by its sampled gain:
/// the signal by `gain(tx, rx)`, each interference term by `gain(k, rx)`.
pub fn faded_sinr(
    net: &Network,
    rp: &RadioParams,
    gains: &GainMatrix,
    tx: usize,
    rx: usize,
    interferers: &[usize],
) -> Result<f64> {
    check_link(net, tx, rx)?;
    debug_assert!(!interferers.contains(&tx) && !interferers.contains(&rx));
    let signal =
        received_power(rp.power_watts(), net.distance(tx, rx), rp.alpha())? * gains.gain(tx, rx);
    let mut denom = rp.noise_watts();
    for &k in interferers {
        if !net.contains(k) {
            return Err(Error::UnknownNode(k));
        }
        denom +=
            received_power(rp.power_watts(), net.distance(k, rx), rp.alpha())? * gains.gain(k, rx);
    }
    Ok(signal / denom)
}

// --------------------------------------------------------------------------
// Precomputed received-power table
// --------------------------------------------------------------------------

/// All pairwise received powers for one network and parameter set, computed
/// once. The schedulers and the spatial-reuse evaluation query SINR many
/// times per slot; this avoids re-deriving `P / d^alpha` on every query.
///
/// Queries here sum interference in caller order over the same per-pair
/// powers as [`sinr`], so they return bit-identical results.
#[derive(Debug, Clone)]
pub struct ReceivedPowerTable {
    n: usize,
    noise: f64,
    table: Vec<f64>,
}

impl ReceivedPowerTable {
    pub fn new(net: &Network, rp: &RadioParams) -> Self {
        let n = net.num_nodes();
        let mut table = vec![0.0; n * n];
        for t in 1..=n {
            for r in 1..=n {
                if t != r {
                    table[(t - 1) * n + (r - 1)] =
                        received_power(rp.power_watts(), net.distance(t, r), rp.alpha())
                            .expect("network distances are positive");
                }
            }
        }
        Self { n, noise: rp.noise_watts(), table }
    }

    pub fn power(&self, tx: usize, rx: usize) -> f64 {
        self.table[(tx - 1) * self.n + (rx - 1)]
    }

    pub fn sinr(&self, tx: usize, rx: usize, interferers: &[usize]) -> f64 {
        let mut denom = self.noise;
        for &k in interferers {
            denom += self.power(k, rx);
        }
        self.power(tx, rx) / denom
    }

    pub fn faded_sinr(
        &self,
        gains: &GainMatrix,
        tx: usize,
        rx: usize,
        interferers: &[usize],
    ) -> f64 {
        let mut denom = self.noise;
        for &k in interferers {
            denom += self.power(k, rx) * gains.gain(k, rx);
        }
        self.power(tx, rx) * gains.gain(tx, rx) / denom
    }
}
