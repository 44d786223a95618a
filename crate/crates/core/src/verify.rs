//! Independent schedule evaluation.
//!
//! Everything here recomputes its checks from the network geometry and the
//! radio parameters alone, deliberately sharing no conflict or threshold
//! code with the schedulers, so that a scheduler bug cannot hide behind a
//! matching bug in its own verification. Four constraint classes are
//! checked: `operational` (each node acts at most once per slot, links are
//! well formed), `range` (scheduled links stay within communication range),
//! `exhaustive` (every in-range ordered pair is scheduled somewhere), and
//! `sinr` (every receiver meets the threshold in its slot).
//!
//! [`spatial_reuse`] is the evaluation metric: successful transmissions per
//! slot, averaged over the schedule, optionally under sampled fading gains.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{linear_to_db, Link, Network, RadioParams, Schedule};
use crate::radio::{GainMatrix, ReceivedPowerTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ViolationKind {
    Operational,
    Range,
    Exhaustive,
    Sinr,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

/// Evaluated outcome of one scheduled transmission. `sinr_db` is absent for
/// malformed links and for completely silenced ones (zero linear SINR).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkOutcome {
    pub link: Link,
    pub sinr_db: Option<f64>,
    pub success: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub spatial_reuse: f64,
    pub num_slots: usize,
    pub successes: usize,
    pub slots: Vec<Vec<LinkOutcome>>,
    pub violations: Vec<Violation>,
}

impl EvaluationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

// --------------------------------------------------------------------------
// Independent physical model
// --------------------------------------------------------------------------

/// Path powers and thresholds recomputed from first principles, kept
/// separate from the radio module on purpose.
pub(crate) struct PathPower {
    n: usize,
    noise: f64,
    gamma_c: f64,
    comm_range: f64,
    p: Vec<f64>,
}

impl PathPower {
    pub(crate) fn new(net: &Network, rp: &RadioParams) -> Self {
        let n = net.num_nodes();
        let mut p = vec![0.0; n * n];
        for t in 1..=n {
            for r in 1..=n {
                if t != r {
                    p[(t - 1) * n + (r - 1)] =
                        rp.power_watts() / net.distance(t, r).powf(rp.alpha());
                }
            }
        }
        let comm_range =
            (rp.power_watts() / (rp.noise_watts() * rp.gamma_c_linear())).powf(1.0 / rp.alpha());
        Self { n, noise: rp.noise_watts(), gamma_c: rp.gamma_c_linear(), comm_range, p }
    }

    fn power(&self, t: usize, r: usize) -> f64 {
        self.p[(t - 1) * self.n + (r - 1)]
    }

    /// SINR of `links[i]` with every other listed transmitter active.
    fn sinr_in_slot(&self, links: &[Link], i: usize, gains: Option<&GainMatrix>) -> f64 {
        let Link { tx, rx } = links[i];
        let scale = |t: usize, r: usize| match gains {
            Some(g) => self.power(t, r) * g.gain(t, r),
            None => self.power(t, r),
        };
        let mut denom = self.noise;
        for (j, other) in links.iter().enumerate() {
            if j != i {
                denom += scale(other.tx, rx);
            }
        }
        scale(tx, rx) / denom
    }

    /// True when every receiver in the slot meets the communication
    /// threshold.
    pub(crate) fn slot_conflict_free(&self, links: &[Link]) -> bool {
        (0..links.len()).all(|i| self.sinr_in_slot(links, i, None) >= self.gamma_c)
    }
}

// --------------------------------------------------------------------------
// Verification
// --------------------------------------------------------------------------

/// Full constraint check and evaluation of a schedule against a network.
/// Malformed links (unknown node ids, self loops) become `operational`
/// violations and are excluded from the physical computations instead of
/// crashing them. When `gains` is given, per-link outcomes and `sinr`
/// violations reflect the faded channel.
pub fn evaluate_schedule(
    net: &Network,
    rp: &RadioParams,
    schedule: &Schedule,
    gains: Option<&GainMatrix>,
) -> EvaluationReport {
    let pp = PathPower::new(net, rp);
    let mut violations = Vec::new();
    let mut slots = Vec::with_capacity(schedule.num_slots());
    let mut successes = 0usize;

    for (idx, slot) in schedule.slots().iter().enumerate() {
        let slot_no = idx + 1;
        let mut valid: Vec<Link> = Vec::with_capacity(slot.len());
        let mut outcome_of = vec![None; slot.len()];
        for (j, &link) in slot.iter().enumerate() {
            if !net.contains(link.tx) || !net.contains(link.rx) {
                let bad = if net.contains(link.tx) { link.rx } else { link.tx };
                violations.push(Violation {
                    kind: ViolationKind::Operational,
                    detail: format!("slot {slot_no}: link {link} uses unknown node {bad}"),
                });
            } else if link.tx == link.rx {
                violations.push(Violation {
                    kind: ViolationKind::Operational,
                    detail: format!("slot {slot_no}: link {link} transmits to itself"),
                });
            } else {
                outcome_of[j] = Some(valid.len());
                valid.push(link);
                continue;
            }
        }

        // Each node may take part in at most one transmission per slot.
        let mut uses = std::collections::BTreeMap::new();
        for link in &valid {
            *uses.entry(link.tx).or_insert(0usize) += 1;
            *uses.entry(link.rx).or_insert(0usize) += 1;
        }
        for (&node, &count) in &uses {
            if count > 1 {
                violations.push(Violation {
                    kind: ViolationKind::Operational,
                    detail: format!("slot {slot_no}: node {node} takes part in {count} transmissions"),
                });
            }
        }

        for link in &valid {
            let d = net.distance(link.tx, link.rx);
            if d > pp.comm_range {
                violations.push(Violation {
                    kind: ViolationKind::Range,
                    detail: format!(
                        "slot {slot_no}: link {link} spans {d:.2} m, beyond the {:.2} m communication range",
                        pp.comm_range
                    ),
                });
            }
        }

        let evaluated: Vec<(f64, bool)> = (0..valid.len())
            .map(|i| {
                let s = pp.sinr_in_slot(&valid, i, gains);
                (s, s >= pp.gamma_c)
            })
            .collect();
        for (i, &(s, ok)) in evaluated.iter().enumerate() {
            if ok {
                successes += 1;
            } else {
                violations.push(Violation {
                    kind: ViolationKind::Sinr,
                    detail: format!(
                        "slot {slot_no}: receiver {} of link {} gets {:.2} dB, below the {:.2} dB threshold",
                        valid[i].rx,
                        valid[i],
                        linear_to_db(s),
                        linear_to_db(pp.gamma_c)
                    ),
                });
            }
        }

        slots.push(
            slot.iter()
                .enumerate()
                .map(|(j, &link)| match outcome_of[j] {
                    Some(i) => {
                        let (s, ok) = evaluated[i];
                        let sinr_db = if s > 0.0 { Some(linear_to_db(s)) } else { None };
                        LinkOutcome { link, sinr_db, success: ok }
                    }
                    None => LinkOutcome { link, sinr_db: None, success: false },
                })
                .collect(),
        );
    }

    // Every ordered pair within communication range must be scheduled in
    // some slot.
    let scheduled: std::collections::HashSet<Link> =
        schedule.slots().iter().flatten().copied().collect();
    let n = net.num_nodes();
    for j in 1..=n {
        for k in 1..=n {
            if j != k && net.distance(j, k) <= pp.comm_range {
                let link = Link::new(j, k);
                if !scheduled.contains(&link) {
                    violations.push(Violation {
                        kind: ViolationKind::Exhaustive,
                        detail: format!("in-range link {link} is never scheduled"),
                    });
                }
            }
        }
    }

    let num_slots = schedule.num_slots();
    let spatial_reuse = if num_slots > 0 { successes as f64 / num_slots as f64 } else { 0.0 };
    EvaluationReport { spatial_reuse, num_slots, successes, slots, violations }
}

/// Constraint check under the deterministic (non-faded) model.
pub fn verify_schedule(net: &Network, rp: &RadioParams, schedule: &Schedule) -> EvaluationReport {
    evaluate_schedule(net, rp, schedule, None)
}

/// Successful transmissions per slot: the count of receivers meeting the
/// threshold across all slots, divided by the number of slots. Computed with
/// the radio module's SINR (faded when `gains` is given), unlike
/// [`verify_schedule`], so the metric and the constraint checks come from
/// two separate implementations.
pub fn spatial_reuse(
    net: &Network,
    rp: &RadioParams,
    schedule: &Schedule,
    gains: Option<&GainMatrix>,
) -> Result<f64> {
    if schedule.num_slots() == 0 {
        return Err(Error::EmptySchedule);
    }
    for slot in schedule.slots() {
        for link in slot {
            for id in [link.tx, link.rx] {
                if !net.contains(id) {
                    return Err(Error::UnknownNode(id));
                }
            }
            if link.tx == link.rx {
                return Err(Error::SelfLink(link.tx));
            }
        }
    }
    let table = ReceivedPowerTable::new(net, rp);
    let gamma_c = rp.gamma_c_linear();
    let mut successes = 0usize;
    let mut interferers = Vec::new();
    for slot in schedule.slots() {
        for (i, link) in slot.iter().enumerate() {
            interferers.clear();
            interferers
                .extend(slot.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, l)| l.tx));
            let s = match gains {
                Some(g) => table.faded_sinr(g, link.tx, link.rx, &interferers),
                None => table.sinr(link.tx, link.rx, &interferers),
            };
            if s >= gamma_c {
                successes += 1;
            }
        }
    }
    Ok(successes as f64 / schedule.num_slots() as f64)
}
