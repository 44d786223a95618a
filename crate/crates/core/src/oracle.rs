//! Exhaustive optimal scheduler for small instances.
//!
//! Enumerates every partition of the directed communication edges into
//! slots, keeps the partitions whose every slot is operationally sound and
//! SINR-clean, and returns the best one: maximum spatial reuse, which for
//! conflict-free exhaustive schedules means the fewest slots, with
//! lexicographic order as the final tie-break so the result is unique.
//!
//! The search walks edges in sorted order and either appends the next edge
//! to an existing slot or opens a new one. A slot that has gone infeasible
//! stays infeasible as more transmitters join (interference only grows and
//! endpoint clashes never heal), so failing insertions prune the whole
//! subtree. Instances beyond the edge cap are refused outright: the
//! partition count is super-exponential, and the cap is what keeps this
//! usable as a test oracle.

use crate::error::{Error, Result};
use crate::graph::TwoTierGraph;
use crate::model::{Link, Network, RadioParams, Schedule};
use crate::verify::PathPower;

/// Largest directed-edge count the oracle accepts by default (4140
/// partitions).
pub const DEFAULT_ORACLE_EDGE_LIMIT: usize = 8;

struct Search<'a> {
    edges: Vec<Link>,
    pp: &'a PathPower,
    slots: Vec<Vec<Link>>,
    best: Option<Vec<Vec<Link>>>,
}

impl Search<'_> {
    fn shares_endpoint(slot: &[Link], x: Link) -> bool {
        slot.iter().any(|h| {
            h.tx == x.tx || h.tx == x.rx || h.rx == x.tx || h.rx == x.rx
        })
    }

    fn recurse(&mut self, next: usize) {
        if let Some(best) = &self.best {
            if self.slots.len() > best.len() {
                return; // cannot beat the incumbent
            }
        }
        if next == self.edges.len() {
            let better = match &self.best {
                None => true,
                Some(best) => {
                    self.slots.len() < best.len()
                        || (self.slots.len() == best.len() && self.slots < *best)
                }
            };
            if better {
                self.best = Some(self.slots.clone());
            }
            return;
        }
        let x = self.edges[next];
        for i in 0..self.slots.len() {
            if Self::shares_endpoint(&self.slots[i], x) {
                continue;
            }
            self.slots[i].push(x);
            if self.pp.slot_conflict_free(&self.slots[i]) {
                self.recurse(next + 1);
            }
            self.slots[i].pop();
        }
        self.slots.push(vec![x]);
        if self.pp.slot_conflict_free(self.slots.last().unwrap()) {
            self.recurse(next + 1);
        }
        self.slots.pop();
    }
}

/// Finds the schedule with maximum spatial reuse by exhaustive search.
/// Returns an error naming the limit when the instance has more than
/// `max_edges` communication edges.
pub fn optimal_schedule_bruteforce(
    net: &Network,
    g: &TwoTierGraph,
    rp: &RadioParams,
    max_edges: usize,
) -> Result<Schedule> {
    let edges = g.comm_edges().to_vec();
    if edges.len() > max_edges {
        return Err(Error::InstanceTooLarge { edges: edges.len(), limit: max_edges });
    }
    if edges.is_empty() {
        return Ok(Schedule::empty());
    }
    let pp = PathPower::new(net, rp);
    let mut search = Search { edges, pp: &pp, slots: Vec::new(), best: None };
    search.recurse(0);
    let best = search
        .best
        .expect("every edge can at least occupy a slot of its own");
    Ok(Schedule::new(best))
}
