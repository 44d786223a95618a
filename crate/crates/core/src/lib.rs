//! SINR-aware spatial-TDMA link scheduling.
//!
//! The crate builds link schedules for static multihop wireless networks
//! under the physical interference model: a slot's transmissions all succeed
//! only if every receiver's SINR, with interference summed over all
//! simultaneous transmitters, meets the communication threshold.
//!
//! The pieces, bottom up:
//!
//! * [`model`]: networks, links, schedules, radio parameters, unit
//!   conversions, and the deterministic RNG.
//! * [`radio`]: path loss, SNR/SINR, communication and interference ranges,
//!   and random channel gains for fading evaluation.
//! * [`graph`]: the two-tier (communication/interference) graph, edge
//!   conflict predicates, vertex labeling, and the decomposition of the
//!   communication graph into oriented forests.
//! * [`cfls`]: the SINR-aware scheduler, which colors edges forest by
//!   forest, admitting an edge into a slot only if every receiver in the
//!   slot still meets the threshold.
//! * [`baseline`]: the graph-based scheduler, identical pipeline but with
//!   pairwise conflict rules instead of SINR checks.
//! * [`verify`]: an independently implemented constraint checker and the
//!   spatial-reuse metric.
//! * [`oracle`]: exhaustive optimal scheduling for instances small enough
//!   to enumerate.

#![forbid(unsafe_code)]

pub mod baseline;
pub mod cfls;
pub mod error;
pub mod graph;
pub mod model;
pub mod oracle;
pub mod radio;
pub mod verify;

pub use error::{Error, Result};
pub use model::{build_network, Link, Network, RadioConfig, RadioParams, Schedule, SimRng};
