use thiserror::Error;

/// Errors produced while building model objects or running the schedulers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("{name} must be strictly positive, got {value}")]
    NotPositive { name: &'static str, value: f64 },

    #[error("communication threshold must exceed 1 in linear units, got {0}")]
    CommThresholdTooLow(f64),

    #[error("thresholds must satisfy 0 < gamma_i < gamma_c, got gamma_i={gamma_i}, gamma_c={gamma_c}")]
    ThresholdOrder { gamma_i: f64, gamma_c: f64 },

    #[error("a network needs at least {min} nodes, got {got}")]
    TooFewNodes { min: usize, got: usize },

    #[error("nodes {a} and {b} have identical coordinates")]
    DuplicateCoordinates { a: usize, b: usize },

    #[error("distance must be strictly positive, got {0}")]
    NonPositiveDistance(f64),

    #[error("node id {0} is not in the network")]
    UnknownNode(usize),

    #[error("node ids in a network file must be 1..=n without gaps or repeats; offending id {0}")]
    BadNodeId(usize),

    #[error("transmitter and receiver must differ, got node {0} on both ends")]
    SelfLink(usize),

    #[error("schedule has no slots")]
    EmptySchedule,

    #[error("{edges} communication edges exceed the exhaustive-search limit of {limit}")]
    InstanceTooLarge { edges: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
