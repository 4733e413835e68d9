//! QoS-aware user association and load balancing for two-tier heterogeneous
//! cellular networks.
//!
//! The crate simulates downlink HetNets in which high-power macro and
//! low-power pico base stations serve users with per-user rate requirements.
//! A user's requirement translates into a subband demand on each candidate
//! base station, and the association problem is to assign every user to
//! exactly one base station so that network-wide weighted log-utility of
//! load efficiency is maximized under a per-station resource budget.
//!
//! Functionality is split into:
//!
//! - [`channel`]: topology generation, path loss, shadowing, SINR and
//!   long-term achievable rates;
//! - [`assoc`]: the association data model, subband demands, loads and
//!   objective evaluation;
//! - [`algorithms`]: max-rate, user-based distributed, QoS-aware
//!   distributed (dual decomposition) and centralized max-probability
//!   association solvers;
//! - [`scheduling`]: greedy MPRF/MARF admission under the subband budget;
//! - [`metrics`]: call blocking probability and Jain fairness indices;
//! - [`oracle`]: exhaustive solvers for tiny instances, used as ground
//!   truth in tests;
//! - [`experiment`]: config ingestion, seeded Monte-Carlo trials, density
//!   sweeps and CSV/JSON persistence.

pub mod algorithms;
pub mod assoc;
pub mod channel;
pub mod experiment;
pub mod metrics;
pub mod oracle;
pub mod scheduling;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid scenario or solver configuration.
    #[error("invalid configuration: {0}")]
    Config(String),
    /// Input outside an operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A solver failed to produce a usable result.
    #[error("solver error: {0}")]
    Solver(String),
    /// Instance exceeds the exhaustive-enumeration bound.
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
