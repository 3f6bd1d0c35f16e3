//! Charging dynamics of SYK quantum batteries on interaction graphs.
//!
//! The crate has two halves that check each other:
//!
//! * [`analytic`] evaluates the closed-form disorder-averaged charging power
//!   (Bessel propagator, size-resolved resummations, the Gaussian large-`N`
//!   integral, and the graph generalization driven by block connectivities).
//! * [`evolve`] runs the exact double-quench protocol with state vectors on
//!   `N/2` qubits: prepare the battery ground state, evolve under a sampled
//!   charging Hamiltonian, record `E(t)` and `P_av(t)`, and average over
//!   disorder (and graph) realizations.
//!
//! Supporting modules: [`graph`] builds Majorana interaction graphs and their
//! connectivity profiles, [`disorder`] samples Gaussian couplings with
//! reproducible seeding, [`spinrep`] holds the Jordan-Wigner dictionary and
//! Pauli-string Hamiltonians, [`dense`] provides small dense-matrix reference
//! routines used for verification, and [`harness`] drives experiments and
//! file output for the `sykbat` CLI.
//!
//! With the default `parallel` feature, disorder realizations and the
//! matrix-free Hamiltonian action fan out over a rayon pool; reductions keep
//! a fixed combine order, so results are bit-identical to the sequential
//! build.

pub mod analytic;
pub mod dense;
pub mod disorder;
pub mod evolve;
pub mod graph;
pub mod harness;
pub mod spinrep;
pub(crate) mod util;

pub use disorder::{split_seed, DenseCouplingTensor, EdgeCouplings};
pub use evolve::{AveragedTrace, ChargingTrace, StateVector};
pub use graph::{ConnectivityProfile, GraphSpec, MajoranaGraph};
pub use spinrep::{BatteryModel, PauliString, PauliSum};

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("majorana count must be a positive even integer, got {0}")]
    OddMajoranaCount(usize),
    #[error("graph needs at least {min} vertices, got {got}")]
    TooFewVertices { min: usize, got: usize },
    #[error("ring degree kappa={kappa} invalid for n={n}: need even kappa with 2 <= kappa < n")]
    InvalidRingDegree { n: usize, kappa: usize },
    #[error("probability must lie in [0, 1], got {0}")]
    InvalidProbability(f64),
    #[error("block size k={k} out of range 1..={n}")]
    BlockOutOfRange { k: usize, n: usize },
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("need at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },
    #[error("interaction order q={q} invalid for n={n}: need even q with 2 <= q <= n")]
    InvalidInteractionOrder { n: usize, q: usize },
    #[error("majorana index {index} out of range 1..={n}")]
    MajoranaIndexOutOfRange { index: usize, n: usize },
    #[error("repeated majorana index {0} in operator product")]
    RepeatedMajoranaIndex(usize),
    #[error("couplings were sampled for a different graph")]
    CouplingsGraphMismatch,
    #[error("dimension mismatch: operator on {op} qubits, state on {state}")]
    DimensionMismatch { op: usize, state: usize },
    #[error("operator is not Hermitian")]
    NotHermitian,
    #[error("propagator failed to reach tolerance {tol} within {max_dim} Krylov vectors")]
    PropagatorStalled { tol: f64, max_dim: usize },
    #[error("time grid invalid: t_max={t_max}, n_t={n_t}")]
    InvalidTimeGrid { t_max: f64, n_t: usize },
    #[error("argument out of supported range: {0}")]
    OutOfRange(String),
    #[error("connectivity profile missing g_{0}")]
    MissingConnectivity(usize),
    #[error("scaling fit needs >= 3 points with positive values")]
    InvalidFitInput,
    #[error("invalid graph file: {0}")]
    GraphParse(String),
    #[error("invalid config: {0}")]
    Config(String),
    #[error("resource ceiling exceeded: n={n} majoranas > limit {limit} (override with --max-n)")]
    ResourceCeiling { n: usize, limit: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
