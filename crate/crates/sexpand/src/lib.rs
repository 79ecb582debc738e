//! Exact-arithmetic semigroup expansion of Lie algebras.
//!
//! Everything here runs over the rationals: structure constants, Killing
//! forms, Sylvester inertia, semigroup selector tensors and the expanded
//! metric are all computed exactly, with no floating point anywhere.
//!
//! The main pipeline is
//!
//! 1. build or load a Lie algebra as a structure-constant tensor ([`liecore`]),
//! 2. pick or enumerate a finite abelian semigroup ([`semigroups`]),
//! 3. expand ([`expansion`]) and analyze the resulting Killing geometry
//!    ([`geometry`]),
//! 4. optionally search for the semigroup connecting two given algebras
//!    ([`discovery`]) or certify non-simplicity of an expansion
//!    ([`structure`]).
//!
//! See the `examples/` directory for runnable entry points covering each
//! capability, and the `sexpand` binary for a thin command-line front end.

pub mod cli;
pub mod discovery;
pub mod expansion;
pub mod geometry;
pub mod json;
pub mod liecore;
pub mod ratlin;
pub mod report;
pub mod semigroups;
pub mod structure;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not symmetric (first mismatch at ({0}, {1}))")]
    NonSymmetric(usize, usize),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix entry at ({0}, {1}) is not an integer")]
    NonIntegerEntry(usize, usize),
    #[error("unknown algebra name: {0}")]
    UnknownName(String),
    #[error("semigroup has no zero element")]
    NoZeroElement,
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("decomposition is not resonant: {0}")]
    ResonanceFailed(String),
    #[error("invalid counts: H + Q = {0} exceeds P = {1}")]
    InvalidCounts(usize, usize),
    #[error("source algebra has Killing rank 0; the rank equations do not constrain (P, H, Q)")]
    UnconstrainedSource,
    #[error("plan order P = {0} exceeds the enumeration bound {1}")]
    PlanOutOfBounds(usize, usize),
    #[error("angle factor undefined: M_K[{0}][{0}] = 0")]
    IllDefinedAngle(usize),
    #[error("no non-simplicity certificate: a one-element expansion of a simple algebra is the algebra itself")]
    NoCertificate,
    #[error("base tensor is not invariant: ad-invariance fails at triple ({0}, {1}, {2})")]
    NotInvariantBase(usize, usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation failed: {0}")]
    Invalid(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use ratlin::{rat, rint, InertiaSignature, Rat, RatMatrix};
