//! Error type shared across the crate.
//!
//! Most functions in this crate are total on the inputs their callers
//! construct, and internal consistency violations are bugs, not recoverable
//! conditions — those `panic!`/`assert!`.  `Error` is reserved for conditions
//! that user input can legitimately trigger: malformed weights, a weight
//! outside the dominant cone, an unsupported root system name, or an identity
//! check that came out false.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A root-system name that the library does not recognize.
    #[error("unknown root system `{0}` (expected GL<n>, A1, A2, A3, B2, C2 or G2)")]
    UnknownRootSystem(String),

    /// A weight vector whose length does not match the rank.
    #[error("weight {weight:?} has length {}, expected {rank}", weight.len())]
    RankMismatch { weight: Vec<i64>, rank: usize },

    /// A weight that was required to be dominant but is not.
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    /// A weight that was required to lie in the root lattice but does not.
    #[error("weight {0:?} does not lie in the root lattice")]
    NotInRootLattice(Vec<i64>),

    /// The residue characteristic must be a (small) prime.
    #[error("invalid residue characteristic {0}; expected a prime")]
    BadPrime(u32),

    /// An exact identity check failed; the message carries both sides.
    #[error("identity check failed: {0}")]
    CheckFailed(String),

    /// A value that should have been a plain Laurent polynomial in `v`
    /// retained a nontrivial root-of-unity or √p component.
    #[error("value does not reduce to the base ring: {0}")]
    NotReduced(String),

    /// Malformed user input (CLI strings, JSON payloads).
    #[error("invalid input: {0}")]
    BadInput(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
