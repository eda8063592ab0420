//! Hochschild lattices from scratch: triwords under the componentwise order,
//! the isomorphic interval of Dyck paths under the dexter order, and the
//! machinery needed to verify their structure exactly — EL-shellability,
//! interval doubling, irreducibles and the spine, multichain counting, and
//! Coxeter polynomials with cyclotomic factorizations.
//!
//! Everything is computed in exact arithmetic (`num-bigint` / `num-rational`);
//! there is no floating point anywhere. The heavier scans fan out with rayon
//! when the `parallel` feature (default) is enabled and degrade to sequential
//! iteration otherwise.

use thiserror::Error;

pub mod coxeter;
pub mod doubling;
pub mod dyck;
pub mod enumeration;
pub mod exec;
pub mod invariants;
pub mod matrix;
pub mod poly;
pub mod poset;
pub mod triword;

pub use dyck::DyckPath;
pub use poset::FinitePoset;
pub use triword::Triword;

/// Errors shared across the crate. Word-shape violations carry enough
/// position information to point at the offending letter.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter {letter:?} at position {position}: alphabet is {{0,1,2}}")]
    BadAlphabet { position: usize, letter: char },
    #[error("a triword cannot start with the letter 2")]
    LeadingTwo,
    #[error("letter 1 at position {one} occurs after letter 0 at position {zero}")]
    ForbiddenZeroOne { zero: usize, one: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("words are incomparable")]
    Incomparable,
    #[error("not a cover pair")]
    NotACover,
    #[error("not a balanced nonnegative step sequence")]
    NotADyckPath,
    #[error("path does not belong to the triword-shaped interval")]
    OutsideInterval,
    #[error("no element labeled {0:?} in the poset")]
    NoSuchElement(String),
    #[error("{lo:?}..{hi:?} is not an interval: endpoints are incomparable")]
    NotAnInterval { lo: String, hi: String },
    #[error("poset too large for this operation: {size} elements (limit {limit})")]
    TooLarge { size: usize, limit: usize },
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("malformed chain: {0}")]
    MalformedChain(String),
    #[error("no factorization into (x^i - 1) powers: {0}")]
    NoPowerProduct(String),
}

pub type Result<T> = std::result::Result<T, Error>;
