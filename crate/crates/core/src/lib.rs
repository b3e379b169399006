//! Exact spectral data and mixing-time bounds for the random-to-random card
//! shuffle.
//!
//! The random-to-random shuffle removes a uniformly chosen card from an
//! n-card deck and reinserts it at a uniformly chosen position; each step is
//! one of n² equally likely moves. This crate computes the walk's exact
//! eigenvalues and multiplicities from partition/tableau combinatorics
//! ([`spectrum`]), evaluates ℓ² mixing-time bounds and the cutoff schedule
//! built on top of them ([`bounds`]), and cross-checks everything against a
//! brute-force transition-matrix oracle at small deck sizes ([`oracle`]).
//!
//! The combinatorial substrate lives in [`partitions`] (Young diagrams,
//! horizontal strips, hook lengths, dominance) and [`tableaux`] (standard and
//! semistandard tableaux, desarrangement counts, jeu de taquin, Kostka
//! numbers).

pub mod bounds;
mod error;
pub mod oracle;
pub mod partitions;
pub mod spectrum;
pub mod tableaux;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
