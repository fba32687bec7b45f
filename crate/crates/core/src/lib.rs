//! Oriented Hamiltonian paths in tournaments with one deleted arc.
//!
//! A tournament is an orientation of a complete graph. Deleting a single arc
//! leaves a digraph that may or may not contain a Hamiltonian path of a given
//! orientation pattern (a *path type*). This crate provides:
//!
//! - compact tournament and arc-deleted digraph types with a plain-text
//!   serialization format ([`tournament`]),
//! - path types and witness classification ([`pathtype`]),
//! - an exact subset-DP embedding engine plus a brute-force oracle
//!   ([`embed`]),
//! - canonical forms and exhaustive enumeration of tournaments up to
//!   isomorphism ([`enumerate`]),
//! - a self-validating catalog of the exceptional pairs for which two chosen
//!   vertices can both fail to be path origins ([`catalog`]),
//! - exhaustive verification suites that check the catalog and the
//!   survival characterization against the engine ([`verify`]).
//!
//! Vertices are indexed `0..n` internally; every user-facing surface (the
//! `trn` text format's deleted-arc endpoints, witness printing, reports)
//! uses 1-based labels.

pub mod catalog;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod pathtype;
pub mod tournament;
pub mod verify;

pub use embed::PathWitness;
pub use error::Error;
pub use pathtype::{OrientedPathType, Sign};
pub use tournament::{ArcDeletedDigraph, Digraph, Tournament, VertexSet};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
