//! Entity correspondence between two versions of a CAD boundary representation.
//!
//! The crate is organized around a single pipeline: load or synthesize a pair
//! of B-rep graphs, bootstrap a matching from coincident geometry, optionally
//! extend it with the deterministic overlap and adjacency-propagation
//! baselines, and finally run the learned iterative matcher that scores
//! candidate pairs with a graph neural network conditioned on the partial
//! matching found so far.
//!
//! Everything here is deterministic: fixed seeds give bitwise identical
//! datasets, trained parameters, and matchings. File formats, the CLI, and
//! anything else that needs `std` IO live in the companion `brepmatch` crate;
//! this crate only needs `alloc`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod adjacency;
pub mod brep;
pub mod eval;
pub mod exact;
pub mod features;
pub mod geom;
pub mod grid;
pub mod matcher;
pub mod matching;
pub mod nn;
pub mod overlap;
pub mod rng;
pub mod synth;
pub mod train;

mod exec;
mod math;

pub use brep::{BRepGraph, EntityKind, EntityRef, GeomClass, GeometrySignature};
pub use matching::{MatchPair, Matching, Provenance};
