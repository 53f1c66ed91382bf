//! Cayley graphs, graph automorphism groups, and exact distinguishing
//! numbers and indices, together with a theorem-verification harness over a
//! reproducible desk-scale corpus.
//!
//! The crate splits into five layers:
//!
//! - group machinery: [`perm`], [`group`], [`permgroup`], [`gaut`], [`action`]
//! - graphs: [`graph`], [`graph6`], [`cayley`], [`hamilton`], [`regular`]
//! - symmetry analysis: [`symmetry`]
//! - distinguishing labelings: [`distinguishing`]
//! - the verification harness: [`harness`]
//!
//! All values are immutable after construction and every operation is a pure
//! function of its inputs, so concurrent use needs no coordination.

pub mod action;
pub mod cayley;
pub mod distinguishing;
pub mod error;
pub mod gaut;
pub mod graph;
pub mod graph6;
pub mod group;
pub mod hamilton;
pub mod harness;
pub mod perm;
pub mod permgroup;
pub mod regular;
pub mod symmetry;

pub use error::Error;
pub use perm::Perm;
