//! Exact combinatorics of few-colour connectivity in edge-coloured
//! complete graphs.
//!
//! The library works with `r`-edge-colourings of `K_n` and two scores of a
//! colouring: the largest connected component reachable with edges of at
//! most `s` colours (`val_f`) and the largest number of vertices touched by
//! edges of at most `s` colours (`val_g`). On top of those it provides
//! extremal colouring generators, intersecting-hypergraph machinery,
//! constructive lower-bound algorithms with verified witnesses, and a
//! brute-force oracle for exact values at small parameters.
//!
//! The crate is `no_std` (with `alloc`); IO, JSON formats and the command
//! line front end live in the companion `fewcol-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bits;
pub mod colouring;
pub mod construct;
pub mod evaluate;
pub mod graph;
pub mod guarantee;
pub mod hypergraph;
pub mod oracle;
pub mod ratio;
pub mod report;

pub use colouring::{ColourSet, ColouringError, EdgeColouring};
pub use hypergraph::Hypergraph;
pub use report::{ExactRecord, GuaranteeReport, ValKind};
