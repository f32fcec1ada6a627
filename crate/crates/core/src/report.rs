//! Certificate objects produced by the guarantee algorithms and the oracle.

use alloc::vec::Vec;
use core::fmt;

use crate::colouring::{ColourSet, EdgeColouring};
use crate::ratio::{ceil_rat, Rat};

/// Which of the two scores a record refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValKind {
    F,
    G,
}

impl fmt::Display for ValKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValKind::F => write!(f, "f"),
            ValKind::G => write!(f, "g"),
        }
    }
}

/// Output of a constructive lower-bound algorithm: a colour set, a witness
/// vertex set and the exact rational bound it is claimed to meet.
///
/// `k` is the connectivity level demanded of the witness in the union of
/// the chosen colours: 0 means every witness vertex is touched, 1 means
/// connected. `certified` is false when the producing algorithm could not
/// certify the bound (heuristic path or outside a theorem's range); an
/// uncertified report still carries a valid witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuaranteeReport {
    pub colours: ColourSet,
    pub witness_vertices: Vec<u32>,
    pub claimed_bound: Rat,
    pub achieved: u32,
    pub k: u32,
    pub certified: bool,
}

impl GuaranteeReport {
    /// Exact ceiling of the claimed bound.
    pub fn claimed_ceiling(&self) -> i128 {
        ceil_rat(&self.claimed_bound)
    }

    /// `achieved >= ceil(claimed_bound)`, the contract of a certified report.
    pub fn meets_claim(&self) -> bool {
        self.achieved as i128 >= self.claimed_ceiling()
    }
}

/// An exact value of f or g at one parameter cell, with an extremal
/// colouring witnessing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactRecord {
    pub n: u32,
    pub r: u32,
    pub s: u32,
    pub kind: ValKind,
    pub value: u32,
    pub extremal_colouring: EdgeColouring,
}
