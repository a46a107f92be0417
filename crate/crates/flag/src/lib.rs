//! Cohomology rings of Grassmannians and iterated flag varieties, and the
//! graded bimodule calculus between them.

mod bim;
mod gr;
mod partition;

pub use bim::{
    bubble_class, xi_cap, xi_reduce, BimElement, BimSignature, Orientation, PairKind, Strand,
};
pub use gr::{gr_from_poly, gr_from_poly_str, gr_mul, graded_census, Gen, GrElement};
pub use partition::{partitions_in_box, Partition};

use std::fmt;

/// Errors from flag-variety operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlagError {
    /// The signature contains a region outside the ambient flag range.
    ZeroObject,
    /// A crossing or cap was applied to strands of the wrong orientations.
    OrientationMismatch,
    /// A polynomial expression used a symbol outside the generator alphabet.
    UnknownSymbol(String),
}

impl fmt::Display for FlagError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlagError::ZeroObject => write!(f, "signature denotes the zero bimodule"),
            FlagError::OrientationMismatch => {
                write!(f, "strand orientations do not match the requested map")
            }
            FlagError::UnknownSymbol(sym) => write!(f, "unknown symbol `{sym}`"),
        }
    }
}

impl std::error::Error for FlagError {}
