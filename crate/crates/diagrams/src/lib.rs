//! String diagrams for the categorified quantum sl2: slice stacks, their
//! evaluation on flag bimodules, symmetries, bubble reduction, and the
//! defining relation suite.

use std::fmt;

mod bubbles;
mod endring;
mod eval;
mod linalg;
mod mor;
mod relations;
mod symmetry;

pub use bubbles::{
    bubble_span_check, closed_auto_ambient, closed_to_bubbles, fake_bubble_poly, v_bubble_image,
    v_bubble_slice, BubblePoly,
};
pub use endring::{endring_basis, endring_dim_check, endring_series_coeff, EndringReport};
pub use eval::{auto_ambient, equal_under_gamma, eval, generator_exponents, GammaMap};
pub use mor::{
    compose_h, compose_v, from_json, from_json_str, target_of_slices, term_degree, to_json,
    OneMor, Slice, Term2, TwoMor,
};
pub use relations::{
    decomposition_idempotents, identity_decomposition, relation_suite, sideways_ef_to_fe,
    sideways_fe_to_ef, DecompositionReport, RelationCheck, SuiteKind, SuiteReport,
};
pub use symmetry::{apply_symmetry, left_adjoint, right_adjoint, Symmetry};

pub use flag::{Orientation, PairKind, Strand};

/// Errors from building, transforming, or evaluating diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramError {
    /// A slice does not fit the strand column at its level.
    MalformedSlice(String),
    /// Sources and targets fail to line up for a composite or comparison.
    BoundaryMismatch(String),
    /// The weight disagrees with the ambient dimension mod 2.
    ParityMismatch { weight: i64, ambient: u32 },
    /// Bad textual or JSON input.
    Parse(String),
    /// A closed-diagram reduction was asked of a diagram with endpoints.
    NotClosed(String),
    /// The bubble coordinates of a closed diagram are not pinned down in
    /// this ambient dimension.
    UnsolvableReduction { ambient: u32, detail: String },
    /// A formal bubble was requested outside the low-degree range.
    FakeBubbleRange { weight: i64, j: u32 },
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::MalformedSlice(detail) => write!(f, "malformed slice: {detail}"),
            DiagramError::BoundaryMismatch(detail) => write!(f, "boundary mismatch: {detail}"),
            DiagramError::ParityMismatch { weight, ambient } => write!(
                f,
                "weight {weight} has the wrong parity for ambient dimension {ambient}"
            ),
            DiagramError::Parse(detail) => write!(f, "parse error: {detail}"),
            DiagramError::NotClosed(detail) => {
                write!(f, "diagram is not closed: {detail}")
            }
            DiagramError::UnsolvableReduction { ambient, detail } => write!(
                f,
                "reduction is not determined at ambient dimension {ambient} ({detail}); \
                 try a larger ambient dimension"
            ),
            DiagramError::FakeBubbleRange { weight, j } => write!(
                f,
                "no formal bubble of degree {} at weight {weight}; the formal range is 0..={}",
                2 * j,
                weight.abs()
            ),
        }
    }
}

impl std::error::Error for DiagramError {}

impl From<flag::FlagError> for DiagramError {
    fn from(err: flag::FlagError) -> Self {
        DiagramError::MalformedSlice(err.to_string())
    }
}
