//! The idempotented quantum sl2 algebra over ℤ[q,q⁻¹]: weight-space
//! arithmetic, the canonical basis, six (anti)automorphisms, and the
//! semilinear form in two closed presentations.

mod element;
mod form;
mod label;
mod parse;
mod symmetry;

pub use element::{from_expansion, mul, structure_constants, UdotElement};
pub use form::{
    form, form_alt, form_alt_labels, form_bilinear, form_labels, grdim, indecomposable,
    verify_nasty, NastyMismatch,
};
pub use label::{BasisLabel, Form};
pub use parse::{parse_element, parse_grouped, parse_terms, ParseError};
pub use symmetry::{apply_symmetry, Symmetry};
