//! NilHecke ring on a strands: divided-difference operators, Schubert
//! polynomials and the matrix-algebra isomorphism.

mod nh;
mod perm;
mod poly;

pub use nh::{
    act, divided_difference_w, e_w0, graded_rank_checks, is_idempotent, nh_mul, parse_nh,
    phi_matrix, schubert, schubert_decompose, staircase, NHElement, PhiMatrix,
};
pub use perm::Perm;
pub use poly::IntPoly;
