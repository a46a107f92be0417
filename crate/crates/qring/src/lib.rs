//! Exact arithmetic in ℤ[q,q⁻¹] and its fraction field, together with the
//! quantum integers, factorials, binomials and the graded series products g(a).

mod laurent;
mod quantum;
mod ratfun;

pub use laurent::LaurentPoly;
pub use quantum::{check_qidentities, g, qbin, qfact, qint, IdentityReport};
pub use ratfun::RatFun;
