//! The standard (anti)automorphisms: weight flips ω and σ, the bar
//! involution ψ, the adjunction antiautomorphism τ with its inverse, and
//! their composite ρ.

use crate::{BasisLabel, UdotElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// E ↔ F, weights negated; algebra automorphism.
    Omega,
    /// word reversal with weights negated; antiautomorphism.
    Sigma,
    /// bar involution: q ↦ q⁻¹ on coefficients, basis monomials fixed.
    Psi,
    /// adjunction antiautomorphism; twists coefficients by bar and a q-power.
    Tau,
    TauInv,
    /// ψ∘τ; an involution.
    Rho,
}

impl Symmetry {
    pub const ALL: [Symmetry; 6] = [
        Symmetry::Omega,
        Symmetry::Sigma,
        Symmetry::Psi,
        Symmetry::Tau,
        Symmetry::TauInv,
        Symmetry::Rho,
    ];
}

/// Image of an element under one of the symmetries, re-expanded over the
/// internal EF-ordered basis.
pub fn apply_symmetry(which: Symmetry, x: &UdotElement) -> UdotElement {
    let (src, dst) = (x.src_weight(), x.dst_weight());
    let (nsrc, ndst) = match which {
        Symmetry::Omega => (-src, -dst),
        Symmetry::Sigma => (-dst, -src),
        Symmetry::Psi => (src, dst),
        Symmetry::Tau | Symmetry::TauInv | Symmetry::Rho => (dst, src),
    };
    let mut out = UdotElement::zero(nsrc, ndst);
    for (label, p) in x.terms() {
        let (a, b, n) = (label.a(), label.b(), label.n());
        let m = label.dst_weight();
        let t = a as i64 - b as i64;
        let (image, coeff) = match which {
            // q^s E^(a)F^(b)1_n ↦ q^s F^(a)E^(b)1_{-n}
            Symmetry::Omega => (BasisLabel::fe(b, a, -n), p.clone()),
            // q^s 1_m E^(a)F^(b)1_n ↦ q^s 1_{-n} F^(b)E^(a) 1_{-m}
            Symmetry::Sigma => (BasisLabel::fe(a, b, -m), p.clone()),
            Symmetry::Psi => (*label, p.bar()),
            // q^s 1_m E^(a)F^(b)1_n ↦ bar(q^s) q^{-(a-b)(a-b+n)} 1_n E^(b)F^(a) 1_m
            Symmetry::Tau => (BasisLabel::ef(b, a, m), p.bar().shifted(-t * (t + n))),
            Symmetry::TauInv => (BasisLabel::ef(b, a, m), p.bar().shifted(t * (t + n))),
            Symmetry::Rho => (BasisLabel::ef(b, a, m), p.shifted(t * (t + n))),
        };
        out += &UdotElement::from_label(image, coeff);
    }
    out
}
