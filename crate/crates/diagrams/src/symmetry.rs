//! Diagram symmetries: the weight flips, the bar flip, and the duality
//! rotations, together with the adjoint operation on 1-morphisms.

use flag::{Orientation, PairKind, Strand};
use num_rational::BigRational;

use crate::mor::{OneMor, Slice, Term2, TwoMor};

/// The symmetries of the 2-category, named as for the decategorified algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// E ↔ F with weights negated; covariant, an involution.
    Omega,
    /// left-right mirror with weights negated; covariant on 2-morphisms.
    Sigma,
    /// top-bottom flip; contravariant, fixes weights, negates shifts.
    Psi,
    /// half-turn rotation; contravariant, sends a column to its right adjoint.
    Tau,
    /// half-turn rotation onto the left adjoint; inverse of the other rotation.
    TauInv,
}

impl Symmetry {
    pub const ALL: [Symmetry; 5] = [
        Symmetry::Omega,
        Symmetry::Sigma,
        Symmetry::Psi,
        Symmetry::Tau,
        Symmetry::TauInv,
    ];
}

fn flip_strand(s: Strand) -> Strand {
    match s {
        Strand::E => Strand::F,
        Strand::F => Strand::E,
    }
}

fn swap_kind(kind: PairKind) -> PairKind {
    match kind {
        PairKind::EF => PairKind::FE,
        PairKind::FE => PairKind::EF,
    }
}

fn swap_orient(orient: Orientation) -> Orientation {
    match orient {
        Orientation::Clockwise => Orientation::CounterClockwise,
        Orientation::CounterClockwise => Orientation::Clockwise,
    }
}

/// E ↔ F with the weight negated; shift kept.
fn omega_mor(m: &OneMor) -> OneMor {
    let strands = m.strands().iter().map(|&s| flip_strand(s)).collect();
    OneMor::new(strands, -m.right_weight(), m.shift())
}

/// Left-right mirror: letters kept, order reversed, new right weight is the
/// negated left weight; shift kept.
fn sigma_mor(m: &OneMor) -> OneMor {
    let strands = m.strands().iter().rev().copied().collect();
    OneMor::new(strands, -m.left_weight(), m.shift())
}

fn adjoint_strands(m: &OneMor) -> Vec<Strand> {
    m.strands().iter().rev().map(|&s| flip_strand(s)).collect()
}

/// Right adjoint column: letters flipped and reversed, weights swapped, and
/// the shift forced by the cap and cup degrees.
pub fn right_adjoint(m: &OneMor) -> OneMor {
    let mut shift = -m.shift();
    for strand in 1..=m.num_strands() {
        let w = m.region_weight(strand - 1);
        shift += match m.strand_kind(strand) {
            Strand::E => -w - 1,
            Strand::F => w - 1,
        };
    }
    OneMor::new(adjoint_strands(m), m.left_weight(), shift)
}

/// Left adjoint column; inverse of the right adjoint.
pub fn left_adjoint(m: &OneMor) -> OneMor {
    let mut shift = -m.shift();
    for strand in 1..=m.num_strands() {
        let w = m.region_weight(strand - 1);
        shift += match m.strand_kind(strand) {
            Strand::E => w + 1,
            Strand::F => -w + 1,
        };
    }
    OneMor::new(adjoint_strands(m), m.left_weight(), shift)
}

fn crossing_count(slices: &[Slice]) -> usize {
    slices
        .iter()
        .filter(|s| matches!(s, Slice::Cross { .. }))
        .count()
}

fn signed(coeff: &BigRational, crossings: usize) -> BigRational {
    if crossings % 2 == 1 {
        -coeff.clone()
    } else {
        coeff.clone()
    }
}

fn omega_term(t: &Term2) -> Term2 {
    let slices = t
        .slices
        .iter()
        .map(|s| match *s {
            Slice::Dot { strand } => Slice::Dot { strand },
            Slice::Cross { strand } => Slice::Cross { strand },
            Slice::Cup { kind, pos } => Slice::Cup {
                kind: swap_kind(kind),
                pos,
            },
            Slice::Cap { kind, pos } => Slice::Cap {
                kind: swap_kind(kind),
                pos,
            },
            Slice::Bubble { orient, dots, pos } => Slice::Bubble {
                orient: swap_orient(orient),
                dots,
                pos,
            },
        })
        .collect();
    Term2::new(signed(&t.coeff, crossing_count(&t.slices)), slices)
}

/// Walks the slices of a term, handing each one to `f` along with the strand
/// count of the column below it.
fn map_with_levels(src_strands: usize, slices: &[Slice], mut f: impl FnMut(usize, &Slice) -> Slice) -> Vec<Slice> {
    let mut level = src_strands;
    slices
        .iter()
        .map(|s| {
            let out = f(level, s);
            match s {
                Slice::Cup { .. } => level += 2,
                Slice::Cap { .. } => level -= 2,
                _ => {}
            }
            out
        })
        .collect()
}

fn sigma_term(src_strands: usize, t: &Term2) -> Term2 {
    let slices = map_with_levels(src_strands, &t.slices, |level, s| match *s {
        Slice::Dot { strand } => Slice::Dot {
            strand: level + 1 - strand,
        },
        Slice::Cross { strand } => Slice::Cross {
            strand: level - strand,
        },
        Slice::Cup { kind, pos } => Slice::Cup {
            kind: swap_kind(kind),
            pos: level - pos,
        },
        Slice::Cap { kind, pos } => Slice::Cap {
            kind: swap_kind(kind),
            pos: level - 2 - pos,
        },
        Slice::Bubble { orient, dots, pos } => Slice::Bubble {
            orient: swap_orient(orient),
            dots,
            pos: level - pos,
        },
    });
    Term2::new(signed(&t.coeff, crossing_count(&t.slices)), slices)
}

fn psi_term(t: &Term2) -> Term2 {
    let mut slices: Vec<Slice> = t
        .slices
        .iter()
        .map(|s| match *s {
            Slice::Cup { kind, pos } => Slice::Cap { kind, pos },
            Slice::Cap { kind, pos } => Slice::Cup { kind, pos },
            ref other => other.clone(),
        })
        .collect();
    slices.reverse();
    Term2::new(t.coeff.clone(), slices)
}

fn tau_term(src_strands: usize, t: &Term2) -> Term2 {
    let mut slices = map_with_levels(src_strands, &t.slices, |level, s| match *s {
        Slice::Dot { strand } => Slice::Dot {
            strand: level + 1 - strand,
        },
        Slice::Cross { strand } => Slice::Cross {
            strand: level - strand,
        },
        Slice::Cup { kind, pos } => Slice::Cap {
            kind,
            pos: level - pos,
        },
        Slice::Cap { kind, pos } => Slice::Cup {
            kind,
            pos: level - 2 - pos,
        },
        Slice::Bubble { orient, dots, pos } => Slice::Bubble {
            orient,
            dots,
            pos: level - pos,
        },
    });
    slices.reverse();
    Term2::new(t.coeff.clone(), slices)
}

/// Image of a 2-morphism under one of the symmetries.
pub fn apply_symmetry(which: Symmetry, a: &TwoMor) -> TwoMor {
    let src_strands = a.source().num_strands();
    let (source, target, terms): (OneMor, OneMor, Vec<Term2>) = match which {
        Symmetry::Omega => (
            omega_mor(a.source()),
            omega_mor(a.target()),
            a.terms().iter().map(omega_term).collect(),
        ),
        Symmetry::Sigma => (
            sigma_mor(a.source()),
            sigma_mor(a.target()),
            a.terms().iter().map(|t| sigma_term(src_strands, t)).collect(),
        ),
        Symmetry::Psi => (
            a.target().with_shift(-a.target().shift()),
            a.source().with_shift(-a.source().shift()),
            a.terms().iter().map(psi_term).collect(),
        ),
        Symmetry::Tau => (
            right_adjoint(a.target()),
            right_adjoint(a.source()),
            a.terms().iter().map(|t| tau_term(src_strands, t)).collect(),
        ),
        Symmetry::TauInv => (
            left_adjoint(a.target()),
            left_adjoint(a.source()),
            a.terms().iter().map(|t| tau_term(src_strands, t)).collect(),
        ),
    };
    TwoMor::with_target(source, target, terms).expect("symmetries preserve well-formedness")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mor::compose_v;

    fn mor(pattern: &str, n: i64) -> OneMor {
        OneMor::from_pattern(pattern, n).unwrap()
    }

    fn sample() -> TwoMor {
        // A two-term endomorphism of EF with a crossing detour through EEFF.
        let src = mor("EF", 2);
        TwoMor::new(
            src,
            vec![
                Term2::from_int(
                    3,
                    vec![
                        Slice::Cup {
                            kind: PairKind::EF,
                            pos: 1,
                        },
                        Slice::Cross { strand: 3 },
                        Slice::Cap {
                            kind: PairKind::EF,
                            pos: 1,
                        },
                        Slice::Dot { strand: 2 },
                    ],
                ),
                Term2::from_int(
                    -1,
                    vec![
                        Slice::Bubble {
                            orient: Orientation::Clockwise,
                            dots: 1,
                            pos: 1,
                        },
                        Slice::Dot { strand: 1 },
                    ],
                ),
            ],
        )
        .unwrap()
    }

    #[test]
    fn adjoint_shifts_of_a_single_letter() {
        let e = mor("E", 0).with_shift(2);
        let r = right_adjoint(&e);
        assert_eq!(r.pattern(), "F");
        assert_eq!(r.right_weight(), 2);
        assert_eq!(r.shift(), -1 - 2);
        let l = left_adjoint(&e);
        assert_eq!(l.shift(), 1 - 2);
        assert_eq!(left_adjoint(&r), e);
        assert_eq!(right_adjoint(&l), e);
    }

    #[test]
    fn omega_is_an_involution() {
        let a = sample();
        assert_eq!(apply_symmetry(Symmetry::Omega, &apply_symmetry(Symmetry::Omega, &a)), a);
    }

    #[test]
    fn sigma_is_an_involution() {
        let a = sample();
        let im = apply_symmetry(Symmetry::Sigma, &a);
        assert_eq!(im.source().pattern(), "FE");
        assert_eq!(im.source().right_weight(), -2);
        assert_eq!(apply_symmetry(Symmetry::Sigma, &im), a);
    }

    #[test]
    fn psi_is_an_involution() {
        let a = sample();
        assert_eq!(apply_symmetry(Symmetry::Psi, &apply_symmetry(Symmetry::Psi, &a)), a);
    }

    #[test]
    fn rotations_invert_each_other() {
        let a = sample();
        assert_eq!(apply_symmetry(Symmetry::TauInv, &apply_symmetry(Symmetry::Tau, &a)), a);
        assert_eq!(apply_symmetry(Symmetry::Tau, &apply_symmetry(Symmetry::TauInv, &a)), a);
    }

    #[test]
    fn symmetries_preserve_net_degree() {
        let a = sample();
        let net = |x: &TwoMor| {
            x.term_degrees()
                .unwrap()
                .into_iter()
                .map(|d| d + x.target().shift() - x.source().shift())
                .collect::<Vec<_>>()
        };
        let base = net(&a);
        for which in Symmetry::ALL {
            assert_eq!(net(&apply_symmetry(which, &a)), base, "{which:?}");
        }
    }

    #[test]
    fn rotation_turns_a_zigzag_into_the_other_zigzag() {
        let e = mor("E", 0);
        let zig = TwoMor::stack(
            e.clone(),
            1,
            vec![
                Slice::Cup {
                    kind: PairKind::FE,
                    pos: 0,
                },
                Slice::Cap {
                    kind: PairKind::EF,
                    pos: 1,
                },
            ],
        )
        .unwrap();
        let rot = apply_symmetry(Symmetry::Tau, &zig);
        assert_eq!(rot.source().pattern(), "F");
        assert_eq!(
            rot.terms()[0].slices,
            vec![
                Slice::Cup {
                    kind: PairKind::EF,
                    pos: 0,
                },
                Slice::Cap {
                    kind: PairKind::FE,
                    pos: 1,
                },
            ]
        );
    }

    #[test]
    fn omega_commutes_with_composition() {
        let e = mor("E", 0);
        let dot = TwoMor::stack(e.clone(), 2, vec![Slice::Dot { strand: 1 }]).unwrap();
        let zig = TwoMor::stack(
            e,
            1,
            vec![
                Slice::Cup {
                    kind: PairKind::FE,
                    pos: 0,
                },
                Slice::Cap {
                    kind: PairKind::EF,
                    pos: 1,
                },
            ],
        )
        .unwrap();
        let comp = compose_v(&dot, &zig).unwrap();
        let lhs = apply_symmetry(Symmetry::Omega, &comp);
        let rhs = compose_v(
            &apply_symmetry(Symmetry::Omega, &dot),
            &apply_symmetry(Symmetry::Omega, &zig),
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }
}
