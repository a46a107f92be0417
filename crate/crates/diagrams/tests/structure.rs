//! Property tests for the structural laws of diagram composition and
//! evaluation.

use diagrams::{
    apply_symmetry, compose_h, compose_v, eval, from_json, generator_exponents, target_of_slices,
    term_degree, to_json, OneMor, Orientation, PairKind, Slice, Strand, Symmetry, Term2, TwoMor,
};
use flag::BimElement;
use proptest::prelude::*;

const PATTERNS: [&str; 7] = ["", "E", "F", "EF", "FE", "EE", "FF"];

/// Enumerates every slice that can follow the given column, keeping the
/// diagram at most `max_width` strands wide.
fn candidate_slices(col: &OneMor, max_width: usize) -> Vec<Slice> {
    let len = col.num_strands();
    let mut out = Vec::new();
    for s in 1..=len {
        out.push(Slice::Dot { strand: s });
    }
    for s in 1..len {
        if col.strand_kind(s) == col.strand_kind(s + 1) {
            out.push(Slice::Cross { strand: s });
        }
    }
    if len + 2 <= max_width {
        for pos in 0..=len {
            out.push(Slice::Cup {
                kind: PairKind::EF,
                pos,
            });
            out.push(Slice::Cup {
                kind: PairKind::FE,
                pos,
            });
        }
    }
    for pos in 0..len.saturating_sub(1) {
        let (right, left) = (col.strand_kind(pos + 1), col.strand_kind(pos + 2));
        if right == Strand::E && left == Strand::F {
            out.push(Slice::Cap {
                kind: PairKind::FE,
                pos,
            });
        }
        if right == Strand::F && left == Strand::E {
            out.push(Slice::Cap {
                kind: PairKind::EF,
                pos,
            });
        }
    }
    for dots in -2..=2i64 {
        out.push(Slice::Bubble {
            orient: if dots % 2 == 0 {
                Orientation::Clockwise
            } else {
                Orientation::CounterClockwise
            },
            dots,
            pos: 0,
        });
    }
    out
}

fn slices_from_seeds(source: &OneMor, seeds: &[u8], max_width: usize) -> Vec<Slice> {
    let mut col = source.clone();
    let mut slices = Vec::new();
    for &seed in seeds {
        let candidates = candidate_slices(&col, max_width);
        if candidates.is_empty() {
            break;
        }
        let slice = candidates[seed as usize % candidates.len()].clone();
        slices.push(slice.clone());
        col = target_of_slices(&col, &[slice]).expect("candidates are valid");
    }
    slices
}

fn arb_column() -> impl Strategy<Value = OneMor> {
    (0..PATTERNS.len(), -3..=3i64)
        .prop_map(|(p, n)| OneMor::from_pattern(PATTERNS[p], n).unwrap())
}

fn arb_seeds() -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(any::<u8>(), 0..=4)
}

fn ambient_for(n: i64) -> u32 {
    if n.rem_euclid(2) == 0 {
        4
    } else {
        5
    }
}

fn source_generators(map: &diagrams::GammaMap, limit: usize) -> Vec<BimElement> {
    generator_exponents(map.source_signature())
        .into_iter()
        .take(limit)
        .map(|exps| BimElement::monomial(map.source_signature().clone(), exps, None))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_functorial(
        source in arb_column(),
        seeds in arb_seeds(),
        split in 0..=4usize,
    ) {
        let slices = slices_from_seeds(&source, &seeds, 4);
        let split = split.min(slices.len());
        let bottom = TwoMor::stack(source.clone(), 1, slices[..split].to_vec()).unwrap();
        let top = TwoMor::stack(bottom.target().clone(), 1, slices[split..].to_vec()).unwrap();
        let whole = TwoMor::stack(source.clone(), 1, slices).unwrap();

        let ambient = ambient_for(source.right_weight());
        let whole_map = eval(&whole, ambient).unwrap();
        let bottom_map = eval(&bottom, ambient).unwrap();
        let top_map = eval(&top, ambient).unwrap();
        for gen in source_generators(&whole_map, 8) {
            let direct = whole_map.apply(&gen).unwrap();
            let staged = top_map.apply(&bottom_map.apply(&gen).unwrap()).unwrap();
            prop_assert_eq!(direct, staged);
        }
    }

    #[test]
    fn evaluation_shifts_degrees_by_the_slice_degree(
        source in arb_column(),
        seeds in arb_seeds(),
    ) {
        let slices = slices_from_seeds(&source, &seeds, 4);
        let two = TwoMor::stack(source.clone(), 1, slices).unwrap();
        let degree = term_degree(&source, &two.terms()[0]).unwrap();
        let ambient = ambient_for(source.right_weight());
        let map = eval(&two, ambient).unwrap();
        for gen in source_generators(&map, 8) {
            let image = map.apply(&gen).unwrap();
            if image.is_zero() {
                continue;
            }
            let input_degree = gen.homogeneous_degree().expect("monomial generators");
            prop_assert_eq!(image.homogeneous_degree(), Some(input_degree + degree));
        }
    }

    #[test]
    fn horizontal_and_vertical_composition_interchange(
        right_source in arb_column(),
        right_seeds in arb_seeds(),
        left_pattern in 0..PATTERNS.len(),
        left_seeds in arb_seeds(),
    ) {
        let right = TwoMor::stack(
            right_source.clone(),
            1,
            slices_from_seeds(&right_source, &right_seeds, 2),
        ).unwrap();
        let left_source = OneMor::from_pattern(
            PATTERNS[left_pattern],
            right_source.left_weight(),
        ).unwrap();
        let left = TwoMor::stack(
            left_source.clone(),
            1,
            slices_from_seeds(&left_source, &left_seeds, 2),
        ).unwrap();

        let glued = compose_h(&left, &right).unwrap();
        let left_then_right = compose_v(
            &compose_h(&left, &TwoMor::identity(right.target().clone())).unwrap(),
            &compose_h(&TwoMor::identity(left_source.clone()), &right).unwrap(),
        ).unwrap();
        let right_then_left = compose_v(
            &compose_h(&TwoMor::identity(left.target().clone()), &right).unwrap(),
            &compose_h(&left, &TwoMor::identity(right_source.clone())).unwrap(),
        ).unwrap();

        let ambient = ambient_for(glued.source().right_weight()) + 2;
        let map = eval(&glued, ambient).unwrap();
        let first = eval(&left_then_right, ambient).unwrap();
        let second = eval(&right_then_left, ambient).unwrap();
        for gen in source_generators(&map, 6) {
            let direct = map.apply(&gen).unwrap();
            prop_assert_eq!(&direct, &first.apply(&gen).unwrap());
            prop_assert_eq!(&direct, &second.apply(&gen).unwrap());
        }
    }

    #[test]
    fn json_round_trips(
        source in arb_column(),
        seeds in arb_seeds(),
        coeff in prop_oneof![1..=5i64, -5..=-1i64],
        second_term in any::<bool>(),
    ) {
        let slices = slices_from_seeds(&source, &seeds, 4);
        let mut terms = vec![Term2::from_int(coeff, slices.clone())];
        if second_term {
            let target = target_of_slices(&source, &slices).unwrap();
            let mut more = slices.clone();
            more.push(if target.num_strands() > 0 {
                Slice::Dot { strand: 1 }
            } else {
                Slice::Bubble {
                    orient: Orientation::Clockwise,
                    dots: 1,
                    pos: 0,
                }
            });
            terms.push(Term2::from_int(-coeff, more));
        }
        let two = TwoMor::new(source, terms).unwrap();
        let back = from_json(&to_json(&two)).unwrap();
        prop_assert_eq!(two, back);
    }

    #[test]
    fn symmetries_preserve_net_degrees_and_invert(
        source in arb_column(),
        seeds in arb_seeds(),
    ) {
        let slices = slices_from_seeds(&source, &seeds, 4);
        let two = TwoMor::stack(source, 1, slices).unwrap();
        let degrees = two.net_degrees().unwrap();
        for s in Symmetry::ALL {
            let image = apply_symmetry(s, &two);
            prop_assert_eq!(image.net_degrees().unwrap(), degrees.clone(), "{:?}", s);
        }
        let involutions = [Symmetry::Omega, Symmetry::Sigma, Symmetry::Psi];
        for s in involutions {
            prop_assert_eq!(apply_symmetry(s, &apply_symmetry(s, &two)), two.clone());
        }
        let rotated = apply_symmetry(Symmetry::TauInv, &apply_symmetry(Symmetry::Tau, &two));
        prop_assert_eq!(rotated, two.clone());
    }
}
