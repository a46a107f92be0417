//! End-to-end relation checks under evaluation on iterated-flag bimodules.

use diagrams::{
    closed_auto_ambient, closed_to_bubbles, decomposition_idempotents, equal_under_gamma,
    fake_bubble_poly, identity_decomposition, relation_suite, sideways_ef_to_fe, sideways_fe_to_ef,
    v_bubble_slice, BubblePoly, OneMor, Orientation, PairKind, Slice, SuiteKind, Term2, TwoMor,
};

#[test]
fn full_suite_holds_in_small_dimensions() {
    for ambient in 2..=4u32 {
        let weights = -(ambient as i64)..=(ambient as i64);
        let report = relation_suite(ambient, weights, SuiteKind::All).unwrap();
        assert!(
            report.all_pass(),
            "N={ambient}: {:#?}",
            report.failures()
        );
    }
}

#[test]
fn decomposition_idempotents_resolve_the_identity() {
    for (n, ambient) in [(0i64, 6u32), (1, 5), (2, 6), (-2, 6)] {
        let report = decomposition_idempotents(n, ambient).unwrap();
        assert_eq!(report.splittings.len() as i64, n.abs() + 1);
        assert!(
            report.all_pass(),
            "n={n} N={ambient}: {:#?}",
            report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .collect::<Vec<_>>()
        );
    }
}

#[test]
fn decomposition_with_a_wrong_sign_fails() {
    let n = 2i64;
    let ef = OneMor::from_pattern("EF", n).unwrap();
    let mut terms = vec![Term2::from_int(
        // The true decomposition carries -1 here.
        1,
        sideways_ef_to_fe(0)
            .into_iter()
            .chain(sideways_fe_to_ef(0))
            .collect(),
    )];
    for l in 0..=(n - 1) {
        for j in 0..=l {
            let mut slices = vec![Slice::Dot { strand: 1 }; (l - j) as usize];
            slices.push(Slice::Cap {
                kind: PairKind::EF,
                pos: 0,
            });
            slices.push(Slice::Bubble {
                orient: Orientation::CounterClockwise,
                dots: -n - 1 + j,
                pos: 0,
            });
            slices.push(Slice::Cup {
                kind: PairKind::EF,
                pos: 0,
            });
            slices.extend(vec![Slice::Dot { strand: 1 }; (n - 1 - l) as usize]);
            terms.push(Term2::from_int(1, slices));
        }
    }
    let mutated = TwoMor::new(ef.clone(), terms).unwrap();
    let identity = TwoMor::identity(ef);
    assert!(!equal_under_gamma(&mutated, &identity, Some(6)).unwrap());
}

#[test]
fn mixed_identity_decomposes_for_both_orders() {
    for (n, kind, ambient) in [
        (3i64, PairKind::EF, 5u32),
        (0, PairKind::EF, 4),
        (-3, PairKind::FE, 5),
        (0, PairKind::FE, 4),
    ] {
        let (lhs, rhs) = identity_decomposition(n, kind);
        assert!(
            equal_under_gamma(&lhs, &rhs, Some(ambient)).unwrap(),
            "n={n} {kind:?}"
        );
    }
}

fn bubble_stack(n: i64, parts: &[u32]) -> TwoMor {
    let slices = parts.iter().map(|&j| v_bubble_slice(n, j, 0)).collect();
    TwoMor::stack(OneMor::unit(n), 1, slices).unwrap()
}

#[test]
fn closed_reduction_recovers_bubble_monomials() {
    for n in [-2i64, 0, 1, 3] {
        for parts in [vec![1u32], vec![2], vec![2, 1], vec![3, 2, 1]] {
            let two = bubble_stack(n, &parts);
            let ambient = closed_auto_ambient(&two).unwrap();
            let poly = closed_to_bubbles(&two, ambient).unwrap();
            assert_eq!(poly, BubblePoly::monomial(parts.clone()), "n={n} {parts:?}");
        }
    }
}

#[test]
fn closed_reduction_is_multiplicative() {
    // Stacking closed diagrams multiplies their reductions. The opposite
    // orientation reduces to the alternating polynomial of the recursion,
    // so the product exercises a non-monomial factor.
    let n = 2i64;
    let opposite = TwoMor::stack(
        OneMor::unit(n),
        1,
        vec![Slice::Bubble {
            orient: Orientation::Clockwise,
            dots: n - 1 + 2,
            pos: 0,
        }],
    )
    .unwrap();
    let plain = bubble_stack(n, &[3]);
    let op_poly = closed_to_bubbles(&opposite, closed_auto_ambient(&opposite).unwrap()).unwrap();
    assert_eq!(op_poly, fake_bubble_poly(n, 2).unwrap());

    let product = diagrams::compose_v(&plain, &opposite).unwrap();
    let product_poly = closed_to_bubbles(&product, closed_auto_ambient(&product).unwrap()).unwrap();
    assert_eq!(product_poly, op_poly.times(&BubblePoly::monomial(vec![3])));
}

#[test]
fn bubble_series_product_reduces_to_zero() {
    for n in [-1i64, 0, 2] {
        for d in 1..=4i64 {
            let unit = OneMor::unit(n);
            let terms: Vec<Term2> = (0..=d)
                .map(|j| {
                    Term2::from_int(
                        1,
                        vec![
                            Slice::Bubble {
                                orient: Orientation::Clockwise,
                                dots: n - 1 + j,
                                pos: 0,
                            },
                            Slice::Bubble {
                                orient: Orientation::CounterClockwise,
                                dots: -n - 1 + d - j,
                                pos: 0,
                            },
                        ],
                    )
                })
                .collect();
            let two = TwoMor::new(unit, terms).unwrap();
            let ambient = 8 + (n.rem_euclid(2)) as u32;
            let poly = closed_to_bubbles(&two, ambient).unwrap();
            assert!(poly.is_zero(), "n={n} d={d}: {poly}");
        }
    }
}
