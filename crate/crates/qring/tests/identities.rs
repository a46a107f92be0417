//! Identity sweeps and algebraic invariants for the q-ring layer.

use num_bigint::BigInt;
use proptest::prelude::*;
use qring::{check_qidentities, g, qbin, qfact, qint, LaurentPoly, RatFun};

#[test]
fn full_identity_sweep() {
    let report = check_qidentities(8);
    assert!(report.all_pass(), "\n{report}");
}

#[test]
fn gaussian_binomial_symmetry() {
    for m in 0..=10i64 {
        for j in 0..=m as u32 {
            assert_eq!(qbin(m, j), qbin(m, m as u32 - j), "m={m} j={j}");
        }
    }
}

#[test]
fn factorial_to_binomial() {
    // [a+b choose a]·[a]!·[b]! = [a+b]!
    for a in 0..=5u32 {
        for b in 0..=5u32 {
            let lhs = &(&qbin((a + b) as i64, a) * &qfact(a)) * &qfact(b);
            assert_eq!(lhs, qfact(a + b));
        }
    }
}

#[test]
fn graded_rank_product_identity() {
    // [a]!² g(a) = q^{-a(a-1)/2} [a]! (1/(1-q²))^a
    for a in 0..=5u32 {
        let ai = a as i64;
        let lhs = &RatFun::from_poly(&qfact(a) * &qfact(a)) * &g(a);
        let step = RatFun::new(
            LaurentPoly::one(),
            &LaurentPoly::one() - &LaurentPoly::q(2),
        );
        let rhs = &RatFun::from_poly(qfact(a).shifted(-ai * (ai - 1) / 2)) * &step.pow(a as i32);
        assert_eq!(lhs, rhs, "a={a}");
    }
}

#[test]
fn negative_top_binomials() {
    // [-m choose j] = (-1)^j [m+j-1 choose j]
    for m in 0..=6i64 {
        for j in 0..=6u32 {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                qbin(-m, j),
                qbin(m + j as i64 - 1, j).scaled(&BigInt::from(sign)).bar(),
                "m={m} j={j}"
            );
        }
    }
}

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -9i64..=9), 0..6).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p += &LaurentPoly::monomial(e, c);
        }
        p
    })
}

fn arb_nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    arb_poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn bar_is_an_involution(p in arb_poly()) {
        prop_assert_eq!(p.bar().bar(), p);
    }

    #[test]
    fn bar_is_a_ring_map(p in arb_poly(), r in arb_poly()) {
        prop_assert_eq!((&p * &r).bar(), &p.bar() * &r.bar());
        prop_assert_eq!((&p + &r).bar(), &p.bar() + &r.bar());
    }

    #[test]
    fn multiplication_commutes_and_distributes(p in arb_poly(), r in arb_poly(), s in arb_poly()) {
        prop_assert_eq!(&p * &r, &r * &p);
        prop_assert_eq!(&p * &(&r + &s), &(&p * &r) + &(&p * &s));
    }

    #[test]
    fn exact_division_inverts_multiplication(p in arb_poly(), d in arb_nonzero_poly()) {
        let prod = &p * &d;
        prop_assert_eq!(prod.divide_exact(&d), Some(p));
    }

    #[test]
    fn print_parse_round_trip(p in arb_poly()) {
        let printed = p.to_string();
        prop_assert_eq!(printed.parse::<LaurentPoly>().unwrap(), p);
    }

    #[test]
    fn ratfun_field_axioms(
        a in arb_poly(), b in arb_nonzero_poly(),
        c in arb_poly(), d in arb_nonzero_poly(),
    ) {
        let x = RatFun::new(a, b);
        let y = RatFun::new(c, d);
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&(&x * &y) / &y, x.clone());
        }
        prop_assert_eq!((&x * &y).bar(), &x.bar() * &y.bar());
        prop_assert_eq!((&x + &y).bar(), &x.bar() + &y.bar());
    }

    #[test]
    fn ratfun_canonical_form_is_stable(a in arb_poly(), b in arb_nonzero_poly(), m in arb_nonzero_poly()) {
        // scaling numerator and denominator by a common factor is invisible
        let x = RatFun::new(a.clone(), b.clone());
        let y = RatFun::new(&a * &m, &b * &m);
        prop_assert_eq!(x, y);
    }
}

#[test]
fn qint_qbin_edge_cases() {
    assert_eq!(qbin(-1, 1), LaurentPoly::from_int(-1));
    assert!(qbin(3, 5).is_zero());
    assert_eq!(qbin(5, 0), LaurentPoly::one());
    assert!(qint(0).is_zero());
    assert_eq!(qfact(0), LaurentPoly::one());
}
