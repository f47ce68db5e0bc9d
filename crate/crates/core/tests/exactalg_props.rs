use ksl::{IntPoly, LaurentPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
    (-2i64..=2, prop::collection::vec(-3i64..=3, 0..=5)).prop_map(|(shift, cs)| {
        LaurentPoly::from_terms(
            cs.into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + shift, c)),
        )
    })
}

fn small_int_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-3i64..=3, 0..=5).prop_map(|cs| IntPoly::from_i64s(&cs))
}

proptest! {
    #[test]
    fn laurent_ring_axioms(f in small_laurent(), g in small_laurent(), h in small_laurent()) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &LaurentPoly::one(), f.clone());
        prop_assert_eq!(&f + &LaurentPoly::zero(), f.clone());
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn int_poly_ring_axioms(f in small_int_poly(), g in small_int_poly(), h in small_int_poly()) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &IntPoly::one(), f.clone());
        prop_assert_eq!(&f + &IntPoly::zero(), f.clone());
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn exact_division_recovers_factor(g in small_int_poly(), h in small_int_poly()) {
        prop_assume!(!g.is_zero());
        let f = &g * &h;
        prop_assert_eq!(f.exact_div(&g).unwrap(), h);
    }

    #[test]
    fn second_derivative_product_rule(f in small_laurent(), g in small_laurent()) {
        let direct = (&f * &g).second_derivative_at_one();
        let expanded = f.second_derivative_at_one() * g.eval_at_one()
            + BigInt::from(2) * f.derivative_at_one() * g.derivative_at_one()
            + f.eval_at_one() * g.second_derivative_at_one();
        prop_assert_eq!(direct, expanded);
    }

    #[test]
    fn symmetric_iff_invariant_under_inversion(f in small_laurent()) {
        let sym = &f + &f.invert_variable();
        prop_assert!(sym.is_symmetric());
        prop_assert_eq!(f.is_symmetric(), f == f.invert_variable());
    }

    #[test]
    fn eval_is_ring_homomorphism(f in small_int_poly(), g in small_int_poly(), n in -20i64..20) {
        let n = BigInt::from(n);
        prop_assert_eq!((&f * &g).eval(&n), f.eval(&n) * g.eval(&n));
        prop_assert_eq!((&f + &g).eval(&n), f.eval(&n) + g.eval(&n));
    }
}

/// Exhaustive associativity/distributivity over all linear polynomials with
/// coefficients in [−3, 3].
#[test]
fn exhaustive_linear_ring_axioms() {
    let range = -3i64..=3;
    let linears: Vec<IntPoly> = range
        .clone()
        .flat_map(|c0| range.clone().map(move |c1| IntPoly::from_i64s(&[c0, c1])))
        .collect();
    for f in &linears {
        for g in &linears {
            for h in &linears {
                assert_eq!(&(f * g) * h, f * &(g * h));
                assert_eq!(f * &(g + h), &(f * g) + &(f * h));
            }
        }
    }
}
