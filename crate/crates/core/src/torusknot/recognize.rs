use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::cyclotomic::cyclotomic_divides;
use super::TorusKnot;
use crate::exactalg::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    Unknot,
    /// `{A, B}` with `2 ≤ A < B`.
    Torus {
        a: BigInt,
        b: BigInt,
    },
    NotTorus,
}

/// Recovers `{A, B}` from a symmetric Alexander polynomial, if it is the
/// Alexander polynomial of some nontrivial torus knot.
///
/// `t^g Δ(t)` is the product of the `Φ_d` with `d | AB`, `d ∤ A`, `d ∤ B`,
/// so `AB` is the largest `N` with `Φ_N | t^g Δ`. The breadth `2g` gives
/// `A + B = AB + 1 − 2g`, and `{A, B}` are the roots of
/// `x² − (A+B)x + AB`. Since `A + B ≤ 2g + 3`, `AB ≤ 4g + 2` bounds the
/// search. Every candidate is confirmed by recomputing the polynomial.
pub fn recognize_from_alexander(f: &LaurentPoly) -> Recognition {
    if f.is_one() {
        return Recognition::Unknot;
    }
    if !f.is_symmetric() || !f.eval_at_one().is_one() {
        return Recognition::NotTorus;
    }
    let Some(g) = f.max_exp() else {
        return Recognition::NotTorus;
    };
    let (_, normalized) = f.to_int_poly();
    let bound = 4 * g as u64 + 2;
    let Some(ab) = (2..=bound)
        .rev()
        .find(|&n| cyclotomic_divides(n, &normalized))
    else {
        return Recognition::NotTorus;
    };

    let ab = BigInt::from(ab);
    let sum: BigInt = &ab + 1 - BigInt::from(g) * 2;
    let disc: BigInt = &sum * &sum - &ab * 4;
    if disc.is_negative() {
        return Recognition::NotTorus;
    }
    let root: BigInt = disc.sqrt();
    if &root * &root != disc {
        return Recognition::NotTorus;
    }
    let a: BigInt = (&sum - &root) / 2;
    let b: BigInt = (&sum + &root) / 2;
    if a < BigInt::from(2) {
        return Recognition::NotTorus;
    }
    match TorusKnot::new(a.clone(), b.clone()) {
        Ok(knot) if knot.alexander() == *f => Recognition::Torus { a, b },
        _ => Recognition::NotTorus,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn examples() {
        assert_eq!(
            recognize_from_alexander(&LaurentPoly::one()),
            Recognition::Unknot
        );
        assert_eq!(
            recognize_from_alexander(&lp(&[(1, 1), (0, -1), (-1, 1)])),
            Recognition::Torus {
                a: 2.into(),
                b: 3.into()
            }
        );
        assert_eq!(
            recognize_from_alexander(&lp(&[(2, 1), (1, 1), (0, -1), (-1, 1), (-2, 1)])),
            Recognition::NotTorus
        );
    }

    #[test]
    fn normalized_non_torus_polynomials() {
        // figure-eight
        assert_eq!(
            recognize_from_alexander(&lp(&[(1, -1), (0, 3), (-1, -1)])),
            Recognition::NotTorus
        );
        // T(2,3) # T(2,3): only Φ_6 divides, and x² − 3x + 6 has no real roots
        let t23 = lp(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(
            recognize_from_alexander(&(&t23 * &t23)),
            Recognition::NotTorus
        );
    }

    #[test]
    fn rejects_asymmetric_and_bad_normalization() {
        assert_eq!(
            recognize_from_alexander(&lp(&[(2, 1), (0, 1)])),
            Recognition::NotTorus
        );
        assert_eq!(
            recognize_from_alexander(&LaurentPoly::zero()),
            Recognition::NotTorus
        );
        assert_eq!(
            recognize_from_alexander(&lp(&[(0, -1)])),
            Recognition::NotTorus
        );
    }
}
