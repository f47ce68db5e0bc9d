use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntPoly;

/// A Laurent polynomial in `t` with integer coefficients, stored sparsely.
///
/// No stored coefficient is ever zero, so the zero polynomial is the empty map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * t^e`
    pub fn monomial(e: i64, c: impl Into<BigInt>) -> Self {
        Self::from_terms([(e, c.into())])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// `t^shift * f(t)` for a polynomial `f` in one variable.
    pub fn from_int_poly(f: &IntPoly, shift: i64) -> Self {
        Self::from_terms(
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + shift, c.clone())),
        )
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// `max_exp - min_exp`, or `None` for the zero polynomial.
    pub fn breadth(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    /// `f(1)`
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// `f′(1) = Σ c_e · e`
    pub fn derivative_at_one(&self) -> BigInt {
        self.terms().map(|(e, c)| c * e).sum()
    }

    /// `f″(1) = Σ c_e · e · (e − 1)`
    pub fn second_derivative_at_one(&self) -> BigInt {
        self.terms()
            .map(|(e, c)| c * BigInt::from(e) * BigInt::from(e - 1))
            .sum()
    }

    /// `f(t⁻¹)`
    pub fn invert_variable(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// True iff `f(t) = f(t⁻¹)`.
    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|(e, c)| self.coeffs.get(&-e) == Some(c))
    }

    /// `f(t^w)`; `w = 0` collapses to the constant `f(1)`.
    pub fn substitute_power(&self, w: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * w, c.clone())))
    }

    /// Splits `f = t^shift * g(t)` with `g` an ordinary polynomial whose
    /// constant term is nonzero (or `g = 0`).
    pub fn to_int_poly(&self) -> (i64, IntPoly) {
        let Some(lo) = self.min_exp() else {
            return (0, IntPoly::zero());
        };
        let hi = self.max_exp().unwrap_or(lo);
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            dense[(e - lo) as usize] = c.clone();
        }
        (lo, IntPoly::new(dense))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPoly {
    /// Descending exponents, e.g. `t^2 - t + 1 - t^-1 + t^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn zero_and_one_are_distinct() {
        assert!(LaurentPoly::zero().is_zero());
        assert!(LaurentPoly::one().is_one());
        assert_ne!(LaurentPoly::zero(), LaurentPoly::one());
        assert_eq!(LaurentPoly::zero().max_exp(), None);
        assert_eq!(LaurentPoly::one().max_exp(), Some(0));
    }

    #[test]
    fn cancelling_terms_are_dropped() {
        let p = lp(&[(1, 1), (1, -1), (0, 2)]);
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.coeff(1), BigInt::zero());
    }

    #[test]
    fn second_derivative_examples() {
        assert_eq!(
            LaurentPoly::one().second_derivative_at_one(),
            BigInt::zero()
        );
        let trefoil = lp(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(trefoil.second_derivative_at_one(), BigInt::from(2));
        let cinquefoil = lp(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)]);
        assert_eq!(cinquefoil.second_derivative_at_one(), BigInt::from(6));
    }

    #[test]
    fn symmetry_examples() {
        assert!(LaurentPoly::one().is_symmetric());
        assert!(lp(&[(1, 1), (0, -1), (-1, 1)]).is_symmetric());
        assert!(!lp(&[(2, 1), (0, 1)]).is_symmetric());
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(1, 1), (0, -1), (-1, 1)]).to_string(), "t - 1 + t^-1");
        assert_eq!(lp(&[(3, -2), (-2, 5)]).to_string(), "-2t^3 + 5t^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn int_poly_round_trip() {
        let p = lp(&[(2, 1), (-1, -3)]);
        let (shift, g) = p.to_int_poly();
        assert_eq!(shift, -1);
        assert_eq!(LaurentPoly::from_int_poly(&g, shift), p);
    }
}
