use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in `n` with integer coefficients, stored densely in
/// ascending degree with no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The polynomial `n`.
    pub fn var() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `c * n^d`
    pub fn monomial(d: usize, c: impl Into<BigInt>) -> Self {
        let mut v = vec![BigInt::zero(); d + 1];
        v[d] = c.into();
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    /// Horner evaluation.
    pub fn eval(&self, n: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * n + c)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Long division over the integers: `self = divisor * q + r` with
    /// `deg r < deg divisor`. Fails if some quotient coefficient is not an
    /// integer.
    pub fn div_rem(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(lead);
            if !r.is_zero() {
                return Err(self.non_exact(divisor, &IntPoly::new(rem)));
            }
            let shift = i - dd;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &q * c;
            }
            quot[shift] = q;
        }
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// The exact quotient `self / divisor`; any nonzero remainder is an error.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(self.non_exact(divisor, &r))
        }
    }

    pub fn divides(&self, other: &IntPoly) -> bool {
        matches!(other.div_rem(self), Ok((_, r)) if r.is_zero())
    }

    fn non_exact(&self, divisor: &IntPoly, rem: &IntPoly) -> Error {
        Error::NonExactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
            remainder: rem.to_string(),
        }
    }

    fn zip_with(&self, rhs: &IntPoly, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> IntPoly {
        let zero = BigInt::zero();
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new(
            (0..len)
                .map(|i| {
                    f(
                        self.coeffs.get(i).unwrap_or(&zero),
                        rhs.coeffs.get(i).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPoly {
    /// Canonical rendering in descending degree: `n^3 + 3n^2 + n - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let mag = c.abs();
            let mono = match d {
                0 => String::new(),
                1 => "n".to_string(),
                _ => format!("n^{d}"),
            };
            if mono.is_empty() {
                write!(f, "{sep}{mag}")?;
            } else if mag.is_one() {
                write!(f, "{sep}{mono}")?;
            } else {
                write!(f, "{sep}{mag}{mono}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Parses the canonical rendering, e.g. `n^3 + 3n^2 + n - 1`. Whitespace
    /// is ignored and `n^{11}` is accepted for `n^11`.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}' && *c != '*')
            .collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = IntPoly::zero();
        let bytes = cleaned.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(Error::Parse(format!("expected sign in {s:?}")));
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff = if start == i {
                BigInt::one()
            } else {
                cleaned[start..i]
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(e.to_string()))?
            };
            let mut deg = 0usize;
            if i < bytes.len() && bytes[i] == b'n' {
                i += 1;
                deg = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let ds = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    deg = cleaned[ds..i]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
                }
            } else if start == i {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            out = &out + &IntPoly::monomial(deg, sign * coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn exact_division_examples() {
        // (n^2 + 2n + 1) / (n + 1) = n + 1
        assert_eq!(ip(&[1, 2, 1]).exact_div(&ip(&[1, 1])).unwrap(), ip(&[1, 1]));
        // (n^3 + 3n^2 + n - 2) / (n + 2) = n^2 + n - 1
        assert_eq!(
            ip(&[-2, 1, 3, 1]).exact_div(&ip(&[2, 1])).unwrap(),
            ip(&[-1, 1, 1])
        );
        assert!(matches!(
            ip(&[1, 0, 1]).exact_div(&ip(&[0, 1])),
            Err(Error::NonExactDivision { .. })
        ));
        assert_eq!(
            ip(&[1]).exact_div(&IntPoly::zero()),
            Err(Error::ZeroDivisor)
        );
    }

    #[test]
    fn non_monic_divisor_needs_integral_quotient() {
        // (2n^2 + 2n) / (2n) = n + 1, but (n^2) / (2n) is not integral
        assert_eq!(ip(&[0, 2, 2]).exact_div(&ip(&[0, 2])).unwrap(), ip(&[1, 1]));
        assert!(ip(&[0, 0, 1]).exact_div(&ip(&[0, 2])).is_err());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(ip(&[1, 1]).eval(&2.into()), BigInt::from(3));
        let p1 = ip(&[-1, 1, 3, 1]);
        assert_eq!(p1.eval(&2.into()), BigInt::from(21));
        assert_eq!(p1.eval(&1.into()), BigInt::from(4));
    }

    #[test]
    fn degree_and_leading() {
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(IntPoly::zero().leading_coeff(), None);
        assert_eq!(ip(&[3, 0, 0]).degree(), Some(0));
        assert!(ip(&[5, 1]).is_monic());
        assert!(!ip(&[5, -1]).is_monic());
    }

    #[test]
    fn render_and_parse() {
        let p = ip(&[0, -8, -4, 60, 50, -98, -126, 6, 75, 45, 11, 1]);
        let s = p.to_string();
        assert_eq!(
            s,
            "n^11 + 11n^10 + 45n^9 + 75n^8 + 6n^7 - 126n^6 - 98n^5 + 50n^4 + 60n^3 - 4n^2 - 8n"
        );
        assert_eq!(s.parse::<IntPoly>().unwrap(), p);
        assert_eq!(
            "n^{11} - 8n".parse::<IntPoly>().unwrap(),
            &IntPoly::monomial(11, 1) - &ip(&[0, 8])
        );
        assert_eq!("-1".parse::<IntPoly>().unwrap(), ip(&[-1]));
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert!("n +".parse::<IntPoly>().is_err());
        assert!("".parse::<IntPoly>().is_err());
    }
}
