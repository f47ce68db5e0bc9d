//! Dehn surgeries on torus knots, lens spaces, and the Casson–Walker
//! correction term.

mod compare;
mod lens;
mod satellite;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::torusknot::TorusKnot;

pub use compare::{zero_surgery_torus_compare, Verdict};
pub use lens::{lens_homeo_oriented, LensSpace};
pub use satellite::{
    cable_signature, pattern_zero_surgery_homology, satellite_delta_dd, satellite_lspace_exclusion,
    satellite_lspace_exclusion_trace, ExclusionTrace, PatternHomology, SatelliteParams,
};

/// A surgery slope `p/q` in lowest terms with `q ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

impl Slope {
    /// Reduces `p/q` and moves the sign to `p`. `q = 0` is rejected.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if q.is_zero() {
            return Err(Error::InvalidSlope { p, q });
        }
        let g = p.gcd(&q);
        let sign = if q.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Ok(Self {
            p: &sign * &p / &g,
            q: &sign * &q / &g,
        })
    }

    pub fn integer(p: impl Into<BigInt>) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_integral(&self) -> bool {
        self.q.is_one()
    }

    pub fn as_rational(&self) -> Rational {
        Rational::new(self.p.clone(), self.q.clone()).expect("slope denominator is positive")
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// `p` or `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let int = |x: &str| {
            x.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad slope {s:?}")))
        };
        match s.split_once('/') {
            Some((p, q)) => Slope::new(int(p)?, int(q)?),
            None => Slope::integer(int(s)?),
        }
    }
}

/// Moser's trichotomy for surgeries on a nontrivial torus knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurgeryClass {
    /// Integer slope `n = ab ± 1`: `L(|n|, B² mod |n|)`.
    Lens(LensSpace),
    /// `|p − q·ab| = 1` with `q ≥ 2`; only the order `|p|` is recorded.
    LensUnparameterized {
        order: BigInt,
    },
    /// Slope `ab`: `L(A,·) # L(B,·)`.
    ConnectedSumOfLens {
        order_a: BigInt,
        order_b: BigInt,
    },
    SmallSeifert,
    /// The zero slope.
    ZeroFilling,
}

impl fmt::Display for SurgeryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurgeryClass::Lens(l) => write!(f, "{l}"),
            SurgeryClass::LensUnparameterized { order } => write!(f, "L({order},·)"),
            SurgeryClass::ConnectedSumOfLens { order_a, order_b } => {
                write!(f, "L({order_a},·)#L({order_b},·)")
            }
            SurgeryClass::SmallSeifert => write!(f, "SmallSeifert"),
            SurgeryClass::ZeroFilling => write!(f, "ZeroFilling"),
        }
    }
}

/// Classifies `S³_{p/q}(T(a,b))`.
pub fn classify_torus_surgery(knot: &TorusKnot, slope: &Slope) -> Result<SurgeryClass> {
    if knot.is_trivial() {
        return Err(Error::Precondition(format!("{knot} is trivial")));
    }
    if slope.p().is_zero() {
        return Ok(SurgeryClass::ZeroFilling);
    }
    let ab = knot.a() * knot.b();
    let offset = slope.p() - slope.q() * &ab;
    if offset.is_zero() {
        return Ok(SurgeryClass::ConnectedSumOfLens {
            order_a: knot.abs_a(),
            order_b: knot.abs_b(),
        });
    }
    if offset.abs().is_one() {
        let order = slope.p().abs();
        if slope.is_integral() {
            let b = knot.abs_b();
            return Ok(SurgeryClass::Lens(LensSpace::new(order, &b * &b)?));
        }
        return Ok(SurgeryClass::LensUnparameterized { order });
    }
    Ok(SurgeryClass::SmallSeifert)
}

/// The lens space `S³_{p/q}(T(a,b))` with explicit parameters.
pub fn lens_space_of_surgery(knot: &TorusKnot, slope: &Slope) -> Result<LensSpace> {
    match classify_torus_surgery(knot, slope)? {
        SurgeryClass::Lens(l) => Ok(l),
        _ => Err(Error::UnsupportedSlope(slope.to_string())),
    }
}

/// `(1/r) · Δ″(1)/2`, the knot's contribution to `λ(S³_r(K))`.
pub fn casson_correction(dd_half: &BigInt, slope: &Slope) -> Result<Rational> {
    if slope.p().is_zero() {
        return Err(Error::DivisionByZeroSlope(slope.to_string()));
    }
    Rational::new(slope.q() * dd_half, slope.p().clone())
}
