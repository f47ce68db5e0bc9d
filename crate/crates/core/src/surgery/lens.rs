use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};

/// The lens space `L(p, q)` with `0 ≤ q < p` and `gcd(p, q) = 1`.
/// `L(1, 0)` is the 3-sphere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LensSpace {
    order: BigInt,
    param: BigInt,
}

impl LensSpace {
    /// Stores `param mod order`.
    pub fn new(order: impl Into<BigInt>, param: impl Into<BigInt>) -> Result<Self> {
        let (order, param) = (order.into(), param.into());
        if !order.is_positive() {
            return Err(Error::Precondition(format!(
                "lens space order {order} must be positive"
            )));
        }
        let param = param.mod_floor(&order);
        if !param.gcd(&order).is_one() {
            return Err(Error::Precondition(format!(
                "L({order},{param}) needs gcd(order, param) = 1"
            )));
        }
        Ok(Self { order, param })
    }

    pub fn order(&self) -> &BigInt {
        &self.order
    }

    pub fn param(&self) -> &BigInt {
        &self.param
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.order, self.param)
    }
}

/// Orientation-preserving homeomorphism: equal orders and
/// `q ≡ q′` or `q·q′ ≡ 1 (mod p)`.
///
/// The family of common torus-knot surgeries only ever needs the
/// `q·q′ ≡ 1` branch; the other branch completes the classical criterion.
pub fn lens_homeo_oriented(l1: &LensSpace, l2: &LensSpace) -> bool {
    if l1.order != l2.order {
        return false;
    }
    let p = &l1.order;
    l1.param == l2.param || (&l1.param * &l2.param).mod_floor(p).is_one() || p.is_one()
}
