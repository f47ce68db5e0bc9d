//! A two-parameter family of distinct positive torus knots with a common
//! lens-space surgery.
//!
//! Starting from `(a, b, c, d, p, q) = (−1, 1, 1, 1, 0, n+1)` at level
//! `k = −1`, each step sets
//!
//! ```text
//! (a', b', c', d') = (d, (q − 1)/d, b, (q + 1)/b)
//! (p', q')         = (q, (b'²d'² − 1)/q)
//! ```
//!
//! All divisions are exact in `Z[n]`. For `k ≥ 0` the state satisfies
//! `ab + 1 = p = cd − 1` and `b²d² = pq + 1`, so `p`-surgery on `T(a,b)`
//! and on `T(c,d)` give `L(p, b²)` and `L(p, d²)`, which are homeomorphic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::IntPoly;
use crate::staircase::torus_staircase_head;
use crate::surgery::{lens_homeo_oriented, lens_space_of_surgery, LensSpace, Slope};
use crate::torusknot::TorusKnot;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFamilyState {
    pub k: i64,
    pub a: IntPoly,
    pub b: IntPoly,
    pub c: IntPoly,
    pub d: IntPoly,
    pub p: IntPoly,
    pub q: IntPoly,
}

impl PairFamilyState {
    /// The level `k = −1` sextuple.
    pub fn initial() -> Self {
        Self {
            k: -1,
            a: IntPoly::constant(-1),
            b: IntPoly::one(),
            c: IntPoly::one(),
            d: IntPoly::one(),
            p: IntPoly::zero(),
            q: &IntPoly::var() + &IntPoly::one(),
        }
    }

    pub fn step(&self) -> Result<Self> {
        let one = IntPoly::one();
        let b = (&self.q - &one).exact_div(&self.d)?;
        let d = (&self.q + &one).exact_div(&self.b)?;
        let bd = &b * &d;
        let q = (&bd.square() - &one).exact_div(&self.q)?;
        Ok(Self {
            k: self.k + 1,
            a: self.d.clone(),
            b,
            c: self.b.clone(),
            d,
            p: self.q.clone(),
            q,
        })
    }

    /// `ab + 1 = p = cd − 1`
    pub fn slope_identity_holds(&self) -> bool {
        let one = IntPoly::one();
        &(&self.a * &self.b) + &one == self.p && &(&self.c * &self.d) - &one == self.p
    }

    /// `b²d² = pq + 1`
    pub fn lens_identity_holds(&self) -> bool {
        (&self.b * &self.d).square() == &(&self.p * &self.q) + &IntPoly::one()
    }

    /// `cd − ab = 2`
    pub fn difference_is_two(&self) -> bool {
        &(&self.c * &self.d) - &(&self.a * &self.b) == IntPoly::constant(2)
    }

    /// Monic of degrees `k, k+1, k, k+1, 2k+1, 2k+3` (only meaningful for
    /// `k ≥ 0`).
    pub fn degrees_hold(&self) -> bool {
        if self.k < 0 {
            return false;
        }
        let k = self.k as usize;
        let expected = [k, k + 1, k, k + 1, 2 * k + 1, 2 * k + 3];
        self.polys()
            .iter()
            .zip(expected)
            .all(|(f, deg)| f.is_monic() && f.degree() == Some(deg))
    }

    /// All invariants of a level `k ≥ 0` state.
    pub fn invariants_hold(&self) -> bool {
        self.slope_identity_holds() && self.lens_identity_holds() && self.degrees_hold()
    }

    /// `[a, b, c, d, p, q]`
    pub fn polys(&self) -> [&IntPoly; 6] {
        [&self.a, &self.b, &self.c, &self.d, &self.p, &self.q]
    }

    /// `[a(n), …, q(n)]`
    pub fn eval(&self, n: &BigInt) -> [BigInt; 6] {
        self.polys().map(|f| f.eval(n))
    }

    pub fn instantiate(&self, n: impl Into<BigInt>) -> Result<PairInstance> {
        PairInstance::new(self, n.into())
    }
}

/// States for `k = −1, 0, …, k_max`, each checked against the family's
/// identities as it is produced.
pub fn generate(k_max: i64) -> Result<Vec<PairFamilyState>> {
    let mut states = vec![PairFamilyState::initial()];
    while states.last().expect("nonempty").k < k_max {
        let next = states.last().expect("nonempty").step()?;
        if !next.invariants_hold() {
            return Err(Error::Precondition(format!(
                "level {} violates the family identities",
                next.k
            )));
        }
        states.push(next);
    }
    Ok(states)
}

/// One member of the family: two torus knots and their common surgery slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairInstance {
    pub k: i64,
    pub n: BigInt,
    pub knot1: TorusKnot,
    pub knot2: TorusKnot,
    pub slope: BigInt,
    pub lens1: LensSpace,
    pub lens2: LensSpace,
}

impl PairInstance {
    fn new(state: &PairFamilyState, n: BigInt) -> Result<Self> {
        let degenerate = |reason: String| Error::DegenerateInstance {
            k: state.k,
            n: n.clone(),
            reason,
        };
        if state.k < 1 {
            return Err(degenerate("level must be at least 1".into()));
        }
        let [a, b, c, d, p, _] = state.eval(&n);
        let two = BigInt::from(2);
        for (name, x) in [("a", &a), ("b", &b), ("c", &c), ("d", &d)] {
            if x < &two {
                return Err(degenerate(format!(
                    "{name} = {x} gives a trivial torus knot"
                )));
            }
        }
        if !a.gcd(&b).is_one() || !c.gcd(&d).is_one() {
            return Err(degenerate(format!(
                "non-coprime parameters ({a},{b}) / ({c},{d})"
            )));
        }
        if a == c || b == d {
            return Err(degenerate("the two knots coincide".into()));
        }
        let knot1 = TorusKnot::new(a, b)?;
        let knot2 = TorusKnot::new(c, d)?;
        let slope = Slope::integer(p.clone())?;
        let lens1 = lens_space_of_surgery(&knot1, &slope)?;
        let lens2 = lens_space_of_surgery(&knot2, &slope)?;
        Ok(Self {
            k: state.k,
            n,
            knot1,
            knot2,
            slope: p,
            lens1,
            lens2,
        })
    }

    pub fn verify(&self) -> PairReport {
        let sig1 = self.knot1.signature_by_reduction();
        let sig2 = self.knot2.signature_by_reduction();
        let genus1 = self.knot1.genus();
        let genus2 = self.knot2.genus();
        let dd1 = self.knot1.delta_dd_half();
        let dd2 = self.knot2.delta_dd_half();
        // Staircases start with a_0 = g, so a bounded prefix suffices to
        // separate them whenever they differ early.
        let prefix = 8;
        let head1 = torus_staircase_head(&self.knot1, prefix);
        let head2 = torus_staircase_head(&self.knot2, prefix);
        PairReport {
            lens_homeomorphic: lens_homeo_oriented(&self.lens1, &self.lens2),
            genera_differ: genus1 != genus2,
            dd_half_equal: dd1 == dd2,
            signatures_negative: sig1.is_negative() && sig2.is_negative(),
            staircases_differ: head1 != head2,
            genus1,
            genus2,
            dd_half1: dd1,
            dd_half2: dd2,
            signature1: sig1,
            signature2: sig2,
        }
    }
}

/// Outcome of the five checks on one [`PairInstance`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub lens_homeomorphic: bool,
    pub genera_differ: bool,
    pub dd_half_equal: bool,
    pub signatures_negative: bool,
    pub staircases_differ: bool,
    pub genus1: BigInt,
    pub genus2: BigInt,
    pub dd_half1: BigInt,
    pub dd_half2: BigInt,
    pub signature1: BigInt,
    pub signature2: BigInt,
}

impl PairReport {
    pub fn all_pass(&self) -> bool {
        self.lens_homeomorphic
            && self.genera_differ
            && self.dd_half_equal
            && self.signatures_negative
            && self.staircases_differ
    }
}

/// `F_0 = 0, F_1 = 1, …`; negative indices follow `F_{−m} = (−1)^{m+1} F_m`.
pub fn fibonacci(index: i64) -> BigInt {
    let m = index.unsigned_abs();
    let (mut x, mut y) = (BigInt::zero(), BigInt::one());
    for _ in 0..m {
        let next = &x + &y;
        x = std::mem::replace(&mut y, next);
    }
    if index < 0 && m.is_multiple_of(2) {
        -x
    } else {
        x
    }
}

/// At `n = 2`: `(a, b) = (F_{2k} + F_{2k+2}, F_{2k+3})`,
/// `(c, d) = (F_{2k+1}, F_{2k+2} + F_{2k+4})`, `p = F_{4k+4}`, `q = F_{4k+8}`.
pub fn fibonacci_closed_form(k: i64) -> [BigInt; 6] {
    let f = fibonacci;
    [
        f(2 * k) + f(2 * k + 2),
        f(2 * k + 3),
        f(2 * k + 1),
        f(2 * k + 2) + f(2 * k + 4),
        f(4 * k + 4),
        f(4 * k + 8),
    ]
}

/// At `n = 1`: `(2k+1, 1, 1, 2k+3, 2k+2, 2k+4)`.
pub fn n1_closed_form(k: i64) -> [BigInt; 6] {
    [2 * k + 1, 1, 1, 2 * k + 3, 2 * k + 2, 2 * k + 4].map(BigInt::from)
}

fn state_at(k: i64) -> Result<PairFamilyState> {
    Ok(generate(k)?
        .pop()
        .expect("generate returns at least the base state"))
}

pub fn fibonacci_specialization(k: i64) -> Result<bool> {
    Ok(state_at(k)?.eval(&BigInt::from(2)) == fibonacci_closed_form(k))
}

pub fn n1_specialization(k: i64) -> Result<bool> {
    Ok(state_at(k)?.eval(&BigInt::one()) == n1_closed_form(k))
}
