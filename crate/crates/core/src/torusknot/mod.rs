//! Torus knots `T(a,b)` and their classical invariants.

mod cyclotomic;
mod recognize;
pub mod seifert;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{IntPoly, LaurentPoly};

pub use cyclotomic::{cyclotomic, cyclotomic_divides, totient};
pub use recognize::{recognize_from_alexander, Recognition};

/// The torus knot `T(a,b)`.
///
/// Stored canonically: `b ≥ 1`, `|a| ≤ b`, chirality carried by the sign of
/// `a`. `T(a,b)`, `T(b,a)` and `T(−a,−b)` all normalize to the same value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusKnot {
    a: BigInt,
    b: BigInt,
}

impl TorusKnot {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if !a.gcd(&b).is_one() {
            return Err(Error::NotCoprime { a, b });
        }
        let negative = (a.is_negative() != b.is_negative()) && !a.is_zero() && !b.is_zero();
        let (lo, hi) = if a.abs() <= b.abs() {
            (a.abs(), b.abs())
        } else {
            (b.abs(), a.abs())
        };
        Ok(Self {
            a: if negative { -lo } else { lo },
            b: hi,
        })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// `A = |a|`, the smaller absolute parameter.
    pub fn abs_a(&self) -> BigInt {
        self.a.abs()
    }

    /// `B = |b| = b`.
    pub fn abs_b(&self) -> BigInt {
        self.b.clone()
    }

    pub fn is_trivial(&self) -> bool {
        self.abs_a() <= BigInt::one()
    }

    /// True for nontrivial knots with `a·b > 0`.
    pub fn is_positive(&self) -> bool {
        !self.is_trivial() && self.a.is_positive()
    }

    pub fn mirror(&self) -> Self {
        Self {
            a: -&self.a,
            b: self.b.clone(),
        }
    }

    /// Seifert genus `(A−1)(B−1)/2`.
    pub fn genus(&self) -> BigInt {
        if self.is_trivial() {
            return BigInt::zero();
        }
        (self.abs_a() - 1) * (self.abs_b() - 1) / 2
    }

    /// `Δ″(1)/2 = (a²−1)(b²−1)/24`.
    pub fn delta_dd_half(&self) -> BigInt {
        let a2 = &self.a * &self.a - 1;
        let b2 = &self.b * &self.b - 1;
        a2 * b2 / 24
    }

    fn small_params(&self) -> (u64, u64) {
        let a = self.abs_a().to_u64().expect("torus parameter too large");
        let b = self.abs_b().to_u64().expect("torus parameter too large");
        (a, b)
    }

    /// Symmetric Alexander polynomial
    /// `t^{−g} (t^{AB} − 1)(t − 1) / ((t^A − 1)(t^B − 1))`.
    ///
    /// Dense in `AB`, so only meant for parameters whose product fits
    /// comfortably in memory.
    pub fn alexander(&self) -> LaurentPoly {
        if self.is_trivial() {
            return LaurentPoly::one();
        }
        let (a, b) = self.small_params();
        let pow_minus_one = |d: u64| &IntPoly::monomial(d as usize, 1) - &IntPoly::one();
        let num = &pow_minus_one(a * b) * &pow_minus_one(1);
        let den = &pow_minus_one(a) * &pow_minus_one(b);
        let quotient = num
            .exact_div(&den)
            .expect("torus knot Alexander quotient is a polynomial");
        let g = ((a - 1) * (b - 1) / 2) as i64;
        LaurentPoly::from_int_poly(&quotient, -g)
    }

    /// Seifert matrix of the closed braid `(σ₁⋯σ_{A−1})^B`, transposed and
    /// negated for negative knots.
    pub fn seifert_matrix(&self) -> Vec<Vec<i64>> {
        if self.is_trivial() {
            return Vec::new();
        }
        let (a, b) = self.small_params();
        let v = seifert::positive_braid_seifert_matrix(&seifert::torus_braid_word(
            a as usize, b as usize,
        ));
        if self.is_positive() {
            v
        } else {
            let n = v.len();
            (0..n).map(|i| (0..n).map(|j| -v[j][i]).collect()).collect()
        }
    }

    /// Signature of `V + Vᵀ` for the braid Seifert matrix. Negative for
    /// positive torus knots.
    pub fn signature(&self) -> i64 {
        seifert::symmetric_signature(seifert::symmetrize(&self.seifert_matrix()))
    }

    /// Signature by the Gordon–Litherland–Murasugi reduction, which runs in
    /// Euclid-like time and so applies to parameters far beyond the reach of
    /// a Seifert matrix.
    pub fn signature_by_reduction(&self) -> BigInt {
        let s = positive_torus_signature(self.abs_a(), self.abs_b());
        if self.a.is_negative() {
            -s
        } else {
            s
        }
    }
}

/// `σ(T(p,q))` for coprime `p, q ≥ 1`, using
/// `σ(p,q) = σ(p−2q, q) − (q² − 1 or q²)` when `2q < p` and
/// `σ(p,q) = −σ(2q−p, q) − (q² − 1 or q² − 2)` when `q ≤ p < 2q`
/// (first value for odd `q`).
fn positive_torus_signature(mut p: BigInt, mut q: BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut sign = BigInt::one();
    loop {
        if p < q {
            std::mem::swap(&mut p, &mut q);
        }
        if q <= BigInt::one() {
            return acc;
        }
        let q_odd = q.is_odd();
        let qq = &q * &q;
        let two_q = &q * 2;
        if p > two_q {
            let steps = (&p - 1) / &two_q;
            let per_step = if q_odd { &qq - 1 } else { qq.clone() };
            acc -= &sign * &steps * per_step;
            p -= &steps * &two_q;
        } else {
            let constant = if q_odd { &qq - 1 } else { &qq - 2 };
            acc -= &sign * constant;
            sign = -sign;
            p = two_q - &p;
        }
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.a, self.b)
    }
}

impl FromStr for TorusKnot {
    type Err = Error;

    /// `T(a,b)` with optional whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("T(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected T(a,b), got {s:?}")))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected T(a,b), got {s:?}")))?;
        let parse = |x: &str| {
            x.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad integer {x:?} in {s:?}")))
        };
        TorusKnot::new(parse(a)?, parse(b)?)
    }
}
