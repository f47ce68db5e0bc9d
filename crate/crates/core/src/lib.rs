//! Exact invariants of torus knots and their Dehn surgeries.
//!
//! The crate is split along the lines of the computations it performs:
//!
//! - [`exactalg`]: big-integer Laurent polynomials in `t`, dense polynomials
//!   in `n`, and reduced rationals.
//! - [`torusknot`]: genus, Alexander polynomial, `Δ″(1)/2`, signature and
//!   recognition of `T(a,b)` from its Alexander polynomial.
//! - [`staircase`]: the staircase form of L-space knot Alexander polynomials,
//!   bigraded knot Floer ranks, and hat-HF ranks of rational surgeries.
//! - [`surgery`]: Moser's classification of torus-knot surgeries, lens-space
//!   homeomorphism, Casson–Walker corrections and satellite formulas.
//! - [`pairsgen`]: a two-parameter family of distinct torus knots sharing a
//!   lens-space surgery, generated symbolically in `Z[n]`.

pub mod error;
pub mod exactalg;
pub mod pairsgen;
pub mod staircase;
pub mod surgery;
pub mod torusknot;

pub use error::{Error, Result};
pub use exactalg::{IntPoly, LaurentPoly, Rational};
pub use pairsgen::{PairFamilyState, PairInstance, PairReport};
pub use staircase::Staircase;
pub use surgery::{LensSpace, Slope, SurgeryClass};
pub use torusknot::{Recognition, TorusKnot};
