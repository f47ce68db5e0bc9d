//! Exact arithmetic: Laurent polynomials in `t`, dense polynomials in `n`,
//! and reduced rationals, all over arbitrary-precision integers.

mod intpoly;
mod laurent;
mod rational;

pub use intpoly::IntPoly;
pub use laurent::LaurentPoly;
pub use rational::Rational;
