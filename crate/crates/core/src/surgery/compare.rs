use crate::error::{Error, Result};
use crate::torusknot::{recognize_from_alexander, Recognition, TorusKnot};

/// Which invariant separates two torus knots with the same 0-surgery
/// candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Same,
    /// Different Alexander polynomials, hence different `{A, B}`.
    AlexanderDistinct,
    /// Same `{A, B}` but opposite chirality, detected by the signature sign.
    SignatureDistinct,
}

/// Distinguishes two nontrivial torus knots by the invariants their
/// 0-surgeries determine: the Alexander polynomial recovers `{A, B}` and the
/// signature sign recovers the chirality.
pub fn zero_surgery_torus_compare(k1: &TorusKnot, k2: &TorusKnot) -> Result<Verdict> {
    for k in [k1, k2] {
        if k.is_trivial() {
            return Err(Error::Precondition(format!("{k} is trivial")));
        }
    }
    let (d1, d2) = (k1.alexander(), k2.alexander());
    if d1 != d2 {
        return Ok(Verdict::AlexanderDistinct);
    }
    let (r1, r2) = (recognize_from_alexander(&d1), recognize_from_alexander(&d2));
    debug_assert!(matches!(r1, Recognition::Torus { .. }));
    if r1 != r2 {
        return Ok(Verdict::AlexanderDistinct);
    }
    if k1.signature().signum() != k2.signature().signum() {
        return Ok(Verdict::SignatureDistinct);
    }
    Ok(Verdict::Same)
}
