//! Satellite and cable formulas, and the search showing no satellite L-space
//! knot shares the Alexander polynomial of `T(2, 2g+1)`.

use num_bigint::BigInt;

/// `Δ″_K(1) = Δ″_{P(U)}(1) + w²·Δ″_C(1)` for a satellite with pattern `P`,
/// companion `C` and winding number `w`.
pub fn satellite_delta_dd(dd_pattern: &BigInt, dd_companion: &BigInt, winding: u64) -> BigInt {
    let w = BigInt::from(winding);
    dd_pattern + &w * &w * dd_companion
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternHomology {
    pub free_rank: u32,
    /// Order of the cyclic torsion summand; 0 encodes an extra `Z`, which is
    /// already counted in `free_rank`.
    pub torsion_order: u64,
    /// Whether the 0-surgered solid torus can embed in `S³`; only `w = 1`.
    pub embeddable: bool,
}

/// `H_1` of 0-surgery on a pattern of winding number `w` inside the solid
/// torus: `Z ⊕ Z/w`.
pub fn pattern_zero_surgery_homology(winding: u64) -> PatternHomology {
    PatternHomology {
        free_rank: if winding == 0 { 2 } else { 1 },
        torsion_order: winding,
        embeddable: winding == 1,
    }
}

/// Signature of the `(p,q)`-cable of `C`: `σ(T(p,q))` for even `q`,
/// `σ(T(p,q)) + σ(C)` for odd `q`.
pub fn cable_signature(sigma_torus: i64, sigma_companion: i64, q: u64) -> i64 {
    assert!(q >= 2, "cable parameter q must be at least 2");
    if q.is_multiple_of(2) {
        sigma_torus
    } else {
        sigma_torus + sigma_companion
    }
}

/// Pattern genus `h`, companion genus `k`, winding number `w`, with
/// `g = h + w·k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SatelliteParams {
    pub h: u64,
    pub k: u64,
    pub w: u64,
}

/// How many decompositions survive each successive constraint.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExclusionTrace {
    pub decompositions: usize,
    pub after_second_derivative: usize,
    pub after_support: usize,
    pub survivors: Vec<SatelliteParams>,
}

/// Searches the decompositions `g = h + w·k` (`h ≥ 0`, `k ≥ 1`, `w ≥ 2`) of
/// a satellite L-space knot with `Δ = Δ_{T(2,2g+1)}` through three filters:
///
/// 1. `g(g+1) ≤ h(h+1) + w²·k(k+1)`, the extremal bound on each factor;
/// 2. `w ≤ 2h + 1`: otherwise `Δ` has a zero coefficient at `t^{wk−h−1}`
///    strictly inside its support;
/// 3. `w(2k − 1)(w − 1) < 2h − 1 + w`, the satellite L-space inequality.
pub fn satellite_lspace_exclusion_trace(genus: u64) -> ExclusionTrace {
    let mut trace = ExclusionTrace::default();
    let g = genus as u128;
    for w in 2..=g {
        for k in 1..=g / w {
            let h = g - w * k;
            trace.decompositions += 1;
            if g * (g + 1) > h * (h + 1) + w * w * k * (k + 1) {
                continue;
            }
            trace.after_second_derivative += 1;
            // The t^{wk−h−1} coefficient vanishes when wk − w + h < wk − h − 1.
            if w > 2 * h + 1 {
                continue;
            }
            trace.after_support += 1;
            if w * (2 * k - 1) * (w - 1) >= 2 * h + w - 1 {
                continue;
            }
            trace.survivors.push(SatelliteParams {
                h: h as u64,
                k: k as u64,
                w: w as u64,
            });
        }
    }
    trace
}

pub fn satellite_lspace_exclusion(genus: u64) -> Vec<SatelliteParams> {
    satellite_lspace_exclusion_trace(genus).survivors
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn satellite_delta_examples() {
        let b = |x: i64| BigInt::from(x);
        assert_eq!(satellite_delta_dd(&b(7), &b(5), 0), b(7));
        assert_eq!(satellite_delta_dd(&b(0), &b(1), 2), b(4));
        assert_eq!(satellite_delta_dd(&b(2), &b(1), 3), b(11));
    }

    #[test]
    fn pattern_homology_examples() {
        let one = pattern_zero_surgery_homology(1);
        assert_eq!(
            (one.free_rank, one.torsion_order, one.embeddable),
            (1, 1, true)
        );
        let three = pattern_zero_surgery_homology(3);
        assert_eq!(
            (three.free_rank, three.torsion_order, three.embeddable),
            (1, 3, false)
        );
        let zero = pattern_zero_surgery_homology(0);
        assert_eq!(
            (zero.free_rank, zero.torsion_order, zero.embeddable),
            (2, 0, false)
        );
    }

    #[test]
    fn cable_signature_examples() {
        assert_eq!(cable_signature(-2, -2, 2), -2);
        assert_eq!(cable_signature(-2, -2, 3), -4);
        assert_eq!(cable_signature(0, 6, 2), 0);
    }

    #[test]
    fn exclusion_examples() {
        assert!(satellite_lspace_exclusion(1).is_empty());
        assert_eq!(satellite_lspace_exclusion_trace(1).decompositions, 0);
        assert!(satellite_lspace_exclusion(5).is_empty());
        assert!(satellite_lspace_exclusion(100).is_empty());
    }

    #[test]
    fn each_filter_does_work() {
        // g = 7 = 1 + 3·2 passes the first two filters and only fails the third
        let t = satellite_lspace_exclusion_trace(7);
        assert!(t.after_support > 0);
        assert!(t.decompositions > t.after_second_derivative);
        assert!(t.survivors.is_empty());
    }
}
