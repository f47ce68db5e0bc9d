//! Staircase form of L-space knot Alexander polynomials.
//!
//! An L-space knot of genus `g` has
//! `Δ(t) = (1 − t⁻¹) Σ_{i<g} t^{a_i} + t^{−g}` for a strictly decreasing
//! sequence `g = a_0 > a_1 > ⋯ > a_{g−1} = 2 − g` with `a_i ≤ g − 2i`, where
//! `a_1, …, a_{g−2}` take exactly one value from each of the pairs
//! `{g−2, 3−g}, {g−3, 4−g}, …, {1, 0}`. This module works with such
//! sequences directly. Sequences produced by [`Staircase::enumerate`] satisfy
//! these necessary conditions; whether an actual L-space knot realizes each
//! one is not checked.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::surgery::Slope;
use crate::torusknot::TorusKnot;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Staircase {
    genus: i64,
    exps: Vec<i64>,
}

/// One generator of knot Floer homology: `(Alexander grading, Maslov grading)`.
pub type Bigrading = (i64, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HfkSelfCheck {
    pub euler_characteristic: bool,
    pub symmetry: bool,
    pub top_grading: bool,
}

impl HfkSelfCheck {
    pub fn all(&self) -> bool {
        self.euler_characteristic && self.symmetry && self.top_grading
    }
}

impl Staircase {
    /// Wraps a sequence without checking it; see [`Staircase::validate`].
    pub fn from_parts(genus: i64, exps: Vec<i64>) -> Self {
        Self { genus, exps }
    }

    pub fn try_new(genus: i64, exps: Vec<i64>) -> Result<Self> {
        let s = Self::from_parts(genus, exps);
        if s.validate() {
            Ok(s)
        } else {
            Err(Error::InvalidStaircase(s.to_string()))
        }
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    /// The staircase `[g, g−2, …, 2−g]` of `T(2, 2g+1)`.
    pub fn two_bridge(genus: i64) -> Self {
        Self::from_parts(genus, (0..genus).map(|i| genus - 2 * i).collect())
    }

    pub fn validate(&self) -> bool {
        let g = self.genus;
        if g < 1 || self.exps.len() != g as usize {
            return false;
        }
        if self.exps[0] != g || self.exps[g as usize - 1] != 2 - g {
            return false;
        }
        if !self.exps.windows(2).all(|w| w[0] > w[1]) {
            return false;
        }
        if !self
            .exps
            .iter()
            .enumerate()
            .all(|(i, &a)| a <= g - 2 * i as i64)
        {
            return false;
        }
        // Exactly one element of each pair {g−1−j, 2−g+j}, j = 1..g−2; the
        // two members of a pair sum to 1.
        let middle = if g >= 2 {
            &self.exps[1..g as usize - 1]
        } else {
            &[][..]
        };
        (1..g - 1).all(|j| {
            let (hi, lo) = (g - 1 - j, 2 - g + j);
            middle.iter().filter(|&&a| a == hi || a == lo).count() == 1
        })
    }

    /// All sequences of genus `g` passing [`Staircase::validate`], in
    /// descending lexicographic order.
    pub fn enumerate(genus: i64) -> Vec<Staircase> {
        assert!(genus >= 1, "genus must be positive");
        if genus == 1 {
            return vec![Self::from_parts(1, vec![1])];
        }
        let pairs: Vec<(i64, i64)> = (1..genus - 1)
            .map(|j| (genus - 1 - j, 2 - genus + j))
            .collect();
        let mut out: Vec<Staircase> = pairs
            .iter()
            .map(|&(hi, lo)| [hi, lo])
            .multi_cartesian_product()
            .chain(std::iter::once(Vec::new()).filter(|_| pairs.is_empty()))
            .map(|mut middle| {
                middle.sort_unstable_by(|x, y| y.cmp(x));
                let mut exps = Vec::with_capacity(genus as usize);
                exps.push(genus);
                exps.extend(middle);
                exps.push(2 - genus);
                Self::from_parts(genus, exps)
            })
            .filter(Staircase::validate)
            .collect();
        out.sort_by(|x, y| y.exps.cmp(&x.exps));
        out.dedup();
        out
    }

    /// `(1 − t⁻¹) Σ t^{a_i} + t^{−g}`
    pub fn to_alexander(&self) -> LaurentPoly {
        let mut terms: Vec<(i64, i64)> = self
            .exps
            .iter()
            .flat_map(|&a| [(a, 1), (a - 1, -1)])
            .collect();
        terms.push((-self.genus, 1));
        LaurentPoly::from_terms(terms)
    }

    /// Inverse of [`Staircase::to_alexander`] for polynomials of staircase
    /// shape.
    pub fn from_alexander(f: &LaurentPoly) -> Option<Staircase> {
        let genus = f.max_exp()?;
        if genus < 1 {
            return None;
        }
        // Σ_{i<g} t^{a_i} = (Δ − t^{−g}) / (1 − t⁻¹); dividing by (1 − t⁻¹) is
        // a running sum from the top exponent down.
        let rest = f - &LaurentPoly::monomial(-genus, 1);
        let mut exps = Vec::new();
        let mut running = BigInt::zero();
        for e in (-genus..=genus).rev() {
            running += rest.coeff(e);
            if running == BigInt::from(1) {
                exps.push(e);
            } else if !running.is_zero() {
                return None;
            }
        }
        let s = Self::from_parts(genus, exps);
        (s.validate() && s.to_alexander() == *f).then_some(s)
    }

    /// Staircase of a nontrivial positive torus knot: `a_i = g − s_i` where
    /// `s_0 < s_1 < ⋯` enumerate the semigroup generated by `A` and `B`.
    pub fn of_torus_knot(knot: &TorusKnot) -> Option<Staircase> {
        if knot.is_trivial() {
            return None;
        }
        let genus = knot.genus().to_i64()?;
        let exps = torus_staircase_head(knot, genus as usize)
            .into_iter()
            .map(|a| a.to_i64())
            .collect::<Option<Vec<_>>>()?;
        Some(Self::from_parts(genus, exps))
    }

    /// `Δ″(1)/2 = Σ a_i + g(g−1)/2`.
    pub fn delta_dd_half(&self) -> i64 {
        self.exps.iter().sum::<i64>() + self.genus * (self.genus - 1) / 2
    }

    /// Largest `Δ″(1)/2` over [`Staircase::enumerate`], with its maximizer.
    pub fn extremal(genus: i64) -> (i64, Staircase) {
        Self::enumerate(genus)
            .into_iter()
            .map(|s| (s.delta_dd_half(), s))
            .max_by(|x, y| x.0.cmp(&y.0))
            .expect("every genus has at least one staircase")
    }

    /// All unordered pairs of distinct same-genus staircases with equal
    /// `Δ″(1)/2`, for `1 ≤ g ≤ g_max`.
    pub fn dd_collisions(g_max: i64) -> Vec<(i64, Staircase, Staircase)> {
        let mut out = Vec::new();
        for genus in 1..=g_max {
            let mut by_value: HashMap<i64, Vec<Staircase>> = HashMap::new();
            for s in Self::enumerate(genus) {
                by_value.entry(s.delta_dd_half()).or_default().push(s);
            }
            let mut found: Vec<(i64, Staircase, Staircase)> = by_value
                .into_values()
                .flat_map(|group| {
                    group
                        .into_iter()
                        .tuple_combinations()
                        .map(|(x, y)| (genus, x, y))
                        .collect::<Vec<_>>()
                })
                .collect();
            found.sort();
            out.extend(found);
        }
        out
    }

    /// Bigraded `ĤFK`: one generator per nonzero term `±t^{n_j}` of `Δ`
    /// (exponents descending), with Maslov gradings `m_0 = 0`,
    /// `m_{2j} = m_{2j−1} − 1` and `m_{2j+1} = m_{2j} − 2(n_{2j} − n_{2j+1}) + 1`.
    pub fn hfk_bigraded(&self) -> Vec<Bigrading> {
        let alex = self.to_alexander();
        let exps: Vec<i64> = alex.terms().rev().map(|(e, _)| e).collect();
        let mut out = Vec::with_capacity(exps.len());
        let mut maslov = 0i64;
        for (j, &e) in exps.iter().enumerate() {
            if j > 0 {
                maslov = if j % 2 == 0 {
                    maslov - 1
                } else {
                    maslov - 2 * (exps[j - 1] - e) + 1
                };
            }
            out.push((e, maslov));
        }
        debug_assert!(self.hfk_self_check(&out).all());
        out
    }

    /// Checks generators against `Δ` (graded Euler characteristic), the
    /// symmetry `(A, M) ↔ (−A, M − 2A)`, and the top grading `(g, 0)`.
    pub fn hfk_self_check(&self, gens: &[Bigrading]) -> HfkSelfCheck {
        let chi = LaurentPoly::from_terms(
            gens.iter()
                .map(|&(a, m)| (a, if m.rem_euclid(2) == 0 { 1 } else { -1 })),
        );
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        let mut mirrored: Vec<Bigrading> = gens.iter().map(|&(a, m)| (-a, m - 2 * a)).collect();
        mirrored.sort_unstable();
        HfkSelfCheck {
            euler_characteristic: chi == self.to_alexander(),
            symmetry: sorted == mirrored,
            top_grading: gens.iter().max() == Some(&(self.genus, 0)),
        }
    }

    /// `2g − 1`, the common value of `ν̂` and `r̂₀` for an L-space knot.
    pub fn hat_nu(&self) -> i64 {
        2 * self.genus - 1
    }

    /// `dim ĤF(S³_{p/q})` = `q(2g−1) + |p − q(2g−1)|`.
    pub fn surgery_hf_dim(&self, slope: &Slope) -> BigInt {
        let threshold = slope.q() * self.hat_nu();
        (slope.p() - &threshold).abs() + threshold
    }

    /// `p/q ≥ 2g − 1`.
    pub fn is_lspace_slope(&self, slope: &Slope) -> bool {
        slope.p() >= &(slope.q() * self.hat_nu())
    }

    /// `(dim ĤF(S³_m) − m) / 2`, the odd-graded part of a large surgery.
    pub fn hf_odd_dim_large(&self, m: &BigInt) -> Result<BigInt> {
        if m < &BigInt::from(self.hat_nu()) || m < &BigInt::from(1) {
            return Err(Error::Precondition(format!(
                "large surgery needs m >= 2g-1 = {} and m >= 1, got {m}",
                self.hat_nu()
            )));
        }
        let slope = Slope::integer(m.clone())?;
        Ok((self.surgery_hf_dim(&slope) - m) / 2)
    }
}

/// The first `len` terms (at most `g`) of the staircase of a nontrivial
/// torus knot, without materializing its Alexander polynomial. Works for
/// parameters of any size.
pub fn torus_staircase_head(knot: &TorusKnot, len: usize) -> Vec<BigInt> {
    if knot.is_trivial() {
        return Vec::new();
    }
    let (a, b) = (knot.abs_a(), knot.abs_b());
    let genus = knot.genus();
    let conductor = &genus * 2;
    // k-way merge of the rows {jB + iA : i ≥ 0}, j = 0, 1, …; elements below
    // AB have unique representations, so no value repeats before the conductor.
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((BigInt::zero(), 0u64, true)));
    let mut out = Vec::new();
    while out.len() < len {
        let Some(Reverse((value, row, row_start))) = heap.pop() else {
            break;
        };
        if value >= conductor {
            break;
        }
        out.push(&genus - &value);
        heap.push(Reverse((&value + &a, row, false)));
        if row_start {
            heap.push(Reverse((&value + &b, row + 1, true)));
        }
    }
    out
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.exps.iter().join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(g: i64, e: &[i64]) -> Staircase {
        Staircase::from_parts(g, e.to_vec())
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn validate_examples() {
        assert!(sc(1, &[1]).validate());
        assert!(sc(3, &[3, 1, -1]).validate());
        assert!(!sc(3, &[3, 2, -1]).validate());
        assert!(!sc(3, &[3, 1]).validate());
        assert!(!sc(0, &[]).validate());
        // both members of the pair {2,-1} at genus 4
        assert!(!sc(4, &[4, 2, -1, -2]).validate());
        assert!(Staircase::try_new(3, vec![3, 2, -1]).is_err());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(Staircase::enumerate(1), vec![sc(1, &[1])]);
        assert_eq!(Staircase::enumerate(2), vec![sc(2, &[2, 0])]);
        assert_eq!(
            Staircase::enumerate(3),
            vec![sc(3, &[3, 1, -1]), sc(3, &[3, 0, -1])]
        );
    }

    #[test]
    fn to_alexander_examples() {
        assert_eq!(sc(1, &[1]).to_alexander(), lp(&[(1, 1), (0, -1), (-1, 1)]));
        assert_eq!(
            sc(3, &[3, 0, -1]).to_alexander(),
            lp(&[(3, 1), (2, -1), (0, 1), (-2, -1), (-3, 1)])
        );
        assert_eq!(
            sc(3, &[3, 0, -1]).to_alexander(),
            TorusKnot::new(3, 4).unwrap().alexander()
        );
    }

    #[test]
    fn from_alexander_inverts() {
        for g in 1..=7 {
            for s in Staircase::enumerate(g) {
                assert_eq!(Staircase::from_alexander(&s.to_alexander()), Some(s));
            }
        }
        assert_eq!(
            Staircase::from_alexander(&lp(&[(1, -1), (0, 3), (-1, -1)])),
            None
        );
        assert_eq!(Staircase::from_alexander(&LaurentPoly::one()), None);
    }

    #[test]
    fn delta_dd_half_examples() {
        assert_eq!(sc(1, &[1]).delta_dd_half(), 1);
        assert_eq!(sc(2, &[2, 0]).delta_dd_half(), 3);
        assert_eq!(sc(3, &[3, 0, -1]).delta_dd_half(), 5);
    }

    #[test]
    fn extremal_examples() {
        assert_eq!(Staircase::extremal(1), (1, sc(1, &[1])));
        assert_eq!(Staircase::extremal(2), (3, sc(2, &[2, 0])));
        assert_eq!(Staircase::extremal(5), (15, sc(5, &[5, 3, 1, -1, -3])));
    }

    #[test]
    fn no_collisions_through_genus_five() {
        assert!(Staircase::dd_collisions(1).is_empty());
        assert!(Staircase::dd_collisions(5).is_empty());
    }

    #[test]
    fn hfk_examples() {
        assert_eq!(sc(1, &[1]).hfk_bigraded(), vec![(1, 0), (0, -1), (-1, -2)]);
        assert_eq!(
            sc(2, &[2, 0]).hfk_bigraded(),
            vec![(2, 0), (1, -1), (0, -2), (-1, -3), (-2, -4)]
        );
        // T(3,4) is not thin
        assert_eq!(
            sc(3, &[3, 0, -1]).hfk_bigraded(),
            vec![(3, 0), (2, -1), (0, -2), (-2, -5), (-3, -6)]
        );
    }

    #[test]
    fn hfk_self_check_catches_bad_gradings() {
        let s = sc(1, &[1]);
        assert!(!s.hfk_self_check(&[(1, 0), (0, -1), (-1, -1)]).all());
        assert!(!s.hfk_self_check(&[(1, 1), (0, 0), (-1, -1)]).top_grading);
    }

    #[test]
    fn surgery_dimensions() {
        let slope = |p: i64, q: i64| Slope::new(p, q).unwrap();
        assert_eq!(sc(1, &[1]).surgery_hf_dim(&slope(1, 1)), BigInt::from(1));
        let g4 = Staircase::two_bridge(4);
        assert_eq!(g4.surgery_hf_dim(&slope(7, 1)), BigInt::from(7));
        assert_eq!(
            sc(2, &[2, 0]).surgery_hf_dim(&slope(1, 2)),
            BigInt::from(11)
        );
        assert!(sc(1, &[1]).is_lspace_slope(&slope(1, 1)));
        assert!(!Staircase::two_bridge(3).is_lspace_slope(&slope(4, 1)));
        assert!(sc(2, &[2, 0]).is_lspace_slope(&slope(7, 2)));
    }

    #[test]
    fn odd_part_of_large_surgeries() {
        assert_eq!(
            sc(1, &[1]).hf_odd_dim_large(&7.into()).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            Staircase::two_bridge(4)
                .hf_odd_dim_large(&7.into())
                .unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            sc(2, &[2, 0]).hf_odd_dim_large(&100.into()).unwrap(),
            BigInt::zero()
        );
        assert!(Staircase::two_bridge(4)
            .hf_odd_dim_large(&6.into())
            .is_err());
    }

    #[test]
    fn torus_staircases() {
        let t34 = TorusKnot::new(3, 4).unwrap();
        assert_eq!(Staircase::of_torus_knot(&t34), Some(sc(3, &[3, 0, -1])));
        assert_eq!(
            Staircase::of_torus_knot(&TorusKnot::new(1, 4).unwrap()),
            None
        );
        let big = TorusKnot::new(
            "1000000000000000000001".parse::<BigInt>().unwrap(),
            "1000000000000000000002".parse::<BigInt>().unwrap(),
        )
        .unwrap();
        let head = torus_staircase_head(&big, 3);
        let g = big.genus();
        // semigroup starts 0 < A < B since B < 2A
        assert_eq!(head, vec![g.clone(), &g - big.abs_a(), &g - big.abs_b()]);
    }
}
