use ksl::surgery::{
    casson_correction, classify_torus_surgery, lens_homeo_oriented, satellite_lspace_exclusion,
    zero_surgery_torus_compare, Verdict,
};
use ksl::{pairsgen, LensSpace, Slope, SurgeryClass, TorusKnot};
use num_bigint::BigInt;
use num_integer::Integer;

fn canonical_knots(max: i64) -> Vec<TorusKnot> {
    let mut out = Vec::new();
    for a in 2..=max {
        for b in a + 1..=max {
            if a.gcd(&b) == 1 {
                out.push(TorusKnot::new(a, b).unwrap());
                out.push(TorusKnot::new(-a, b).unwrap());
            }
        }
    }
    out
}

#[test]
fn zero_surgery_compare_separates_distinct_knots() {
    let knots = canonical_knots(12);
    for (i, k1) in knots.iter().enumerate() {
        for (j, k2) in knots.iter().enumerate() {
            let v = zero_surgery_torus_compare(k1, k2).unwrap();
            assert_eq!(v == Verdict::Same, i == j, "{k1} vs {k2}");
            if k1.mirror() == *k2 {
                assert_eq!(v, Verdict::SignatureDistinct);
            }
        }
    }
}

#[test]
fn lens_homeomorphism_is_an_equivalence_relation() {
    let mut spaces = Vec::new();
    for p in 1..=30i64 {
        for q in 0..p {
            if let Ok(l) = LensSpace::new(p, q) {
                spaces.push(l);
            }
        }
    }
    for x in &spaces {
        assert!(lens_homeo_oriented(x, x));
        for y in spaces.iter().filter(|y| y.order() == x.order()) {
            assert_eq!(lens_homeo_oriented(x, y), lens_homeo_oriented(y, x));
            if !lens_homeo_oriented(x, y) {
                continue;
            }
            for z in spaces.iter().filter(|z| z.order() == x.order()) {
                if lens_homeo_oriented(y, z) {
                    assert!(lens_homeo_oriented(x, z), "{x} {y} {z}");
                }
            }
        }
    }
}

/// Moser's trichotomy matches the offset `|p − q·ab|` on a grid of slopes.
#[test]
fn classification_grid() {
    for k in canonical_knots(7) {
        let ab = k.a() * k.b();
        for p in -60i64..=60 {
            for q in 1i64..=4 {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let class = classify_torus_surgery(&k, &Slope::new(p, q).unwrap()).unwrap();
                let offset = BigInt::from(p) - BigInt::from(q) * &ab;
                match class {
                    SurgeryClass::ZeroFilling => assert_eq!(p, 0),
                    SurgeryClass::ConnectedSumOfLens { .. } => assert_eq!(offset, BigInt::from(0)),
                    SurgeryClass::Lens(ref l) => {
                        assert_eq!((q, offset.magnitude().clone()), (1, 1u32.into()));
                        assert_eq!(l.order(), &BigInt::from(p.abs()));
                        // the a-parameter convention gives the same oriented lens space
                        let alt = LensSpace::new(p.abs(), k.abs_a() * k.abs_a()).unwrap();
                        assert!(lens_homeo_oriented(l, &alt));
                    }
                    SurgeryClass::LensUnparameterized { .. } => {
                        assert!(q >= 2 && offset.magnitude() == &1u32.into())
                    }
                    SurgeryClass::SmallSeifert => {
                        assert!(p != 0 && offset.magnitude() > &1u32.into())
                    }
                }
            }
        }
    }
}

#[test]
fn casson_corrections_agree_across_family_pairs() {
    let states = pairsgen::generate(5).unwrap();
    for state in &states[2..] {
        for n in 2..=6 {
            let inst = state.instantiate(n).unwrap();
            let slope = Slope::integer(inst.slope.clone()).unwrap();
            let c1 = casson_correction(&inst.knot1.delta_dd_half(), &slope).unwrap();
            let c2 = casson_correction(&inst.knot2.delta_dd_half(), &slope).unwrap();
            assert_eq!(c1, c2);
            assert!(lens_homeo_oriented(&inst.lens1, &inst.lens2));
        }
    }
}

#[test]
fn satellite_exclusion_is_empty() {
    for g in 1..=200 {
        assert!(satellite_lspace_exclusion(g).is_empty(), "g={g}");
    }
}
