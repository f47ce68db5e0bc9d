use ksl::pairsgen::{self, fibonacci_specialization, n1_specialization, PairFamilyState};
use ksl::IntPoly;

#[test]
fn identities_through_level_twenty() {
    let states = pairsgen::generate(20).unwrap();
    assert_eq!(states.len(), 22);
    for s in &states[1..] {
        assert!(s.slope_identity_holds(), "k={}", s.k);
        assert!(s.lens_identity_holds(), "k={}", s.k);
        assert!(s.degrees_hold(), "k={}", s.k);
        assert!(s.difference_is_two(), "k={}", s.k);
    }
}

#[test]
fn consecutive_levels_share_polynomials() {
    let states = pairsgen::generate(8).unwrap();
    for w in states.windows(2) {
        assert_eq!(w[1].a, w[0].d);
        assert_eq!(w[1].c, w[0].b);
        assert_eq!(w[1].p, w[0].q);
    }
}

#[test]
fn distinct_knot_parameters_for_positive_levels() {
    for s in pairsgen::generate(10).unwrap().iter().filter(|s| s.k >= 1) {
        assert_ne!(s.a, s.c);
        assert_ne!(s.b, s.d);
    }
}

#[test]
fn verification_grid() {
    let states = pairsgen::generate(8).unwrap();
    for state in states.iter().filter(|s| s.k >= 1) {
        for n in 2..=8 {
            let inst = state.instantiate(n).unwrap();
            let report = inst.verify();
            assert!(report.all_pass(), "k={} n={n}: {report:?}", state.k);
        }
    }
}

#[test]
fn specializations() {
    for k in -1..=15 {
        assert!(fibonacci_specialization(k).unwrap(), "fibonacci k={k}");
        assert!(n1_specialization(k).unwrap(), "n=1 k={k}");
    }
}

#[test]
fn level_five_slope_polynomial() {
    let p5: IntPoly =
        "n^11 + 11n^10 + 45n^9 + 75n^8 + 6n^7 - 126n^6 - 98n^5 + 50n^4 + 60n^3 - 4n^2 - 8n"
            .parse()
            .unwrap();
    let s = (0..6)
        .try_fold(PairFamilyState::initial(), |s, _| s.step())
        .unwrap();
    assert_eq!(s.k, 5);
    assert_eq!(s.p, p5);
}
