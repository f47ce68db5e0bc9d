//! The verification suite behind `ksl verify`.

use std::collections::BTreeMap;

use clap::ValueEnum;
use ksl::pairsgen::{self, fibonacci_specialization, n1_specialization, PairFamilyState};
use ksl::surgery::{
    classify_torus_surgery, lens_homeo_oriented, satellite_lspace_exclusion,
    zero_surgery_torus_compare, Verdict,
};
use ksl::{LensSpace, Slope, Staircase, TorusKnot};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::value::RawValue;

use crate::output::{number, print_json, string};
use crate::Outcome;

const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    All,
    Appendix,
    Staircase,
    Surgery,
}

impl Scope {
    fn name(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Appendix => "appendix",
            Scope::Staircase => "staircase",
            Scope::Surgery => "surgery",
        }
    }
}

#[derive(Serialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum Status {
    Pass,
    Fail,
}

type Witness = BTreeMap<&'static str, Box<RawValue>>;

#[derive(Serialize)]
struct Check {
    id: String,
    description: String,
    anchor: &'static str,
    status: Status,
    witness: Witness,
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    passed: usize,
    failed: usize,
}

#[derive(Serialize)]
struct Report {
    schema_version: u32,
    suite: &'static str,
    checks: Vec<Check>,
    summary: Summary,
}

type Job = Box<dyn Fn() -> (bool, Witness) + Send + Sync>;

struct Pending {
    id: String,
    description: String,
    anchor: &'static str,
    job: Job,
}

fn pending(
    id: impl Into<String>,
    description: impl Into<String>,
    anchor: &'static str,
    job: impl Fn() -> (bool, Witness) + Send + Sync + 'static,
) -> Pending {
    Pending {
        id: id.into(),
        description: description.into(),
        anchor,
        job: Box::new(job),
    }
}

/// `(a, b, c, d, p)` for k = 1..5 in the form they are conventionally typeset.
const TABLE: [[&str; 5]; 5] = [
    ["n+2", "n^2+n-1", "n", "n^2+3n+1", "n^3+3n^2+n-1"],
    [
        "n^2+3n+1",
        "n^3+2n^2-n-1",
        "n^2+n-1",
        "n^3+4n^2+3n-1",
        "n^5+5n^4+6n^3-2n^2-4n",
    ],
    [
        "n^3+4n^2+3n-1",
        "n^4+3n^3-3n",
        "n^3+2n^2-n-1",
        "n^4+5n^3+6n^2-n-2",
        "n^7+7n^6+15n^5+5n^4-15n^3-9n^2+3n+1",
    ],
    [
        "n^4+5n^3+6n^2-n-2",
        "n^5+4n^4+2n^3-5n^2-2n+1",
        "n^4+3n^3-3n",
        "n^5+6n^4+10n^3+n^2-6n-1",
        "n^9+9n^8+28n^7+28n^6-21n^5-49n^4-6n^3+18n^2+3n-1",
    ],
    [
        "n^5+6n^4+10n^3+n^2-6n-1",
        "n^6+5n^5+5n^4-6n^3-7n^2+2n+1",
        "n^5+4n^4+2n^3-5n^2-2n+1",
        "n^6+7n^5+15n^4+6n^3-11n^2-6n+1",
        "n^{11}+11n^{10}+45n^9+75n^8+6n^7-126n^6-98n^5+50n^4+60n^3-4n^2-8n",
    ],
];

fn compact(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}')
        .collect()
}

fn family(k_max: i64) -> Vec<PairFamilyState> {
    pairsgen::generate(k_max).expect("the recursion divides exactly")
}

fn appendix_checks() -> Vec<Pending> {
    let mut out = Vec::new();
    for k in 1..=5i64 {
        out.push(pending(
            format!("appendix.table.k{k:02}"),
            format!("generated (a,b,c,d,p) at level {k} match the tabulated closed forms"),
            "(a_k, b_k, c_k, d_k, p_k) for k = 1..5",
            move || {
                let state = family(k).pop().unwrap();
                let got = [&state.a, &state.b, &state.c, &state.d, &state.p]
                    .map(|f| compact(&f.to_string()));
                let row = TABLE[(k - 1) as usize];
                let ok = row
                    .iter()
                    .zip(&got)
                    .all(|(want, got)| compact(want) == *got);
                (ok, Witness::from([("p", string(&state.p))]))
            },
        ));
    }
    for k in 0..=20i64 {
        out.push(pending(
            format!("appendix.identity.k{k:02}"),
            format!("slope, lens and degree identities at level {k}"),
            "a_k b_k + 1 = p_k = c_k d_k - 1; b_k^2 d_k^2 = p_k q_k + 1; deg a,b,c,d,p,q = k,k+1,k,k+1,2k+1,2k+3",
            move || match pairsgen::generate(k) {
                Ok(mut states) => {
                    let s = states.pop().unwrap();
                    let ok = s.slope_identity_holds() && s.lens_identity_holds() && s.degrees_hold();
                    let deg = s.p.degree().map_or_else(|| "-".into(), |d| d.to_string());
                    (ok, Witness::from([("deg_p", string(deg))]))
                }
                Err(e) => (false, Witness::from([("error", string(e))])),
            },
        ));
    }
    out.push(pending(
        "appendix.instance.k01.n02",
        "level 1 at n = 2 gives T(4,5) and T(2,11) with homeomorphic 21-surgeries",
        "S^3_21(T(4,5)) = L(21,4) ~ L(21,16) = S^3_21(T(2,11)); genera 6 and 5; Δ''(1)/2 = 15",
        || {
            let state = family(1).pop().unwrap();
            let Ok(inst) = state.instantiate(2) else {
                return (false, Witness::new());
            };
            let r = inst.verify();
            let ok = inst.knot1 == TorusKnot::new(4, 5).unwrap()
                && inst.knot2 == TorusKnot::new(2, 11).unwrap()
                && inst.slope == BigInt::from(21)
                && inst.lens1 == LensSpace::new(21, 4).unwrap()
                && inst.lens2 == LensSpace::new(21, 16).unwrap()
                && r.genus1 == BigInt::from(6)
                && r.genus2 == BigInt::from(5)
                && r.dd_half1 == BigInt::from(15)
                && r.dd_half2 == BigInt::from(15)
                && r.all_pass();
            let w = Witness::from([
                ("knot1", string(&inst.knot1)),
                ("knot2", string(&inst.knot2)),
                ("lens1", string(&inst.lens1)),
                ("lens2", string(&inst.lens2)),
            ]);
            (ok, w)
        },
    ));
    for k in 1..=8i64 {
        for n in 2..=8u32 {
            out.push(pending(
                format!("appendix.pair.k{k:02}.n{n:02}"),
                format!("pair at level {k}, n = {n}: lens homeomorphic, genera differ, equal Δ''(1)/2, negative signatures, distinct staircases"),
                "S^3_p(T(a_k,b_k)) ~ S^3_p(T(c_k,d_k)) with g(T(a_k,b_k)) != g(T(c_k,d_k))",
                move || {
                    let state = family(k).pop().unwrap();
                    match state.instantiate(n) {
                        Ok(inst) => {
                            let r = inst.verify();
                            let w = Witness::from([
                                ("slope", number(&inst.slope)),
                                ("genus1", number(&r.genus1)),
                                ("genus2", number(&r.genus2)),
                                ("ddHalf", number(&r.dd_half1)),
                            ]);
                            (r.all_pass(), w)
                        }
                        Err(e) => (false, Witness::from([("error", string(e))])),
                    }
                },
            ));
        }
    }
    for k in -1..=15i64 {
        out.push(pending(
            format!("appendix.specialization.k{:02}", k + 1),
            format!("n = 2 and n = 1 specializations at level {k}"),
            "n = 2: Fibonacci closed forms; n = 1: (2k+1, 1, 1, 2k+3, 2k+2, 2k+4)",
            move || {
                let fib = fibonacci_specialization(k).unwrap_or(false);
                let one = n1_specialization(k).unwrap_or(false);
                (fib && one, Witness::from([("level", number(k))]))
            },
        ));
    }
    out
}

fn staircase_checks() -> Vec<Pending> {
    let mut out = Vec::new();
    for g in 1..=12i64 {
        out.push(pending(
            format!("staircase.extremal.g{g:02}"),
            format!("genus {g}: maximum Δ''(1)/2 is attained only by the two-bridge staircase"),
            "Δ''(1)/2 <= g(g+1)/2 with equality iff K = T(2,2g+1)",
            move || {
                let all = Staircase::enumerate(g);
                let max = all.iter().map(Staircase::delta_dd_half).max().unwrap();
                let argmax: Vec<_> = all.iter().filter(|s| s.delta_dd_half() == max).collect();
                let ok = max == g * (g + 1) / 2 && argmax == [&Staircase::two_bridge(g)];
                (
                    ok,
                    Witness::from([("max", number(max)), ("staircases", number(all.len()))]),
                )
            },
        ));
        out.push(pending(
            format!("staircase.dual_route.g{g:02}"),
            format!("genus {g}: Δ''(1)/2 from the exponents agrees with differentiating Δ"),
            "Δ''(1)/2 = Σ a_i + g(g-1)/2",
            move || {
                let ok = Staircase::enumerate(g).iter().all(|s| {
                    s.to_alexander().second_derivative_at_one()
                        == BigInt::from(2 * s.delta_dd_half())
                });
                (ok, Witness::new())
            },
        ));
    }
    out.push(pending(
        "staircase.injective.g05",
        "Δ''(1)/2 separates same-genus staircases through genus 5",
        "same-genus L-space knots with g <= 5 are determined by Δ''(1)/2",
        || {
            let found = Staircase::dd_collisions(5);
            (
                found.is_empty(),
                Witness::from([("collisions", number(found.len()))]),
            )
        },
    ));
    out.push(pending(
        "staircase.first_collision",
        "smallest genus with two staircases sharing Δ''(1)/2",
        "Δ''(1)/2 stops being injective on staircases beyond genus 5",
        || {
            let found = Staircase::dd_collisions(10);
            match found.first() {
                Some((g, x, y)) => (
                    *g == 6,
                    Witness::from([
                        ("genus", number(g)),
                        ("first", string(x)),
                        ("second", string(y)),
                    ]),
                ),
                None => (false, Witness::new()),
            }
        },
    ));
    for g in 1..=10i64 {
        out.push(pending(
            format!("staircase.hfk.g{g:02}"),
            format!("genus {g}: staircase knot Floer gradings are self-consistent"),
            "Σ (-1)^M t^A = Δ; (A, M) -> (-A, M - 2A) symmetry; top generator in (g, 0)",
            move || {
                let ok = Staircase::enumerate(g)
                    .iter()
                    .all(|s| s.hfk_self_check(&s.hfk_bigraded()).all());
                (ok, Witness::new())
            },
        ));
    }
    out.push(pending(
        "staircase.hfk.trefoil",
        "trefoil generators sit at (1,0), (0,-1), (-1,-2)",
        "HFK(T(2,3)) in bigradings (A, M)",
        || {
            let gens = Staircase::from_parts(1, vec![1]).hfk_bigraded();
            (
                gens == [(1, 0), (0, -1), (-1, -2)],
                Witness::from([("generators", number(gens.len()))]),
            )
        },
    ));
    out
}

fn coprime_pairs(max: i64) -> Vec<(i64, i64)> {
    use num_integer::Integer;
    (2..=max)
        .flat_map(|a| {
            (a + 1..=max)
                .filter(move |b| a.gcd(b) == 1)
                .map(move |b| (a, b))
        })
        .collect()
}

fn surgery_checks() -> Vec<Pending> {
    let mut out = Vec::new();
    let examples: [(i64, i64, i64, &str); 3] = [
        (4, 5, 21, "L(21,4)"),
        (2, 3, 6, "L(2,·)#L(3,·)"),
        (3, 4, 5, "SmallSeifert"),
    ];
    for (a, b, p, want) in examples {
        out.push(pending(
            format!("surgery.classify.t{a}_{b}.p{p}"),
            format!("{p}-surgery on T({a},{b}) is {want}"),
            "S^3_{p/q}(T(a,b)): lens iff |p - qab| = 1, reducible iff p = qab, small Seifert otherwise",
            move || {
                let class = classify_torus_surgery(&TorusKnot::new(a, b).unwrap(), &Slope::integer(p).unwrap());
                let got = class.map_or_else(|e| e.to_string(), |c| c.to_string());
                (got == want, Witness::from([("class", string(got))]))
            },
        ));
    }
    out.push(pending(
        "surgery.torus.dual_route",
        "Δ''(1)/2 of T(a,b), 2 <= a < b <= 30, agrees with differentiating Δ",
        "Δ''(1)/2 = (a^2 - 1)(b^2 - 1)/24",
        || {
            let pairs = coprime_pairs(30);
            let ok = pairs.iter().all(|&(a, b)| {
                let k = TorusKnot::new(a, b).unwrap();
                k.alexander().second_derivative_at_one() == 2 * k.delta_dd_half()
            });
            (ok, Witness::from([("knots", number(pairs.len()))]))
        },
    ));
    out.push(pending(
        "surgery.zero_surgery.distinct",
        "distinct torus knots with parameters up to 12 are separated by Δ or signature",
        "S^3_0(T(a,b)) determines T(a,b) among torus knots",
        || {
            let knots: Vec<TorusKnot> = coprime_pairs(12)
                .into_iter()
                .flat_map(|(a, b)| {
                    [
                        TorusKnot::new(a, b).unwrap(),
                        TorusKnot::new(-a, b).unwrap(),
                    ]
                })
                .collect();
            let mut compared = 0usize;
            let ok = knots.iter().enumerate().all(|(i, k1)| {
                knots[i + 1..].iter().all(|k2| {
                    compared += 1;
                    matches!(zero_surgery_torus_compare(k1, k2), Ok(v) if v != Verdict::Same)
                })
            });
            (ok, Witness::from([("pairs", number(compared))]))
        },
    ));
    out.push(pending(
        "surgery.satellite.g200",
        "no satellite L-space knot with genus up to 200 passes the Δ''(1)/2 and support filters",
        "g(g+1) <= h(h+1) + w^2 k(k+1) with g = h + wk, w <= 2h + 1",
        || {
            let bad = (1..=200).find(|&g| !satellite_lspace_exclusion(g).is_empty());
            (bad.is_none(), Witness::from([("max_genus", number(200))]))
        },
    ));
    for g in 1..=6i64 {
        out.push(pending(
            format!("surgery.hf_dim.g{g:02}"),
            format!("genus {g}: surgery HF rank is |p| exactly on L-space slopes"),
            "dim HF(S^3_{p/q}(K)) = q(2g-1) + |p - q(2g-1)|",
            move || {
                let mut points = 0usize;
                let mut ok = true;
                for s in Staircase::enumerate(g) {
                    for p in -40i64..=40 {
                        for q in 1i64..=5 {
                            let Ok(slope) = Slope::new(p, q) else {
                                continue;
                            };
                            if p == 0 || slope.q() != &BigInt::from(q) {
                                continue;
                            }
                            let dim = s.surgery_hf_dim(&slope);
                            let order = BigInt::from(p.abs());
                            let lspace = p >= q * (2 * g - 1);
                            ok &= s.is_lspace_slope(&slope) == lspace
                                && (dim == order) == lspace
                                && dim >= order;
                            points += 1;
                        }
                    }
                    ok &= (2 * g - 1..=200).all(|m| {
                        s.hf_odd_dim_large(&BigInt::from(m))
                            .is_ok_and(|d| d == BigInt::from(0))
                    });
                }
                (ok, Witness::from([("points", number(points))]))
            },
        ));
    }
    out.push(pending(
        "surgery.lens.equivalence",
        "oriented lens-space homeomorphism is an equivalence relation for orders up to 30",
        "L(p,q) ~ L(p,q') iff q' = q^{±1} mod p",
        || {
            use num_integer::Integer;
            let mut ok = true;
            for p in 1i64..=30 {
                let lens: Vec<LensSpace> = (1..=p)
                    .filter(|q| q.gcd(&p) == 1)
                    .map(|q| LensSpace::new(p, q).unwrap())
                    .collect();
                for x in &lens {
                    ok &= lens_homeo_oriented(x, x);
                    for y in &lens {
                        ok &= lens_homeo_oriented(x, y) == lens_homeo_oriented(y, x);
                        for z in &lens {
                            ok &= !(lens_homeo_oriented(x, y) && lens_homeo_oriented(y, z))
                                || lens_homeo_oriented(x, z);
                        }
                    }
                }
            }
            (ok, Witness::new())
        },
    ));
    out
}

fn build(scope: Scope) -> Report {
    let mut jobs = Vec::new();
    if matches!(scope, Scope::All | Scope::Appendix) {
        jobs.extend(appendix_checks());
    }
    if matches!(scope, Scope::All | Scope::Staircase) {
        jobs.extend(staircase_checks());
    }
    if matches!(scope, Scope::All | Scope::Surgery) {
        jobs.extend(surgery_checks());
    }
    let checks: Vec<Check> = jobs
        .into_par_iter()
        .map(|p| {
            let (ok, witness) = (p.job)();
            Check {
                id: p.id,
                description: p.description,
                anchor: p.anchor,
                status: if ok { Status::Pass } else { Status::Fail },
                witness,
            }
        })
        .collect();
    let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
    Report {
        schema_version: SCHEMA_VERSION,
        suite: scope.name(),
        summary: Summary {
            total: checks.len(),
            passed,
            failed: checks.len() - passed,
        },
        checks,
    }
}

pub fn run(scope: Scope) -> Outcome {
    let report = build(scope);
    print_json(&report);
    let s = &report.summary;
    eprintln!("{}: {}/{} checks passed", report.suite, s.passed, s.total);
    for c in report.checks.iter().filter(|c| c.status == Status::Fail) {
        eprintln!("  FAIL {}: {}", c.id, c.description);
    }
    if s.failed == 0 {
        Outcome::Ok
    } else {
        Outcome::VerificationFailed
    }
}
