use std::str::FromStr;

use ksl::pairsgen;
use ksl::surgery::classify_torus_surgery;
use ksl::{PairInstance, PairReport, Slope, Staircase, SurgeryClass, TorusKnot};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::value::RawValue;

use crate::output::{number, print_json, string};
use crate::{Outcome, QueryFormat, StaircaseMode, TableFormat, UsageError};

#[derive(Serialize)]
struct InvariantRow {
    knot: Box<RawValue>,
    genus: Box<RawValue>,
    alexander: Box<RawValue>,
    #[serde(rename = "ddHalf")]
    dd_half: Box<RawValue>,
    signature: Box<RawValue>,
}

pub fn invariants(descriptor: &str, format: QueryFormat) -> Result<Outcome, UsageError> {
    let knot = TorusKnot::from_str(descriptor)?;
    let genus = knot.genus();
    let alexander = knot.alexander();
    let dd_half = knot.delta_dd_half();
    let signature = knot.signature_by_reduction();
    match format {
        QueryFormat::Text => {
            println!("knot       {knot}");
            println!("genus      {genus}");
            println!("alexander  {alexander}");
            println!("ddHalf     {dd_half}");
            println!("signature  {signature}");
        }
        QueryFormat::Json => print_json(&InvariantRow {
            knot: string(&knot),
            genus: number(genus),
            alexander: string(alexander),
            dd_half: number(dd_half),
            signature: number(signature),
        }),
    }
    Ok(Outcome::Ok)
}

#[derive(Serialize)]
struct SurgeryRow {
    knot: Box<RawValue>,
    slope: Box<RawValue>,
    class: Box<RawValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lens: Option<LensParams>,
}

#[derive(Serialize)]
struct LensParams {
    p: Box<RawValue>,
    q: Box<RawValue>,
}

pub fn surgery(descriptor: &str, slope: &str, format: QueryFormat) -> Result<Outcome, UsageError> {
    let knot = TorusKnot::from_str(descriptor)?;
    let slope = Slope::from_str(slope)?;
    let class = classify_torus_surgery(&knot, &slope)?;
    if class == SurgeryClass::ZeroFilling {
        return Err(UsageError(format!(
            "slope 0 has no lens-space parameters: 0-surgery on {knot} has infinite first homology"
        )));
    }
    match format {
        QueryFormat::Text => println!("{class}"),
        QueryFormat::Json => print_json(&SurgeryRow {
            knot: string(&knot),
            slope: string(&slope),
            class: string(&class),
            lens: match &class {
                SurgeryClass::Lens(l) => Some(LensParams {
                    p: number(l.order()),
                    q: number(l.param()),
                }),
                _ => None,
            },
        }),
    }
    Ok(Outcome::Ok)
}

/// Parses repeated `x` / `lo..hi` arguments into a flat, ordered list.
fn expand<T>(args: &[String], flag: &str) -> Result<Vec<T>, UsageError>
where
    T: FromStr + Clone + PartialOrd + std::ops::Add<Output = T> + From<u8>,
{
    let parse = |s: &str| {
        s.trim().parse::<T>().map_err(|_| {
            UsageError(format!(
                "--{flag}: expected an integer or a range lo..hi, got {s:?}"
            ))
        })
    };
    let mut out = Vec::new();
    for arg in args {
        match arg.split_once("..") {
            Some((lo, hi)) => {
                let (mut x, hi) = (parse(lo)?, parse(hi)?);
                if x > hi {
                    return Err(UsageError(format!("--{flag}: empty range {arg:?}")));
                }
                while x <= hi {
                    out.push(x.clone());
                    x = x + T::from(1);
                }
            }
            None => out.push(parse(arg)?),
        }
    }
    Ok(out)
}

const PAIR_COLUMNS: [&str; 13] = [
    "k", "n", "a", "b", "c", "d", "p", "lens1", "lens2", "genus1", "genus2", "ddHalf", "verified",
];

#[derive(Serialize)]
struct PairRow {
    k: Box<RawValue>,
    n: Box<RawValue>,
    a: Box<RawValue>,
    b: Box<RawValue>,
    c: Box<RawValue>,
    d: Box<RawValue>,
    p: Box<RawValue>,
    lens1: Box<RawValue>,
    lens2: Box<RawValue>,
    genus1: Box<RawValue>,
    genus2: Box<RawValue>,
    #[serde(rename = "ddHalf")]
    dd_half: Box<RawValue>,
    verified: bool,
}

struct Verified {
    abcd: [BigInt; 4],
    inst: PairInstance,
    report: PairReport,
}

fn cells(v: &Verified) -> [String; 13] {
    let Verified { abcd, inst, report } = v;
    [
        inst.k.to_string(),
        inst.n.to_string(),
        abcd[0].to_string(),
        abcd[1].to_string(),
        abcd[2].to_string(),
        abcd[3].to_string(),
        inst.slope.to_string(),
        inst.lens1.to_string(),
        inst.lens2.to_string(),
        report.genus1.to_string(),
        report.genus2.to_string(),
        report.dd_half1.to_string(),
        report.all_pass().to_string(),
    ]
}

pub fn pairs(
    k_args: &[String],
    n_args: &[String],
    format: TableFormat,
) -> Result<Outcome, UsageError> {
    let ks: Vec<i64> = expand(k_args, "k")?;
    let ns: Vec<BigInt> = expand(n_args, "n")?;
    if let Some(k) = ks.iter().find(|&&k| k < 1) {
        return Err(UsageError(format!("--k must be at least 1, got {k}")));
    }
    let k_max = *ks.iter().max().expect("clap requires --k");
    let states = pairsgen::generate(k_max)?;

    let jobs: Vec<(i64, &BigInt)> = ks
        .iter()
        .flat_map(|&k| ns.iter().map(move |n| (k, n)))
        .collect();
    let rows: Vec<Result<Verified, ksl::Error>> = jobs
        .par_iter()
        .map(|&(k, n)| {
            let state = states
                .iter()
                .find(|s| s.k == k)
                .expect("generated through k_max");
            let [a, b, c, d, _, _] = state.eval(n);
            let inst = state.instantiate(n.clone())?;
            let report = inst.verify();
            Ok(Verified {
                abcd: [a, b, c, d],
                inst,
                report,
            })
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;

    let table: Vec<[String; 13]> = rows.iter().map(cells).collect();
    match format {
        TableFormat::Text => print_text_table(&table),
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(PAIR_COLUMNS)
                .and_then(|_| table.iter().try_for_each(|row| w.write_record(row)))
                .and_then(|_| w.flush().map_err(Into::into))
                .map_err(|e| UsageError(e.to_string()))?;
        }
        TableFormat::Json => {
            let objects: Vec<PairRow> = rows
                .iter()
                .zip(&table)
                .map(|(v, c)| PairRow {
                    k: number(&c[0]),
                    n: number(&c[1]),
                    a: number(&c[2]),
                    b: number(&c[3]),
                    c: number(&c[4]),
                    d: number(&c[5]),
                    p: number(&c[6]),
                    lens1: string(&c[7]),
                    lens2: string(&c[8]),
                    genus1: number(&c[9]),
                    genus2: number(&c[10]),
                    dd_half: number(&c[11]),
                    verified: v.report.all_pass(),
                })
                .collect();
            print_json(&objects);
        }
    }

    let failed: Vec<_> = rows.iter().filter(|v| !v.report.all_pass()).collect();
    for v in &failed {
        eprintln!(
            "verification failed for k={} n={}: {:?}",
            v.inst.k, v.inst.n, v.report
        );
    }
    Ok(if failed.is_empty() {
        Outcome::Ok
    } else {
        Outcome::VerificationFailed
    })
}

fn print_text_table(rows: &[[String; 13]]) {
    let mut widths = PAIR_COLUMNS.map(str::len);
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let padded: Vec<String> = cells
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        println!("{}", padded.join("  ").trim_end());
    };
    line(&mut PAIR_COLUMNS.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
}

pub fn staircases(genus: i64, mode: StaircaseMode) -> Result<Outcome, UsageError> {
    if genus < 1 {
        return Err(UsageError(format!(
            "--genus must be at least 1, got {genus}"
        )));
    }
    match mode {
        StaircaseMode::List => {
            for s in Staircase::enumerate(genus) {
                println!("{s}  ddHalf={}", s.delta_dd_half());
            }
        }
        StaircaseMode::Count => println!("{}", Staircase::enumerate(genus).len()),
        StaircaseMode::Extremal => {
            let (max, s) = Staircase::extremal(genus);
            println!("max {max} at {s}");
        }
        StaircaseMode::Collisions => {
            let found = Staircase::dd_collisions(genus);
            if found.is_empty() {
                println!("none");
            }
            for (g, x, y) in found {
                println!("genus {g}: {x} {y} ddHalf={}", x.delta_dd_half());
            }
        }
    }
    Ok(Outcome::Ok)
}
