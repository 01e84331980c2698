use anyhow::{bail, Result};
use zagreb_core::enumerate::ClassQuery;
use zagreb_core::indices::ZValue;
use zagreb_core::verify::{verify_theorem_with_cap, Verdict, FEASIBLE_CLASS_VERTICES};
use zagreb_core::Family;

use crate::{OutputFormat, VerifyArgs};

pub fn run(args: &VerifyArgs) -> Result<i32> {
    let q = ClassQuery::new(Family::from(args.class), args.n, args.m);
    let cap = if args.heavy {
        zagreb_core::verify::MAX_CLASS_VERTICES
    } else {
        FEASIBLE_CLASS_VERTICES
    };
    let report = verify_theorem_with_cap(&q, cap)?;
    match args.format {
        OutputFormat::Json => println!("{}", report.to_json()),
        OutputFormat::Text => {
            println!(
                "class {}({}, {}): bound {} (doubled {}), observed {} (doubled {})",
                q.family.letter(),
                q.n,
                q.m,
                ZValue::new(report.bound_doubled),
                report.bound_doubled,
                ZValue::new(report.observed_doubled),
                report.observed_doubled,
            );
            println!(
                "scanned {} graphs, {} orientations",
                report.scanned.graphs, report.scanned.orientations
            );
            for w in &report.extremal {
                println!("extremal: graph6 {} bits {}", w.graph6, w.orientation_bits);
            }
            match &report.counterexample {
                None => println!("verdict: verified"),
                Some(cx) => {
                    println!("verdict: counterexample ({:?})", cx.kind);
                    let bits = cx
                        .orientation_bits
                        .map_or_else(|| "-".to_string(), |b| b.to_string());
                    println!("  graph6 {} bits {}: {}", cx.graph6, bits, cx.detail);
                }
            }
        }
        _ => bail!("verify supports --format json or text"),
    }
    Ok(match report.verdict {
        Verdict::Verified => 0,
        Verdict::Counterexample => 1,
    })
}
