use anyhow::{bail, Result};
use zagreb_core::enumerate::{enumerate_class, enumerate_connected_excess, ClassQuery};
use zagreb_core::io::to_graph6;
use zagreb_core::Family;

use crate::{render, EnumArgs, OutputFormat};

pub fn run(args: &EnumArgs) -> Result<i32> {
    let excess = match (args.excess, args.class) {
        (Some(e), None) => e,
        (None, Some(c)) => Family::from(c).excess(),
        (None, None) => bail!("enum needs --excess or --class"),
        (Some(_), Some(_)) => unreachable!("clap rejects the conflict"),
    };
    let graphs = match args.m {
        Some(m) => {
            let family = match excess {
                0 => Family::Unicyclic,
                1 => Family::Bicyclic,
                other => bail!("excess must be 0 or 1, got {other}"),
            };
            enumerate_class(&ClassQuery::new(family, args.n, m))?
        }
        None => enumerate_connected_excess(args.n, excess)?,
    };
    if args.count_only {
        println!("{}", graphs.len());
        return Ok(0);
    }
    match args.format {
        OutputFormat::Graph6 => {
            for g in &graphs {
                println!("{}", to_graph6(g)?);
            }
        }
        OutputFormat::Csv => {
            println!("{}", render::CSV_HEADER);
            for g in &graphs {
                println!("{}", render::csv_row(g)?);
            }
        }
        _ => bail!("enum supports --format graph6 or csv"),
    }
    Ok(0)
}
