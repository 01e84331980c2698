use anyhow::{bail, Result};
use zagreb_core::construct::{build_b, build_b_star, build_named, build_u, build_u_star};
use zagreb_core::graph::{Graph, Orientation};
use zagreb_core::io::{to_edge_list, to_graph6};

use crate::render;
use crate::{ConstructArgs, FamilyArg, OutputFormat};

pub fn run(args: &ConstructArgs) -> Result<i32> {
    match (&args.name, args.family) {
        (Some(name), None) => {
            let g = build_named(name)?;
            print_graph(&g, args.format.unwrap_or(OutputFormat::Graph6))?;
            Ok(0)
        }
        (None, Some(family)) => {
            let (n, m) = (args.n.unwrap(), args.m.unwrap());
            match family {
                FamilyArg::B => {
                    print_graph(&build_b(n, m)?, args.format.unwrap_or(OutputFormat::Graph6))?
                }
                FamilyArg::U => {
                    print_graph(&build_u(n, m)?, args.format.unwrap_or(OutputFormat::Graph6))?
                }
                FamilyArg::BStar => print_orientations(
                    &build_b_star(n, m)?,
                    args.format.unwrap_or(OutputFormat::Dot),
                )?,
                FamilyArg::UStar => print_orientations(
                    &build_u_star(n, m)?,
                    args.format.unwrap_or(OutputFormat::Dot),
                )?,
            }
            Ok(0)
        }
        _ => bail!("construct needs exactly one of --name or --family"),
    }
}

fn print_graph(g: &Graph, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Graph6 => println!("{}", to_graph6(g)?),
        OutputFormat::Edges => print!("{}", to_edge_list(g)),
        OutputFormat::Dot => print!("{}", render::graph_to_dot(g)),
        OutputFormat::Csv => {
            println!("{}", render::CSV_HEADER);
            println!("{}", render::csv_row(g)?);
        }
        _ => bail!("graphs support --format graph6, edges, dot, or csv"),
    }
    Ok(())
}

fn print_orientations(orientations: &[Orientation], format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Dot => {
            for d in orientations {
                print!("{}", render::orientation_to_dot(d));
            }
        }
        OutputFormat::Text => {
            for d in orientations {
                println!("graph6 {} bits {}", to_graph6(d.base())?, d.dirs());
            }
        }
        _ => bail!("orientation families support --format dot or text"),
    }
    Ok(())
}
