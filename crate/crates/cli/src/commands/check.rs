use anyhow::Result;
use rand::Rng;
use zagreb_core::enumerate::{enumerate_all_connected, orientations};
use zagreb_core::matching::{brute_force_matching_number, matching_number};
use zagreb_core::sample::{
    random_graph, random_orientation, random_transform_instance, rng_from_seed,
};
use zagreb_core::verify::{check_identity, check_sink_source_bound, check_transform};

use crate::{CheckArgs, Suite};

pub fn run(args: &CheckArgs) -> Result<i32> {
    let failures = match args.suite {
        Suite::Identity => identity(args)?,
        Suite::SinkSource => sink_source(args)?,
        Suite::Transform => transform(args)?,
        Suite::Matching => matching(args)?,
    };
    if failures == 0 {
        Ok(0)
    } else {
        Ok(1)
    }
}

fn identity(args: &CheckArgs) -> Result<u64> {
    let n_max = args.n_max.unwrap_or(5);
    let random = args.random.unwrap_or(10_000);
    let mut cases = 0u64;
    let mut failures = 0u64;
    for n in 1..=n_max {
        for g in enumerate_all_connected(n)? {
            for d in orientations(&g)? {
                cases += 1;
                if !check_identity(&d) {
                    failures += 1;
                    eprintln!("identity fails on {d:?}");
                }
            }
        }
    }
    let mut rng = rng_from_seed(args.seed);
    for _ in 0..random {
        let n = rng.random_range(2..=12);
        let g = random_graph(&mut rng, n, 0.4);
        let d = random_orientation(&mut rng, &g);
        cases += 1;
        if !check_identity(&d) {
            failures += 1;
            eprintln!("identity fails on {d:?}");
        }
    }
    println!("identity suite: {cases} digraphs, {failures} failures");
    Ok(failures)
}

fn sink_source(args: &CheckArgs) -> Result<u64> {
    let n_max = args.n_max.unwrap_or(5);
    let mut cases = 0u64;
    let mut failures = 0u64;
    for n in 1..=n_max {
        for g in enumerate_all_connected(n)? {
            cases += 1;
            let bound_ok = check_sink_source_bound(&g)?;
            let count_ok = g.edge_count() == 0
                || g.sink_source_orientations().len() == if g.is_bipartite() { 2 } else { 0 };
            if !bound_ok || !count_ok {
                failures += 1;
                eprintln!("sink-source characterization fails on {g:?}");
            }
        }
    }
    println!("sink-source suite: {cases} graphs, {failures} failures");
    Ok(failures)
}

fn transform(args: &CheckArgs) -> Result<u64> {
    let random = args.random.unwrap_or(1000);
    let mut rng = rng_from_seed(args.seed);
    let mut done = 0u64;
    let mut failures = 0u64;
    while done < random {
        let n = rng.random_range(4..=10);
        let extra = rng.random_range(0..4);
        let Some((g, u, v, w)) = random_transform_instance(&mut rng, n, extra) else {
            continue;
        };
        done += 1;
        match check_transform(&g, u, v, w) {
            Ok(delta) if delta == 2 * (g.degree(v) as i64 - 1) && delta > 0 => {}
            other => {
                failures += 1;
                eprintln!("transform gain fails on {g:?} (u={u}, v={v}, w={w}): {other:?}");
            }
        }
    }
    println!("transform suite: {done} instances, {failures} failures");
    Ok(failures)
}

fn matching(args: &CheckArgs) -> Result<u64> {
    let n_max = args.n_max.unwrap_or(7);
    let mut cases = 0u64;
    let mut failures = 0u64;
    for n in 1..=n_max {
        for g in enumerate_all_connected(n)? {
            cases += 1;
            if matching_number(&g) != brute_force_matching_number(&g)? {
                failures += 1;
                eprintln!("matching mismatch on {g:?}");
            }
        }
    }
    println!("matching suite: {cases} graphs, {failures} failures");
    Ok(failures)
}
