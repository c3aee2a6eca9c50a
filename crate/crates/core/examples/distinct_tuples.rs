//! Distinct weight tuples, unpinned and pinned, in memory and spilled.

use std::fmt::Write;

use dot_trees::counting::{distinct_weight_tuples, pinned_weight_tuples, SpillConfig, TupleOptions};
use dot_trees::sampling::integer_grid;
use dot_trees::tree::make_path;
use dot_trees::{Point, PointSet, Result, RootedTree};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let line = PointSet::new(2, (1..=3).map(|x| Point::from_ints(&[x, 0])).collect())?;
    let keep = TupleOptions {
        keep_tuples: true,
        ..TupleOptions::default()
    };
    let r = distinct_weight_tuples(&make_path(2)?, &line, &keep)?;
    writeln!(
        out,
        "path k=2 on three collinear points: {} tuples {:?}",
        r.count,
        r.tuples.unwrap_or_default()
    )
    .unwrap();

    let center = RootedTree::new(make_path(2)?, 2)?;
    let pinned = pinned_weight_tuples(&center, &Point::from_ints(&[2, 0]), &line, &TupleOptions::default())?;
    writeln!(out, "pinned at the center on (2,0): {}", pinned.count).unwrap();

    let grid = integer_grid(2, 6, 1)?;
    let memory = distinct_weight_tuples(&make_path(2)?, &grid, &TupleOptions::default())?;
    let spill = TupleOptions {
        spill: Some(SpillConfig {
            max_in_memory: 500,
            dir: None,
        }),
        ..TupleOptions::default()
    };
    let disk = distinct_weight_tuples(&make_path(2)?, &grid, &spill)?;
    writeln!(
        out,
        "6x6 grid: {} tuples in memory, {} via sorted runs",
        memory.count, disk.count
    )
    .unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
