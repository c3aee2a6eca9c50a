//! The alpha-line multigraph and the crossings of its straight-line drawing.

use std::fmt::Write;

use dot_trees::counting::{proof_multigraph, CountOptions};
use dot_trees::sampling::random_integer_set;
use dot_trees::{Point, PointSet, Result};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let e = PointSet::new(
        2,
        vec![
            Point::from_ints(&[1, 0]),
            Point::from_ints(&[2, 0]),
            Point::from_ints(&[1, 1]),
        ],
    )?;
    let g = proof_multigraph(&e, &e, &CountOptions::default())?;
    writeln!(out, "worked example: {:?}", g.stats).unwrap();
    for ((a, b), m) in &g.edges {
        writeln!(out, "  {} - {} x{m}", g.vertices[*a], g.vertices[*b]).unwrap();
    }

    let random = random_integer_set(2, 40, 10, 42)?;
    let g = proof_multigraph(&random, &random, &CountOptions::default())?;
    writeln!(
        out,
        "40 random points: e={} m={} t={} crossings={} bound={} within={}",
        g.stats.e,
        g.stats.m,
        g.stats.t,
        g.stats.drawing_crossings,
        g.stats.crossing_bound,
        g.stats.crossings_within_bound()
    )
    .unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
