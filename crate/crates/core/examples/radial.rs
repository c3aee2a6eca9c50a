//! Grouping points by the line through the origin they lie on.

use std::fmt::Write;

use dot_trees::counting::radial_histogram;
use dot_trees::sampling::integer_grid;
use dot_trees::{Point, PointSet, Result, Scalar};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let small = PointSet::new(
        2,
        vec![
            Point::from_ints(&[1, 0]),
            Point::from_ints(&[2, 0]),
            Point::from_ints(&[3, 3]),
        ],
    )?;
    let h = radial_histogram(&small);
    for (d, c) in &h.buckets {
        writeln!(out, "{d}: {c}").unwrap();
    }

    let grid = integer_grid(2, 8, 1)?;
    let h = radial_histogram(&grid);
    writeln!(
        out,
        "8x8 grid: {} radial lines, fullest {:?} with {} points, max <= n^(2/3): {}",
        h.buckets.len(),
        h.max_direction.as_ref().map(ToString::to_string),
        h.max,
        h.sparse_radial_lines(&Scalar::one())
    )
    .unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
