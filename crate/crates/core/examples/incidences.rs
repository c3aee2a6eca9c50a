//! Point-line incidences with alpha-lines.

use std::fmt::Write;

use dot_trees::counting::{alpha_lines, incidences};
use dot_trees::sampling::integer_grid;
use dot_trees::{AlphaHyperplane, Point, PointSet, Result, Scalar};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let grid = integer_grid(2, 2, 1)?;
    let lines = vec![
        AlphaHyperplane::new(Point::from_ints(&[0, 1]), Scalar::from(1))?,
        AlphaHyperplane::new(Point::from_ints(&[0, 1]), Scalar::from(2))?,
        AlphaHyperplane::new(Point::from_ints(&[1, 0]), Scalar::from(1))?,
        AlphaHyperplane::new(Point::from_ints(&[1, 0]), Scalar::from(2))?,
    ];
    writeln!(out, "2x2 grid against its grid lines: {}", incidences(&grid, &lines)?).unwrap();

    let grid = integer_grid(2, 6, 1)?;
    let pins = PointSet::new(2, (1..=6).map(|i| Point::from_ints(&[1, i])).collect())?;
    for alpha in [5, 7, 9] {
        let lines = alpha_lines(&pins, &Scalar::from(alpha))?;
        writeln!(out, "alpha={alpha}: {} incidences", incidences(&grid, &lines)?).unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
