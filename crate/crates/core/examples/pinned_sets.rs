//! Pinned sets, the best pin, distinct dot products, and product sets.

use std::collections::BTreeSet;
use std::fmt::Write;

use dot_trees::counting::{distinct_dot_products, max_pinned, pinned_set, product_set, CountOptions};
use dot_trees::sampling::integer_grid;
use dot_trees::{Point, PointSet, Result, Scalar};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let opts = CountOptions::default();
    let e = PointSet::new(
        2,
        vec![
            Point::from_ints(&[1, 0]),
            Point::from_ints(&[2, 0]),
            Point::from_ints(&[0, 5]),
        ],
    )?;
    let pin = Point::from_ints(&[1, 0]);
    writeln!(out, "pinned set of {pin}: {:?}", pinned_set(&pin, &e, &opts)?).unwrap();
    let with_zero = CountOptions { include_zero: true };
    writeln!(out, "with zero: {:?}", pinned_set(&pin, &e, &with_zero)?).unwrap();

    for side in [4, 8, 12] {
        let grid = integer_grid(2, side, 1)?;
        let stats = distinct_dot_products(&grid, &opts);
        let best = max_pinned(&grid, &opts)?;
        writeln!(
            out,
            "{side}x{side} grid: {} distinct products, best pin {} sees {}",
            stats.distinct, best.point, best.count
        )
        .unwrap();
    }

    let a: BTreeSet<Scalar> = (1..=3).map(Scalar::from).collect();
    writeln!(out, "{{1,2,3}}{{1,2,3}} = {:?}", product_set(&a, &a)).unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
