//! Injective copies versus homomorphisms of a weighted tree.

use std::fmt::Write;

use dot_trees::counting::{count_embeddings, count_homomorphisms, CountOptions};
use dot_trees::sampling::integer_grid;
use dot_trees::tree::{make_path, make_star};
use dot_trees::{Point, PointSet, Result, WeightVector, WeightedTree};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let opts = CountOptions::default();

    let line = PointSet::new(2, vec![Point::from_ints(&[1, 0]), Point::from_ints(&[2, 0])])?;
    let wt = WeightedTree::new(make_path(2)?, WeightVector::from_ints(&[2, 2]))?;
    writeln!(
        out,
        "path w=(2,2) on two points: {} embeddings, {} homomorphisms",
        count_embeddings(&wt, &line, &opts)?,
        count_homomorphisms(&wt, &line, &opts)?
    )
    .unwrap();

    let grid = integer_grid(2, 5, 1)?;
    for (name, tree, w) in [("path", make_path(2)?, [5, 5, 0]), ("star", make_star(3)?, [6, 7, 8])] {
        let weights = WeightVector::from_ints(&w[..tree.num_edges()]);
        let wt = WeightedTree::new(tree, weights)?;
        writeln!(
            out,
            "{name} {:?} on the 5x5 grid: {} embeddings, {} homomorphisms",
            wt.weights(),
            count_embeddings(&wt, &grid, &opts)?,
            count_homomorphisms(&wt, &grid, &opts)?
        )
        .unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
