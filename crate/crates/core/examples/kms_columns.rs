//! The planar column construction and its exact copy count.

use std::fmt::Write;

use dot_trees::constructions::build_kms_columns;
use dot_trees::counting::{count_embeddings, radial_histogram, CountOptions};
use dot_trees::tree::make_path;
use dot_trees::{Result, Tree, WeightedTree};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let path = make_path(2)?;
    let built = build_kms_columns(&path, 9)?;
    for p in built.points.iter() {
        writeln!(out, "  {p}").unwrap();
    }
    let wt = WeightedTree::new(path, built.weights.clone())?;
    let count = count_embeddings(&wt, &built.points, &CountOptions::default())?;
    writeln!(
        out,
        "weights {:?}: predicted {}, counted {count}",
        built.weights, built.predicted_count
    )
    .unwrap();
    writeln!(out, "radial buckets: {}", radial_histogram(&built.points).buckets.len()).unwrap();

    // the tree from the column-construction figure: edge 6-8 gets weight 48
    let figure = Tree::new(8, vec![(1, 2), (1, 3), (1, 4), (2, 5), (5, 6), (6, 7), (6, 8)])?;
    let built = build_kms_columns(&figure, 40)?;
    writeln!(out, "figure tree abscissas: {:?}", built.metadata.abscissas).unwrap();
    writeln!(out, "figure tree weights: {:?}", built.weights).unwrap();
    writeln!(out, "figure tree predicted count: {}", built.predicted_count).unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
