//! Lines perpendicular to the x-axis in three dimensions.

use std::fmt::Write;

use dot_trees::constructions::build_perp_lines_3d;
use dot_trees::counting::{count_embeddings, CountOptions};
use dot_trees::tree::make_path;
use dot_trees::{Result, WeightedTree};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let path = make_path(2)?;
    for n in [9, 12, 15] {
        let built = build_perp_lines_3d(&path, n)?;
        let wt = WeightedTree::new(path.clone(), built.weights.clone())?;
        let count = count_embeddings(&wt, &built.points, &CountOptions::default())?;
        writeln!(out, "n={n}: predicted {}, counted {count}", built.predicted_count).unwrap();
    }
    let built = build_perp_lines_3d(&path, 9)?;
    for note in &built.metadata.notes {
        writeln!(out, "note: {note}").unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
