//! Labeled trees in canonical edge order, bipartitions, splits, and the
//! `.tree` format.

use std::fmt::Write;

use dot_trees::tree::{bipartition, make_perfect_binary, make_star, read_tree, split_at_vertex, write_tree};
use dot_trees::Result;

pub fn run_example() -> Result<String> {
    let mut out = String::new();

    let (tree, weights) = read_tree("k 2\n2 3 6\n1 2 2\n".as_bytes())?;
    let mut text = Vec::new();
    write_tree(&tree, weights.as_ref(), &mut text)?;
    write!(out, "canonical form:\n{}", String::from_utf8(text).expect("utf-8")).unwrap();

    for h in 0..=3 {
        let t = make_perfect_binary(h)?;
        let b = bipartition(&t);
        writeln!(
            out,
            "binary h={h}: {} vertices, {} edges, |U|={} |V|={}",
            t.num_vertices(),
            t.num_edges(),
            b.k1(),
            b.k2()
        )
        .unwrap();
    }

    let star = make_star(4)?;
    let (first, rest) = split_at_vertex(&star, 1)?;
    writeln!(
        out,
        "star k=4 split at the center: {} + {} edges",
        first.tree.num_edges(),
        rest.tree.num_edges()
    )
    .unwrap();
    if let Err(e) = split_at_vertex(&star, 2) {
        writeln!(out, "split at a leaf: {e}").unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
